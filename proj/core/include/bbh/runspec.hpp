#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bbh/engine.hpp"
#include "bbh/explorer.hpp"
#include "bbh/verifier.hpp"

namespace bbh {

// Agents a protocol runs with at ring size n.
int agent_count(ProtocolKind p, int n);
// Co-located at 0, or spread as evenly as possible for the scattered protocols.
std::vector<int> default_placement(ProtocolKind p, int n);
// Largest node nobody starts on.
int default_bh(const std::vector<int>& placement, int n);

struct RunSpec {
    RingConfig config;
    std::string adversary = "never";
    std::uint64_t seed = 0;
    int max_rounds = 0;  // 0: twenty protocol periods
    std::vector<Property> properties;
    bool kill_residents = true;
    ProtocolOptions mutations;
};

struct PropertyOutcome {
    Property property;
    CheckResult result;
};

struct RunReport {
    Trace trace;
    CheckResult integrity;
    std::vector<PropertyOutcome> outcomes;
    Verdict overall = Verdict::Pass;
    int first_destruction = -1;
    int first_true_claim = -1;
    int survivors = 0;
};

// Throws std::invalid_argument (or AdversaryParseError) on a bad spec.
RunReport run_spec(const RunSpec& spec);
// Re-checks a recorded trace without simulating.
RunReport check_trace(Trace trace, const std::vector<Property>& props);
void print_report(std::ostream& out, const RunReport& r);

Verdict combine(Verdict a, Verdict b);

}  // namespace bbh
