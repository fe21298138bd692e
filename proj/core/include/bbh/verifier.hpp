#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbh/explorer.hpp"
#include "bbh/ring.hpp"
#include "bbh/trace.hpp"

namespace bbh {

enum class PropertyKind : std::uint8_t {
    Survival,
    TrueDetection,
    Coverage,
    DetectionLatency,
    Periodicity,
    RegionShrinkage,
};

struct Property {
    PropertyKind kind = PropertyKind::Survival;
    int param = 0;  // window, bound or period; 0 picks the protocol default
};

struct CheckResult {
    Verdict verdict = Verdict::Pass;
    std::string detail;
    std::vector<int> witness;  // rounds that explain a failure
};

struct PropertyParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// survival | true-detection | coverage[:W] | latency:B | periodicity[:P] | shrinkage
Property parse_property(const std::string& s);
std::vector<Property> parse_properties(const std::string& csv);
std::string to_string(const Property& p);

int default_window(ProtocolKind p, int n);
const char* sync_label(ProtocolKind p);
int default_period(ProtocolKind p, int n);

// Agent positions, liveness and machine labels at every round boundary.
struct Timeline {
    int rounds = 0;
    int agents = 0;
    std::vector<std::vector<int>> pos;  // [boundary][agent index], -1 once destroyed
    std::vector<std::vector<std::string>> state;
    std::vector<std::vector<std::string>> entered;  // labels entered exactly at this boundary
    int first_destruction = -1;                     // round of the first DESTROYED event
    int first_true_claim = -1;
    int coloc_start = -1;  // first boundary where a scattered run switched to the co-located protocol
};

Timeline build_timeline(const Trace& t);

// Throws std::invalid_argument when the trace was produced for another ring.
CheckResult check(const Property& p, const Trace& t, const RingConfig& cfg);

// Event-order and model invariants a well-formed trace must satisfy, plus any
// integrity fault the run stopped on.
CheckResult check_integrity(const Trace& t);

// Every non-bh node occupied at least once in each window of W consecutive
// boundaries inside [from, to]; windows that do not fit are ignored.
CheckResult check_coverage(const Timeline& tl, const RingConfig& cfg, int window, int from, int to);

}  // namespace bbh
