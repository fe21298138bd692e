#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbh/engine.hpp"

namespace bbh {

enum class Verdict : std::uint8_t { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

struct ExploreOptions {
    int horizon = 0;  // rounds
    std::size_t state_budget = 20'000'000;
    bool survival = true;
    bool true_detection = true;
    bool coverage = true;
    int coverage_window = 0;  // 0 means 2n
    // Extra state predicate checked at every boundary; false is reported as "invariant".
    std::function<bool(const GlobalState&)> invariant;
};

struct Counterexample {
    std::map<int, Decision> script;  // active rounds only
    int round = 0;                   // round boundary where the property broke
    std::string property;
    std::string detail;
};

struct ExploreResult {
    Verdict verdict = Verdict::Pass;
    std::optional<Counterexample> cex;
    std::size_t states = 0;
    int depth = 0;  // rounds fully explored
};

// Breadth-first search over every adversary schedule up to the horizon.
// States are deduplicated by a 64-bit digest of the global state plus the
// monitor memory, so the first violation found is a shortest one.
ExploreResult explore_all(const Engine& engine, const ExploreOptions& opts);

// Distinct successors worth trying for a round with this view.
std::vector<Decision> branch_decisions(const AdversaryView& v);

}  // namespace bbh
