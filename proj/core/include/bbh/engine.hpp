#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbh/adversary.hpp"
#include "bbh/protocol.hpp"
#include "bbh/ring.hpp"
#include "bbh/trace.hpp"

namespace bbh {

struct AgentRecord {
    int id = 0;
    int pos = 0;  // meaningless once destroyed
    bool alive = true;
    int carried = 0;  // always 0 at a round boundary
    LocalState st;
};

struct Claim {
    int agent;
    int node;
    int round;
    bool operator==(const Claim&) const = default;
};

struct GlobalState {
    int round = 0;
    std::vector<AgentRecord> agents;  // ascending id, destroyed ones kept with alive=false
    std::vector<NodeStore> nodes;
    int destroyed_tokens = 0;
    std::vector<Claim> claims;

    int alive_count() const;
    std::vector<int> destroyed() const;
    int total_tokens() const;
    // Covers positions, local states, stores and the destroyed set; not the round or claims.
    std::uint64_t hash() const;
};

struct EngineOptions {
    bool kill_residents = true;  // an agent waiting on an active black hole dies
};

// Everything decided from the round-start snapshot, before the adversary acts.
struct Plan {
    std::vector<std::optional<Action>> actions;  // by agent index; empty for destroyed agents
    std::vector<LocalState> next;
    AdversaryView view;
    std::string fault;  // non-empty when a protocol raised an integrity fault
};

struct StopCondition {
    enum Kind { MaxRounds, FirstDetection, AllDetectedOrMax } kind = MaxRounds;
    int max_rounds = 0;
};

struct RunResult {
    GlobalState final;
    Trace trace;
    std::string fault;
    int fault_round = -1;
};

class Engine {
public:
    Engine(RingConfig cfg, const Protocol& protocol, EngineOptions opts = {});

    const RingConfig& config() const { return cfg_; }
    const Protocol& protocol() const { return proto_; }
    const EngineOptions& options() const { return opts_; }

    GlobalState initial(std::vector<TraceEvent>* events = nullptr) const;
    Plan plan(const GlobalState& s) const;
    // Applies the adversary's decision and advances one round.
    void apply(GlobalState& s, const Plan& p, Decision d, std::vector<TraceEvent>* events = nullptr) const;
    // plan + decide + apply; returns the fault text (empty on success).
    std::string run_round(GlobalState& s, Adversary& adv, std::vector<TraceEvent>* events = nullptr) const;

    RunResult run_until(Adversary& adv, StopCondition stop, std::uint64_t seed = 0) const;

    Snapshot snapshot(const GlobalState& s, std::size_t agent_index) const;

private:
    RingConfig cfg_;
    const Protocol& proto_;
    EngineOptions opts_;
};

}  // namespace bbh
