#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bbh/adversary.hpp"
#include "bbh/engine.hpp"
#include "bbh/protocol.hpp"

namespace bbh::test {

inline RingConfig make_config(ProtocolKind p, int n, int bh, const std::vector<int>& nodes) {
    RingConfig c;
    c.n = n;
    c.bh = bh;
    c.protocol = p;
    c.placement = placement_from_nodes(nodes);
    return c;
}

// An engine stepped by hand so tests can look at the global state between rounds.
struct Sim {
    RingConfig cfg;
    std::unique_ptr<Protocol> proto;
    Engine engine;
    std::vector<TraceEvent> events;  // declared before st, which is built from it
    GlobalState st;
    std::string fault;

    Sim(ProtocolKind p, int n, int bh, const std::vector<int>& nodes, ProtocolOptions o = {}, EngineOptions eo = {})
        : cfg(make_config(p, n, bh, nodes)), proto(make_protocol(p, o)), engine(cfg, *proto, eo),
          st(engine.initial(&events)) {}

    bool step(Adversary& adv) {
        if (!fault.empty()) return false;
        fault = engine.run_round(st, adv, &events);
        return fault.empty();
    }

    std::string machine(std::size_t i) const { return proto->machine(st.agents[i].st); }
    int period() const { return proto->period(cfg.n); }
};

inline std::string trace_text(const Trace& t) {
    std::ostringstream out;
    write_trace(out, t);
    return out.str();
}

// Every multiset of k start nodes that contains node 0.
inline std::vector<std::vector<int>> placements_with_origin(int n, int k, bool distinct) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{0};
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, distinct ? v + 1 : v);
            cur.pop_back();
        }
    };
    rec(rec, distinct ? 1 : 0);
    return out;
}

}  // namespace bbh::test
