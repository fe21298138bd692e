#include "bbh/explorer.hpp"

#include <algorithm>
#include <unordered_map>

#include "bbh/hash.hpp"

namespace bbh {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::vector<Decision> branch_decisions(const AdversaryView& v) {
    std::vector<Decision> out{{false, false}};
    if (v.agents_involved()) {
        out.push_back({true, false});
        if (v.data_present()) out.push_back({true, true});
    } else if (v.data_present()) {
        out.push_back({true, true});
    }
    return out;
}

namespace {

struct Monitor {
    bool detected = false;
    std::size_t claims_seen = 0;
    std::vector<int> age;  // rounds since each node was last occupied, after detection

    void hash_into(Hasher& h) const {
        h.add(detected);
        for (int a : age) h.add_int(a);
    }
};

struct Violation {
    std::string property;
    std::string detail;
};

// Folds the state reached at a round boundary into the monitor memory.
std::optional<Violation> observe(Monitor& m, const GlobalState& s, const RingConfig& cfg, const ExploreOptions& o,
                                 int window) {
    if (o.survival && s.alive_count() == 0) return Violation{"survival", "every agent destroyed"};
    if (o.invariant && !o.invariant(s)) return Violation{"invariant", "state predicate is false"};
    for (; m.claims_seen < s.claims.size(); ++m.claims_seen) {
        const Claim& c = s.claims[m.claims_seen];
        if (c.node != cfg.bh) {
            if (o.true_detection)
                return Violation{"true-detection", "agent " + std::to_string(c.agent) + " claims node " +
                                                       std::to_string(c.node)};
            continue;
        }
        if (!m.detected) {
            m.detected = true;
            if (o.coverage) m.age.assign(cfg.n, 0);
        }
    }
    if (!m.detected || !o.coverage) return std::nullopt;
    for (int& a : m.age) a = std::min(a + 1, window + 1);
    for (auto& a : s.agents)
        if (a.alive) m.age[a.pos] = 0;
    for (int v = 0; v < cfg.n; ++v) {
        if (v == cfg.bh || m.age[v] <= window) continue;
        return Violation{"coverage", "node " + std::to_string(v) + " unvisited for more than " +
                                         std::to_string(window) + " rounds after detection"};
    }
    return std::nullopt;
}

std::uint64_t key_of(const GlobalState& s, const Monitor& m) {
    Hasher h;
    h.add(s.hash());
    m.hash_into(h);
    return h.value();
}

struct Entry {
    std::uint64_t parent;
    Decision d;
    int depth;
    int actives;
    bool root;
};

struct Frontier {
    GlobalState st;
    Monitor mon;
    std::uint64_t key;
};

}  // namespace

ExploreResult explore_all(const Engine& engine, const ExploreOptions& opts) {
    const RingConfig& cfg = engine.config();
    const int window = opts.coverage_window > 0 ? opts.coverage_window : 2 * cfg.n;
    ExploreResult res;

    std::unordered_map<std::uint64_t, Entry> seen;
    auto script_to = [&](std::uint64_t key) {
        std::map<int, Decision> script;
        for (;;) {
            const Entry& e = seen.at(key);
            if (e.root) break;
            if (e.d.active) script[e.depth - 1] = e.d;
            key = e.parent;
        }
        return script;
    };

    Frontier init{engine.initial(), {}, 0};
    if (auto v = observe(init.mon, init.st, cfg, opts, window)) {
        res.verdict = Verdict::Fail;
        res.cex = Counterexample{{}, 0, v->property, v->detail};
        return res;
    }
    init.key = key_of(init.st, init.mon);
    seen[init.key] = Entry{0, {}, 0, 0, true};

    std::vector<Frontier> frontier{std::move(init)};
    for (int r = 0; r < opts.horizon && !frontier.empty(); ++r) {
        std::vector<Frontier> next;
        struct Found {
            std::uint64_t parent;
            Decision d;
            int actives;
            Violation v;
            bool at_plan;
        };
        std::optional<Found> best;
        auto offer = [&](std::uint64_t parent, Decision d, int actives, Violation v, bool at_plan = false) {
            if (!best || actives < best->actives) best = Found{parent, d, actives, std::move(v), at_plan};
        };

        for (auto& f : frontier) {
            const int base = seen.at(f.key).actives;
            Plan p = engine.plan(f.st);
            if (!p.fault.empty()) {
                // The fault happens before the adversary moves; blame the path so far.
                offer(f.key, {}, base, Violation{"integrity", p.fault}, true);
                continue;
            }
            for (Decision d : branch_decisions(p.view)) {
                Frontier child{f.st, f.mon, 0};
                std::optional<Violation> v;
                try {
                    engine.apply(child.st, p, d);
                    v = observe(child.mon, child.st, cfg, opts, window);
                } catch (const IntegrityFault& e) {
                    v = Violation{"integrity", e.what()};
                }
                int actives = base + (d.active ? 1 : 0);
                if (v) {
                    offer(f.key, d, actives, std::move(*v));
                    continue;
                }
                child.key = key_of(child.st, child.mon);
                auto it = seen.find(child.key);
                if (it != seen.end()) {
                    Entry& e = it->second;
                    if (e.depth == r + 1 && actives < e.actives) e = Entry{f.key, d, r + 1, actives, false};
                    continue;
                }
                seen.emplace(child.key, Entry{f.key, d, r + 1, actives, false});
                next.push_back(std::move(child));
                if (seen.size() > opts.state_budget) {
                    res.verdict = Verdict::Inconclusive;
                    res.states = seen.size();
                    res.depth = r;
                    return res;
                }
            }
        }
        if (best) {
            auto script = script_to(best->parent);
            if (best->d.active) script[r] = best->d;
            res.verdict = Verdict::Fail;
            res.cex = Counterexample{std::move(script), best->at_plan ? r : r + 1, best->v.property, best->v.detail};
            res.states = seen.size();
            res.depth = r;
            return res;
        }
        frontier = std::move(next);
        res.depth = r + 1;
    }
    // An empty frontier means every continuation revisits a known state.
    res.states = seen.size();
    res.depth = opts.horizon;
    return res;
}

}  // namespace bbh
