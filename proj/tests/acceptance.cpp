// Acceptance run: one line per criterion, exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bbh/explorer.hpp"
#include "bbh/runspec.hpp"
#include "bbh/verifier.hpp"
#include "support.hpp"

using namespace bbh;
using bbh::test::Sim;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string first_failure;

    void fail(const std::string& why) {
        if (pass) first_failure = why;
        pass = false;
    }
};

// ceil(log2(n-1)) + 3, by repeated doubling.
int f2f_agents(int n) {
    int b = 0;
    for (long p = 1; p < n - 1; p *= 2) ++b;
    return b + 3;
}

// Fires once, on the m-th round in which some live agent is at or entering the black hole.
class ActivateOnce : public Adversary {
public:
    ActivateOnce(int m, bool destroy) : m_(m), destroy_(destroy) {}
    Decision decide(const AdversaryView& v, const GlobalState&) override {
        if (!v.agents_involved()) return {};
        return ++seen_ == m_ ? Decision{true, destroy_} : Decision{};
    }
    std::string describe() const override { return "activate-once"; }

private:
    int m_, seen_ = 0;
    bool destroy_;
};

bool all_colocated(const GlobalState& s, int* node = nullptr) {
    int at = -1;
    for (auto& a : s.agents) {
        if (!a.alive) continue;
        if (at >= 0 && a.pos != at) return false;
        at = a.pos;
    }
    if (node) *node = at;
    return at >= 0;
}

// Independent sliding-window coverage over recorded positions: every node but
// bh occupied in every window of w boundaries within [from, to].
bool windows_covered(const std::vector<std::vector<int>>& occupied, int n, int bh, int w, int from, int to,
                     std::string* why) {
    for (int start = from; start + w - 1 <= to; ++start) {
        std::vector<bool> seen(n, false);
        for (int b = start; b < start + w; ++b)
            for (int v : occupied[b]) seen[v] = true;
        for (int v = 0; v < n; ++v)
            if (v != bh && !seen[v]) {
                *why = "node " + std::to_string(v) + " missed in [" + std::to_string(start) + "," +
                       std::to_string(start + w - 1) + "]";
                return false;
            }
    }
    return true;
}

std::vector<int> occupied_nodes(const GlobalState& s) {
    std::vector<int> out;
    for (auto& a : s.agents)
        if (a.alive) out.push_back(a.pos);
    return out;
}

Outcome c1_f2f_periodicity() {
    Outcome o;
    double worst = 0;
    for (int n = 5; n <= 12; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        const int k = f2f_agents(n), period = 2 * n + 4;
        Sim sim(ProtocolKind::F2FColoc, n, n - 1, std::vector<int>(k, 0));
        NeverActive adv;
        std::vector<std::string> prev(k);
        for (int b = 0; b <= 10 * period; ++b) {
            if (b > 0 && !sim.step(adv)) o.fail("n=" + std::to_string(n) + " fault " + sim.fault);
            for (int i = 0; i < k; ++i) {
                std::string m = sim.machine(i);
                bool entered = m == "Initial1" && prev[i] != "Initial1";
                if (b % period == 0 && (m != "Initial1" || sim.st.agents[i].pos != 0 || !sim.st.agents[i].alive))
                    o.fail("n=" + std::to_string(n) + " agent " + std::to_string(i + 1) + " not home in Initial1 at " +
                           std::to_string(b));
                if (b % period != 0 && entered)
                    o.fail("n=" + std::to_string(n) + " Initial1 entered at " + std::to_string(b));
                prev[i] = m;
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        worst = std::max(worst, secs);
        if (secs >= 1.0) o.fail("n=" + std::to_string(n) + " took " + std::to_string(secs) + " s");
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=5..12, 10 periods of 2n+4 each, slowest n %.3f s; tolerance 0 rounds, < 1 s per n",
                  worst);
    o.detail = buf;
    return o;
}

Outcome c2_coloc_periodicity() {
    Outcome o;
    for (int n = 4; n <= 12; ++n) {
        const int period = 4 * n + 1;
        Sim sim(ProtocolKind::PblColoc, n, n - 1, {0, 0, 0});
        NeverActive adv;
        std::vector<std::string> prev(3);
        for (int b = 0; b <= 10 * period; ++b) {
            if (b > 0 && !sim.step(adv)) o.fail("n=" + std::to_string(n) + " fault " + sim.fault);
            bool reset = sim.st.nodes[0].pebbles == 3;
            for (int i = 0; i < 3; ++i) {
                std::string m = sim.machine(i);
                reset = reset && m == "Initial" && sim.st.agents[i].pos == 0;
                if (b % period != 0 && m == "Initial" && prev[i] != "Initial")
                    o.fail("n=" + std::to_string(n) + " Initial entered at " + std::to_string(b));
                prev[i] = m;
            }
            if (b % period == 0 && !reset) o.fail("n=" + std::to_string(n) + " no reset at " + std::to_string(b));
        }
    }
    o.detail = "n=4..12, 10 periods of 4n+1 each; tolerance 0 rounds";
    return o;
}

Outcome c3_scat_sync() {
    Outcome o;
    int runs = 0;
    for (int n = 6; n <= 12; ++n) {
        const int period = 3 * n + 2;
        for (auto& nodes : bbh::test::placements_with_origin(n, 4, true)) {
            ++runs;
            int bh = 1;
            while (std::find(nodes.begin(), nodes.end(), bh) != nodes.end()) ++bh;
            Sim sim(ProtocolKind::PblScat, n, bh, nodes);
            NeverActive adv;
            std::vector<std::string> prev(4);
            auto tag = [&](int b) {
                std::string p;
                for (int v : nodes) p += std::to_string(v) + ",";
                return "n=" + std::to_string(n) + " placement " + p + " round " + std::to_string(b);
            };
            for (int i = 0; i < 4; ++i)
                if (sim.machine(i) != "Forward") o.fail(tag(0) + " not in Forward");
            for (int i = 0; i < 4; ++i) prev[i] = sim.machine(i);
            for (int b = 1; b <= 10 * period; ++b) {
                if (!sim.step(adv)) o.fail(tag(b) + " fault " + sim.fault);
                int r = b % period;
                for (int i = 0; i < 4; ++i) {
                    std::string m = sim.machine(i);
                    bool fetch = m == "Fetch" && prev[i] != "Fetch";
                    bool fwd = m == "Forward" && prev[i] != "Forward";
                    if (fetch != (r == n + 1)) o.fail(tag(b) + " Fetch entry mismatch for agent " + std::to_string(i + 1));
                    if (fwd != (r == 0)) o.fail(tag(b) + " Forward entry mismatch for agent " + std::to_string(i + 1));
                    prev[i] = m;
                }
            }
        }
    }
    o.detail = std::to_string(runs) + " spread placements over n=6..12, Fetch at t+n+1, Forward at t+3n+2; tolerance 0 rounds";
    return o;
}

Outcome c4_f2f_shrinkage() {
    Outcome o;
    int single = 0, runs = 0;
    for (int n = 5; n <= 12; ++n) {
        const int k = f2f_agents(n), period = 2 * n + 4;
        for (int bh = 1; bh < n; ++bh) {
            std::vector<std::function<std::unique_ptr<Adversary>()>> advs;
            advs.push_back([] { return std::make_unique<KillNthVisit>(1, false); });
            for (int id = 1; id <= k; ++id) advs.push_back([id] { return std::make_unique<KillAgent>(id); });
            for (auto& mk : advs) {
                ++runs;
                auto adv = mk();
                Sim sim(ProtocolKind::F2FColoc, n, bh, std::vector<int>(k, 0));
                std::string tag = "n=" + std::to_string(n) + " bh=" + std::to_string(bh) + " " + adv->describe();
                // (|S|, alive) at each iteration start
                std::vector<std::pair<int, int>> starts;
                for (int b = 0; b <= 16 * period; ++b) {
                    if (b > 0 && !sim.step(*adv)) {
                        o.fail(tag + " fault " + sim.fault);
                        break;
                    }
                    if (b % period != 0) continue;
                    const F2FState* s = nullptr;
                    bool all_initial = true;
                    for (std::size_t i = 0; i < sim.st.agents.size(); ++i) {
                        if (!sim.st.agents[i].alive) continue;
                        all_initial = all_initial && sim.machine(i) == "Initial1";
                        s = &std::get<F2FState>(sim.st.agents[i].st);
                    }
                    if (!s || !all_initial) break;
                    starts.emplace_back(s->s_rgt - s->s_lft + 1, sim.st.alive_count());
                }
                if (starts.empty()) continue;
                const int s0 = starts.front().first;
                int mods = 0;
                for (std::size_t i = 0; i + 1 < starts.size(); ++i) {
                    auto [s, alive] = starts[i];
                    auto [next, alive_next] = starts[i + 1];
                    if (alive - alive_next == 1) {
                        ++single;
                        if (next > (s + 1) / 2 + 1)
                            o.fail(tag + " |S| " + std::to_string(s) + " -> " + std::to_string(next));
                    }
                    if (next != s) {
                        ++mods;
                        int bound = (s0 + (1 << mods) - 1) / (1 << mods) + 2;
                        if (next > bound) o.fail(tag + " cumulative |S|=" + std::to_string(next));
                    }
                }
            }
        }
    }
    if (single == 0) o.fail("no single-death iteration observed");
    o.detail = std::to_string(runs) + " runs, " + std::to_string(single) +
               " single-death iterations checked; tolerance 0 nodes";
    return o;
}

Outcome c5_wb_latency() {
    Outcome o;
    int runs = 0, destroyed = 0, worst = -1;
    for (int n = 6; n <= 10; ++n) {
        for (auto& nodes : bbh::test::placements_with_origin(n, 3, true)) {
            for (int bh = 1; bh < n; ++bh) {
                if (std::find(nodes.begin(), nodes.end(), bh) != nodes.end()) continue;
                for (int j = 1; j <= 5; ++j)
                    for (bool destroy : {false, true}) {
                        ++runs;
                        KillNthVisit adv(j, destroy);
                        Sim sim(ProtocolKind::WBScat, n, bh, nodes);
                        std::string tag = "n=" + std::to_string(n) + " placement " + std::to_string(nodes[1]) + "," +
                                          std::to_string(nodes[2]) + " bh=" + std::to_string(bh) + " " + adv.describe();
                        int first_death = -1, claim = -1;
                        const int limit = 20 * (4 * n + 1);
                        for (int b = 1; b <= limit; ++b) {
                            if (!sim.step(adv)) {
                                o.fail(tag + " fault " + sim.fault);
                                break;
                            }
                            if (first_death < 0 && sim.st.alive_count() < 3) first_death = b - 1;
                            for (auto& c : sim.st.claims) {
                                if (c.node != bh) o.fail(tag + " false claim");
                                if (claim < 0 || c.round < claim) claim = c.round;
                            }
                            if (claim >= 0 || (first_death >= 0 && b > first_death + 10 * n + 1)) break;
                        }
                        if (first_death < 0) continue;
                        ++destroyed;
                        if (claim < 0 || claim - first_death > 10 * n) {
                            o.fail(tag + " latency " + (claim < 0 ? std::string("unbounded") : std::to_string(claim - first_death)));
                        } else {
                            worst = std::max(worst, claim - first_death);
                        }
                    }
            }
        }
    }
    o.detail = std::to_string(runs) + " runs, " + std::to_string(destroyed) + " with a destruction, max latency " +
               std::to_string(worst) + " rounds; bound 10n";
    return o;
}

Outcome c6_scat_gather() {
    Outcome o;
    int runs = 0, gathers = 0, worst = -1;
    for (int n = 6; n <= 10; ++n) {
        const int period = 3 * n + 2;
        for (auto& nodes : bbh::test::placements_with_origin(n, 4, true)) {
            for (int bh = 1; bh < n; ++bh) {
                if (std::find(nodes.begin(), nodes.end(), bh) != nodes.end()) continue;
                for (int m = 1; m <= 12; ++m)
                    for (bool destroy : {false, true}) {
                        ActivateOnce adv(m, destroy);
                        Sim sim(ProtocolKind::PblScat, n, bh, nodes);
                        std::string tag = "n=" + std::to_string(n) + " bh=" + std::to_string(bh) + " m=" +
                                          std::to_string(m) + (destroy ? " destroy" : "");
                        int gather = -1, met = -1;
                        for (int b = 1; b <= 6 * period; ++b) {
                            if (!sim.step(adv)) {
                                o.fail(tag + " fault " + sim.fault);
                                break;
                            }
                            for (std::size_t i = 0; i < 4; ++i)
                                if (gather < 0 && sim.st.agents[i].alive && sim.machine(i) == "Gather1") gather = b;
                            if (gather >= 0 && met < 0 && sim.st.alive_count() == 3 && all_colocated(sim.st)) met = b;
                        }
                        if (4 - sim.st.alive_count() != 1) continue;
                        ++runs;
                        if (gather < 0) continue;
                        ++gathers;
                        if (met < 0 || met - gather > 2 * n - 2)
                            o.fail(tag + " gather took " + (met < 0 ? std::string("forever") : std::to_string(met - gather)));
                        else
                            worst = std::max(worst, met - gather);
                    }
            }
        }
    }
    if (gathers == 0) o.fail("no Gather1 observed");
    o.detail = std::to_string(runs) + " single-death runs, " + std::to_string(gathers) + " entered Gather1, max " +
               std::to_string(worst) + " rounds to co-locate; bound 2n-2";
    return o;
}

struct McConfig {
    ProtocolKind p;
    int n, bh;
    std::vector<int> nodes;
};

std::vector<McConfig> mc_configs(ProtocolKind p, int n) {
    std::vector<std::vector<int>> placements;
    switch (p) {
        case ProtocolKind::F2FColoc: placements = {std::vector<int>(f2f_agents(n), 0)}; break;
        case ProtocolKind::PblColoc:
        case ProtocolKind::WBColoc: placements = {{0, 0, 0}}; break;
        case ProtocolKind::PblScat: placements = bbh::test::placements_with_origin(n, 4, false); break;
        case ProtocolKind::WBScat: placements = bbh::test::placements_with_origin(n, 3, false); break;
    }
    std::vector<McConfig> out;
    for (auto& nodes : placements)
        for (int bh = 0; bh < n; ++bh) {
            McConfig c{p, n, bh, nodes};
            if (validate(bbh::test::make_config(p, n, bh, nodes)).empty()) out.push_back(c);
        }
    return out;
}

ExploreResult model_check(const McConfig& c, ProtocolOptions mut = {}) {
    auto cfg = bbh::test::make_config(c.p, c.n, c.bh, c.nodes);
    auto proto = make_protocol(c.p, mut);
    Engine engine(cfg, *proto);
    ExploreOptions opts;
    opts.horizon = 6 * proto->period(c.n);
    return explore_all(engine, opts);
}

std::string describe(const McConfig& c) {
    std::string s = std::string(to_string(c.p)) + " n=" + std::to_string(c.n) + " bh=" + std::to_string(c.bh) + " at ";
    for (std::size_t i = 0; i < c.nodes.size(); ++i) s += (i ? "," : "") + std::to_string(c.nodes[i]);
    return s;
}

Outcome c7_model_check() {
    Outcome o;
    std::map<std::string, int> count;
    std::size_t max_states = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (ProtocolKind p : {ProtocolKind::F2FColoc, ProtocolKind::PblColoc, ProtocolKind::WBColoc, ProtocolKind::PblScat,
                           ProtocolKind::WBScat}) {
        int hi = p == ProtocolKind::F2FColoc ? 7 : 8;
        for (int n = 5; n <= hi; ++n)
            for (auto& c : mc_configs(p, n)) {
                auto r = model_check(c);
                ++count[to_string(p)];
                max_states = std::max(max_states, r.states);
                if (r.verdict != Verdict::Pass)
                    o.fail(describe(c) + " " + to_string(r.verdict) +
                           (r.cex ? " " + r.cex->property + " at " + std::to_string(r.cex->round) + ": " + r.cex->detail : ""));
            }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string per;
    for (auto& [k, v] : count) per += (per.empty() ? "" : ", ") + k + " " + std::to_string(v);
    char buf[96];
    std::snprintf(buf, sizeof buf, "; largest %zu states, %.1f s total; horizon 6 periods", max_states, secs);
    o.detail = "configurations: " + per + buf;
    return o;
}

// Runs the counterexample schedule and looks for the same violation at the same round.
bool reproduces(const McConfig& c, ProtocolOptions mut, const Counterexample& cex, std::string* why) {
    auto cfg = bbh::test::make_config(c.p, c.n, c.bh, c.nodes);
    auto proto = make_protocol(c.p, mut);
    Engine engine(cfg, *proto);
    ScheduledScript adv(cex.script);
    auto res = engine.run_until(adv, {StopCondition::MaxRounds, cex.round + 1});
    Timeline tl = build_timeline(res.trace);
    if (cex.property == "integrity") {
        bool ok = res.trace.fault && (res.trace.fault->round == cex.round || res.trace.fault->round + 1 == cex.round);
        if (!ok) *why = "no integrity fault at round " + std::to_string(cex.round);
        return ok;
    }
    if (cex.property == "survival") {
        bool ok = cex.round < static_cast<int>(tl.pos.size()) &&
                  std::none_of(tl.pos[cex.round].begin(), tl.pos[cex.round].end(), [](int p) { return p >= 0; }) &&
                  (cex.round == 0 || std::any_of(tl.pos[cex.round - 1].begin(), tl.pos[cex.round - 1].end(),
                                                 [](int p) { return p >= 0; }));
        if (!ok) *why = "survivors remain at round " + std::to_string(cex.round);
        return ok;
    }
    if (cex.property == "true-detection") {
        for (auto& cl : res.final.claims)
            if (cl.node != c.bh) return cl.round + 1 == cex.round;
        *why = "no false claim";
        return false;
    }
    if (cex.property == "coverage") {
        auto r = check_coverage(tl, cfg, 2 * c.n, tl.first_true_claim, cex.round);
        bool ok = r.verdict == Verdict::Fail && r.witness.size() == 2 && r.witness[1] == cex.round;
        if (!ok) *why = "coverage holds up to round " + std::to_string(cex.round);
        return ok;
    }
    *why = "unknown property " + cex.property;
    return false;
}

Outcome c8_mutations() {
    Outcome o;
    struct Hook {
        const char* name;
        ProtocolKind p;
        ProtocolOptions opts;
        int hi;
    };
    ProtocolOptions f2f, wb;
    f2f.mutate_f2f_wait1_left = true;
    wb.mutate_wb_drop_visited = true;
    std::string found;
    for (const Hook& h : {Hook{"f2f-wait1-left", ProtocolKind::F2FColoc, f2f, 7}, Hook{"wb-drop-visited", ProtocolKind::WBScat, wb, 8}}) {
        int failing = 0, replayed = 0, total = 0;
        for (int n = 5; n <= h.hi; ++n)
            for (auto& c : mc_configs(h.p, n)) {
                ++total;
                auto r = model_check(c, h.opts);
                if (r.verdict != Verdict::Fail || !r.cex) continue;
                ++failing;
                std::string why;
                if (reproduces(c, h.opts, *r.cex, &why))
                    ++replayed;
                else
                    o.fail(std::string(h.name) + " " + describe(c) + ": replay differs: " + why);
            }
        if (failing == 0) o.fail(std::string(h.name) + " never caught");
        found += (found.empty() ? "" : ", ") + std::string(h.name) + " fails " + std::to_string(failing) + "/" +
                 std::to_string(total) + " configs, " + std::to_string(replayed) + " replayed";
    }
    o.detail = found;
    return o;
}

Outcome c9_coverage() {
    Outcome o;
    struct Case {
        ProtocolKind p;
        int n;
    };
    std::vector<Case> cases;
    for (int n = 5; n <= 10; ++n)
        for (ProtocolKind p : {ProtocolKind::F2FColoc, ProtocolKind::PblColoc, ProtocolKind::WBColoc, ProtocolKind::PblScat,
                               ProtocolKind::WBScat})
            cases.push_back({p, n});
    std::map<std::string, int> detected;
    int never_runs = 0;
    for (auto [p, n] : cases) {
        auto nodes = default_placement(p, n);
        int bh = default_bh(nodes, n);
        int w = default_window(p, n);
        std::string tag = std::string(to_string(p)) + " n=" + std::to_string(n);
        {
            ++never_runs;
            Sim sim(p, n, bh, nodes);
            NeverActive adv;
            std::vector<std::vector<int>> occ{occupied_nodes(sim.st)};
            for (int b = 1; b <= 10 * w; ++b) {
                if (!sim.step(adv)) o.fail(tag + " fault " + sim.fault);
                occ.push_back(occupied_nodes(sim.st));
            }
            std::string why;
            if (!windows_covered(occ, n, bh, w, 0, 10 * w, &why)) o.fail(tag + " never: " + why);
        }
        std::vector<std::function<std::unique_ptr<Adversary>()>> advs = {
            [] { return std::make_unique<AlwaysActive>(false); },
            [] { return std::make_unique<AlwaysActive>(true); },
            [] { return std::make_unique<KillNthVisit>(1, false); },
            [] { return std::make_unique<KillNthVisit>(2, true); },
            [] { return std::make_unique<KillNthVisit>(3, false); },
        };
        for (std::uint64_t seed = 1; seed <= 5; ++seed)
            advs.push_back([seed] { return std::make_unique<SeededRandom>(0.5, 0.5, seed); });
        for (auto& mk : advs) {
            auto adv = mk();
            Sim sim(p, n, bh, nodes);
            std::vector<std::vector<int>> occ{occupied_nodes(sim.st)};
            int claim = -1;
            const int limit = 40 * sim.period();
            for (int b = 1; b <= limit; ++b) {
                if (!sim.step(*adv)) {
                    o.fail(tag + " " + adv->describe() + " fault " + sim.fault);
                    break;
                }
                occ.push_back(occupied_nodes(sim.st));
                for (auto& c : sim.st.claims)
                    if (c.node == bh && (claim < 0 || c.round + 1 < claim)) claim = c.round + 1;
                if (claim >= 0 && b >= claim + 20 * n) break;
            }
            if (claim < 0 || static_cast<int>(occ.size()) <= claim + 20 * n) continue;
            ++detected[to_string(p)];
            std::string why;
            if (!windows_covered(occ, n, bh, 2 * n, claim, claim + 20 * n, &why))
                o.fail(tag + " " + adv->describe() + " after detection: " + why);
        }
    }
    std::string per;
    for (ProtocolKind p : {ProtocolKind::F2FColoc, ProtocolKind::PblColoc, ProtocolKind::WBColoc, ProtocolKind::PblScat,
                           ProtocolKind::WBScat}) {
        int d = detected[to_string(p)];
        if (d == 0) o.fail(std::string("no detection observed for ") + to_string(p));
        per += (per.empty() ? "" : ", ") + std::string(to_string(p)) + " " + std::to_string(d);
    }
    o.detail = std::to_string(never_runs) + " idle runs over 10 default windows; post-detection runs over 10 windows of 2n: " + per;
    return o;
}

Outcome c10_determinism() {
    Outcome o;
    int specs = 0;
    for (ProtocolKind p : {ProtocolKind::F2FColoc, ProtocolKind::PblColoc, ProtocolKind::WBColoc, ProtocolKind::PblScat,
                           ProtocolKind::WBScat})
        for (int n : {6, 9})
            for (std::string adv : {"never", "always:destroy", "kill-nth-visit:2:destroy", "random:0.3:0.5", "random:0.7:0.2"})
                for (std::uint64_t seed : {1ull, 42ull}) {
                    RunSpec spec;
                    auto nodes = default_placement(p, n);
                    spec.config = bbh::test::make_config(p, n, default_bh(nodes, n), nodes);
                    spec.adversary = adv;
                    spec.seed = seed;
                    spec.max_rounds = 10 * (4 * n + 4);
                    spec.properties = {parse_property("survival"), parse_property("true-detection")};
                    ++specs;
                    auto a = bbh::test::trace_text(run_spec(spec).trace);
                    auto b = bbh::test::trace_text(run_spec(spec).trace);
                    if (a != b) o.fail(std::string(to_string(p)) + " n=" + std::to_string(n) + " " + adv + " differs");
                }
    o.detail = std::to_string(specs) + " run specs executed twice, traces compared byte for byte";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*fn)();
    };
    const Criterion all[] = {
        {1, "f2f periodicity", c1_f2f_periodicity},
        {2, "pbl-coloc periodicity", c2_coloc_periodicity},
        {3, "pbl-scat synchronization", c3_scat_sync},
        {4, "f2f region shrinkage", c4_f2f_shrinkage},
        {5, "wb-scat detection latency", c5_wb_latency},
        {6, "pbl-scat gather bound", c6_scat_gather},
        {7, "exhaustive model check", c7_model_check},
        {8, "mutation falsifiability", c8_mutations},
        {9, "coverage windows", c9_coverage},
        {10, "determinism", c10_determinism},
    };
    int failed = 0;
    for (auto& c : all) {
        Outcome o = c.fn();
        std::printf("criterion %2d %-28s %s  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        if (!o.pass) {
            std::printf("             first failure: %s\n", o.first_failure.c_str());
            ++failed;
        }
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
