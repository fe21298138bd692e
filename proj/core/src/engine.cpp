#include "bbh/engine.hpp"

#include <algorithm>

namespace bbh {

int GlobalState::alive_count() const {
    return static_cast<int>(std::count_if(agents.begin(), agents.end(), [](auto& a) { return a.alive; }));
}

std::vector<int> GlobalState::destroyed() const {
    std::vector<int> out;
    for (auto& a : agents)
        if (!a.alive) out.push_back(a.id);
    return out;
}

int GlobalState::total_tokens() const {
    int t = 0;
    for (auto& s : nodes) t += s.tokens();
    return t;
}

std::uint64_t GlobalState::hash() const {
    Hasher h;
    for (auto& a : agents) {
        h.add_int(a.id);
        h.add(a.alive);
        if (!a.alive) continue;
        h.add_int(a.pos);
        hash_into(h, a.st);
    }
    for (auto& s : nodes) {
        h.add_opt(s.home);
        h.add_opt(s.visited);
        h.add(s.dir.has_value());
        if (s.dir) {
            h.add(static_cast<int>(s.dir->dir));
            h.add_int(s.dir->id);
        }
        h.add_opt(s.marking);
        h.add_int(s.pebble_marks);
        h.add_int(s.pebbles);
    }
    h.add_int(destroyed_tokens);
    return h.value();
}

Engine::Engine(RingConfig cfg, const Protocol& protocol, EngineOptions opts)
    : cfg_(std::move(cfg)), proto_(protocol), opts_(opts) {
    if (auto err = validate(cfg_); !err.empty()) throw ModelViolation(err);
    if (proto_.kind() != cfg_.protocol) throw ModelViolation("protocol does not match configuration");
}

Snapshot Engine::snapshot(const GlobalState& s, std::size_t i) const {
    const auto& me = s.agents[i];
    Snapshot snap;
    snap.n = cfg_.n;
    snap.round = s.round;
    snap.self = me.id;
    snap.pos = me.pos;
    snap.store = &s.nodes[me.pos];
    bool f2f = cfg_.comm_model() == CommModel::F2F;
    for (auto& a : s.agents) {
        if (!a.alive || a.pos != me.pos) continue;
        snap.here.push_back(a.id);
        if (f2f && a.id != me.id) snap.peers.push_back({a.id, &a.st});
    }
    return snap;
}

namespace {

TraceEvent state_change(const Protocol& p, int round, int agent, int node, const LocalState* before,
                        const LocalState& after) {
    TraceEvent e{round, EventKind::STATE_CHANGE, agent, node, {}};
    e.kv.emplace_back("from", before ? p.machine(*before) : "-");
    e.kv.emplace_back("to", p.machine(after));
    for (auto& f : p.fields(after)) e.kv.push_back(f);
    return e;
}

bool changed(const Protocol& p, const LocalState& a, const LocalState& b) {
    return p.machine(a) != p.machine(b) || p.fields(a) != p.fields(b);
}

bool is_erase(WbOpKind k) {
    return k == WbOpKind::Clear || k == WbOpKind::EraseDir || k == WbOpKind::EraseMarking ||
           k == WbOpKind::RemovePebbleMark;
}

}  // namespace

GlobalState Engine::initial(std::vector<TraceEvent>* events) const {
    GlobalState s;
    s.nodes.assign(cfg_.n, NodeStore{});
    auto placement = cfg_.placement;
    std::sort(placement.begin(), placement.end());
    for (auto& [id, node] : placement) {
        AgentRecord a;
        a.id = id;
        a.pos = node;
        a.st = proto_.initial(cfg_, id);
        s.agents.push_back(std::move(a));
        if (cfg_.comm_model() == CommModel::Pebble) ++s.nodes[node].pebbles;
        if (cfg_.protocol == ProtocolKind::WBColoc) ++s.nodes[node].pebble_marks;
    }
    if (events)
        for (auto& a : s.agents) events->push_back(state_change(proto_, 0, a.id, a.pos, nullptr, a.st));
    std::vector<LocalState> woken;
    for (std::size_t i = 0; i < s.agents.size(); ++i) {
        LocalState st = s.agents[i].st;
        proto_.wake(st, snapshot(s, i));
        woken.push_back(std::move(st));
    }
    for (std::size_t i = 0; i < s.agents.size(); ++i) {
        auto& a = s.agents[i];
        if (events && changed(proto_, a.st, woken[i]))
            events->push_back(state_change(proto_, 0, a.id, a.pos, &a.st, woken[i]));
        a.st = std::move(woken[i]);
    }
    return s;
}

Plan Engine::plan(const GlobalState& s) const {
    Plan p;
    p.actions.resize(s.agents.size());
    p.next.reserve(s.agents.size());
    p.view.round = s.round;
    p.view.data_at_bh = s.nodes[cfg_.bh];
    for (std::size_t i = 0; i < s.agents.size(); ++i) {
        const auto& a = s.agents[i];
        p.next.push_back(a.st);
        if (!a.alive) continue;
        try {
            p.actions[i] = proto_.step(p.next[i], snapshot(s, i));
        } catch (const IntegrityFault& f) {
            if (p.fault.empty()) p.fault = "agent " + std::to_string(a.id) + ": " + f.what();
            p.actions[i] = Action::stay();
        }
        if (a.pos == cfg_.bh) p.view.at_bh.push_back(a.id);
        if (p.actions[i]->move && neighbor(a.pos, *p.actions[i]->move, cfg_.n) == cfg_.bh)
            p.view.entering_bh.push_back(a.id);
    }
    return p;
}

void Engine::apply(GlobalState& s, const Plan& p, Decision d, std::vector<TraceEvent>* ev) const {
    const int r = s.round, n = cfg_.n, bh = cfg_.bh;
    const CommModel model = cfg_.comm_model();
    d.destroy_data = d.active && d.destroy_data;
    auto emit = [&](TraceEvent e) {
        if (ev) ev->push_back(std::move(e));
    };
    std::vector<bool> acting(s.agents.size(), false);
    for (std::size_t i = 0; i < s.agents.size(); ++i) acting[i] = s.agents[i].alive;

    if (d.active) emit({r, EventKind::BH_ACTIVE, -1, bh, {{"destroy", d.destroy_data ? "1" : "0"}}});
    if (d.active && opts_.kill_residents) {
        for (std::size_t i = 0; i < s.agents.size(); ++i) {
            auto& a = s.agents[i];
            if (!a.alive || a.pos != bh) continue;
            a.alive = false;
            acting[i] = false;
            emit({r, EventKind::DESTROYED, a.id, bh, {{"cause", "resident"}, {"carried", "0"}}});
        }
    }

    for (std::size_t i = 0; i < s.agents.size(); ++i) {
        if (!acting[i] || !p.actions[i]->claim) continue;
        auto& a = s.agents[i];
        int c = *p.actions[i]->claim;
        s.claims.push_back({a.id, c, r});
        emit({r, EventKind::DETECT_CLAIM, a.id, a.pos, {{"claim", std::to_string(c)}}});
    }

    // Communication phase, serialized by ascending id.
    for (std::size_t i = 0; i < s.agents.size(); ++i) {
        if (!acting[i]) continue;
        auto& a = s.agents[i];
        const Action& act = *p.actions[i];
        NodeStore& here = s.nodes[a.pos];
        for (auto& op : act.writes) {
            write_message(here, op, model);
            emit({r, is_erase(op.kind) ? EventKind::WB_ERASE : EventKind::WB_WRITE, a.id, a.pos,
                  {{"msg", describe(op)}}});
        }
        if (act.drop_marks > 0) {
            if (model != CommModel::Whiteboard) throw ModelViolation("pebble marks outside the whiteboard model");
            here.pebble_marks += act.drop_marks;
            emit({r, EventKind::WB_WRITE, a.id, a.pos,
                  {{"msg", "pebble"}, {"count", std::to_string(act.drop_marks)}}});
        }
        if (!act.move && (act.carry > 0 || act.carry_all)) throw ModelViolation("carrying without moving");
        if (act.carry > 0 || act.carry_all) {
            if (model == CommModel::F2F) throw ModelViolation("pebbles in the face-to-face model");
            int& pool = model == CommModel::Pebble ? here.pebbles : here.pebble_marks;
            int take = act.carry_all ? pool : act.carry;
            if (take > pool)
                throw IntegrityFault("agent " + std::to_string(a.id) + " picks " + std::to_string(take) +
                                     " from a node holding " + std::to_string(pool));
            pool -= take;
            a.carried = take;
            if (take > 0) {
                if (model == CommModel::Pebble)
                    emit({r, EventKind::PEBBLE_PICK, a.id, a.pos, {{"count", std::to_string(take)}}});
                else
                    emit({r, EventKind::WB_ERASE, a.id, a.pos, {{"msg", "pebble"}, {"count", std::to_string(take)}}});
            }
        }
    }

    // Move phase: simultaneous; edge crossings do not interact.
    for (std::size_t i = 0; i < s.agents.size(); ++i) {
        if (!acting[i] || !p.actions[i]->move) continue;
        auto& a = s.agents[i];
        Dir dir = *p.actions[i]->move;
        int from = a.pos;
        a.pos = neighbor(from, dir, n);
        TraceEvent m{r, EventKind::MOVE, a.id, a.pos, {{"from", std::to_string(from)}, {"dir", to_string(dir)}}};
        if (a.carried) m.kv.emplace_back("carry", std::to_string(a.carried));
        emit(std::move(m));
    }
    for (std::size_t i = 0; i < s.agents.size(); ++i) {
        if (!acting[i] || !p.actions[i]->move) continue;
        auto& a = s.agents[i];
        if (d.active && a.pos == bh) {
            a.alive = false;
            acting[i] = false;
            s.destroyed_tokens += a.carried;
            emit({r, EventKind::DESTROYED, a.id, bh, {{"cause", "arrival"}, {"carried", std::to_string(a.carried)}}});
            a.carried = 0;
            continue;
        }
        if (a.carried > 0) {
            NodeStore& dst = s.nodes[a.pos];
            if (model == CommModel::Pebble) {
                dst.pebbles += a.carried;
                emit({r, EventKind::PEBBLE_DROP, a.id, a.pos, {{"count", std::to_string(a.carried)}}});
            } else {
                dst.pebble_marks += a.carried;
                emit({r, EventKind::WB_WRITE, a.id, a.pos, {{"msg", "pebble"}, {"count", std::to_string(a.carried)}}});
            }
            a.carried = 0;
        }
    }

    if (d.destroy_data) {
        NodeStore& store = s.nodes[bh];
        s.destroyed_tokens += store.tokens();
        store = NodeStore{};
    }

    for (std::size_t i = 0; i < s.agents.size(); ++i) {
        auto& a = s.agents[i];
        if (!a.alive) continue;
        if (ev && changed(proto_, a.st, p.next[i]))
            emit(state_change(proto_, r + 1, a.id, a.pos, &a.st, p.next[i]));
        a.st = p.next[i];
    }
    ++s.round;
}

std::string Engine::run_round(GlobalState& s, Adversary& adv, std::vector<TraceEvent>* events) const {
    Plan p = plan(s);
    if (!p.fault.empty()) return p.fault;
    Decision d = adv.decide(p.view, s);
    try {
        apply(s, p, d, events);
    } catch (const IntegrityFault& f) {
        return f.what();
    } catch (const ModelViolation& f) {
        return f.what();
    }
    return {};
}

RunResult Engine::run_until(Adversary& adv, StopCondition stop, std::uint64_t seed) const {
    RunResult res;
    auto& h = res.trace.header;
    h.n = cfg_.n;
    h.bh = cfg_.bh;
    h.protocol = cfg_.protocol;
    auto placement = cfg_.placement;
    std::sort(placement.begin(), placement.end());
    for (auto& [id, node] : placement) h.placement.push_back(node);
    h.adversary = adv.describe();
    h.seed = seed;
    h.kill_residents = opts_.kill_residents;

    res.final = initial(&res.trace.events);
    auto done = [&](const GlobalState& s) {
        if (s.round >= stop.max_rounds) return true;
        if (s.alive_count() == 0) return true;
        if (stop.kind == StopCondition::FirstDetection) return !s.claims.empty();
        if (stop.kind == StopCondition::AllDetectedOrMax) {
            for (auto& a : s.agents) {
                if (!a.alive) continue;
                bool claimed = std::any_of(s.claims.begin(), s.claims.end(), [&](auto& c) { return c.agent == a.id; });
                if (!claimed) return false;
            }
            return true;
        }
        return false;
    };
    while (!done(res.final)) {
        int r = res.final.round;
        auto fault = run_round(res.final, adv, &res.trace.events);
        if (!fault.empty()) {
            res.fault = fault;
            res.fault_round = r;
            res.trace.fault = TraceFault{r, fault};
            break;
        }
    }
    h.rounds = res.final.round;
    return res;
}

}  // namespace bbh
