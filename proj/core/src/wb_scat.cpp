#include "bbh/wb_scat.hpp"

#include "bbh/pbl_coloc.hpp"

namespace bbh {

const char* to_string(WBMachine m) {
    switch (m) {
        case WBMachine::Initial: return "Initial";
        case WBMachine::Forward: return "Forward";
        case WBMachine::BackWait: return "Back-Wait";
        case WBMachine::Backtrack: return "Backtrack";
        case WBMachine::InitialWait: return "Initial-Wait";
        case WBMachine::Gather: return "Gather";
        case WBMachine::Gather1: return "Gather1";
        case WBMachine::Gather2: return "Gather2";
        case WBMachine::CautiousLeader: return "Cautious-Leader";
        case WBMachine::CautiousFollower: return "Cautious-Follower";
        case WBMachine::ExploreForever: return "ExploreForever";
        case WBMachine::PairWait: return "Pair-Wait";
        case WBMachine::PairSeek: return "Pair-Seek";
        case WBMachine::Coloc: return "Coloc";
    }
    return "?";
}

LocalState WBScatProtocol::initial(const RingConfig& cfg, int id) const {
    WBState s;
    for (auto& [aid, node] : cfg.placement)
        if (aid == id) s.home = node;
    return s;
}

void WBScatProtocol::wake(LocalState& st, const Snapshot& snap) const {
    auto& s = std::get<WBState>(st);
    s.t = 0;
    if (snap.count() == 1) {
        s.m = WBMachine::Initial;
    } else if (snap.count() == 2) {
        s.m = WBMachine::PairWait;
        s.partner = snap.here[0] == snap.self ? snap.here[1] : snap.here[0];
    } else {
        throw IntegrityFault("three co-located agents");
    }
}

std::string WBScatProtocol::machine(const LocalState& st) const {
    auto& s = std::get<WBState>(st);
    if (s.m == WBMachine::Coloc) return std::string("Coloc.") + to_string(s.coloc.m);
    return to_string(s.m);
}

namespace {

WbOp op(WbOpKind k) { return WbOp{k}; }

WbOp home_op(int id) {
    WbOp o{WbOpKind::WriteHome};
    o.id = id;
    return o;
}

WbOp marking_op(Marking m) {
    WbOp o{WbOpKind::WriteMarking};
    o.marking = m;
    return o;
}

WbOp dir_op(DirMsg d) {
    WbOp o{WbOpKind::WriteDir};
    o.dir = d;
    return o;
}

Dir walk_dir(const WBState& s) { return s.marking == Marking::Right ? Dir::CW : Dir::CCW; }

Action declare(WBState& s, int node, int pos, Dir away, int n) {
    s.m = WBMachine::ExploreForever;
    s.ex = start_explore(pos, node, away, n);
    Action a = explore_step(s.ex, pos, n);
    a.claim = node;
    return a;
}

// One hop every three rounds: the leader probes the next node alone, comes
// back if it carries the expected marking, and both step forward together.
Action cautious_step(WBState& s, const Snapshot& snap) {
    const int n = snap.n;
    const Dir d = walk_dir(s);
    if (s.m == WBMachine::CautiousLeader) {
        switch (s.phase) {
            case 0:
                s.phase = 1;
                return Action::go(d);
            case 1:
                if (snap.store->marking == s.marking) {
                    s.phase = 2;
                    return Action::go(opposite(d));
                }
                // Keep going away from the follower so it notices the absence.
                return declare(s, snap.pos, snap.pos, d, n);
            default:
                s.phase = 0;
                return Action::go(d);
        }
    }
    if (s.phase < 2) {
        ++s.phase;
        return Action::stay();
    }
    if (snap.count() > 1) {
        s.phase = 0;
        return Action::go(d);
    }
    return declare(s, neighbor(snap.pos, d, n), snap.pos, opposite(d), n);
}

Action start_cautious(WBState& s, const Snapshot& snap, Dir d) {
    if (snap.count() != 2) throw IntegrityFault("cautious walk needs exactly two agents");
    s.marking = d == Dir::CW ? Marking::Right : Marking::Left;
    s.phase = 0;
    s.m = snap.rank() == 0 ? WBMachine::CautiousLeader : WBMachine::CautiousFollower;
    return cautious_step(s, snap);
}

Action gather1_step(WBState& s, const Snapshot& snap) {
    const auto& home = snap.store->home;
    if (home && !snap.present(*home)) return start_cautious(s, snap, Dir::CW);
    return Action::go(Dir::CW);
}

Action gather2_step(WBState& s, const Snapshot& snap) {
    const auto& home = snap.store->home;
    if (home && *home == s.stored->id) return start_cautious(s, snap, Dir::CCW);
    return Action::go(Dir::CCW);
}

// Lone walk towards the survivors until meeting one of them.
Action gather_step(WBState& s, const Snapshot& snap) {
    if (snap.count() == 1) return Action::go(s.stored->dir);
    if (snap.count() > 2) throw IntegrityFault("gathering agent met two others");
    Action a;
    if (s.stored->dir == Dir::CW) {
        s.stored->id = 0;
        s.m = WBMachine::Gather1;
    } else {
        s.stored->id = snap.here[0] == snap.self ? snap.here[1] : snap.here[0];
        s.m = WBMachine::Gather2;
    }
    a.writes.push_back(dir_op(*s.stored));
    return a;
}

}  // namespace

Action WBScatProtocol::step(LocalState& st, const Snapshot& snap) const {
    auto& s = std::get<WBState>(st);
    const int n = snap.n;
    const NodeStore& store = *snap.store;
    auto tick = [&](Action a) {
        ++s.t;
        return a;
    };
    auto enter_gather = [&](Dir d) {
        s.m = WBMachine::Gather;
        s.stored = DirMsg{d, 0};
        return gather_step(s, snap);
    };
    // Multiplicity placement: the singleton reached the pair, everyone mints a
    // pebble mark and the three continue with the co-located protocol.
    auto setup_coloc = [&] {
        if (snap.count() != 3) throw IntegrityFault("unexpected meeting in the first cycle");
        s.m = WBMachine::Coloc;
        s.coloc = coloc_start(snap.pos, {snap.here[0], snap.here[1], snap.here[2]}, snap.tokens());
        Action a;
        a.drop_marks = 1;
        return a;
    };

    switch (s.m) {
        case WBMachine::Coloc:
            return coloc_step(s.coloc, snap);

        case WBMachine::ExploreForever:
            return explore_step(s.ex, snap.pos, n);

        case WBMachine::PairWait: {
            if (snap.count() >= 3) return setup_coloc();
            Action a;
            if (s.t == 0 && snap.rank() == 0) a.writes = {op(WbOpKind::Clear), home_op(snap.self)};
            if (s.t == n) {
                // The singleton never showed up, so it died on its clockwise walk.
                s.m = WBMachine::PairSeek;
                a.move = Dir::CW;
            }
            return tick(a);
        }

        case WBMachine::PairSeek: {
            const auto& home = store.home;
            if (home && *home != s.partner && *home != snap.self) return start_cautious(s, snap, Dir::CW);
            return Action::go(Dir::CW);
        }

        case WBMachine::Initial: {
            Action a = Action::go(Dir::CW);
            a.writes = {op(WbOpKind::Clear), home_op(snap.self)};
            s.m = WBMachine::Forward;
            s.t = 1;
            return a;
        }

        case WBMachine::Forward: {
            bool at_home = store.home.has_value();
            if (s.first && at_home && snap.count() >= 3) return setup_coloc();
            if (s.t < n) {
                if (at_home) return tick(Action::stay());
                Action a = Action::go(Dir::CW);
                a.writes = {marking_op(Marking::Right)};
                return tick(a);
            }
            if (!at_home) throw IntegrityFault("forward walk did not reach the next home");
            // A receipt we left last cycle is still here: its owner never came home.
            if (store.visited) return enter_gather(Dir::CCW);
            Action a;
            if (!opts_.mutate_wb_drop_visited) {
                WbOp v{WbOpKind::WriteVisited};
                v.id = snap.self;
                a.writes = {v};
            }
            s.m = WBMachine::BackWait;
            return tick(a);
        }

        case WBMachine::BackWait:
            if (snap.count() > 1 && store.dir && store.dir->dir == Dir::CCW) {
                s.stored = store.dir;
                s.m = WBMachine::Gather2;
                return gather2_step(s, snap);
            }
            if (s.t == 2 * n) {
                s.m = WBMachine::Backtrack;
                return tick(Action::go(Dir::CCW));
            }
            return tick(Action::stay());

        case WBMachine::Backtrack:
            if (s.t < 3 * n) {
                if (snap.pos == s.home) return tick(Action::stay());
                Action a = Action::go(Dir::CCW);
                a.writes = {marking_op(Marking::Left)};
                return tick(a);
            }
            if (snap.pos != s.home) throw IntegrityFault("backtrack did not reach home");
            // No receipt: the clockwise neighbour died on its way out.
            if (!store.visited) return enter_gather(Dir::CW);
            s.m = WBMachine::InitialWait;
            return tick(Action::stay());

        case WBMachine::InitialWait:
            if (snap.count() > 1 && store.dir && store.dir->dir == Dir::CW) {
                s.stored = store.dir;
                s.m = WBMachine::Gather1;
                return gather1_step(s, snap);
            }
            if (s.t == 4 * n) {
                s.m = WBMachine::Initial;
                s.t = 0;
                s.first = false;
                return Action::stay();
            }
            return tick(Action::stay());

        case WBMachine::Gather:
            return gather_step(s, snap);

        case WBMachine::Gather1:
            return gather1_step(s, snap);

        case WBMachine::Gather2:
            return gather2_step(s, snap);

        case WBMachine::CautiousLeader:
        case WBMachine::CautiousFollower:
            return cautious_step(s, snap);
    }
    throw IntegrityFault("unhandled state");
}

}  // namespace bbh
