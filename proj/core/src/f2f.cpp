#include "bbh/f2f.hpp"

namespace bbh {

int required_agents(int n) {
    int bits = 0;
    while ((1 << bits) < n - 1) ++bits;
    return bits + 3;
}

int dest_of(int s_lft, int s_rgt) {
    int size = s_rgt - s_lft + 1;
    return s_lft + (size + 1) / 2 - 1;
}

const char* to_string(F2FMachine m) {
    switch (m) {
        case F2FMachine::Initial0: return "Initial0";
        case F2FMachine::Initial1: return "Initial1";
        case F2FMachine::Stagnant: return "Stagnant";
        case F2FMachine::ForwardLeft: return "Forward-Left";
        case F2FMachine::ForwardRight: return "Forward-Right";
        case F2FMachine::WaitLeft: return "Wait-Left";
        case F2FMachine::WaitRight: return "Wait-Right";
        case F2FMachine::BacktrackLeft: return "Backtrack-Left";
        case F2FMachine::BacktrackRight: return "Backtrack-Right";
        case F2FMachine::Wait1Left: return "Wait1-Left";
        case F2FMachine::Wait1Right: return "Wait1-Right";
        case F2FMachine::Detection: return "Detection";
        case F2FMachine::ExploreForever: return "ExploreForever";
    }
    return "?";
}

LocalState F2FProtocol::initial(const RingConfig& cfg, int id) const {
    F2FState s;
    for (auto& [aid, node] : cfg.placement)
        if (aid == id) s.home = node;
    s.k = cfg.agents();
    s.s_lft = 1;
    s.s_rgt = cfg.n - 1;
    return s;
}

void F2FProtocol::wake(LocalState& st, const Snapshot&) const {
    auto& s = std::get<F2FState>(st);
    s.m = F2FMachine::Initial1;
    s.t = 0;
}

std::string F2FProtocol::machine(const LocalState& st) const { return to_string(std::get<F2FState>(st).m); }

std::vector<std::pair<std::string, std::string>> F2FProtocol::fields(const LocalState& st) const {
    auto& s = std::get<F2FState>(st);
    return {{"s_lft", std::to_string(s.s_lft)}, {"s_rgt", std::to_string(s.s_rgt)}, {"k", std::to_string(s.k)}};
}

namespace {

bool is_left(F2FMachine m) {
    return m == F2FMachine::ForwardLeft || m == F2FMachine::WaitLeft || m == F2FMachine::BacktrackLeft ||
           m == F2FMachine::Wait1Left;
}

bool is_walker(F2FMachine m) {
    return m != F2FMachine::Initial0 && m != F2FMachine::Initial1 && m != F2FMachine::Stagnant &&
           m != F2FMachine::Detection && m != F2FMachine::ExploreForever;
}

// Walker label for a boundary t rounds after Initial1.
F2FMachine walker_label(bool left, int t, int hops, int n) {
    if (t <= hops) return left ? F2FMachine::ForwardLeft : F2FMachine::ForwardRight;
    if (t <= n) return left ? F2FMachine::WaitLeft : F2FMachine::WaitRight;
    if (t <= n + hops) return left ? F2FMachine::BacktrackLeft : F2FMachine::BacktrackRight;
    return left ? F2FMachine::Wait1Left : F2FMachine::Wait1Right;
}

Action declare(F2FState& s, int node, int pos, int n) {
    s.m = F2FMachine::ExploreForever;
    s.ex = start_explore(pos, node, Dir::CW, n);
    Action a = explore_step(s.ex, pos, n);
    a.claim = node;
    return a;
}

}  // namespace

Action F2FProtocol::step(LocalState& st, const Snapshot& snap) const {
    auto& s = std::get<F2FState>(st);
    const int n = snap.n;
    const int last = 2 * n + 3;  // final round of an iteration
    auto at = [&](int d) { return advance(s.home, d, Dir::CW, n); };
    auto finish = [&](Action a) {
        if (s.t == last) {
            s.m = F2FMachine::Initial1;
            s.t = 0;
        } else {
            ++s.t;
        }
        return a;
    };

    switch (s.m) {
        case F2FMachine::Initial0:
            s.m = F2FMachine::Initial1;
            return Action::stay();

        case F2FMachine::ExploreForever:
            return explore_step(s.ex, snap.pos, n);

        case F2FMachine::Initial1: {
            if (snap.pos != s.home) throw IntegrityFault("Initial1 away from home");
            if (snap.count() != s.k) throw IntegrityFault("Initial1 with " + std::to_string(snap.count()) +
                                                          " agents present, expected " + std::to_string(s.k));
            int size = s.s_rgt - s.s_lft + 1;
            if (size < 1) throw IntegrityFault("empty suspicious region");
            if (size == 1) return declare(s, at(s.s_lft), snap.pos, n);
            s.t = 0;
            if (size == 2 && s.k == 2) {
                s.m = F2FMachine::Detection;
                s.lowest = snap.rank() == 0;
                s.hops = s.lowest ? s.s_lft : n - s.s_rgt;
                return finish(Action::stay());
            }
            if (s.k <= 1) throw IntegrityFault("dispatch with k=" + std::to_string(s.k));
            s.k -= 2;
            s.dest = dest_of(s.s_lft, s.s_rgt);
            int rank = snap.rank();
            if (rank == 0) {
                s.hops = s.dest;
                s.m = F2FMachine::ForwardLeft;
            } else if (rank == 1) {
                s.hops = n - s.dest;
                s.m = F2FMachine::ForwardRight;
            } else {
                s.hops = 0;
                s.m = F2FMachine::Stagnant;
            }
            return finish(Action::stay());
        }

        case F2FMachine::Stagnant: {
            if (s.t < last) return finish(Action::stay());
            int c = snap.count();
            if (c == s.k + 2) {
                s.k += 2;
            } else if (c == s.k + 1) {
                const F2FState* walker = nullptr;
                for (auto& p : snap.peers) {
                    auto* ps = std::get_if<F2FState>(p.state);
                    if (ps && (ps->m == F2FMachine::Wait1Left || ps->m == F2FMachine::Wait1Right)) walker = ps;
                }
                if (!walker) throw IntegrityFault("one walker back but none in Wait1");
                s.s_lft = walker->s_lft;
                s.s_rgt = walker->s_rgt;
                s.k += 1;
            } else if (c == s.k) {
                return declare(s, at(s.dest), snap.pos, n);
            } else {
                throw IntegrityFault("stagnant agent sees " + std::to_string(c) + " agents with k=" +
                                     std::to_string(s.k));
            }
            return finish(Action::stay());
        }

        case F2FMachine::Detection: {
            Dir out = s.lowest ? Dir::CW : Dir::CCW;
            if (s.t >= 1 && s.t <= s.hops) return finish(Action::go(out));
            if (s.t > s.hops && s.t <= 2 * s.hops) return finish(Action::go(opposite(out)));
            if (s.t < last) return finish(Action::stay());
            if (snap.count() == 1) return declare(s, at(s.lowest ? s.s_rgt : s.s_lft), snap.pos, n);
            return finish(Action::stay());
        }

        default: break;
    }

    if (!is_walker(s.m)) throw IntegrityFault("unexpected state");
    const bool left = is_left(s.m);
    const Dir out = left ? Dir::CW : Dir::CCW;
    Action a;
    if (s.t <= s.hops) {
        a = Action::go(out);
    } else if (s.t <= n) {
        a = Action::stay();
    } else if (s.t <= n + s.hops) {
        a = Action::go(opposite(out));
    } else if (s.t == last - 1) {
        int c = snap.count();
        if (c == s.k + 2) {
            s.k += 2;
        } else if (c == s.k + 1) {
            if (left)
                s.s_lft = s.dest;
            else
                s.s_rgt = s.dest;
            s.k += 1;
        } else {
            throw IntegrityFault("walker sees " + std::to_string(c) + " agents with k=" + std::to_string(s.k));
        }
        if (left && opts_.mutate_f2f_wait1_left) {
            s.m = F2FMachine::Initial1;
            s.t = 0;
            return Action::stay();
        }
    }
    a = finish(a);
    if (s.m != F2FMachine::Initial1) s.m = walker_label(left, s.t, s.hops, n);
    return a;
}

}  // namespace bbh
