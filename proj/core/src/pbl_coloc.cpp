#include "bbh/pbl_coloc.hpp"

#include <algorithm>

namespace bbh {

const char* to_string(ColocMachine m) {
    switch (m) {
        case ColocMachine::Initial: return "Initial";
        case ColocMachine::Leader: return "Leader";
        case ColocMachine::FollowerFind: return "Follower-Find";
        case ColocMachine::FollowerCollect: return "Follower-Collect";
        case ColocMachine::Backup: return "Backup";
        case ColocMachine::ReportLeader: return "Report-Leader";
        case ColocMachine::FindPebble: return "Find-Pebble";
        case ColocMachine::FindBH: return "Find-BH";
        case ColocMachine::Detection: return "Detection";
        case ColocMachine::ExploreForever: return "ExploreForever";
        case ColocMachine::LieLow: return "Lie-Low";
    }
    return "?";
}

ColocState coloc_start(int home, std::array<int, 3> ids, int extra) {
    std::sort(ids.begin(), ids.end());
    ColocState s;
    s.home = home;
    s.ids = ids;
    s.extra = extra;
    return s;
}

LocalState PblColocProtocol::initial(const RingConfig& cfg, int id) const {
    std::array<int, 3> ids{};
    int home = 0;
    for (std::size_t i = 0; i < 3 && i < cfg.placement.size(); ++i) ids[i] = cfg.placement[i].first;
    for (auto& [aid, node] : cfg.placement)
        if (aid == id) home = node;
    return coloc_start(home, ids, 0);
}

Action PblColocProtocol::step(LocalState& st, const Snapshot& snap) const {
    return coloc_step(std::get<ColocState>(st), snap);
}

std::string PblColocProtocol::machine(const LocalState& st) const {
    return to_string(std::get<ColocState>(st).m);
}

namespace {

Action declare(ColocState& s, int node, int pos, int n, Dir first = Dir::CW) {
    s.m = ColocMachine::ExploreForever;
    s.ex = start_explore(pos, node, first, n);
    Action a = explore_step(s.ex, pos, n);
    a.claim = node;
    return a;
}

int my_role(const ColocState& s, int self) {
    return static_cast<int>(std::find(s.ids.begin(), s.ids.end(), self) - s.ids.begin());
}

// Round trip of the two survivors over the candidates at distances n-2 and n-1.
Action detection_step(ColocState& s, const Snapshot& snap) {
    const int n = snap.n;
    const int cycle = 2 * n - 4;
    int partner = s.role == 0 ? s.ids[2] : s.ids[0];
    if (s.t == 0 && s.w > 0 && !snap.present(partner)) {
        // The partner vanished on its own leg; the other candidate is the hole.
        return declare(s, advance(s.home, s.lowest ? n - 1 : n - 2, Dir::CW, n), snap.pos, n);
    }
    Action a;
    if (s.lowest) {
        if (s.t < n - 2) a = Action::go(Dir::CW);
        else a = Action::go(Dir::CCW);
    } else {
        if (s.t == 0) a = Action::go(Dir::CCW);
        else if (s.t == 1) a = Action::go(Dir::CW);
    }
    if (++s.t == cycle) {
        s.t = 0;
        s.w = 1;
    }
    return a;
}

void enter_detection(ColocState& s, int pos) {
    s.m = ColocMachine::Detection;
    s.home = pos;
    s.t = 0;
    s.w = 0;
    s.lowest = s.role == 0;
}

// Iteration close with something missing.
Action anomaly(ColocState& s, const Snapshot& snap) {
    const int n = snap.n;
    int own = snap.tokens() - s.extra;
    bool leader_here = snap.present(s.ids[0]);
    if (s.role == 1) throw IntegrityFault("follower at iteration close without the others");
    if (leader_here) {
        if (!snap.present(s.ids[2])) throw IntegrityFault("leader home without the backup");
        if (s.role == 2) {
            // Only the leader knows whether its token is out there; its first move tells us.
            s.m = ColocMachine::FindPebble;
            s.w = 1;
            return Action::go(Dir::CCW);
        }
        if (s.reported) {
            s.m = ColocMachine::FindPebble;
            s.w = 0;
            return Action::go(Dir::CCW);
        }
        if (own != 2) throw IntegrityFault("leader and backup home with " + std::to_string(own) + " tokens");
        enter_detection(s, snap.pos);
        return detection_step(s, snap);
    }
    if (own >= 2) return declare(s, neighbor(s.home, Dir::CW, n), snap.pos, n);
    s.m = ColocMachine::FindBH;
    return Action::go(Dir::CW);
}

}  // namespace

Action coloc_step(ColocState& s, const Snapshot& snap) {
    const int n = snap.n;
    const int close = 4 * n;  // last round of an iteration
    const int leader = s.ids[0];
    auto tick = [&](Action a) {
        ++s.t;
        return a;
    };
    auto to_initial = [&](Action a) {
        s.m = ColocMachine::Initial;
        s.t = 0;
        return a;
    };

    switch (s.m) {
        case ColocMachine::ExploreForever:
            return explore_step(s.ex, snap.pos, n);

        case ColocMachine::Detection:
            return detection_step(s, snap);

        case ColocMachine::Initial: {
            if (snap.pos != s.home) throw IntegrityFault("Initial away from home");
            s.role = my_role(s, snap.self);
            if (s.role > 2) throw IntegrityFault("agent not part of this run");
            bool all = snap.present(s.ids[0]) && snap.present(s.ids[1]) && snap.present(s.ids[2]);
            if (!all || snap.tokens() - s.extra != 3) return anomaly(s, snap);
            s.t = 0;
            s.w = 0;
            s.move = 0;
            s.reported = false;
            if (s.role == 0) {
                s.m = ColocMachine::Leader;
                return tick(Action::go(Dir::CW, 1));
            }
            s.m = s.role == 1 ? ColocMachine::FollowerFind : ColocMachine::Backup;
            return tick(Action::stay());
        }

        case ColocMachine::Backup:
            if (s.t == close) return to_initial(Action::stay());
            return tick(Action::stay());

        case ColocMachine::Leader: {
            if (snap.pos == s.home) {
                if (s.t == close) return to_initial(Action::stay());
                return tick(Action::stay());
            }
            if (s.t >= close) throw IntegrityFault("leader away at iteration close");
            if (snap.present(s.ids[1])) {
                s.w = 0;
                return tick(Action::go(Dir::CW, 1));
            }
            if (s.w < 4) {
                ++s.w;
                return tick(Action::stay());
            }
            // Follower overdue: leave the token here and report home.
            s.m = ColocMachine::ReportLeader;
            s.reported = true;
            return tick(Action::go(Dir::CW));
        }

        case ColocMachine::ReportLeader:
            if (snap.pos != s.home) return tick(Action::go(Dir::CW));
            if (s.t >= close) return to_initial(Action::stay());
            return tick(Action::stay());

        case ColocMachine::FollowerFind: {
            if (s.move == 0) {
                if (snap.present(leader)) throw IntegrityFault("follower caught up with the leader early");
                s.move = 1;
                return tick(Action::go(Dir::CW));
            }
            // Patrol away from a possibly surviving leader so it never mistakes us for a live follower.
            if (!snap.present(leader)) return declare(s, snap.pos, snap.pos, n, Dir::CCW);
            s.m = ColocMachine::FollowerCollect;
            s.move = 0;
            return tick(Action::stay());
        }

        case ColocMachine::FollowerCollect: {
            if (s.move == 0) {
                s.move = 1;
                return tick(Action::go(Dir::CCW));
            }
            if (snap.tokens() == 0) {
                // Our token was wiped here. The leader is still waiting further on and
                // would take a passing patrol for us, so stay out of sight until the
                // others have finished the iteration close.
                s.m = ColocMachine::LieLow;
                s.ex.avoid = snap.pos;
                return tick(Action::go(Dir::CCW));
            }
            s.m = ColocMachine::FollowerFind;
            s.move = 0;
            if (neighbor(snap.pos, Dir::CW, n) == s.home) {
                if (s.t != close) throw IntegrityFault("follower closing the loop off schedule");
                return to_initial(Action::go(Dir::CW, 1));
            }
            return tick(Action::go(Dir::CW, 1));
        }

        case ColocMachine::LieLow:
            if (s.t < close + n + 2) return tick(Action::stay());
            return declare(s, s.ex.avoid, snap.pos, n, Dir::CCW);

        case ColocMachine::FindPebble:
            if (s.w == 1) {
                s.w = 0;
                if (!snap.present(leader)) {
                    // The leader went clockwise: this is the one-hop leg of Detection.
                    s.m = ColocMachine::Detection;
                    s.home = neighbor(snap.pos, Dir::CW, n);
                    s.t = 1;
                    s.lowest = false;
                    return detection_step(s, snap);
                }
            }
            if (snap.pos != s.home && snap.tokens() > 0) {
                enter_detection(s, snap.pos);
                return detection_step(s, snap);
            }
            return tick(Action::go(Dir::CCW));

        case ColocMachine::FindBH:
            if (snap.pos != s.home && snap.tokens() > 0)
                return declare(s, neighbor(snap.pos, Dir::CW, n), snap.pos, n);
            return tick(Action::go(Dir::CW));
    }
    throw IntegrityFault("unknown state");
}

}  // namespace bbh
