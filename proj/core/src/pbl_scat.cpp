#include "bbh/pbl_scat.hpp"

#include <algorithm>

#include "bbh/pbl_coloc.hpp"

namespace bbh {

const char* to_string(ScatMachine m) {
    switch (m) {
        case ScatMachine::Initial1: return "Initial1";
        case ScatMachine::Forward: return "Forward";
        case ScatMachine::Wait1: return "Wait1";
        case ScatMachine::Fetch: return "Fetch";
        case ScatMachine::Wait2: return "Wait2";
        case ScatMachine::Gather1: return "Gather1";
        case ScatMachine::Gather2: return "Gather2";
        case ScatMachine::BackupWait: return "Backup-Wait";
        case ScatMachine::Backup: return "Backup";
        case ScatMachine::Coloc: return "Coloc";
        case ScatMachine::TrioWait: return "Trio-Wait";
        case ScatMachine::TrioSeek: return "Trio-Seek";
        case ScatMachine::SoloReturn: return "Solo-Return";
        case ScatMachine::Dormant: return "Dormant";
    }
    return "?";
}

LocalState PblScatProtocol::initial(const RingConfig& cfg, int id) const {
    ScatState s;
    for (auto& [aid, node] : cfg.placement)
        if (aid == id) s.home = node;
    return s;
}

void PblScatProtocol::wake(LocalState& st, const Snapshot& snap) const {
    auto& s = std::get<ScatState>(st);
    s.t = 0;
    switch (snap.count()) {
        case 1: s.m = ScatMachine::Forward; break;
        case 2:
            s.partner = snap.here[0] == snap.self ? snap.here[1] : snap.here[0];
            s.m = snap.rank() == 0 ? ScatMachine::Forward : ScatMachine::BackupWait;
            break;
        case 3:
            s.m = ScatMachine::TrioWait;
            s.coloc.ids = {snap.here[0], snap.here[1], snap.here[2]};
            break;
        default: throw IntegrityFault("four co-located agents");
    }
}

std::string PblScatProtocol::machine(const LocalState& st) const {
    auto& s = std::get<ScatState>(st);
    if (s.m == ScatMachine::Coloc) return std::string("Coloc.") + to_string(s.coloc.m);
    return to_string(s.m);
}

namespace {

Action carry_everything(Dir d) {
    Action a = Action::go(d);
    a.carry_all = true;
    return a;
}

}  // namespace

Action PblScatProtocol::step(LocalState& st, const Snapshot& snap) const {
    auto& s = std::get<ScatState>(st);
    const int n = snap.n;
    const int fetch_round = n + 1;
    const int gather_round = 2 * n + 2;
    const int last = 3 * n + 1;  // the next Forward starts 3n+2 rounds after this one
    const Dir gather_dir = opts_.gather2_ccw ? Dir::CCW : Dir::CW;
    const bool backup = s.m == ScatMachine::BackupWait || s.m == ScatMachine::Backup;

    auto partner_here = [&] { return s.partner != 0 && snap.present(s.partner); };
    auto tick = [&](Action a) {
        if (s.t == last) {
            s.t = 0;
            s.distance = 0;
            s.m = backup ? ScatMachine::BackupWait : ScatMachine::Forward;
        } else {
            ++s.t;
        }
        return a;
    };
    auto coloc = [&](std::array<int, 3> ids, int extra) {
        s.m = ScatMachine::Coloc;
        s.coloc = coloc_start(snap.pos, ids, extra);
        return coloc_step(s.coloc, snap);
    };
    auto join_coloc = [&] {
        if (snap.count() != 3) throw IntegrityFault(std::to_string(snap.count()) + " agents meet while gathering");
        return coloc({snap.here[0], snap.here[1], snap.here[2]}, snap.tokens() - 3);
    };
    auto gather = [&](Action a) {
        ++s.t;
        return a;
    };

    switch (s.m) {
        case ScatMachine::Initial1:
            throw IntegrityFault("Initial1 is left at wake-up");

        case ScatMachine::Coloc:
            return coloc_step(s.coloc, snap);

        case ScatMachine::Dormant:
            return Action::stay();

        case ScatMachine::Forward: {
            bool arrived = s.s ? s.distance == s.size : (snap.pos != s.home && snap.tokens() > 0);
            if (!arrived) {
                ++s.distance;
                return tick(Action::go(Dir::CW));
            }
            s.size = s.distance;
            if (!s.s && snap.count() >= 4) {
                // A co-located trio lives here: bring our pebble over and stay out of their way.
                s.m = ScatMachine::SoloReturn;
                s.back = false;
                return gather(Action::go(Dir::CCW));
            }
            s.s = true;
            s.m = ScatMachine::Wait1;
            return tick(Action::stay());
        }

        case ScatMachine::Wait1:
            // The change to Fetch takes its own round; the walk back starts at fetch_round.
            if (s.t + 1 == fetch_round) {
                s.m = ScatMachine::Fetch;
                s.distance = s.size;
            }
            return tick(Action::stay());

        case ScatMachine::Fetch:
            if (s.distance == s.size) s.carrying = std::min(1, snap.tokens());
            if (s.distance > 0) {
                --s.distance;
                return tick(Action::go(Dir::CCW, s.carrying));
            }
            s.carrying = 0;
            s.m = snap.tokens() > (partner_here() ? 2 : 1) ? ScatMachine::Gather1 : ScatMachine::Wait2;
            return tick(Action::stay());

        case ScatMachine::Wait2:
        case ScatMachine::BackupWait:
        case ScatMachine::Backup: {
            bool window = s.t >= gather_round;
            if (window && snap.count() >= 3) return join_coloc();
            int residents = 1 + (partner_here() ? 1 : 0);
            bool visitor = window && snap.count() > residents;
            bool surplus = backup && s.t == gather_round && partner_here() && snap.tokens() > 2;
            if (visitor || surplus) {
                s.m = ScatMachine::Gather2;
                return gather(carry_everything(gather_dir));
            }
            if (s.m == ScatMachine::BackupWait && s.t + 1 == gather_round) s.m = ScatMachine::Backup;
            return tick(Action::stay());
        }

        case ScatMachine::Gather1:
            if (s.t < gather_round) return gather(Action::stay());
            if (snap.count() >= 3) return join_coloc();
            return gather(carry_everything(gather_dir));

        case ScatMachine::Gather2:
            if (snap.count() >= 3) return join_coloc();
            return gather(carry_everything(gather_dir));

        case ScatMachine::TrioWait: {
            if (s.arrival < 0) {
                if (snap.count() >= 4) {
                    s.arrival = s.t;
                } else if (s.t == n) {
                    // Nobody came: the singleton died on the way, so clockwise to its pebble is safe.
                    s.m = ScatMachine::TrioSeek;
                    s.s = false;
                    s.hops = 1;
                    return gather(Action::go(Dir::CW));
                }
                return gather(Action::stay());
            }
            if (s.t < 3 * s.arrival) return gather(Action::stay());
            if (snap.count() == 4 && snap.tokens() == 4) return coloc(s.coloc.ids, snap.tokens() - 3);
            // The singleton died fetching its pebble; its start node is n - arrival hops clockwise.
            s.m = ScatMachine::TrioSeek;
            s.s = true;
            s.size = n - s.arrival;
            s.hops = 1;
            return gather(Action::go(Dir::CW));
        }

        case ScatMachine::TrioSeek: {
            if (!s.back) {
                bool arrived = s.s ? s.hops == s.size : (snap.pos != s.home && snap.tokens() > 0);
                if (!arrived) {
                    ++s.hops;
                    return gather(Action::go(Dir::CW));
                }
                s.back = true;
            }
            if (s.hops == 0) return coloc(s.coloc.ids, snap.tokens() - 3);
            --s.hops;
            return gather(carry_everything(Dir::CCW));
        }

        case ScatMachine::SoloReturn:
            if (!s.back) {
                if (snap.pos != s.home) return gather(Action::go(Dir::CCW));
                s.back = true;
                s.carrying = std::min(1, snap.tokens());
                s.distance = 1;
                return gather(Action::go(Dir::CW, s.carrying));
            }
            if (s.distance == s.size) {
                s.m = ScatMachine::Dormant;
                return Action::stay();
            }
            ++s.distance;
            return gather(Action::go(Dir::CW, s.carrying));
    }
    throw IntegrityFault("unhandled state");
}

}  // namespace bbh
