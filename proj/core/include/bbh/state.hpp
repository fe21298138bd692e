#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>

#include "bbh/hash.hpp"
#include "bbh/ring.hpp"

namespace bbh {

// Perpetual patrol that never enters `avoid`: walk along `dir`, turn around
// whenever the next hop would be the avoided node.
struct Explore {
    int avoid = -1;
    Dir dir = Dir::CW;
    bool operator==(const Explore&) const = default;
    void hash_into(Hasher& h) const {
        h.add_int(avoid);
        h.add(static_cast<int>(dir));
    }
};

enum class F2FMachine : std::uint8_t {
    Initial0,
    Initial1,
    Stagnant,
    ForwardLeft,
    ForwardRight,
    WaitLeft,
    WaitRight,
    BacktrackLeft,
    BacktrackRight,
    Wait1Left,
    Wait1Right,
    Detection,
    ExploreForever,
};

// s_lft/s_rgt/dest are clockwise distances from home.
struct F2FState {
    F2FMachine m = F2FMachine::Initial0;
    int home = 0;
    int t = 0;  // rounds since the last Initial1
    int s_lft = 1;
    int s_rgt = 0;
    int k = 0;
    int dest = 0;
    int hops = 0;  // length of this iteration's outbound walk
    bool lowest = false;
    Explore ex;

    bool operator==(const F2FState&) const = default;
    void hash_into(Hasher& h) const {
        for (int v : {static_cast<int>(m), home, t, s_lft, s_rgt, k, dest, hops, int(lowest)}) h.add_int(v);
        ex.hash_into(h);
    }
};

enum class ColocMachine : std::uint8_t {
    Initial,
    Leader,
    FollowerFind,
    FollowerCollect,
    Backup,
    ReportLeader,
    FindPebble,
    FindBH,
    Detection,
    ExploreForever,
    LieLow,
};

struct ColocState {
    ColocMachine m = ColocMachine::Initial;
    int home = 0;
    int t = 0;  // rounds since Initial
    int w = 0;
    int move = 0;
    std::array<int, 3> ids{};  // sorted; the agents that share this run
    int extra = 0;              // tokens at home that belong to nobody in this run
    int role = 0;               // rank among ids at the last dispatch
    bool lowest = false;        // Detection: walks to distance n-2
    bool reported = false;      // leader came home early and left its token behind
    Explore ex;

    bool operator==(const ColocState&) const = default;
    void hash_into(Hasher& h) const {
        for (int v : {static_cast<int>(m), home, t, w, move, ids[0], ids[1], ids[2], extra, role, int(lowest),
                      int(reported)})
            h.add_int(v);
        ex.hash_into(h);
    }
};

enum class ScatMachine : std::uint8_t {
    Initial1,
    Forward,
    Wait1,
    Fetch,
    Wait2,
    Gather1,
    Gather2,
    BackupWait,
    Backup,
    Coloc,
    TrioWait,
    TrioSeek,
    SoloReturn,
    Dormant,
};

struct ScatState {
    ScatMachine m = ScatMachine::Initial1;
    int home = 0;
    int t = 0;  // rounds since the current Forward start
    int size = 0;
    bool s = false;  // segment size known
    int distance = 0;
    int partner = 0;    // pair placement: the other agent living at home
    int arrival = -1;   // trio: round the fourth agent showed up
    int hops = 0;
    int carrying = 0;   // tokens moved along with each hop
    bool back = false;  // TrioSeek / SoloReturn: on the return leg
    ColocState coloc;  // before Coloc: ids holds the trio, if any

    bool operator==(const ScatState&) const = default;
    void hash_into(Hasher& h) const {
        for (int v : {static_cast<int>(m), home, t, size, int(s), distance, partner, arrival, hops, carrying, int(back)})
            h.add_int(v);
        coloc.hash_into(h);
    }
};

enum class WBMachine : std::uint8_t {
    Initial,
    Forward,
    BackWait,
    Backtrack,
    InitialWait,
    Gather,
    Gather1,
    Gather2,
    CautiousLeader,
    CautiousFollower,
    ExploreForever,
    PairWait,
    PairSeek,
    Coloc,
};

struct WBState {
    WBMachine m = WBMachine::Initial;
    int home = 0;
    int t = 0;  // rounds since Initial
    std::optional<DirMsg> stored;
    int phase = 0;  // cautious walk step within the three-round probe
    Marking marking = Marking::Right;
    bool first = true;  // still in the first cycle
    int partner = 0;    // pair placement: the co-located agent
    Explore ex;
    ColocState coloc;

    bool operator==(const WBState&) const = default;
    void hash_into(Hasher& h) const {
        for (int v : {static_cast<int>(m), home, t, phase, static_cast<int>(marking), int(first), partner})
            h.add_int(v);
        h.add(stored.has_value());
        if (stored) {
            h.add(static_cast<int>(stored->dir));
            h.add_int(stored->id);
        }
        ex.hash_into(h);
        if (m == WBMachine::Coloc) coloc.hash_into(h);
    }
};

using LocalState = std::variant<F2FState, ColocState, ScatState, WBState>;

inline void hash_into(Hasher& h, const LocalState& s) {
    h.add(s.index());
    std::visit([&](const auto& v) { v.hash_into(h); }, s);
}

}  // namespace bbh
