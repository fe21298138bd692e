#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bbh {

enum class Dir : std::uint8_t { CW, CCW };

inline Dir opposite(Dir d) { return d == Dir::CW ? Dir::CCW : Dir::CW; }
const char* to_string(Dir d);

enum class CommModel : std::uint8_t { F2F, Pebble, Whiteboard };
const char* to_string(CommModel m);

enum class ProtocolKind : std::uint8_t { F2FColoc, PblColoc, PblScat, WBScat, WBColoc };
const char* to_string(ProtocolKind p);
std::optional<ProtocolKind> parse_protocol(const std::string& s);
CommModel comm_model_of(ProtocolKind p);

// Clockwise exits through the right port and increases the index.
inline int neighbor(int pos, Dir d, int n) {
    return d == Dir::CW ? (pos + 1) % n : (pos + n - 1) % n;
}

inline int clockwise_distance(int from, int to, int n) { return ((to - from) % n + n) % n; }

inline int advance(int pos, int hops, Dir d, int n) {
    int step = d == Dir::CW ? hops : -hops;
    return ((pos + step) % n + n) % n;
}

// Raised when a protocol or caller breaks the model (not an adversary action).
struct ModelViolation : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Marking : std::uint8_t { Left, Right };

struct DirMsg {
    Dir dir = Dir::CW;
    int id = 0;  // 0 encodes the null id component
    bool operator==(const DirMsg&) const = default;
};

// One record per kind, so capacity stays logarithmic in n by construction.
struct NodeStore {
    std::optional<int> home;
    std::optional<int> visited;
    std::optional<DirMsg> dir;
    std::optional<Marking> marking;
    int pebble_marks = 0;  // whiteboard stand-in for pebbles
    int pebbles = 0;

    bool whiteboard_empty() const {
        return !home && !visited && !dir && !marking && pebble_marks == 0;
    }
    int tokens() const { return pebbles + pebble_marks; }
    bool empty() const { return whiteboard_empty() && pebbles == 0; }
    bool operator==(const NodeStore&) const = default;
};

enum class WbOpKind : std::uint8_t {
    Clear,
    WriteHome,
    WriteVisited,
    WriteDir,
    EraseDir,
    WriteMarking,  // replaces the opposite marking
    EraseMarking,
    AddPebbleMark,
    RemovePebbleMark,
};

struct WbOp {
    WbOpKind kind;
    int id = 0;
    DirMsg dir{};
    Marking marking = Marking::Left;
};

// Applies a whiteboard operation; throws ModelViolation outside the whiteboard model.
void write_message(NodeStore& store, const WbOp& op, CommModel model);
std::string describe(const WbOp& op);

struct RingConfig {
    int n = 0;
    int bh = 0;
    std::vector<std::pair<int, int>> placement;  // (agent id, node)
    ProtocolKind protocol = ProtocolKind::F2FColoc;
    CommModel comm_model() const { return comm_model_of(protocol); }
    int agents() const { return static_cast<int>(placement.size()); }
};

// Returns an empty string when the configuration is well formed, else the reason.
std::string validate(const RingConfig& cfg);

// Agent i+1 starts at nodes[i].
std::vector<std::pair<int, int>> placement_from_nodes(const std::vector<int>& nodes);

}  // namespace bbh
