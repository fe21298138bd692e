#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bbh/ring.hpp"
#include "bbh/state.hpp"

namespace bbh {

// A protocol reached a branch its own invariants rule out.
struct IntegrityFault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PeerView {
    int id;
    const LocalState* state;
};

// What an agent sees at the start of a round.
struct Snapshot {
    int n = 0;
    int round = 0;
    int self = 0;
    int pos = 0;
    const NodeStore* store = nullptr;
    std::vector<int> here;       // ids at pos, sorted, self included
    std::vector<PeerView> peers;  // face-to-face only: co-located agents other than self

    int count() const { return static_cast<int>(here.size()); }
    int tokens() const { return store->tokens(); }
    bool present(int id) const;
    int rank() const;  // position of self among `here`
};

struct Action {
    std::optional<Dir> move;
    int carry = 0;           // tokens taken along the move and dropped on arrival
    bool carry_all = false;  // take whatever is left at the node
    int drop_marks = 0;      // whiteboard only: mint fresh pebble marks here
    std::vector<WbOp> writes;
    std::optional<int> claim;

    static Action stay() { return {}; }
    static Action go(Dir d, int carry = 0) {
        Action a;
        a.move = d;
        a.carry = carry;
        return a;
    }
};

struct ProtocolOptions {
    bool mutate_f2f_wait1_left = false;  // leave Wait1-Left one round early
    bool mutate_wb_drop_visited = false; // Forward never writes visited
    bool gather2_ccw = false;            // pbl-scat: gather counter-clockwise
};

class Protocol {
public:
    virtual ~Protocol() = default;
    virtual ProtocolKind kind() const = 0;
    virtual int period(int n) const = 0;
    virtual LocalState initial(const RingConfig& cfg, int id) const = 0;
    // Zero-time setup at round 0, once every agent has been placed.
    virtual void wake(LocalState&, const Snapshot&) const {}
    virtual Action step(LocalState& st, const Snapshot& snap) const = 0;
    virtual std::string machine(const LocalState& st) const = 0;
    // Extra key=value pairs attached to STATE_CHANGE events.
    virtual std::vector<std::pair<std::string, std::string>> fields(const LocalState&) const { return {}; }
};

std::unique_ptr<Protocol> make_protocol(ProtocolKind kind, ProtocolOptions opts = {});

// First hop of an ExploreForever patrol started at pos.
Explore start_explore(int pos, int avoid, Dir preferred, int n);
Action explore_step(Explore& ex, int pos, int n);

}  // namespace bbh
