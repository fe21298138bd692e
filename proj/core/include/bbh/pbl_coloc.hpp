#pragma once

#include "bbh/protocol.hpp"

namespace bbh {

// Three co-located agents, one token each. The lowest id leads a clockwise
// leapfrog with the second, the highest stays home; one iteration is 4n+1
// rounds. With `whiteboard` set the tokens are pebble marks on whiteboards.
class PblColocProtocol : public Protocol {
public:
    explicit PblColocProtocol(bool whiteboard) : wb_(whiteboard) {}
    ProtocolKind kind() const override { return wb_ ? ProtocolKind::WBColoc : ProtocolKind::PblColoc; }
    int period(int n) const override { return 4 * n + 1; }
    LocalState initial(const RingConfig& cfg, int id) const override;
    Action step(LocalState& st, const Snapshot& snap) const override;
    std::string machine(const LocalState& st) const override;

private:
    bool wb_;
};

// Starts a run at the agent's current node with the given participants.
ColocState coloc_start(int home, std::array<int, 3> ids, int extra);
Action coloc_step(ColocState& s, const Snapshot& snap);
const char* to_string(ColocMachine m);

}  // namespace bbh
