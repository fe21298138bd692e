#pragma once

#include "bbh/protocol.hpp"

namespace bbh {

// Three scattered agents with whiteboards. Each agent sweeps its segment
// clockwise and back every 4n+1 rounds, leaving visited receipts at the next
// home; a missing or stale receipt reveals where a neighbour died, the two
// survivors meet and finish with a cautious walk over the dead agent's
// direction markings.
class WBScatProtocol : public Protocol {
public:
    explicit WBScatProtocol(ProtocolOptions opts = {}) : opts_(opts) {}
    ProtocolKind kind() const override { return ProtocolKind::WBScat; }
    int period(int n) const override { return 4 * n + 1; }
    LocalState initial(const RingConfig& cfg, int id) const override;
    void wake(LocalState& st, const Snapshot& snap) const override;
    Action step(LocalState& st, const Snapshot& snap) const override;
    std::string machine(const LocalState& st) const override;

private:
    ProtocolOptions opts_;
};

const char* to_string(WBMachine m);

}  // namespace bbh
