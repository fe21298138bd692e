#pragma once

#include "bbh/protocol.hpp"

namespace bbh {

// Four scattered agents with one pebble each. Every agent patrols its own
// segment (home to the next home clockwise) and ferries the neighbour's
// pebble back; a pebble surplus at home means a neighbour died, and the three
// survivors gather and continue with the co-located protocol. One cycle is
// 3n+2 rounds.
class PblScatProtocol : public Protocol {
public:
    explicit PblScatProtocol(ProtocolOptions opts = {}) : opts_(opts) {}
    ProtocolKind kind() const override { return ProtocolKind::PblScat; }
    int period(int n) const override { return 3 * n + 2; }
    LocalState initial(const RingConfig& cfg, int id) const override;
    void wake(LocalState& st, const Snapshot& snap) const override;
    Action step(LocalState& st, const Snapshot& snap) const override;
    std::string machine(const LocalState& st) const override;

private:
    ProtocolOptions opts_;
};

const char* to_string(ScatMachine m);

}  // namespace bbh
