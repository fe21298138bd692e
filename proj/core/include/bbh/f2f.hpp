#pragma once

#include "bbh/protocol.hpp"

namespace bbh {

// ceil(log2(n-1)) + 3
int required_agents(int n);
// Middle of the suspicious region [s_lft, s_rgt].
int dest_of(int s_lft, int s_rgt);

// Co-located agents talking face to face. Every iteration lasts 2n+4 rounds:
// two walkers split the suspicious region at Dest, the rest wait at home and
// learn from who comes back which half to keep.
class F2FProtocol : public Protocol {
public:
    explicit F2FProtocol(ProtocolOptions opts = {}) : opts_(opts) {}
    ProtocolKind kind() const override { return ProtocolKind::F2FColoc; }
    int period(int n) const override { return 2 * n + 4; }
    LocalState initial(const RingConfig& cfg, int id) const override;
    void wake(LocalState& st, const Snapshot& snap) const override;
    Action step(LocalState& st, const Snapshot& snap) const override;
    std::string machine(const LocalState& st) const override;
    std::vector<std::pair<std::string, std::string>> fields(const LocalState& st) const override;

private:
    ProtocolOptions opts_;
};

const char* to_string(F2FMachine m);

}  // namespace bbh
