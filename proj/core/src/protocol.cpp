#include "bbh/protocol.hpp"

#include <algorithm>

#include "bbh/f2f.hpp"
#include "bbh/pbl_coloc.hpp"
#include "bbh/pbl_scat.hpp"
#include "bbh/wb_scat.hpp"

namespace bbh {

bool Snapshot::present(int id) const { return std::binary_search(here.begin(), here.end(), id); }

int Snapshot::rank() const {
    return static_cast<int>(std::lower_bound(here.begin(), here.end(), self) - here.begin());
}

Explore start_explore(int pos, int avoid, Dir preferred, int n) {
    Explore ex{avoid, preferred};
    if (pos != avoid && neighbor(pos, preferred, n) == avoid) ex.dir = opposite(preferred);
    return ex;
}

Action explore_step(Explore& ex, int pos, int n) {
    if (pos != ex.avoid && neighbor(pos, ex.dir, n) == ex.avoid) ex.dir = opposite(ex.dir);
    return Action::go(ex.dir);
}

std::unique_ptr<Protocol> make_protocol(ProtocolKind kind, ProtocolOptions opts) {
    switch (kind) {
        case ProtocolKind::F2FColoc: return std::make_unique<F2FProtocol>(opts);
        case ProtocolKind::PblColoc: return std::make_unique<PblColocProtocol>(false);
        case ProtocolKind::WBColoc: return std::make_unique<PblColocProtocol>(true);
        case ProtocolKind::PblScat: return std::make_unique<PblScatProtocol>(opts);
        case ProtocolKind::WBScat: return std::make_unique<WBScatProtocol>(opts);
    }
    return nullptr;
}

}  // namespace bbh
