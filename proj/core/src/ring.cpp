#include "bbh/ring.hpp"

#include <algorithm>
#include <set>

namespace bbh {

const char* to_string(Dir d) { return d == Dir::CW ? "cw" : "ccw"; }

const char* to_string(CommModel m) {
    switch (m) {
        case CommModel::F2F: return "f2f";
        case CommModel::Pebble: return "pebble";
        case CommModel::Whiteboard: return "whiteboard";
    }
    return "?";
}

const char* to_string(ProtocolKind p) {
    switch (p) {
        case ProtocolKind::F2FColoc: return "f2f";
        case ProtocolKind::PblColoc: return "pbl-coloc";
        case ProtocolKind::PblScat: return "pbl-scat";
        case ProtocolKind::WBScat: return "wb-scat";
        case ProtocolKind::WBColoc: return "wb-coloc";
    }
    return "?";
}

std::optional<ProtocolKind> parse_protocol(const std::string& s) {
    for (auto p : {ProtocolKind::F2FColoc, ProtocolKind::PblColoc, ProtocolKind::PblScat,
                   ProtocolKind::WBScat, ProtocolKind::WBColoc})
        if (s == to_string(p)) return p;
    return std::nullopt;
}

CommModel comm_model_of(ProtocolKind p) {
    switch (p) {
        case ProtocolKind::F2FColoc: return CommModel::F2F;
        case ProtocolKind::PblColoc:
        case ProtocolKind::PblScat: return CommModel::Pebble;
        case ProtocolKind::WBScat:
        case ProtocolKind::WBColoc: return CommModel::Whiteboard;
    }
    return CommModel::F2F;
}

void write_message(NodeStore& s, const WbOp& op, CommModel model) {
    if (model != CommModel::Whiteboard)
        throw ModelViolation(std::string("whiteboard write in ") + to_string(model) + " model");
    switch (op.kind) {
        case WbOpKind::Clear: {
            int keep = s.pebbles;
            s = NodeStore{};
            s.pebbles = keep;
            break;
        }
        case WbOpKind::WriteHome: s.home = op.id; break;
        case WbOpKind::WriteVisited: s.visited = op.id; break;
        case WbOpKind::WriteDir: s.dir = op.dir; break;
        case WbOpKind::EraseDir: s.dir.reset(); break;
        case WbOpKind::WriteMarking: s.marking = op.marking; break;
        case WbOpKind::EraseMarking: s.marking.reset(); break;
        case WbOpKind::AddPebbleMark: ++s.pebble_marks; break;
        case WbOpKind::RemovePebbleMark:
            if (s.pebble_marks == 0) throw ModelViolation("erasing a pebble mark that is not there");
            --s.pebble_marks;
            break;
    }
}

std::string describe(const WbOp& op) {
    switch (op.kind) {
        case WbOpKind::Clear: return "clear";
        case WbOpKind::WriteHome: return "home:" + std::to_string(op.id);
        case WbOpKind::WriteVisited: return "visited:" + std::to_string(op.id);
        case WbOpKind::WriteDir:
        case WbOpKind::EraseDir:
            return std::string("dir:") + to_string(op.dir.dir) + ":" +
                   (op.dir.id ? std::to_string(op.dir.id) : "null");
        case WbOpKind::WriteMarking:
        case WbOpKind::EraseMarking: return op.marking == Marking::Left ? "left" : "right";
        case WbOpKind::AddPebbleMark:
        case WbOpKind::RemovePebbleMark: return "pebble";
    }
    return "?";
}

namespace {

int distinct_nodes(const RingConfig& c) {
    std::set<int> s;
    for (auto& [id, v] : c.placement) s.insert(v);
    return static_cast<int>(s.size());
}

}  // namespace

std::string validate(const RingConfig& c) {
    if (c.n < 4) return "n must be at least 4";
    if (c.bh < 0 || c.bh >= c.n) return "black hole index out of range";
    int k = c.agents();
    if (k == 0) return "no agents placed";
    std::vector<int> ids;
    for (auto& [id, v] : c.placement) {
        if (v < 0 || v >= c.n) return "agent start node out of range";
        if (v == c.bh) return "agent " + std::to_string(id) + " starts on the black hole";
        ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    for (int i = 0; i < k; ++i)
        if (ids[i] != i + 1) return "agent ids must be distinct and cover 1..k";
    int nodes = distinct_nodes(c);
    switch (c.protocol) {
        case ProtocolKind::F2FColoc:
            if (nodes != 1) return "f2f requires co-located agents";
            if (k < 2) return "f2f requires at least 2 agents";
            break;
        case ProtocolKind::PblColoc:
        case ProtocolKind::WBColoc:
            if (nodes != 1 || k != 3) return "co-located pebble protocol requires 3 co-located agents";
            break;
        case ProtocolKind::PblScat:
            if (k != 4) return "pbl-scat requires 4 agents";
            if (nodes < 2) return "pbl-scat requires agents on at least 2 nodes";
            break;
        case ProtocolKind::WBScat:
            if (k != 3) return "wb-scat requires 3 agents";
            if (nodes < 2) return "wb-scat requires agents on at least 2 nodes";
            break;
    }
    return {};
}

std::vector<std::pair<int, int>> placement_from_nodes(const std::vector<int>& nodes) {
    std::vector<std::pair<int, int>> p;
    for (std::size_t i = 0; i < nodes.size(); ++i) p.emplace_back(static_cast<int>(i) + 1, nodes[i]);
    return p;
}

}  // namespace bbh
