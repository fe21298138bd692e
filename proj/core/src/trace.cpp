#include "bbh/trace.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace bbh {

namespace {

constexpr EventKind kAllKinds[] = {
    EventKind::BH_ACTIVE, EventKind::DESTROYED,   EventKind::DETECT_CLAIM,
    EventKind::WB_WRITE,  EventKind::WB_ERASE,    EventKind::PEBBLE_PICK,
    EventKind::MOVE,      EventKind::PEBBLE_DROP, EventKind::STATE_CHANGE,
};

std::vector<std::pair<std::string, std::string>> split_pairs(const std::string& line, int lineno) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            throw TraceParseError(lineno, "expected key=value, got '" + tok + "'");
        out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return out;
}

int to_int(const std::string& s, int lineno, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw TraceParseError(lineno, std::string("bad ") + what + " '" + s + "'");
    }
}

int id_or_dash(const std::string& s, int lineno, const char* what) {
    return s == "-" ? -1 : to_int(s, lineno, what);
}

}  // namespace

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::BH_ACTIVE: return "BH_ACTIVE";
        case EventKind::DESTROYED: return "DESTROYED";
        case EventKind::DETECT_CLAIM: return "DETECT_CLAIM";
        case EventKind::WB_WRITE: return "WB_WRITE";
        case EventKind::WB_ERASE: return "WB_ERASE";
        case EventKind::PEBBLE_PICK: return "PEBBLE_PICK";
        case EventKind::MOVE: return "MOVE";
        case EventKind::PEBBLE_DROP: return "PEBBLE_DROP";
        case EventKind::STATE_CHANGE: return "STATE_CHANGE";
    }
    return "?";
}

std::optional<EventKind> parse_event_kind(const std::string& s) {
    for (auto k : kAllKinds)
        if (s == to_string(k)) return k;
    return std::nullopt;
}

const std::string* TraceEvent::get(const std::string& key) const {
    for (auto& [k, v] : kv)
        if (k == key) return &v;
    return nullptr;
}

RingConfig TraceHeader::config() const {
    RingConfig c;
    c.n = n;
    c.bh = bh;
    c.protocol = protocol;
    c.placement = placement_from_nodes(placement);
    return c;
}

std::string format_event(const TraceEvent& e) {
    std::string s = "round=" + std::to_string(e.round) + " kind=" + to_string(e.kind) + " agent=" +
                    (e.agent < 0 ? "-" : std::to_string(e.agent)) +
                    " node=" + (e.node < 0 ? "-" : std::to_string(e.node));
    for (auto& [k, v] : e.kv) s += " " + k + "=" + v;
    return s;
}

void write_trace(std::ostream& out, const Trace& t) {
    const auto& h = t.header;
    out << "# bbhsim-trace n=" << h.n << " bh=" << h.bh << " protocol=" << to_string(h.protocol)
        << " comm=" << to_string(comm_model_of(h.protocol)) << " placement=";
    for (std::size_t i = 0; i < h.placement.size(); ++i) out << (i ? "," : "") << h.placement[i];
    out << " adversary=" << h.adversary << " seed=" << h.seed << " rounds=" << h.rounds
        << " kill-residents=" << (h.kill_residents ? 1 : 0) << "\n";
    for (auto& e : t.events) out << format_event(e) << "\n";
    if (t.fault) out << "# fault round=" << t.fault->round << " " << t.fault->reason << "\n";
    out << "# end events=" << t.events.size() << "\n";
}

Trace read_trace(std::istream& in) {
    Trace t;
    std::string line;
    int lineno = 0;
    bool have_header = false, have_end = false;
    int last_round = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (have_end) throw TraceParseError(lineno, "content after end marker");
        if (have_header && line.rfind("# end", 0) == 0) {
            auto pairs = split_pairs(line.substr(5), lineno);
            if (pairs.size() != 1 || pairs[0].first != "events" ||
                to_int(pairs[0].second, lineno, "event count") != static_cast<int>(t.events.size()))
                throw TraceParseError(lineno, "end marker does not match event count");
            have_end = true;
            continue;
        }
        if (have_header && line.rfind("# fault round=", 0) == 0) {
            std::string rest = line.substr(14);
            auto sp = rest.find(' ');
            t.fault = TraceFault{to_int(rest.substr(0, sp), lineno, "fault round"),
                                 sp == std::string::npos ? "" : rest.substr(sp + 1)};
            continue;
        }
        if (!have_header) {
            const std::string tag = "# bbhsim-trace";
            if (line.compare(0, tag.size(), tag) != 0) throw TraceParseError(lineno, "missing trace header");
            auto& h = t.header;
            bool seen_n = false, seen_rounds = false;
            for (auto& [k, v] : split_pairs(line.substr(tag.size()), lineno)) {
                if (k == "n") {
                    h.n = to_int(v, lineno, "n");
                    seen_n = true;
                } else if (k == "bh") {
                    h.bh = to_int(v, lineno, "bh");
                } else if (k == "protocol") {
                    auto p = parse_protocol(v);
                    if (!p) throw TraceParseError(lineno, "unknown protocol '" + v + "'");
                    h.protocol = *p;
                } else if (k == "placement") {
                    std::istringstream ps(v);
                    std::string part;
                    while (std::getline(ps, part, ',')) h.placement.push_back(to_int(part, lineno, "placement"));
                } else if (k == "adversary") {
                    h.adversary = v;
                } else if (k == "seed") {
                    try {
                        h.seed = std::stoull(v);
                    } catch (const std::exception&) {
                        throw TraceParseError(lineno, "bad seed '" + v + "'");
                    }
                } else if (k == "rounds") {
                    h.rounds = to_int(v, lineno, "rounds");
                    seen_rounds = true;
                } else if (k == "kill-residents") {
                    h.kill_residents = to_int(v, lineno, "kill-residents") != 0;
                }
            }
            if (!seen_n || !seen_rounds) throw TraceParseError(lineno, "header lacks n or rounds");
            have_header = true;
            continue;
        }
        auto pairs = split_pairs(line, lineno);
        if (pairs.size() < 4 || pairs[0].first != "round" || pairs[1].first != "kind" ||
            pairs[2].first != "agent" || pairs[3].first != "node")
            throw TraceParseError(lineno, "expected round= kind= agent= node= prefix");
        TraceEvent e;
        e.round = to_int(pairs[0].second, lineno, "round");
        auto kind = parse_event_kind(pairs[1].second);
        if (!kind) throw TraceParseError(lineno, "unknown event kind '" + pairs[1].second + "'");
        e.kind = *kind;
        e.agent = id_or_dash(pairs[2].second, lineno, "agent");
        e.node = id_or_dash(pairs[3].second, lineno, "node");
        e.kv.assign(pairs.begin() + 4, pairs.end());
        if (e.round < last_round) throw TraceParseError(lineno, "round goes backwards");
        last_round = e.round;
        t.events.push_back(std::move(e));
    }
    if (!have_header) throw TraceParseError(lineno + 1, "empty trace");
    if (!have_end) throw TraceParseError(lineno + 1, "missing end marker (truncated trace?)");
    return t;
}

}  // namespace bbh
