#include "bbh/verifier.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace bbh {

namespace {

int parse_int(const std::string& s, const std::string& what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v < 1)
        throw PropertyParseError(what + " needs a positive integer, got '" + s + "'");
    return v;
}

int to_int(const std::string* s) { return s ? std::stoi(*s) : -1; }

CheckResult fail(std::string detail, std::vector<int> witness = {}) {
    return {Verdict::Fail, std::move(detail), std::move(witness)};
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

Property parse_property(const std::string& s) {
    auto colon = s.find(':');
    std::string name = s.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    Property p;
    if (name == "survival") p.kind = PropertyKind::Survival;
    else if (name == "true-detection") p.kind = PropertyKind::TrueDetection;
    else if (name == "coverage") p.kind = PropertyKind::Coverage;
    else if (name == "latency") p.kind = PropertyKind::DetectionLatency;
    else if (name == "periodicity") p.kind = PropertyKind::Periodicity;
    else if (name == "shrinkage") p.kind = PropertyKind::RegionShrinkage;
    else throw PropertyParseError("unknown property '" + name + "'");
    if (!arg.empty()) {
        if (p.kind != PropertyKind::Coverage && p.kind != PropertyKind::DetectionLatency &&
            p.kind != PropertyKind::Periodicity)
            throw PropertyParseError(name + " takes no parameter");
        p.param = parse_int(arg, name);
    } else if (p.kind == PropertyKind::DetectionLatency) {
        throw PropertyParseError("latency needs a bound, e.g. latency:80");
    }
    return p;
}

std::vector<Property> parse_properties(const std::string& csv) {
    std::vector<Property> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto comma = csv.find(',', start);
        auto item = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.empty()) throw PropertyParseError("empty property in list '" + csv + "'");
        out.push_back(parse_property(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Property& p) {
    std::string s;
    switch (p.kind) {
        case PropertyKind::Survival: s = "survival"; break;
        case PropertyKind::TrueDetection: s = "true-detection"; break;
        case PropertyKind::Coverage: s = "coverage"; break;
        case PropertyKind::DetectionLatency: s = "latency"; break;
        case PropertyKind::Periodicity: s = "periodicity"; break;
        case PropertyKind::RegionShrinkage: s = "shrinkage"; break;
    }
    if (p.param > 0) s += ":" + std::to_string(p.param);
    return s;
}

int default_period(ProtocolKind p, int n) {
    switch (p) {
        case ProtocolKind::F2FColoc: return 2 * n + 4;
        case ProtocolKind::PblScat: return 3 * n + 2;
        case ProtocolKind::PblColoc:
        case ProtocolKind::WBColoc:
        case ProtocolKind::WBScat: return 4 * n + 1;
    }
    return 0;
}

int default_window(ProtocolKind p, int n) { return default_period(p, n); }

const char* sync_label(ProtocolKind p) {
    switch (p) {
        case ProtocolKind::F2FColoc: return "Initial1";
        case ProtocolKind::PblScat: return "Forward";
        case ProtocolKind::PblColoc:
        case ProtocolKind::WBColoc:
        case ProtocolKind::WBScat: return "Initial";
    }
    return "";
}

Timeline build_timeline(const Trace& t) {
    Timeline tl;
    tl.rounds = t.header.rounds;
    tl.agents = static_cast<int>(t.header.placement.size());
    std::vector<int> pos = t.header.placement;
    std::vector<std::string> state(tl.agents, "-");
    std::vector<std::string> entered(tl.agents);
    std::size_t i = 0;
    const auto& ev = t.events;
    for (int b = 0; b <= tl.rounds; ++b) {
        // Round b-1's moves and deaths shape boundary b, as do STATE_CHANGEs stamped b.
        for (; i < ev.size() && (ev[i].round < b || (ev[i].round == b && ev[i].kind == EventKind::STATE_CHANGE));
             ++i) {
            const TraceEvent& e = ev[i];
            int a = e.agent - 1;
            switch (e.kind) {
                case EventKind::MOVE:
                    if (a >= 0 && a < tl.agents) pos[a] = e.node;
                    break;
                case EventKind::DESTROYED:
                    if (a >= 0 && a < tl.agents) pos[a] = -1;
                    if (tl.first_destruction < 0) tl.first_destruction = e.round;
                    break;
                case EventKind::DETECT_CLAIM:
                    if (tl.first_true_claim < 0 && to_int(e.get("claim")) == t.header.bh) tl.first_true_claim = e.round;
                    break;
                case EventKind::STATE_CHANGE:
                    if (a >= 0 && a < tl.agents) {
                        if (auto to = e.get("to")) {
                            state[a] = *to;
                            entered[a] = *to;
                            if (tl.coloc_start < 0 && to->rfind("Coloc.", 0) == 0) tl.coloc_start = e.round;
                        }
                    }
                    break;
                default: break;
            }
        }
        tl.pos.push_back(pos);
        tl.state.push_back(state);
        tl.entered.push_back(entered);
        std::fill(entered.begin(), entered.end(), std::string());
    }
    return tl;
}

CheckResult check_coverage(const Timeline& tl, const RingConfig& cfg, int window, int from, int to) {
    to = std::min(to, tl.rounds);
    if (to - from + 1 < window) return {Verdict::Pass, "no complete window", {}};
    // last[v]: most recent boundary with v occupied; a gap of `window` boundaries is a violation.
    std::vector<int> last(cfg.n, from - 1);
    for (int b = from; b <= to; ++b) {
        for (int p : tl.pos[b])
            if (p >= 0) last[p] = b;
        for (int v = 0; v < cfg.n; ++v) {
            if (v == cfg.bh) continue;
            if (b - last[v] >= window)
                return fail("node " + std::to_string(v) + " unvisited in boundaries [" + std::to_string(b - window + 1) +
                                ", " + std::to_string(b) + "]",
                            {b - window + 1, b});
        }
    }
    return {Verdict::Pass, "", {}};
}

CheckResult check_integrity(const Trace& t) {
    const auto& h = t.header;
    const int k = static_cast<int>(h.placement.size());
    if (t.fault) return fail("protocol integrity fault at round " + std::to_string(t.fault->round) + ": " +
                                 t.fault->reason, {t.fault->round});
    std::vector<int> dead_at(k, -1);
    int active_round = -1;
    int last = 0;
    for (auto& e : t.events) {
        auto at = [&](const std::string& what) {
            return fail("round " + std::to_string(e.round) + " " + to_string(e.kind) + ": " + what, {e.round});
        };
        if (e.round < last) return at("round goes backwards");
        last = e.round;
        if (e.round > h.rounds) return at("event after the last round");
        if (e.node != -1 && (e.node < 0 || e.node >= h.n)) return at("node out of range");
        if (e.agent != -1) {
            if (e.agent < 1 || e.agent > k) return at("unknown agent");
            int d = dead_at[e.agent - 1];
            if (d >= 0) return at("event from a destroyed agent");
        }
        switch (e.kind) {
            case EventKind::BH_ACTIVE:
                if (e.node != h.bh) return at("activation away from the black hole");
                active_round = e.round;
                break;
            case EventKind::DESTROYED:
                if (e.node != h.bh) return at("agent destroyed at safe node " + std::to_string(e.node));
                if (active_round != e.round) return at("destruction while the black hole is inactive");
                if (e.agent < 1) return at("destruction without an agent");
                dead_at[e.agent - 1] = e.round;
                break;
            case EventKind::DETECT_CLAIM: {
                int c = to_int(e.get("claim"));
                if (c < 0 || c >= h.n) return at("claim out of range");
                break;
            }
            default: break;
        }
    }
    return {};
}

namespace {

CheckResult check_survival(const Timeline& tl) {
    for (int b = 0; b <= tl.rounds; ++b) {
        bool any = std::any_of(tl.pos[b].begin(), tl.pos[b].end(), [](int p) { return p >= 0; });
        if (!any) return fail("no agent alive at round " + std::to_string(b), {b});
    }
    return {};
}

CheckResult check_true_detection(const Trace& t) {
    int claims = 0;
    for (auto& e : t.events) {
        if (e.kind != EventKind::DETECT_CLAIM) continue;
        ++claims;
        int c = to_int(e.get("claim"));
        if (c != t.header.bh)
            return fail("agent " + std::to_string(e.agent) + " claims node " + std::to_string(c) + " at round " +
                            std::to_string(e.round),
                        {e.round});
    }
    return {Verdict::Pass, std::to_string(claims) + " claims", {}};
}

// Pre-anomaly coverage at the protocol window, then 2n after the first true claim.
CheckResult check_phased_coverage(const Timeline& tl, const RingConfig& cfg, int window) {
    int from = 0;
    int w = window;
    if (tl.coloc_start >= 0 && (tl.first_destruction < 0 || tl.coloc_start <= tl.first_destruction)) {
        // Multiplicity placements: the first full cycle is the co-located run.
        from = tl.coloc_start;
        if (w == 0) w = 4 * cfg.n + 1;
    }
    if (w == 0) w = default_window(cfg.protocol, cfg.n);
    int pre_end = tl.first_destruction >= 0 ? tl.first_destruction : tl.rounds;
    if (auto r = check_coverage(tl, cfg, w, from, pre_end); r.verdict != Verdict::Pass) {
        r.detail = "before any destruction: " + r.detail;
        return r;
    }
    if (tl.first_true_claim >= 0) {
        if (auto r = check_coverage(tl, cfg, 2 * cfg.n, tl.first_true_claim, tl.rounds); r.verdict != Verdict::Pass) {
            r.detail = "after detection: " + r.detail;
            return r;
        }
    }
    return {};
}

CheckResult check_latency(const Timeline& tl, int bound) {
    if (tl.first_destruction < 0) return {Verdict::Pass, "no destruction", {}};
    if (tl.first_true_claim >= 0 && tl.first_true_claim - tl.first_destruction <= bound)
        return {Verdict::Pass, "claim " + std::to_string(tl.first_true_claim - tl.first_destruction) +
                                   " rounds after the first destruction", {tl.first_destruction, tl.first_true_claim}};
    if (tl.first_true_claim >= 0)
        return fail("first true claim " + std::to_string(tl.first_true_claim - tl.first_destruction) +
                        " rounds after the first destruction, bound " + std::to_string(bound),
                    {tl.first_destruction, tl.first_true_claim});
    if (tl.rounds - tl.first_destruction < bound)
        return {Verdict::Inconclusive, "trace ends before the bound elapses", {tl.first_destruction}};
    return fail("no true claim within " + std::to_string(bound) + " rounds of the destruction at round " +
                    std::to_string(tl.first_destruction),
                {tl.first_destruction});
}

CheckResult check_periodicity(const Timeline& tl, const RingConfig& cfg, int period) {
    const std::string label = sync_label(cfg.protocol);
    int end = tl.first_destruction >= 0 ? tl.first_destruction : tl.rounds;
    std::vector<int> base;
    for (int a = 0; a < tl.agents; ++a)
        if (tl.entered[0][a] == label) base.push_back(a);
    if (base.empty()) return fail("nobody enters " + label + " at round 0", {0});
    for (int b = 1; b <= end; ++b) {
        std::vector<int> now;
        for (int a = 0; a < tl.agents; ++a)
            if (tl.entered[b][a] == label) now.push_back(a);
        if (b % period != 0) {
            if (!now.empty())
                return fail("agent " + std::to_string(now[0] + 1) + " enters " + label + " at round " +
                                std::to_string(b) + ", off the period " + std::to_string(period),
                            {b});
            continue;
        }
        if (now != base)
            return fail(std::to_string(now.size()) + " of " + std::to_string(base.size()) + " agents enter " + label +
                            " at round " + std::to_string(b),
                        {b});
        for (int a : now)
            if (tl.pos[b][a] != tl.pos[0][a])
                return fail("agent " + std::to_string(a + 1) + " enters " + label + " away from home at round " +
                                std::to_string(b),
                            {b});
    }
    return {};
}

CheckResult check_shrinkage(const Trace& t, const Timeline& tl) {
    if (t.header.protocol != ProtocolKind::F2FColoc) return {Verdict::Pass, "not an F2F trace", {}};
    // Region size at every iteration start, read off the Initial1 entries.
    std::vector<std::pair<int, int>> starts;  // (boundary, |S|)
    for (auto& e : t.events) {
        if (e.kind != EventKind::STATE_CHANGE || !e.get("to") || *e.get("to") != "Initial1") continue;
        int size = to_int(e.get("s_rgt")) - to_int(e.get("s_lft")) + 1;
        if (!starts.empty() && starts.back().first == e.round) {
            if (starts.back().second != size)
                return fail("agents disagree on the region at round " + std::to_string(e.round), {e.round});
            continue;
        }
        starts.emplace_back(e.round, size);
    }
    if (starts.empty()) return {Verdict::Pass, "no iteration", {}};
    std::vector<int> deaths;
    for (auto& e : t.events)
        if (e.kind == EventKind::DESTROYED) deaths.push_back(e.round);
    const int s0 = starts.front().second;
    int mods = 0;
    for (std::size_t i = 0; i + 1 < starts.size(); ++i) {
        auto [b, s] = starts[i];
        int next = starts[i + 1].second;
        int d = static_cast<int>(std::count_if(deaths.begin(), deaths.end(),
                                               [&](int r) { return r >= b && r < starts[i + 1].first; }));
        if (d == 1 && next > ceil_div(s, 2) + 1)
            return fail("iteration at round " + std::to_string(b) + " shrinks |S| from " + std::to_string(s) + " to " +
                            std::to_string(next),
                        {b, starts[i + 1].first});
        if (next != s) {
            ++mods;
            if (next > ceil_div(s0, 1 << std::min(mods, 30)) + 2)
                return fail("|S| = " + std::to_string(next) + " after " + std::to_string(mods) + " modifications",
                            {starts[i + 1].first});
        }
    }
    (void)tl;
    return {Verdict::Pass, std::to_string(mods) + " modifications", {}};
}

}  // namespace

CheckResult check(const Property& p, const Trace& t, const RingConfig& cfg) {
    if (t.header.n != cfg.n || t.header.bh != cfg.bh || t.header.protocol != cfg.protocol)
        throw std::invalid_argument("trace was recorded for a different configuration");
    Timeline tl = build_timeline(t);
    switch (p.kind) {
        case PropertyKind::Survival: return check_survival(tl);
        case PropertyKind::TrueDetection: return check_true_detection(t);
        case PropertyKind::Coverage: return check_phased_coverage(tl, cfg, p.param);
        case PropertyKind::DetectionLatency: return check_latency(tl, p.param);
        case PropertyKind::Periodicity:
            return check_periodicity(tl, cfg, p.param > 0 ? p.param : default_period(cfg.protocol, cfg.n));
        case PropertyKind::RegionShrinkage: return check_shrinkage(t, tl);
    }
    return {};
}

}  // namespace bbh
