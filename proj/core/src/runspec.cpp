#include "bbh/runspec.hpp"

#include <algorithm>
#include <ostream>

#include "bbh/f2f.hpp"

namespace bbh {

int agent_count(ProtocolKind p, int n) {
    switch (p) {
        case ProtocolKind::F2FColoc: return required_agents(n);
        case ProtocolKind::PblScat: return 4;
        default: return 3;
    }
}

std::vector<int> default_placement(ProtocolKind p, int n) {
    int k = agent_count(p, n);
    std::vector<int> out(k, 0);
    if (p == ProtocolKind::PblScat || p == ProtocolKind::WBScat)
        for (int i = 0; i < k; ++i) out[i] = (i * n + k - 1) / k;
    return out;
}

int default_bh(const std::vector<int>& placement, int n) {
    for (int v = n - 1; v >= 0; --v)
        if (std::find(placement.begin(), placement.end(), v) == placement.end()) return v;
    return 0;
}

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
    return Verdict::Pass;
}

RunReport check_trace(Trace trace, const std::vector<Property>& props) {
    RunReport r;
    r.integrity = check_integrity(trace);
    r.overall = r.integrity.verdict;
    RingConfig cfg = trace.header.config();
    for (auto& p : props) {
        r.outcomes.push_back({p, check(p, trace, cfg)});
        r.overall = combine(r.overall, r.outcomes.back().result.verdict);
    }
    Timeline tl = build_timeline(trace);
    r.first_destruction = tl.first_destruction;
    r.first_true_claim = tl.first_true_claim;
    if (!tl.pos.empty())
        r.survivors = static_cast<int>(std::count_if(tl.pos.back().begin(), tl.pos.back().end(), [](int p) { return p >= 0; }));
    r.trace = std::move(trace);
    return r;
}

RunReport run_spec(const RunSpec& spec) {
    if (auto why = validate(spec.config); !why.empty()) throw std::invalid_argument(why);
    auto proto = make_protocol(spec.config.protocol, spec.mutations);
    int max_rounds = spec.max_rounds > 0 ? spec.max_rounds : 20 * proto->period(spec.config.n);
    auto adv = parse_adversary(spec.adversary, spec.seed);
    Engine engine(spec.config, *proto, EngineOptions{spec.kill_residents});
    RunResult res = engine.run_until(*adv, StopCondition{StopCondition::MaxRounds, max_rounds}, spec.seed);
    // Keep the spec text so a replay can rebuild the same adversary.
    res.trace.header.adversary = spec.adversary;
    return check_trace(std::move(res.trace), spec.properties);
}

void print_report(std::ostream& out, const RunReport& r) {
    const auto& h = r.trace.header;
    out << "protocol=" << to_string(h.protocol) << " n=" << h.n << " bh=" << h.bh << " rounds=" << h.rounds
        << " adversary=" << h.adversary << "\n";
    out << "integrity: " << to_string(r.integrity.verdict);
    if (!r.integrity.detail.empty()) out << " (" << r.integrity.detail << ")";
    out << "\n";
    for (auto& o : r.outcomes) {
        out << to_string(o.property) << ": " << to_string(o.result.verdict);
        if (!o.result.detail.empty()) out << " (" << o.result.detail << ")";
        if (o.result.verdict != Verdict::Pass && !o.result.witness.empty()) {
            out << " witness=";
            for (std::size_t i = 0; i < o.result.witness.size(); ++i) out << (i ? "," : "") << o.result.witness[i];
        }
        out << "\n";
    }
    out << "first-destruction=" << (r.first_destruction < 0 ? std::string("-") : std::to_string(r.first_destruction))
        << " first-true-claim=" << (r.first_true_claim < 0 ? std::string("-") : std::to_string(r.first_true_claim))
        << " survivors=" << r.survivors;
    if (r.first_destruction >= 0 && r.first_true_claim >= r.first_destruction)
        out << " latency=" << r.first_true_claim - r.first_destruction;
    out << "\nverdict: " << to_string(r.overall) << "\n";
}

}  // namespace bbh
