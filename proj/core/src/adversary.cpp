#include "bbh/adversary.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bbh {

Decision KillNthVisit::decide(const AdversaryView& v, const GlobalState&) {
    if (v.entering_bh.empty()) return {};
    if (++seen_ == nth_) return {true, destroy_};
    return {};
}

std::string KillNthVisit::describe() const {
    return "kill-nth-visit:" + std::to_string(nth_) + (destroy_ ? ":destroy" : "");
}

Decision KillAgent::decide(const AdversaryView& v, const GlobalState&) {
    bool hit = std::find(v.entering_bh.begin(), v.entering_bh.end(), id_) != v.entering_bh.end();
    return {hit, false};
}

Decision ScheduledScript::decide(const AdversaryView& v, const GlobalState&) {
    auto it = script_.find(v.round);
    return it == script_.end() ? Decision{} : it->second;
}

Decision SeededRandom::decide(const AdversaryView&, const GlobalState&) {
    // Two draws every round keep the stream aligned regardless of outcomes.
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double a = u(rng_), d = u(rng_);
    bool active = a < pa_;
    return {active, active && d < pd_};
}

std::string SeededRandom::describe() const {
    std::ostringstream s;
    s << "random:" << pa_ << ":" << pd_;
    return s.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

int parse_positive(const std::string& s, const std::string& spec) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw AdversaryParseError("bad integer '" + s + "' in adversary '" + spec + "'");
}

double parse_probability(const std::string& s, const std::string& spec) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size() && v >= 0.0 && v <= 1.0) return v;
    } catch (const std::exception&) {
    }
    throw AdversaryParseError("bad probability '" + s + "' in adversary '" + spec + "'");
}

}  // namespace

std::unique_ptr<Adversary> parse_adversary(const std::string& spec, std::uint64_t seed) {
    if (spec.rfind("script:", 0) == 0) {
        std::string path = spec.substr(7);
        std::ifstream in(path);
        if (!in) throw AdversaryParseError("cannot read script file '" + path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return std::make_unique<ScheduledScript>(parse_script(buf.str()), spec);
    }
    auto parts = split(spec, ':');
    if (parts.empty()) throw AdversaryParseError("empty adversary");
    const auto& name = parts[0];
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() - 1 < lo || parts.size() - 1 > hi)
            throw AdversaryParseError("wrong number of parameters for '" + name + "'");
    };
    auto destroy_flag = [&](std::size_t i) {
        if (parts.size() <= i) return false;
        if (parts[i] != "destroy") throw AdversaryParseError("expected 'destroy', got '" + parts[i] + "'");
        return true;
    };
    if (name == "never") {
        arity(0, 0);
        return std::make_unique<NeverActive>();
    }
    if (name == "always") {
        arity(0, 1);
        return std::make_unique<AlwaysActive>(destroy_flag(1));
    }
    if (name == "kill-nth-visit") {
        arity(1, 2);
        return std::make_unique<KillNthVisit>(parse_positive(parts[1], spec), destroy_flag(2));
    }
    if (name == "kill-agent") {
        arity(1, 1);
        return std::make_unique<KillAgent>(parse_positive(parts[1], spec));
    }
    if (name == "random") {
        arity(2, 2);
        return std::make_unique<SeededRandom>(parse_probability(parts[1], spec),
                                              parse_probability(parts[2], spec), seed);
    }
    throw AdversaryParseError("unknown adversary '" + name + "'");
}

std::map<int, Decision> parse_script(const std::string& text) {
    std::map<int, Decision> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream toks(line);
        std::string tok;
        int round = -1;
        Decision d;
        bool any = false;
        while (toks >> tok) {
            any = true;
            auto eq = tok.find('=');
            std::string k = tok.substr(0, eq), v = eq == std::string::npos ? "" : tok.substr(eq + 1);
            auto bad = [&] {
                return AdversaryParseError("script line " + std::to_string(lineno) + ": bad token '" + tok + "'");
            };
            if (k == "round") {
                try {
                    round = std::stoi(v);
                } catch (const std::exception&) {
                    throw bad();
                }
            } else if (k == "active" && (v == "0" || v == "1")) {
                d.active = v == "1";
            } else if (k == "destroy" && (v == "0" || v == "1")) {
                d.destroy_data = v == "1";
            } else {
                throw bad();
            }
        }
        if (!any) continue;
        if (round < 0)
            throw AdversaryParseError("script line " + std::to_string(lineno) + ": missing round");
        if (d.destroy_data && !d.active)
            throw AdversaryParseError("script line " + std::to_string(lineno) + ": destroy without active");
        out[round] = d;
    }
    return out;
}

std::string format_script(const std::map<int, Decision>& script) {
    std::string s;
    for (auto& [r, d] : script)
        s += "round=" + std::to_string(r) + " active=" + (d.active ? "1" : "0") +
             " destroy=" + (d.destroy_data ? "1" : "0") + "\n";
    return s;
}

}  // namespace bbh
