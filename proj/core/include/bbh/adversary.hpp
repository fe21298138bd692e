#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbh/ring.hpp"

namespace bbh {

struct GlobalState;

struct Decision {
    bool active = false;
    bool destroy_data = false;  // only meaningful when active
    bool operator==(const Decision&) const = default;
};

struct AdversaryView {
    int round = 0;
    std::vector<int> at_bh;        // live agents sitting on the black hole
    std::vector<int> entering_bh;  // live agents whose move this round ends there
    NodeStore data_at_bh;

    bool agents_involved() const { return !at_bh.empty() || !entering_bh.empty(); }
    bool data_present() const { return !data_at_bh.empty(); }
    // Rounds where the four decisions can lead to different successors.
    bool relevant() const { return agents_involved() || data_present(); }
};

class Adversary {
public:
    virtual ~Adversary() = default;
    virtual Decision decide(const AdversaryView& view, const GlobalState& full) = 0;
    virtual std::string describe() const = 0;
};

class NeverActive : public Adversary {
public:
    Decision decide(const AdversaryView&, const GlobalState&) override { return {}; }
    std::string describe() const override { return "never"; }
};

class AlwaysActive : public Adversary {
public:
    explicit AlwaysActive(bool destroy) : destroy_(destroy) {}
    Decision decide(const AdversaryView&, const GlobalState&) override { return {true, destroy_}; }
    std::string describe() const override { return destroy_ ? "always:destroy" : "always"; }

private:
    bool destroy_;
};

// Activates once, on the nth round in which some agent would enter.
class KillNthVisit : public Adversary {
public:
    KillNthVisit(int nth, bool destroy) : nth_(nth), destroy_(destroy) {}
    Decision decide(const AdversaryView& v, const GlobalState&) override;
    std::string describe() const override;

private:
    int nth_;
    bool destroy_;
    int seen_ = 0;
};

class KillAgent : public Adversary {
public:
    explicit KillAgent(int id) : id_(id) {}
    Decision decide(const AdversaryView& v, const GlobalState&) override;
    std::string describe() const override { return "kill-agent:" + std::to_string(id_); }

private:
    int id_;
};

// Rounds absent from the script are inactive.
class ScheduledScript : public Adversary {
public:
    explicit ScheduledScript(std::map<int, Decision> script, std::string label = "script")
        : script_(std::move(script)), label_(std::move(label)) {}
    Decision decide(const AdversaryView& v, const GlobalState&) override;
    std::string describe() const override { return label_; }
    const std::map<int, Decision>& script() const { return script_; }

private:
    std::map<int, Decision> script_;
    std::string label_;
};

class SeededRandom : public Adversary {
public:
    SeededRandom(double p_active, double p_destroy, std::uint64_t seed)
        : pa_(p_active), pd_(p_destroy), rng_(seed) {}
    Decision decide(const AdversaryView& v, const GlobalState&) override;
    std::string describe() const override;

private:
    double pa_, pd_;
    std::mt19937_64 rng_;
};

struct AdversaryParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// never | always[:destroy] | kill-nth-visit:N[:destroy] | kill-agent:ID |
// script:<file> | random:<p_active>:<p_destroy>
std::unique_ptr<Adversary> parse_adversary(const std::string& spec, std::uint64_t seed);

// One line per scripted round: `round=<r> active=<0|1> destroy=<0|1>`; '#' starts a comment.
std::map<int, Decision> parse_script(const std::string& text);
std::string format_script(const std::map<int, Decision>& script);

}  // namespace bbh
