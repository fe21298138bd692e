// bbhsim: run, model-check and replay black hole search protocols on a ring.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bbh/adversary.hpp"
#include "bbh/explorer.hpp"
#include "bbh/runspec.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

int exit_for(bbh::Verdict v) {
    switch (v) {
        case bbh::Verdict::Pass: return kPass;
        case bbh::Verdict::Fail: return kFail;
        case bbh::Verdict::Inconclusive: return kInconclusive;
    }
    return kFail;
}

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_nodes(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw UsageError("bad placement entry '" + part + "'");
        }
    }
    if (out.empty()) throw UsageError("empty placement");
    return out;
}

struct Common {
    std::string protocol = "f2f";
    int n = 0;
    int bh = -1;
    std::string placement;
    bool kill_residents = true;
    std::string mutate;

    void add_to(CLI::App* app) {
        app->add_option("--protocol", protocol, "f2f, pbl-coloc, pbl-scat, wb-scat or wb-coloc")
            ->check(CLI::IsMember({"f2f", "pbl-coloc", "pbl-scat", "wb-scat", "wb-coloc"}));
        app->add_option("--n", n, "ring size")->required();
        app->add_option("--bh", bh, "black hole node (default: largest free node)");
        app->add_option("--placement", placement, "start nodes, e.g. 0,0,5");
        app->add_option("--kill-residents", kill_residents, "an active black hole also kills agents waiting on it");
        app->add_option("--mutate", mutate, "test hook: f2f-wait1-left or wb-drop-visited")
            ->check(CLI::IsMember({"", "f2f-wait1-left", "wb-drop-visited"}))
            ->group("");
    }

    bbh::ProtocolKind kind() const { return *bbh::parse_protocol(protocol); }

    std::vector<int> nodes() const {
        return placement.empty() ? bbh::default_placement(kind(), n) : parse_nodes(placement);
    }

    bbh::ProtocolOptions mutations() const {
        bbh::ProtocolOptions o;
        o.mutate_f2f_wait1_left = mutate == "f2f-wait1-left";
        o.mutate_wb_drop_visited = mutate == "wb-drop-visited";
        return o;
    }

    bbh::RingConfig config(int black_hole) const {
        bbh::RingConfig c;
        c.n = n;
        c.bh = black_hole;
        c.protocol = kind();
        c.placement = bbh::placement_from_nodes(nodes());
        if (auto why = bbh::validate(c); !why.empty()) throw UsageError(why);
        return c;
    }
};

void write_trace_file(const std::string& path, const bbh::Trace& t) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    bbh::write_trace(out, t);
}

int do_run(const Common& c, const std::string& adversary, std::uint64_t seed, int max_rounds,
           const std::string& checks, const std::string& trace_out, bool quiet) {
    if (c.n < 4) throw UsageError("n must be at least 4");
    bbh::RunSpec spec;
    auto nodes = c.nodes();
    spec.config = c.config(c.bh >= 0 ? c.bh : bbh::default_bh(nodes, c.n));
    spec.adversary = adversary;
    spec.seed = seed;
    spec.max_rounds = max_rounds;
    spec.kill_residents = c.kill_residents;
    spec.mutations = c.mutations();
    try {
        spec.properties = bbh::parse_properties(checks);
    } catch (const bbh::PropertyParseError& e) {
        throw UsageError(e.what());
    }
    bbh::RunReport r;
    try {
        r = bbh::run_spec(spec);
    } catch (const bbh::AdversaryParseError& e) {
        throw UsageError(e.what());
    }
    if (!trace_out.empty()) write_trace_file(trace_out, r.trace);
    if (!quiet) bbh::print_report(std::cout, r);
    return exit_for(r.overall);
}

int do_modelcheck(const Common& c, int iterations, int max_n, std::size_t budget, const std::string& cex_out,
                  bool quiet) {
    if (c.n < 4) throw UsageError("n must be at least 4");
    if (c.n > max_n) throw UsageError("n above the exhaustive budget (raise --max-n)");
    auto nodes = c.nodes();
    std::vector<int> holes;
    if (c.bh >= 0) {
        holes.push_back(c.bh);
    } else {
        for (int v = 0; v < c.n; ++v)
            if (std::find(nodes.begin(), nodes.end(), v) == nodes.end()) holes.push_back(v);
    }
    bbh::Verdict overall = bbh::Verdict::Pass;
    for (int bh : holes) {
        auto cfg = c.config(bh);
        auto proto = bbh::make_protocol(cfg.protocol, c.mutations());
        bbh::Engine engine(cfg, *proto, bbh::EngineOptions{c.kill_residents});
        bbh::ExploreOptions opts;
        opts.horizon = iterations * proto->period(c.n);
        opts.state_budget = budget;
        auto res = bbh::explore_all(engine, opts);
        overall = bbh::combine(overall, res.verdict);
        if (!quiet)
            std::cout << "bh=" << bh << " horizon=" << opts.horizon << " states=" << res.states << " depth=" << res.depth
                      << " " << bbh::to_string(res.verdict) << "\n";
        if (res.verdict == bbh::Verdict::Fail && res.cex) {
            std::ofstream out(cex_out);
            if (!out) throw std::runtime_error("cannot write '" + cex_out + "'");
            out << "# " << res.cex->property << " violated at round " << res.cex->round << ": " << res.cex->detail
                << "\n";
            out << bbh::format_script(res.cex->script);
            if (!quiet) {
                std::cout << "  " << res.cex->property << " violated at round " << res.cex->round << ": "
                          << res.cex->detail << "\n";
                std::cout << "  counterexample written to " << cex_out << "; replay with: bbhsim run --protocol "
                          << c.protocol << " --n " << c.n << " --bh " << bh << " --placement ";
                for (std::size_t i = 0; i < nodes.size(); ++i) std::cout << (i ? "," : "") << nodes[i];
                if (!c.mutate.empty()) std::cout << " --mutate " << c.mutate;
                std::cout << " --adversary script:" << cex_out << " --max-rounds " << res.cex->round + 1
                          << " --check survival,true-detection,coverage\n";
            }
            break;
        }
    }
    if (!quiet) std::cout << "verdict: " << bbh::to_string(overall) << "\n";
    return exit_for(overall);
}

int do_replay(const std::string& path, const std::string& checks, bool quiet) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::vector<bbh::Property> props;
    try {
        props = bbh::parse_properties(checks);
    } catch (const bbh::PropertyParseError& e) {
        throw UsageError(e.what());
    }
    bbh::Trace t;
    try {
        t = bbh::read_trace(in);
    } catch (const bbh::TraceParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kFail;
    }
    auto r = bbh::check_trace(std::move(t), props);
    if (!quiet) bbh::print_report(std::cout, r);
    return exit_for(r.overall);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synchronous ring simulator and model checker for black hole search"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("--quiet", quiet, "print nothing, report through the exit code");

    Common run_c;
    std::string adversary = "never", checks = "survival,true-detection,coverage", trace_out;
    std::uint64_t seed = 0;
    int max_rounds = 0;
    auto* run = app.add_subcommand("run", "simulate one adversary and check properties");
    run_c.add_to(run);
    run->add_option("--adversary", adversary,
                    "never | always[:destroy] | kill-nth-visit:N[:destroy] | kill-agent:ID | script:FILE | random:PA:PD");
    run->add_option("--seed", seed);
    run->add_option("--max-rounds", max_rounds, "default: 20 protocol periods")->check(CLI::PositiveNumber);
    run->add_option("--check", checks, "survival,true-detection,coverage[:W],latency:B,periodicity[:P],shrinkage");
    run->add_option("--trace-out", trace_out);
    run->add_flag("--quiet", quiet);

    Common mc_c;
    int iterations = 6, max_n = 9;
    std::size_t budget = 20'000'000;
    std::string cex_out = "counterexample.script";
    auto* mc = app.add_subcommand("modelcheck", "explore every adversary schedule up to a horizon");
    mc_c.add_to(mc);
    mc->add_option("--horizon-iterations", iterations, "horizon in protocol periods")->check(CLI::PositiveNumber);
    mc->add_option("--max-n", max_n, "largest ring accepted for exhaustive search");
    mc->add_option("--state-budget", budget, "stored states before giving up with INCONCLUSIVE");
    mc->add_option("--cex-out", cex_out, "where a failing schedule is written");
    mc->add_flag("--quiet", quiet);

    std::string replay_path, replay_checks = "survival,true-detection,coverage";
    auto* rp = app.add_subcommand("replay", "re-check a recorded trace");
    rp->add_option("trace", replay_path)->required();
    rp->add_option("--check", replay_checks);
    rp->add_flag("--quiet", quiet);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*run) return do_run(run_c, adversary, seed, max_rounds, checks, trace_out, quiet);
        if (*mc) return do_modelcheck(mc_c, iterations, max_n, budget, cex_out, quiet);
        return do_replay(replay_path, replay_checks, quiet);
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
