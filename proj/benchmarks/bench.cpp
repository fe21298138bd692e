#include <benchmark/benchmark.h>

#include "bbh/explorer.hpp"
#include "bbh/runspec.hpp"

using namespace bbh;

namespace {

RingConfig config_for(ProtocolKind p, int n) {
    RingConfig c;
    c.n = n;
    c.protocol = p;
    auto nodes = default_placement(p, n);
    c.placement = placement_from_nodes(nodes);
    c.bh = default_bh(nodes, n);
    return c;
}

const ProtocolKind kinds[] = {ProtocolKind::F2FColoc, ProtocolKind::PblColoc, ProtocolKind::WBColoc,
                              ProtocolKind::PblScat, ProtocolKind::WBScat};

// Quiet rounds: the cost of planning and applying one round with no adversary action.
void BM_Rounds(benchmark::State& state) {
    auto cfg = config_for(kinds[state.range(0)], static_cast<int>(state.range(1)));
    auto proto = make_protocol(cfg.protocol);
    Engine engine(cfg, *proto);
    NeverActive never;
    GlobalState s = engine.initial();
    for (auto _ : state) {
        engine.run_round(s, never);
        benchmark::DoNotOptimize(s.round);
    }
    state.SetLabel(to_string(cfg.protocol));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Rounds)->ArgsProduct({{0, 1, 2, 3, 4}, {8, 32, 128}});

void BM_RandomRun(benchmark::State& state) {
    auto cfg = config_for(kinds[state.range(0)], 16);
    auto proto = make_protocol(cfg.protocol);
    Engine engine(cfg, *proto);
    for (auto _ : state) {
        SeededRandom adv(0.3, 0.5, 7);
        auto res = engine.run_until(adv, {StopCondition::MaxRounds, 20 * proto->period(cfg.n)}, 7);
        benchmark::DoNotOptimize(res.final.round);
    }
    state.SetLabel(to_string(cfg.protocol));
}
BENCHMARK(BM_RandomRun)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Explore(benchmark::State& state) {
    auto cfg = config_for(kinds[state.range(0)], static_cast<int>(state.range(1)));
    auto proto = make_protocol(cfg.protocol);
    Engine engine(cfg, *proto);
    ExploreOptions o;
    o.horizon = 6 * proto->period(cfg.n);
    std::size_t states = 0;
    for (auto _ : state) {
        auto res = explore_all(engine, o);
        states = res.states;
        benchmark::DoNotOptimize(res.verdict);
    }
    state.SetLabel(to_string(cfg.protocol));
    state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_Explore)->ArgsProduct({{0, 1, 2, 3, 4}, {6, 9}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
