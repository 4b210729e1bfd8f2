// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "starsec/experiments.hpp"
#include "starsec/monte_carlo.hpp"
#include "starsec/optimizer.hpp"
#include "starsec/scenario_io.hpp"

using namespace starsec;

namespace {

void BM_LaguerreRule(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rule = laguerre_rule(order);
        benchmark::DoNotOptimize(rule.weights.data());
    }
}
BENCHMARK(BM_LaguerreRule)->Arg(30)->Arg(300)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_TrigMoment(benchmark::State& state) {
    double kappa = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(trig_moment(1, kappa));
        kappa = kappa < 400.0 ? kappa + 0.1 : 0.1;
    }
}
BENCHMARK(BM_TrigMoment);

void BM_EvaluateScenario(benchmark::State& state) {
    const ScenarioConfig s;
    const QuadratureRule rule = laguerre_rule(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const auto rep = evaluate_scenario(s, rule);
        benchmark::DoNotOptimize(rep.wssr);
    }
}
BENCHMARK(BM_EvaluateScenario)->Arg(30)->Arg(300)->Unit(benchmark::kMicrosecond);

void BM_AdaptiveScenario(benchmark::State& state) {
    const ScenarioConfig s;
    for (auto _ : state) {
        const auto rep = evaluate_scenario_adaptive(s);
        benchmark::DoNotOptimize(rep.wssr);
    }
}
BENCHMARK(BM_AdaptiveScenario)->Unit(benchmark::kMicrosecond);

void BM_MonteCarloTrials(benchmark::State& state) {
    const ScenarioConfig s;
    McSettings mc;
    mc.trials = state.range(0);
    mc.seed = 1;
    mc.workers = static_cast<int>(state.range(1));
    for (auto _ : state) {
        const auto rep = simulate_rates(s, mc);
        benchmark::DoNotOptimize(rep.wssr.value);
    }
    state.SetItemsProcessed(state.iterations() * mc.trials);
}
BENCHMARK(BM_MonteCarloTrials)
    ->Args({10000, 1})
    ->Args({10000, 2})
    ->Unit(benchmark::kMillisecond);

void BM_GridSearch(benchmark::State& state) {
    const ScenarioConfig s;
    const QuadratureRule rule = laguerre_rule(150);
    const SearchRegion region{-40.0, 80.0, -40.0, 80.0, 10.0};
    for (auto _ : state) {
        const auto res = grid_search_placement(s, region, rule);
        benchmark::DoNotOptimize(res.best_wssr);
    }
}
BENCHMARK(BM_GridSearch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
