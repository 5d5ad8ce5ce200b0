// Serial vs OpenMP population fitness evaluation.

#include <benchmark/benchmark.h>

#include "dices/builtins.hpp"
#include "dices/fitness.hpp"
#include "dices/operators.hpp"
#include "dices/paths.hpp"
#include "dices/runner.hpp"

namespace {

using namespace dices;

struct Fixture {
  Network network;
  FlowSet incumbent;
  PathCatalog catalog;
  std::vector<FlowSet> population;

  Fixture(std::size_t switches, std::size_t requests, std::size_t psize) : network(complete_topology(switches)) {
    const TrafficScenario scenario = exp2_scenario(network, requests);
    const ForwardingPolicy policy(PolicyKind::rfwd_unit, network);
    std::vector<Flow> flows;
    for (const auto& ev : scenario.events) flows.push_back(forward(network, ev.request, policy));
    incumbent = FlowSet(std::move(flows));
    const auto pairs = scenario.request_pairs();
    catalog = build_catalog(network, 8, pairs);
    Rng rng(42);
    population = initial_population(incumbent, psize, 0.5, catalog, rng);
  }
};

void BM_EvaluateSerial(benchmark::State& state) {
  const Fixture fx(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 100);
  const FitnessEvaluator evaluator(fx.network, fx.incumbent, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_population_serial(evaluator, fx.population));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fx.population.size()));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const Fixture fx(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 100);
  const FitnessEvaluator evaluator(fx.network, fx.incumbent, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_population(evaluator, fx.population));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fx.population.size()));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Args({5, 5})->Args({25, 5})->Args({50, 5})->Args({5, 50});
BENCHMARK(BM_EvaluateParallel)->Args({5, 5})->Args({25, 5})->Args({50, 5})->Args({5, 50});

BENCHMARK_MAIN();
