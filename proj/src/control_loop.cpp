#include "dices/control_loop.hpp"

#include <chrono>

namespace dices {

std::uint64_t tick_seed(std::uint64_t base, std::size_t tick) {
  // splitmix64 finalizer
  std::uint64_t z = base ^ (static_cast<std::uint64_t>(tick) * 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

AdaptationRecord tick(SimState& state, const Network& network, const PathCatalog& catalog,
                      const ControlConfig& config, std::size_t tick_index,
                      const GenerationObserver& observer) {
  AdaptationRecord record;
  record.tick = tick_index;
  record.time_ms = state.clock_ms;
  record.flow_count = state.flows.size();
  record.max_util = max_utilization(network, state.flows);
  record.post_util = record.max_util;

  const CongestionReport report = is_congested(network, state.flows, config.search.threshold);
  record.congested = report.congested;
  record.congested_links = report.links;
  if (!report.congested || !state.policy.adaptive()) return record;

  SearchConfig search = config.search;
  search.seed = tick_seed(config.search.seed, tick_index);
  WeightControlConfig weight_config = config.weights;
  weight_config.threshold = search.threshold;

  const auto started = std::chrono::steady_clock::now();
  SearchResult result = run_search(network, state.flows, catalog, search, observer);
  WeightVector weights = adjust_weights(network, result.best, state.policy.weights(), weight_config);
  const auto finished = std::chrono::steady_clock::now();
  if (config.measure_wallclock) {
    record.search_ms = std::chrono::duration<double, std::milli>(finished - started).count();
  }

  record.fitness = result.best_fitness;
  record.evaluations = result.evaluations;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const LinkId e{static_cast<std::uint32_t>(i)};
    if (weights[e] != state.policy.weights()[e]) ++record.weights_changed;
  }
  for (std::size_t i = 0; i < result.best.size(); ++i) {
    if (result.best[i].path != state.flows[i].path) ++record.flows_changed;
  }
  record.post_util = max_utilization(network, result.best);

  if (config.apply_latency_ms > 0) {
    state.pending = PendingApply{state.clock_ms + config.apply_latency_ms, std::move(result.best),
                                 std::move(weights)};
  } else {
    apply_adaptation(state, result.best, weights);
  }
  return record;
}

}  // namespace dices
