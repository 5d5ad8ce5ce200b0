#include "dices/runner.hpp"

#include <map>
#include <stdexcept>

namespace dices {

namespace {

struct Accumulator {
  RequestPtr request;
  std::size_t steps = 0;
  double offered = 0.0;
  double delivered = 0.0;
  double loss = 0.0;
  double delay = 0.0;
};

}  // namespace

RunResult run_scenario(const Network& network, const TrafficScenario& scenario, const RunConfig& config) {
  const std::int64_t delta = config.control.delta_ms;
  if (config.step_ms <= 0 || delta <= 0 || delta % config.step_ms != 0) {
    throw std::invalid_argument("step size must divide the control period");
  }
  config.control.search.validate();
  scenario.validate();

  const auto pairs = scenario.request_pairs();
  const PathCatalog catalog = build_catalog(network, config.control.search.catalog_k, pairs);

  RunResult result;
  SimState state(config.policy, network);
  std::map<RequestId, Accumulator> period;

  const auto flush = [&](std::size_t tick) {
    for (const auto& [id, acc] : period) {
      const double n = static_cast<double>(acc.steps);
      result.flows.push_back(FlowTickRow{tick, id, acc.request->traffic_type, acc.request->protocol,
                                         acc.request->rate_mbps(), acc.offered / n, acc.delivered / n,
                                         acc.loss / n, acc.delay / n});
    }
    period.clear();
  };

  std::size_t tick_index = 0;
  while (state.clock_ms < scenario.horizon_ms) {
    state = step(std::move(state), network, scenario, config.step_ms);
    for (std::size_t i = 0; i < state.flows.size(); ++i) {
      const FlowMetrics& m = state.metrics[i];
      Accumulator& acc = period[m.id];
      acc.request = state.flows[i].request;
      ++acc.steps;
      acc.offered += m.offered_mbps;
      acc.delivered += m.delivered_mbps;
      acc.loss += m.loss;
      acc.delay += m.delay_ms;
    }

    // Events stamped at the tick time have not been admitted yet: they
    // belong to the next tick.
    if (state.clock_ms % delta == 0) {
      ++tick_index;
      flush(tick_index);
      GenerationObserver observer;
      if (config.trace_search) {
        observer = [&result, tick_index](const GenerationStats& stats, const ParetoFront&) {
          result.trace.push_back(TraceRow{tick_index, stats});
        };
      }
      result.ticks.push_back(tick(state, network, catalog, config.control, tick_index, observer));
    }
  }
  if (!period.empty()) flush(tick_index + 1);
  result.dropped = state.dropped;
  return result;
}

}  // namespace dices
