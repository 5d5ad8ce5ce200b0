#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dices/control_loop.hpp"
#include "dices/forwarding.hpp"
#include "dices/network.hpp"
#include "dices/search.hpp"
#include "dices/traffic.hpp"

namespace dices {

struct RunConfig {
  PolicyKind policy = PolicyKind::dices_dynamic;
  ControlConfig control;
  std::int64_t step_ms = 100;
  bool trace_search = false;
};

/// Flow metrics averaged over the simulation steps of one period. The period
/// observed by tick i covers [(i - 1) delta, i delta).
struct FlowTickRow {
  std::size_t tick = 0;
  RequestId id = 0;
  std::string type;
  Protocol protocol = Protocol::inelastic;
  double demand_mbps = 0.0;
  double offered_mbps = 0.0;
  double delivered_mbps = 0.0;
  double loss = 0.0;
  double delay_ms = 0.0;
};

struct TraceRow {
  std::size_t tick = 0;
  GenerationStats stats;
};

struct RunResult {
  std::vector<AdaptationRecord> ticks;
  std::vector<FlowTickRow> flows;
  std::vector<TraceRow> trace;
  std::vector<RequestId> dropped;
};

/// Runs the scenario to its horizon with a control tick at every positive
/// multiple of delta up to the horizon. Requests arriving in
/// [i delta, (i + 1) delta) are first seen by tick i + 1. Throws
/// std::invalid_argument unless step_ms divides delta_ms.
RunResult run_scenario(const Network& network, const TrafficScenario& scenario, const RunConfig& config);

}  // namespace dices
