#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dices/forwarding.hpp"
#include "dices/network.hpp"
#include "dices/paths.hpp"
#include "dices/traffic.hpp"

namespace dices {

/// Offered load after elastic adjustment, in Mbps.
struct LinkLoads {
  std::vector<double> flow_offered;  // indexed like the flow set
  std::vector<double> link_offered;  // indexed by LinkId
};

/// Inelastic flows offer their full rate. Elastic flows share what inelastic
/// traffic leaves of each link by progressive max-min filling, capped at
/// their demand.
LinkLoads link_loads(const Network& network, const FlowSet& flows);

/// Max-min fair rates for flows with the given demands over links with the
/// given capacities. `paths` holds link indices per flow.
std::vector<double> max_min_shares(std::span<const double> capacity,
                                   std::span<const std::vector<std::size_t>> paths,
                                   std::span<const double> demand);

struct FlowMetrics {
  RequestId id = 0;
  double offered_mbps = 0.0;
  double delivered_mbps = 0.0;
  double loss = 0.0;
  double delay_ms = 0.0;
};

/// 1 / (1 - min(x, 0.95)).
double queuing_factor(double util);

/// Survival s(e) = min(1, c(e) / offered(e)); delivered = offered * prod s(e);
/// delay = sum l(e) q(offered(e) / c(e)).
std::vector<FlowMetrics> flow_metrics(const Network& network, const FlowSet& flows,
                                      const LinkLoads& loads);

struct PendingApply {
  std::int64_t due_ms = 0;
  FlowSet flows;
  WeightVector weights;
};

struct SimState {
  std::int64_t clock_ms = 0;
  std::size_t next_event = 0;
  FlowSet flows;
  ForwardingPolicy policy;
  std::vector<RequestId> dropped;     // arrivals with no path to their terminal
  std::vector<FlowMetrics> metrics;   // of the last step, aligned with flows
  double max_util = 0.0;              // net-model utilization of the last step
  std::optional<PendingApply> pending;

  SimState(PolicyKind kind, const Network& network) : policy(kind, network) {}
};

/// Replaces the paths of flows still present in `state.flows` with those of
/// `best` and installs `weights` into an adaptive policy. Returns the number
/// of flows whose path changed.
std::size_t apply_adaptation(SimState& state, const FlowSet& best, const WeightVector& weights);

/// Processes all not yet handled events with time <= until_ms: arrivals are
/// routed by the active policy, departures remove their flow.
void admit_events(SimState& state, const Network& network, const TrafficScenario& scenario,
                  std::int64_t until_ms);

/// Applies a due pending adaptation, processes the events in
/// [clock, clock + dt), recomputes loads and metrics, and advances the clock.
SimState step(SimState state, const Network& network, const TrafficScenario& scenario,
              std::int64_t dt_ms);

}  // namespace dices
