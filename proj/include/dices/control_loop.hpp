#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dices/fitness.hpp"
#include "dices/network.hpp"
#include "dices/paths.hpp"
#include "dices/search.hpp"
#include "dices/simulator.hpp"
#include "dices/weights.hpp"

namespace dices {

struct ControlConfig {
  std::int64_t delta_ms = 1000;
  SearchConfig search;
  WeightControlConfig weights;
  /// Simulated delay between compute and apply; 0 applies within the tick.
  std::int64_t apply_latency_ms = 0;
  /// Record wall-clock time of the compute step.
  bool measure_wallclock = true;
};

/// What monitor and analyze observed, and what compute and apply did.
struct AdaptationRecord {
  std::size_t tick = 0;
  std::int64_t time_ms = 0;
  std::size_t flow_count = 0;
  double max_util = 0.0;
  bool congested = false;
  std::vector<LinkUtilization> congested_links;
  double search_ms = 0.0;  // search + weight adjustment
  std::optional<FitnessTriple> fitness;
  std::size_t evaluations = 0;
  std::size_t flows_changed = 0;
  std::size_t weights_changed = 0;
  /// Net-model max utilization of the flow set after apply (or of the best
  /// solution, when apply is deferred).
  double post_util = 0.0;
};

/// Per-tick search seed, derived from the base seed and the tick index.
std::uint64_t tick_seed(std::uint64_t base, std::size_t tick);

/// One monitor-analyze-compute-apply iteration. Baseline policies only
/// monitor. Tick i runs at time i delta, i >= 1.
AdaptationRecord tick(SimState& state, const Network& network, const PathCatalog& catalog,
                      const ControlConfig& config, std::size_t tick_index,
                      const GenerationObserver& observer = {});

}  // namespace dices
