#pragma once

#include <cstdint>

#include "dices/network.hpp"
#include "dices/paths.hpp"

namespace dices {

struct WeightControlConfig {
  double threshold = 0.8;
  /// Weight for links at or above the threshold, where l(e) u / (u - util)
  /// is singular or negative.
  double w_max = 1e6;
  /// Reset links outside links(best) to 1 instead of keeping their weight.
  bool reset_untouched_weights = false;
};

/// l(e) u / (u - util) for util < u, else w_max; clamped to [1, w_max].
double adjusted_weight(std::int64_t delay_ms, double util, double threshold, double w_max);

/// Utilization-aware weight update over links(best). Throws
/// std::invalid_argument unless 0 < threshold <= 1.
WeightVector adjust_weights(const Network& network, const FlowSet& best, const WeightVector& current,
                            const WeightControlConfig& config);

}  // namespace dices
