#include "dices/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace dices {

double adjusted_weight(std::int64_t delay_ms, double util, double threshold, double w_max) {
  if (util >= threshold) return w_max;
  const double w = static_cast<double>(delay_ms) * threshold / (threshold - util);
  return std::clamp(w, 1.0, w_max);
}

WeightVector adjust_weights(const Network& network, const FlowSet& best, const WeightVector& current,
                            const WeightControlConfig& config) {
  if (!(config.threshold > 0.0 && config.threshold <= 1.0)) {
    throw std::invalid_argument("utilization threshold must lie in (0, 1]");
  }
  if (current.size() != network.link_count()) throw std::invalid_argument("weight vector size mismatch");

  WeightVector out = config.reset_untouched_weights ? WeightVector::uniform(network.link_count())
                                                    : current;
  const auto util = utilizations(network, best);
  for (LinkId e : links_of(network, best)) {
    out.set(e, adjusted_weight(network.link(e).delay_ms, util[index(e)], config.threshold, config.w_max));
  }
  return out;
}

}  // namespace dices
