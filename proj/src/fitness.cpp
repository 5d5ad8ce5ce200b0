#include "dices/fitness.hpp"

#include <algorithm>
#include <stdexcept>

#include "dices/paths.hpp"

namespace dices {

std::int64_t undefined_delay(const Network& network, std::size_t flow_count) noexcept {
  return static_cast<std::int64_t>(flow_count) * network.total_delay_ms() + 1;
}

FitnessEvaluator::FitnessEvaluator(const Network& network, const FlowSet& baseline, double threshold)
    : network_(&network),
      baseline_(&baseline),
      threshold_(threshold),
      undef_(undefined_delay(network, baseline.size())) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("utilization threshold must lie in (0, 1]");
  }
}

FitnessTriple FitnessEvaluator::operator()(const FlowSet& candidate) const {
  std::vector<std::int64_t> load(network_->link_count());
  return evaluate(candidate, load);
}

FitnessTriple FitnessEvaluator::evaluate(const FlowSet& candidate,
                                         std::span<std::int64_t> load_kbps) const {
  if (!candidate.same_requests(*baseline_)) {
    throw std::invalid_argument("candidate and baseline serve different requests");
  }
  const auto links = network_->links();
  std::fill(load_kbps.begin(), load_kbps.end(), 0);

  FitnessTriple fit;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    const Flow& f = candidate[i];
    for (LinkId e : f.path) load_kbps[index(e)] += f.request->rate_kbps;
    fit.cost += static_cast<std::int64_t>(edit_distance((*baseline_)[i].path, f.path));
  }

  // Rates are positive, so links(F) is exactly the set of loaded links.
  std::int64_t delay = 0;
  for (std::size_t e = 0; e < links.size(); ++e) {
    if (load_kbps[e] == 0) continue;
    const double util = static_cast<double>(load_kbps[e]) /
                        (static_cast<double>(links[e].bandwidth_mbps) * 1000.0);
    fit.util = std::max(fit.util, util);
    delay += links[e].delay_ms;
  }
  fit.delay = fit.util <= threshold_ ? delay : undef_;
  return fit;
}

FitnessTriple evaluate(const Network& network, const FlowSet& candidate, const FlowSet& baseline,
                       double threshold) {
  return FitnessEvaluator(network, baseline, threshold)(candidate);
}

std::vector<FitnessTriple> evaluate_population_serial(const FitnessEvaluator& evaluator,
                                                      std::span<const FlowSet> population) {
  std::vector<FitnessTriple> out(population.size());
  std::vector<std::int64_t> load(evaluator.network().link_count());
  for (std::size_t i = 0; i < population.size(); ++i) {
    out[i] = evaluator.evaluate(population[i], load);
  }
  return out;
}

std::vector<FitnessTriple> evaluate_population(const FitnessEvaluator& evaluator,
                                               std::span<const FlowSet> population) {
  std::vector<FitnessTriple> out(population.size());
  const auto n = static_cast<std::ptrdiff_t>(population.size());
  const std::size_t links = evaluator.network().link_count();
  bool mismatch = false;

#pragma omp parallel
  {
    std::vector<std::int64_t> load(links);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto& candidate = population[static_cast<std::size_t>(i)];
      if (!candidate.same_requests(evaluator.baseline())) {
#pragma omp atomic write
        mismatch = true;
        continue;
      }
      out[static_cast<std::size_t>(i)] = evaluator.evaluate(candidate, load);
    }
  }

  if (mismatch) throw std::invalid_argument("candidate and baseline serve different requests");
  return out;
}

}  // namespace dices
