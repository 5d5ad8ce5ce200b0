#include "dices/operators.hpp"

#include <stdexcept>

namespace dices {

FlowSet mutate(const FlowSet& flows, double mprob, const PathCatalog& catalog, Rng& rng) {
  FlowSet out = flows;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t k = 0; k < flows.size(); ++k) {
    const double draw = coin(rng);
    if (mprob > 0.0 && mprob >= draw) out.set_path(k, alternative_flow(flows[k], catalog, rng).path);
  }
  return out;
}

std::pair<FlowSet, FlowSet> crossover_at(const FlowSet& a, const FlowSet& b, std::size_t cut) {
  if (!a.same_requests(b)) throw std::invalid_argument("crossover parents serve different requests");
  if (a.size() < 2) return {a, b};
  if (cut < 1 || cut >= a.size()) throw std::invalid_argument("crossover cut out of range");
  FlowSet child_a = a;
  FlowSet child_b = b;
  for (std::size_t k = cut; k < a.size(); ++k) {
    child_a.set_path(k, b[k].path);
    child_b.set_path(k, a[k].path);
  }
  return {std::move(child_a), std::move(child_b)};
}

std::pair<FlowSet, FlowSet> crossover(const FlowSet& a, const FlowSet& b, Rng& rng) {
  if (!a.same_requests(b)) throw std::invalid_argument("crossover parents serve different requests");
  if (a.size() < 2) return {a, b};
  std::uniform_int_distribution<std::size_t> cut(1, a.size() - 1);
  return crossover_at(a, b, cut(rng));
}

std::vector<FlowSet> initial_population(const FlowSet& incumbent, std::size_t size, double mprob,
                                        const PathCatalog& catalog, Rng& rng) {
  std::vector<FlowSet> population;
  population.reserve(size);
  population.push_back(incumbent);
  while (population.size() < size) population.push_back(mutate(incumbent, mprob, catalog, rng));
  return population;
}

}  // namespace dices
