#include "dices/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "dices/operators.hpp"
#include "dices/pareto.hpp"

namespace dices {

void SearchConfig::validate() const {
  if (psize < 2 || psize % 2 != 0) throw std::invalid_argument("psize must be an even number >= 2");
  if (!(cprob >= 0.0 && cprob <= 1.0)) throw std::invalid_argument("cprob must lie in [0, 1]");
  if (mprob && !(*mprob >= 0.0 && *mprob <= 1.0)) {
    throw std::invalid_argument("mprob must lie in [0, 1]");
  }
  if (budget == BudgetMode::evaluations && neval < psize) {
    throw std::invalid_argument("neval must be >= psize");
  }
  if (budget == BudgetMode::generations && neval < 1) {
    throw std::invalid_argument("neval must be >= 1 generation");
  }
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("utilization threshold must lie in (0, 1]");
  }
  if (catalog_k < 1) throw std::invalid_argument("catalog width K must be >= 1");
}

double SearchConfig::mutation_probability(std::size_t flow_count) const {
  if (mprob) return *mprob;
  return flow_count == 0 ? 1.0 : 1.0 / static_cast<double>(flow_count);
}

namespace {

std::size_t hash_paths(const FlowSet& flows) {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& f : flows) {
    for (LinkId e : f.path) h = (h ^ (index(e) + 1)) * 0x100000001b3ULL;
    h = (h ^ 0xffffULL) * 0x100000001b3ULL;
  }
  return h;
}

struct Member {
  FlowSet flows;
  FitnessTriple fitness;
  std::size_t rank = 0;
  double crowding = 0.0;
};

/// P u A as a set: exact duplicates of an earlier member are dropped.
std::vector<Member> merge_unique(std::vector<FlowSet>& offspring, std::vector<FitnessTriple>& fitness,
                                 std::vector<Member>& archive) {
  std::vector<Member> merged;
  merged.reserve(offspring.size() + archive.size());
  std::unordered_multimap<std::size_t, std::size_t> seen;
  const auto add = [&](FlowSet&& flows, const FitnessTriple& fit) {
    const std::size_t h = hash_paths(flows);
    const auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (merged[it->second].flows == flows) return;
    }
    seen.emplace(h, merged.size());
    merged.push_back(Member{std::move(flows), fit});
  };
  for (std::size_t i = 0; i < offspring.size(); ++i) add(std::move(offspring[i]), fitness[i]);
  for (auto& m : archive) add(std::move(m.flows), m.fitness);
  return merged;
}

FitnessTriple median_of(const std::vector<Member>& members) {
  std::vector<double> util;
  std::vector<std::int64_t> cost, delay;
  for (const auto& m : members) {
    util.push_back(m.fitness.util);
    cost.push_back(m.fitness.cost);
    delay.push_back(m.fitness.delay);
  }
  const auto mid = members.size() / 2;
  std::nth_element(util.begin(), util.begin() + static_cast<std::ptrdiff_t>(mid), util.end());
  std::nth_element(cost.begin(), cost.begin() + static_cast<std::ptrdiff_t>(mid), cost.end());
  std::nth_element(delay.begin(), delay.begin() + static_cast<std::ptrdiff_t>(mid), delay.end());
  return {util[mid], cost[mid], delay[mid]};
}

FitnessTriple minimum_of(const std::vector<Member>& members) {
  FitnessTriple best = members.front().fitness;
  for (const auto& m : members) {
    best.util = std::min(best.util, m.fitness.util);
    best.cost = std::min(best.cost, m.fitness.cost);
    best.delay = std::min(best.delay, m.fitness.delay);
  }
  return best;
}

/// Binary tournament on (rank ascending, crowding descending); ties are a
/// fair coin.
std::size_t tournament(const std::vector<Member>& archive, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, archive.size() - 1);
  const std::size_t a = pick(rng);
  const std::size_t b = pick(rng);
  const Member& x = archive[a];
  const Member& y = archive[b];
  if (x.rank != y.rank) return x.rank < y.rank ? a : b;
  if (x.crowding != y.crowding) return x.crowding > y.crowding ? a : b;
  return std::bernoulli_distribution(0.5)(rng) ? a : b;
}

std::vector<FlowSet> breed(const std::vector<Member>& archive, std::size_t psize, double cprob,
                           double mprob, const PathCatalog& catalog, Rng& rng) {
  std::vector<FlowSet> offspring;
  offspring.reserve(psize);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (offspring.size() < psize) {
    const FlowSet& a = archive[tournament(archive, rng)].flows;
    const FlowSet& b = archive[tournament(archive, rng)].flows;
    auto children = coin(rng) < cprob ? crossover(a, b, rng) : std::pair<FlowSet, FlowSet>{a, b};
    offspring.push_back(mutate(children.first, mprob, catalog, rng));
    if (offspring.size() < psize) offspring.push_back(mutate(children.second, mprob, catalog, rng));
  }
  return offspring;
}

}  // namespace

SearchResult run_search(const Network& network, const FlowSet& incumbent, const PathCatalog& catalog,
                        const SearchConfig& config, const GenerationObserver& observer) {
  config.validate();
  for (const auto& f : incumbent) {
    if (!catalog.contains(f.request->source, f.request->terminal)) {
      throw std::invalid_argument("path catalog lacks the pair of request " +
                                  std::to_string(f.request->id));
    }
  }

  Rng rng(config.seed);
  const double mprob = config.mutation_probability(incumbent.size());
  const FitnessEvaluator evaluator(network, incumbent, config.threshold);

  std::vector<FlowSet> population = initial_population(incumbent, config.psize, mprob, catalog, rng);
  std::vector<Member> archive;
  ParetoFront front;
  SearchResult result;

  const auto budget_left = [&] {
    return config.budget == BudgetMode::evaluations ? result.evaluations < config.neval
                                                    : result.generations < config.neval;
  };

  while (budget_left()) {
    auto fitness = config.parallel_evaluation ? evaluate_population(evaluator, population)
                                              : evaluate_population_serial(evaluator, population);
    result.evaluations += population.size();
    ++result.generations;

    std::vector<Member> merged = merge_unique(population, fitness, archive);
    std::vector<FitnessTriple> merged_fitness(merged.size());
    std::transform(merged.begin(), merged.end(), merged_fitness.begin(),
                   [](const Member& m) { return m.fitness; });
    const auto fronts = non_dominated_sort(merged_fitness);

    front.clear();
    for (std::size_t i : fronts.front()) front.push_back({merged[i].flows, merged[i].fitness});

    if (observer) {
      observer(GenerationStats{result.generations, result.evaluations, front.size(),
                               minimum_of(merged), median_of(merged)},
               front);
    }

    archive.clear();
    for (std::size_t rank = 0; rank < fronts.size() && archive.size() < config.psize; ++rank) {
      const auto& members = fronts[rank];
      const auto crowding = crowding_distance(merged_fitness, members);
      std::vector<std::size_t> order(members.size());
      std::iota(order.begin(), order.end(), 0);
      if (archive.size() + members.size() > config.psize) {
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return crowding[a] > crowding[b]; });
        order.resize(config.psize - archive.size());
      }
      for (std::size_t j : order) {
        Member& m = merged[members[j]];
        archive.push_back(Member{std::move(m.flows), m.fitness, rank, crowding[j]});
      }
    }

    if (!budget_left()) break;
    population = breed(archive, config.psize, config.cprob, mprob, catalog, rng);
  }

  std::vector<FitnessTriple> front_fitness(front.size());
  std::transform(front.begin(), front.end(), front_fitness.begin(),
                 [](const FrontMember& m) { return m.fitness; });
  const std::size_t knee = knee_index(front_fitness, config.threshold);
  result.best = front[knee].flows;
  result.best_fitness = front[knee].fitness;
  result.front = std::move(front);
  return result;
}

const FlowSet& knee_select(const ParetoFront& front, double threshold) {
  std::vector<FitnessTriple> fitness(front.size());
  std::transform(front.begin(), front.end(), fitness.begin(),
                 [](const FrontMember& m) { return m.fitness; });
  return front[knee_index(fitness, threshold)].flows;
}

}  // namespace dices
