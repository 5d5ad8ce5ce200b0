#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dices/fitness.hpp"
#include "dices/network.hpp"
#include "dices/paths.hpp"

namespace dices {

/// How `neval` is read: as a budget of individual fitness evaluations
/// (default, 10,000 evaluations = 100 generations at psize 100), or as a
/// number of generations (the literal outer loop of the algorithm listing).
enum class BudgetMode { evaluations, generations };

struct SearchConfig {
  std::size_t psize = 100;
  double cprob = 0.8;
  std::optional<double> mprob;  // defaults to 1 / |F_i|
  std::size_t neval = 10'000;
  double threshold = 0.8;
  std::size_t catalog_k = 8;
  std::uint64_t seed = 0;
  BudgetMode budget = BudgetMode::evaluations;
  bool parallel_evaluation = true;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
  double mutation_probability(std::size_t flow_count) const;
};

struct FrontMember {
  FlowSet flows;
  FitnessTriple fitness;
};

/// Mutually non-dominated (flow set, fitness) pairs.
using ParetoFront = std::vector<FrontMember>;

/// Per-generation summary handed to an optional observer.
struct GenerationStats {
  std::size_t generation = 0;
  std::size_t evaluations = 0;
  std::size_t front_size = 0;
  FitnessTriple best;    // per-objective minimum over the merged population
  FitnessTriple median;  // per-objective median over the merged population
};

using GenerationObserver = std::function<void(const GenerationStats&, const ParetoFront&)>;

struct SearchResult {
  FlowSet best;
  FitnessTriple best_fitness;
  ParetoFront front;
  std::size_t evaluations = 0;
  std::size_t generations = 0;
};

/// NSGA-II congestion search starting from the incumbent flow set F_i.
/// The incumbent serves as the cost baseline. Every pair used by F_i must be
/// in the catalog.
SearchResult run_search(const Network& network, const FlowSet& incumbent, const PathCatalog& catalog,
                        const SearchConfig& config, const GenerationObserver& observer = {});

/// Knee member of a front (see knee_index).
const FlowSet& knee_select(const ParetoFront& front, double threshold);

}  // namespace dices
