#pragma once

#include <utility>
#include <vector>

#include "dices/network.hpp"
#include "dices/paths.hpp"

namespace dices {

// Genetic operators over flow sets. Every operator keeps the request list and
// its order intact, so all offspring stay feasible for Q_i.

/// Each flow independently, with probability mprob, is replaced by
/// alternative_flow; untouched flows are copied verbatim.
FlowSet mutate(const FlowSet& flows, double mprob, const PathCatalog& catalog, Rng& rng);

/// Single-point crossover at a cut drawn uniformly from [1, |F|-1]. With one
/// flow, the children are copies of the parents. Throws std::invalid_argument
/// when the parents serve different request lists.
std::pair<FlowSet, FlowSet> crossover(const FlowSet& a, const FlowSet& b, Rng& rng);

/// Crossover at a fixed cut point in [1, |F|-1].
std::pair<FlowSet, FlowSet> crossover_at(const FlowSet& a, const FlowSet& b, std::size_t cut);

/// F_i followed by size-1 mutants of F_i.
std::vector<FlowSet> initial_population(const FlowSet& incumbent, std::size_t size, double mprob,
                                        const PathCatalog& catalog, Rng& rng);

}  // namespace dices
