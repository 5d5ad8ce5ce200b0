#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dices/fitness.hpp"

namespace dices {

/// a dominates b: no worse in every objective and strictly better in one.
/// All objectives are minimized; UNDEF delay takes part as its sentinel.
bool dominates(const FitnessTriple& a, const FitnessTriple& b) noexcept;

/// Fast non-dominated sort. Each front lists member indices ascending.
std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const FitnessTriple> fitness);

/// Crowding distance of each member of `front` (indices into `fitness`), in the
/// order of `front`. Boundary members per objective get +inf; an objective with
/// zero range contributes nothing.
std::vector<double> crowding_distance(std::span<const FitnessTriple> fitness,
                                      std::span<const std::size_t> front);

/// Index of the knee member: closest to the origin after min-max normalization
/// over the front. Members with util > threshold (UNDEF delay) are dropped
/// unless every member is UNDEF, in which case delay is ignored instead.
/// Ties: smaller util, cost, delay, then index. Throws on an empty front.
std::size_t knee_index(std::span<const FitnessTriple> front, double threshold);

}  // namespace dices
