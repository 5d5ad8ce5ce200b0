#include "dices/pareto.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace dices {

bool dominates(const FitnessTriple& a, const FitnessTriple& b) noexcept {
  const auto x = a.objectives();
  const auto y = b.objectives();
  bool strictly_better = false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] > y[k]) return false;
    if (x[k] < y[k]) strictly_better = true;
  }
  return strictly_better;
}

std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const FitnessTriple> fitness) {
  const std::size_t n = fitness.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> dominator_count(n, 0);
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> current;

  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (dominates(fitness[p], fitness[q])) {
        dominated[p].push_back(q);
        ++dominator_count[q];
      } else if (dominates(fitness[q], fitness[p])) {
        dominated[q].push_back(p);
        ++dominator_count[p];
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (dominator_count[p] == 0) current.push_back(p);
  }
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t p : current) {
      for (std::size_t q : dominated[p]) {
        if (--dominator_count[q] == 0) next.push_back(q);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(std::span<const FitnessTriple> fitness,
                                      std::span<const std::size_t> front) {
  const std::size_t m = front.size();
  std::vector<double> distance(m, 0.0);
  if (m == 0) return distance;

  std::vector<std::size_t> order(m);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto value = [&](std::size_t i) { return fitness[front[i]].objectives()[k]; };
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value(a) < value(b); });
    const double lo = value(order.front());
    const double hi = value(order.back());
    if (hi == lo) continue;
    distance[order.front()] = std::numeric_limits<double>::infinity();
    distance[order.back()] = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < m; ++i) {
      distance[order[i]] += (value(order[i + 1]) - value(order[i - 1])) / (hi - lo);
    }
  }
  return distance;
}

std::size_t knee_index(std::span<const FitnessTriple> front, double threshold) {
  if (front.empty()) throw std::invalid_argument("knee selection on an empty front");

  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < front.size(); ++i) {
    if (front[i].util <= threshold) members.push_back(i);
  }
  const bool drop_delay = members.empty();
  if (drop_delay) {
    members.resize(front.size());
    std::iota(members.begin(), members.end(), 0);
  }
  const std::size_t objective_count = drop_delay ? 2 : 3;

  std::array<double, 3> lo{}, hi{};
  lo.fill(std::numeric_limits<double>::infinity());
  hi.fill(-std::numeric_limits<double>::infinity());
  for (std::size_t i : members) {
    const auto obj = front[i].objectives();
    for (std::size_t k = 0; k < objective_count; ++k) {
      lo[k] = std::min(lo[k], obj[k]);
      hi[k] = std::max(hi[k], obj[k]);
    }
  }

  const auto distance = [&](std::size_t i) {
    const auto obj = front[i].objectives();
    double sum = 0.0;
    for (std::size_t k = 0; k < objective_count; ++k) {
      const double normalized = hi[k] == lo[k] ? 0.0 : (obj[k] - lo[k]) / (hi[k] - lo[k]);
      sum += normalized * normalized;
    }
    return std::sqrt(sum);
  };

  std::size_t best = members.front();
  double best_distance = distance(best);
  for (std::size_t j = 1; j < members.size(); ++j) {
    const std::size_t i = members[j];
    const double d = distance(i);
    const auto& a = front[i];
    const auto& b = front[best];
    const bool better =
        d < best_distance ||
        (d == best_distance &&
         std::tie(a.util, a.cost, a.delay) < std::tie(b.util, b.cost, b.delay));
    if (better) {
      best = i;
      best_distance = d;
    }
  }
  return best;
}

}  // namespace dices
