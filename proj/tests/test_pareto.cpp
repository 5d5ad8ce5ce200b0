#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "dices/pareto.hpp"
#include "oracles.hpp"

using namespace dices;

namespace {

FitnessTriple ft(double util, std::int64_t cost, std::int64_t delay) { return FitnessTriple{util, cost, delay}; }

std::vector<FitnessTriple> random_population(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> small(0, 6);
  std::vector<FitnessTriple> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(ft(small(rng) / 8.0, small(rng), small(rng) * 25));
  return out;
}

}  // namespace

TEST_CASE("dominance") {
  CHECK(dominates(ft(0.1, 1, 1), ft(0.2, 1, 1)));
  CHECK_FALSE(dominates(ft(0.1, 1, 1), ft(0.1, 1, 1)));
  CHECK_FALSE(dominates(ft(0.1, 2, 1), ft(0.2, 1, 1)));
}

TEST_CASE("two-objective example fronts") {
  const std::vector<FitnessTriple> f{ft(1, 1, 0), ft(1, 2, 0), ft(2, 1, 0), ft(2, 2, 0)};
  const auto fronts = non_dominated_sort(f);
  REQUIRE(fronts.size() == 3);
  CHECK(fronts[0] == std::vector<std::size_t>{0});
  CHECK(fronts[1] == std::vector<std::size_t>{1, 2});
  CHECK(fronts[2] == std::vector<std::size_t>{3});

  const std::vector<FitnessTriple> same(5, ft(0.5, 3, 3));
  const auto one = non_dominated_sort(same);
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 5);
  CHECK(non_dominated_sort(std::vector<FitnessTriple>{}).empty());
}

TEST_CASE("non-dominated sort equals the pairwise oracle") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_population(rng, 50);
    CHECK(non_dominated_sort(f) == oracle::pareto_layers(f));
  }
}

TEST_CASE("crowding distance") {
  const std::vector<FitnessTriple> two{ft(0.1, 1, 0), ft(0.2, 0, 0)};
  const std::vector<std::size_t> both{0, 1};
  for (double d : crowding_distance(two, both)) CHECK(std::isinf(d));

  const std::vector<FitnessTriple> line{ft(0.0, 2, 7), ft(0.5, 1, 7), ft(1.0, 0, 7)};
  const std::vector<std::size_t> all{0, 1, 2};
  const auto d = crowding_distance(line, all);
  CHECK(std::isinf(d[0]));
  CHECK(std::isinf(d[2]));
  CHECK(d[1] == doctest::Approx(2.0));

  const std::vector<FitnessTriple> four{ft(0.0, 3, 7), ft(0.2, 2, 7), ft(0.6, 1, 7), ft(1.0, 0, 7)};
  const std::vector<std::size_t> idx{0, 1, 2, 3};
  const auto d4 = crowding_distance(four, idx);
  CHECK(d4[1] == doctest::Approx(0.6 + 2.0 / 3.0));
  CHECK(d4[2] == doctest::Approx(0.8 + 2.0 / 3.0));
}

TEST_CASE("knee selection") {
  const std::vector<FitnessTriple> single{ft(0.3, 4, 10)};
  CHECK(knee_index(single, 0.8) == 0);

  const std::vector<FitnessTriple> tri{ft(0.0, 2, 5), ft(0.5, 1, 5), ft(1.0, 0, 5)};
  CHECK(knee_index(tri, 1.0) == 1);

  // All above the threshold: delay is ignored, (util, cost) decides.
  const std::vector<FitnessTriple> undef{ft(0.9, 0, 99), ft(0.95, 0, 1), ft(1.2, 3, 99)};
  CHECK(knee_index(undef, 0.8) == 0);

  // Members above the threshold are left out when any member is within it.
  const std::vector<FitnessTriple> mixed{ft(0.9, 0, 99), ft(0.7, 6, 50), ft(0.6, 8, 40)};
  CHECK(knee_index(mixed, 0.8) == 2);

  CHECK_THROWS_AS(knee_index(std::vector<FitnessTriple>{}, 0.8), std::invalid_argument);
}

TEST_CASE("knee selection matches the oracle on random fronts") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    auto pop = random_population(rng, 30);
    for (auto& f : pop) f.util *= 1.6;
    const auto fronts = non_dominated_sort(pop);
    std::vector<FitnessTriple> front;
    for (std::size_t i : fronts[0]) front.push_back(pop[i]);
    CHECK(front[knee_index(front, 0.8)] == oracle::knee(front, 0.8));
  }
}
