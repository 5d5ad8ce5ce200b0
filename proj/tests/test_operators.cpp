#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "dices/builtins.hpp"
#include "dices/operators.hpp"
#include "fixtures.hpp"

using namespace dices;

namespace {

FlowSet direct_flows(const Network& net, std::size_t n) {
  std::vector<Flow> flows;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string s = net.switch_name(SwitchId{static_cast<std::uint32_t>(i % net.switch_count())});
    const std::string t = net.switch_name(SwitchId{static_cast<std::uint32_t>((i + 1) % net.switch_count())});
    flows.push_back(fixture::flow(net, i + 1, {s, t}, 1000));
  }
  return FlowSet(flows);
}

bool feasible(const Network& net, const FlowSet& f) {
  for (const Flow& flow : f) {
    if (validate_flow(flow, net)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("initial population") {
  const Network k5 = complete_topology(5);
  const PathCatalog cat = build_catalog(k5, 8);
  const FlowSet inc = direct_flows(k5, 4);
  Rng rng(1);
  const auto one = initial_population(inc, 1, 0.5, cat, rng);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == inc);

  const auto hundred = initial_population(inc, 100, 0.5, cat, rng);
  REQUIRE(hundred.size() == 100);
  CHECK(hundred[0] == inc);
  for (const auto& f : hundred) {
    CHECK(f.same_requests(inc));
    CHECK(feasible(k5, f));
  }

  const auto line = fixture::undirected({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}});
  const PathCatalog line_cat = build_catalog(line, 8);
  const FlowSet line_inc({fixture::flow(line, 1, {"A", "B", "C"}, 1000), fixture::flow(line, 2, {"C", "B"}, 1000)});
  for (const auto& f : initial_population(line_inc, 20, 0.9, line_cat, rng)) CHECK(f == line_inc);
}

TEST_CASE("mutation") {
  const Network k5 = complete_topology(5);
  const PathCatalog cat = build_catalog(k5, 8);
  const FlowSet inc = direct_flows(k5, 4);
  Rng rng(2);
  CHECK(mutate(inc, 0.0, cat, rng) == inc);
  const FlowSet all = mutate(inc, 1.0, cat, rng);
  for (std::size_t i = 0; i < inc.size(); ++i) CHECK(all[i].path != inc[i].path);

  double replaced = 0.0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const FlowSet m = mutate(inc, 0.5, cat, rng);
    for (std::size_t i = 0; i < inc.size(); ++i) replaced += m[i].path != inc[i].path;
  }
  CHECK(std::abs(replaced / trials - 2.0) <= 0.05);
}

TEST_CASE("crossover") {
  const Network k5 = complete_topology(5);
  const PathCatalog cat = build_catalog(k5, 8);
  const FlowSet a = direct_flows(k5, 2);
  Rng rng(3);
  const auto [c1, c2] = crossover(a, a, rng);
  CHECK(c1 == a);
  CHECK(c2 == a);

  const FlowSet b = mutate(a, 1.0, cat, rng);
  const auto [x, y] = crossover_at(a, b, 1);
  CHECK(x[0].path == a[0].path);
  CHECK(x[1].path == b[1].path);
  CHECK(y[0].path == b[0].path);
  CHECK(y[1].path == a[1].path);
  const auto [r1, r2] = crossover(a, b, rng);
  CHECK(r1 == x);
  CHECK(r2 == y);

  const FlowSet single = direct_flows(k5, 1);
  const FlowSet other = mutate(single, 1.0, cat, rng);
  const auto [s1, s2] = crossover(single, other, rng);
  CHECK(s1 == single);
  CHECK(s2 == other);

  CHECK_THROWS_AS(crossover(a, direct_flows(k5, 3), rng), std::invalid_argument);
  CHECK_THROWS_AS(crossover_at(a, b, 0), std::invalid_argument);
  CHECK_THROWS_AS(crossover_at(a, b, 2), std::invalid_argument);
}

TEST_CASE("crossover children stay feasible") {
  std::mt19937_64 gen(10);
  const Network net = fixture::random_network(gen, 7, 0.4);
  const PathCatalog cat = build_catalog(net, 6);
  std::vector<Flow> flows;
  for (RequestId id = 1; id <= 6; ++id) {
    const std::uint32_t s = gen() % 7;
    const std::uint32_t t = (s + 1 + gen() % 6) % 7;
    flows.push_back(Flow{fixture::request(net, id, net.switch_name(SwitchId{s}), net.switch_name(SwitchId{t}), 1000),
                         cat.paths(SwitchId{s}, SwitchId{t})[0]});
  }
  const FlowSet inc(flows);
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const FlowSet p = mutate(inc, 0.5, cat, rng);
    const FlowSet q = mutate(inc, 0.5, cat, rng);
    const auto [c, d] = crossover(p, q, rng);
    CHECK(c.same_requests(inc));
    CHECK(d.same_requests(inc));
    CHECK(feasible(net, c));
    CHECK(feasible(net, d));
  }
}
