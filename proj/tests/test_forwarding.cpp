#include <doctest.h>

#include <stdexcept>

#include "dices/builtins.hpp"
#include "dices/forwarding.hpp"
#include "dices/weights.hpp"
#include "fixtures.hpp"

using namespace dices;
using fixture::sw;

TEST_CASE("RFWD takes the direct link on a complete graph") {
  const Network k5 = complete_topology(5);
  const ForwardingPolicy rfwd(PolicyKind::rfwd_unit, k5);
  RequestId id = 1;
  for (std::uint32_t s = 0; s < 5; ++s) {
    for (std::uint32_t t = 0; t < 5; ++t) {
      if (s == t) continue;
      Request r;
      r.id = id++;
      r.source = SwitchId{s};
      r.terminal = SwitchId{t};
      r.rate_kbps = 1000;
      const Flow f = forward(k5, make_request(r), rfwd);
      REQUIRE(f.path.size() == 1);
      CHECK(f.path[0] == *k5.find_link(SwitchId{s}, SwitchId{t}));
    }
  }
}

TEST_CASE("OSPF weights follow inverse bandwidth") {
  const auto net = fixture::undirected({"A", "B", "C"}, {{"A", "B", 100, 1}, {"B", "C", 100, 1}, {"A", "C", 10, 1}});
  const WeightVector w = ospf_weights(net);
  CHECK(w[*net.find_link("A-B")] == 1.0);
  CHECK(w[*net.find_link("A-C")] == 10.0);
  const ForwardingPolicy ospf(PolicyKind::ospf_inverse_bw, net);
  const Flow f = forward(net, fixture::request(net, 1, "A", "C", 1000), ospf);
  CHECK(f.path == fixture::path(net, {"A", "B", "C"}));

  const auto big = fixture::undirected({"A", "B"}, {{"A", "B", 1000, 1}});
  const auto tiny = fixture::undirected({"A", "B", "C"}, {{"A", "B", 1000, 1}, {"B", "C", 3, 1}});
  CHECK(ospf_weights(big)[LinkId{0}] == 1.0);
  CHECK(ospf_weights(tiny)[*tiny.find_link("B-C")] == 333.0);
}

TEST_CASE("DICES routes around a link whose weight was raised") {
  const auto net = fixture::undirected({"A", "B", "C"}, {{"A", "B", 100, 25}, {"B", "C", 100, 25}, {"A", "C", 100, 25}});
  ForwardingPolicy dices_policy(PolicyKind::dices_dynamic, net);
  const auto req = fixture::request(net, 9, "A", "C", 1000);
  CHECK(forward(net, req, dices_policy).path.size() == 1);

  // 70 Mbps on A-C at u = 0.8 gives 25 * 0.8 / 0.1 = 200, above the 2-hop cost 2.
  const FlowSet loaded({fixture::flow(net, 1, {"A", "C"}, 70000)});
  const WeightVector w = adjust_weights(net, loaded, dices_policy.weights(), WeightControlConfig{});
  CHECK(w[*net.find_link("A-C")] == doctest::Approx(200.0));
  dices_policy.install_weights(w);
  CHECK(forward(net, req, dices_policy).path == fixture::path(net, {"A", "B", "C"}));
}

TEST_CASE("baseline policies reject new weights") {
  const Network k5 = complete_topology(5);
  ForwardingPolicy rfwd(PolicyKind::rfwd_unit, k5);
  ForwardingPolicy ospf(PolicyKind::ospf_inverse_bw, k5);
  CHECK_FALSE(rfwd.adaptive());
  CHECK_THROWS_AS(rfwd.install_weights(WeightVector::uniform(k5.link_count(), 2.0)), std::logic_error);
  CHECK_THROWS_AS(ospf.install_weights(WeightVector::uniform(k5.link_count(), 2.0)), std::logic_error);
  for (double w : rfwd.weights().values()) CHECK(w == 1.0);
}

TEST_CASE("forward propagates unreachability") {
  const auto net = fixture::directed({"A", "B"}, {{"A", "B"}});
  const ForwardingPolicy rfwd(PolicyKind::rfwd_unit, net);
  CHECK_THROWS_AS(forward(net, fixture::request(net, 1, "B", "A", 10), rfwd), UnreachableError);
}

TEST_CASE("policy names") {
  CHECK(parse_policy("dices") == PolicyKind::dices_dynamic);
  CHECK(parse_policy("rfwd") == PolicyKind::rfwd_unit);
  CHECK(parse_policy("ospf") == PolicyKind::ospf_inverse_bw);
  CHECK(parse_policy(to_string(PolicyKind::ospf_inverse_bw)) == PolicyKind::ospf_inverse_bw);
  CHECK_THROWS_AS(parse_policy("ecmp"), std::invalid_argument);
}
