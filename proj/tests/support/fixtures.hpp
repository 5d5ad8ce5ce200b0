#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dices/network.hpp"
#include "dices/paths.hpp"

namespace fixture {

using namespace dices;

/// Bidirectional links given as {a, b, bandwidth, delay}.
struct Edge {
  std::string a;
  std::string b;
  std::int64_t bandwidth = 100;
  std::int64_t delay = 25;
};

inline Network undirected(std::vector<std::string> switches, const std::vector<Edge>& edges) {
  std::vector<LinkSpec> links;
  for (const auto& e : edges) {
    links.push_back({e.a, e.b, e.bandwidth, e.delay, ""});
    links.push_back({e.b, e.a, e.bandwidth, e.delay, ""});
  }
  return Network(std::move(switches), std::move(links));
}

inline Network directed(std::vector<std::string> switches, const std::vector<Edge>& edges) {
  std::vector<LinkSpec> links;
  for (const auto& e : edges) links.push_back({e.a, e.b, e.bandwidth, e.delay, ""});
  return Network(std::move(switches), std::move(links));
}

inline RequestPtr request(const Network& net, RequestId id, const std::string& s, const std::string& t,
                          std::int64_t kbps, Protocol protocol = Protocol::inelastic,
                          const std::string& type = "t") {
  Request r;
  r.id = id;
  r.source = net.require_switch(s);
  r.terminal = net.require_switch(t);
  r.rate_kbps = kbps;
  r.protocol = protocol;
  r.traffic_type = type;
  return make_request(r);
}

/// Path through the named switches.
inline Path path(const Network& net, const std::vector<std::string>& hops) {
  Path p;
  for (std::size_t i = 0; i + 1 < hops.size(); ++i) {
    p.push_back(*net.find_link(net.require_switch(hops[i]), net.require_switch(hops[i + 1])));
  }
  return p;
}

inline Flow flow(const Network& net, RequestId id, const std::vector<std::string>& hops, std::int64_t kbps,
                 Protocol protocol = Protocol::inelastic) {
  return Flow{request(net, id, hops.front(), hops.back(), kbps, protocol), path(net, hops)};
}

/// Connected random bidirectional graph: a ring plus chords with probability p.
inline Network random_network(std::mt19937_64& rng, std::size_t n, double p,
                              std::vector<std::int64_t> bandwidths = {10, 20, 50, 100}) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick_bw(0, bandwidths.size() - 1);
  std::uniform_int_distribution<std::int64_t> pick_delay(1, 50);
  std::bernoulli_distribution chord(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1) || chord(rng)) {
        edges.push_back({names[i], names[j], bandwidths[pick_bw(rng)], pick_delay(rng)});
      }
    }
  }
  return undirected(names, edges);
}

/// Three requests on a random 5-switch network with at most four catalog paths
/// per pair; the incumbent uses each pair's first catalog path.
struct TinyInstance {
  Network network;
  PathCatalog catalog;
  FlowSet incumbent;
};

inline TinyInstance tiny_instance(std::mt19937_64& rng) {
  Network net = random_network(rng, 5, 0.4);
  const std::size_t k = 2 + rng() % 3;
  std::uniform_int_distribution<std::int64_t> rate(5000, 60000);
  std::vector<std::pair<SwitchId, SwitchId>> pairs;
  std::vector<RequestPtr> requests;
  for (RequestId id = 1; id <= 3; ++id) {
    const std::uint32_t s = rng() % 5;
    const std::uint32_t t = (s + 1 + rng() % 4) % 5;
    pairs.emplace_back(SwitchId{s}, SwitchId{t});
    requests.push_back(request(net, id, net.switch_name(SwitchId{s}), net.switch_name(SwitchId{t}), rate(rng)));
  }
  PathCatalog catalog = build_catalog(net, k, pairs);
  std::vector<Flow> flows;
  for (const auto& r : requests) flows.push_back(Flow{r, catalog.paths(r->source, r->terminal).front()});
  FlowSet incumbent(flows);
  return TinyInstance{std::move(net), std::move(catalog), std::move(incumbent)};
}

inline SwitchId sw(const Network& net, const std::string& name) { return net.require_switch(name); }

}  // namespace fixture
