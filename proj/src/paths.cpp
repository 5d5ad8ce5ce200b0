#include "dices/paths.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace dices {

double path_weight(std::span<const LinkId> path, const WeightVector& weights) {
  double sum = 0.0;
  for (LinkId e : path) sum += weights[e];
  return sum;
}

std::int64_t path_delay(const Network& network, std::span<const LinkId> path) {
  std::int64_t sum = 0;
  for (LinkId e : path) sum += network.link(e).delay_ms;
  return sum;
}

namespace {

// Dijkstra over labels (cost, [hops], link sequence). The label order is
// preserved under extension by a common link, which makes the search exact
// for the full tie-breaking order and not only for the cost.
struct Label {
  double cost = 0.0;
  std::size_t hops = 0;
  Path path;
};

struct LabelOrder {
  bool use_hops = true;
  bool operator()(const Label& a, const Label& b) const {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (use_hops && a.hops != b.hops) return a.hops < b.hops;
    return a.path < b.path;
  }
};

struct SearchBans {
  std::span<const char> switches;  // banned switches (may be empty)
  std::span<const char> links;     // banned links (may be empty)
};

std::optional<Path> label_dijkstra(const Network& network, SwitchId source, SwitchId terminal,
                                   std::span<const double> cost, bool use_hops,
                                   const SearchBans& bans = {}) {
  const LabelOrder less{use_hops};
  const auto greater = [&less](const std::pair<Label, SwitchId>& a,
                               const std::pair<Label, SwitchId>& b) {
    return less(b.first, a.first);
  };
  std::priority_queue<std::pair<Label, SwitchId>, std::vector<std::pair<Label, SwitchId>>,
                      decltype(greater)>
      queue(greater);

  std::vector<std::optional<Label>> best(network.switch_count());
  std::vector<char> done(network.switch_count(), 0);
  best[index(source)] = Label{};
  queue.emplace(Label{}, source);

  while (!queue.empty()) {
    auto [label, at] = queue.top();
    queue.pop();
    if (done[index(at)]) continue;
    done[index(at)] = 1;
    if (at == terminal) return std::move(label.path);

    for (LinkId e : network.out_links(at)) {
      if (!bans.links.empty() && bans.links[index(e)]) continue;
      const SwitchId next = network.link(e).to;
      if (done[index(next)]) continue;
      if (!bans.switches.empty() && bans.switches[index(next)]) continue;
      Label extended{label.cost + cost[index(e)], label.hops + 1, label.path};
      extended.path.push_back(e);
      auto& slot = best[index(next)];
      if (!slot || less(extended, *slot)) {
        slot = extended;
        queue.emplace(std::move(extended), next);
      }
    }
  }
  return std::nullopt;
}

void require_pair(const Network& network, SwitchId source, SwitchId terminal) {
  if (index(source) >= network.switch_count() || index(terminal) >= network.switch_count()) {
    throw std::invalid_argument("unknown switch");
  }
  if (source == terminal) throw std::invalid_argument("source and terminal coincide");
}

std::vector<double> delay_costs(const Network& network) {
  std::vector<double> cost(network.link_count());
  for (std::size_t e = 0; e < cost.size(); ++e) {
    cost[e] = static_cast<double>(network.links()[e].delay_ms);
  }
  return cost;
}

struct DelayOrder {
  const Network* network;
  bool operator()(const Path& a, const Path& b) const {
    const auto da = path_delay(*network, a);
    const auto db = path_delay(*network, b);
    if (da != db) return da < db;
    return a < b;
  }
};

std::vector<Path> yen(const Network& network, SwitchId source, SwitchId terminal, std::size_t k,
                      std::span<const double> cost) {
  std::vector<Path> accepted;
  auto first = label_dijkstra(network, source, terminal, cost, false);
  if (!first) return accepted;
  accepted.push_back(std::move(*first));

  std::set<Path, DelayOrder> candidates(DelayOrder{&network});
  std::vector<char> banned_switches(network.switch_count());
  std::vector<char> banned_links(network.link_count());

  while (accepted.size() < k) {
    const Path previous = accepted.back();
    for (std::size_t i = 0; i < previous.size(); ++i) {
      const SwitchId spur = network.link(previous[i]).from;
      std::fill(banned_switches.begin(), banned_switches.end(), 0);
      std::fill(banned_links.begin(), banned_links.end(), 0);
      for (std::size_t j = 0; j < i; ++j) banned_switches[index(network.link(previous[j]).from)] = 1;
      for (const auto& p : accepted) {
        if (p.size() > i && std::equal(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i),
                                       previous.begin())) {
          banned_links[index(p[i])] = 1;
        }
      }
      auto spur_path = label_dijkstra(network, spur, terminal, cost, false,
                                      SearchBans{banned_switches, banned_links});
      if (!spur_path) continue;
      Path total(previous.begin(), previous.begin() + static_cast<std::ptrdiff_t>(i));
      total.insert(total.end(), spur_path->begin(), spur_path->end());
      if (std::find(accepted.begin(), accepted.end(), total) == accepted.end()) {
        candidates.insert(std::move(total));
      }
    }
    if (candidates.empty()) break;
    accepted.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return accepted;
}

}  // namespace

Path shortest_path(const Network& network, SwitchId source, SwitchId terminal,
                   const WeightVector& weights) {
  require_pair(network, source, terminal);
  if (weights.size() != network.link_count()) {
    throw std::invalid_argument("weight vector does not match the network");
  }
  for (double w : weights.values()) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be positive and finite");
  }
  auto path = label_dijkstra(network, source, terminal, weights.values(), true);
  if (!path) {
    throw UnreachableError("no path from " + network.switch_name(source) + " to " +
                           network.switch_name(terminal));
  }
  return std::move(*path);
}

bool PathCatalog::contains(SwitchId source, SwitchId terminal) const {
  return entries_.contains({source, terminal});
}

const std::vector<Path>& PathCatalog::paths(SwitchId source, SwitchId terminal) const {
  const auto it = entries_.find({source, terminal});
  if (it == entries_.end()) throw std::out_of_range("pair not in path catalog");
  return it->second;
}

void PathCatalog::insert(SwitchId source, SwitchId terminal, std::vector<Path> paths) {
  entries_[{source, terminal}] = std::move(paths);
}

std::vector<Path> k_shortest_paths(const Network& network, SwitchId source, SwitchId terminal,
                                   std::size_t k) {
  require_pair(network, source, terminal);
  if (k == 0) throw std::invalid_argument("catalog width K must be >= 1");
  return yen(network, source, terminal, k, delay_costs(network));
}

PathCatalog build_catalog(const Network& network, std::size_t k,
                          std::span<const std::pair<SwitchId, SwitchId>> pairs) {
  if (k == 0) throw std::invalid_argument("catalog width K must be >= 1");
  const auto cost = delay_costs(network);
  PathCatalog catalog(k);
  for (const auto& [s, t] : pairs) {
    require_pair(network, s, t);
    if (catalog.contains(s, t)) continue;
    catalog.insert(s, t, yen(network, s, t, k, cost));
  }
  return catalog;
}

PathCatalog build_catalog(const Network& network, std::size_t k) {
  std::vector<std::pair<SwitchId, SwitchId>> pairs;
  for (std::size_t s = 0; s < network.switch_count(); ++s) {
    for (std::size_t t = 0; t < network.switch_count(); ++t) {
      if (s != t) pairs.emplace_back(static_cast<SwitchId>(s), static_cast<SwitchId>(t));
    }
  }
  return build_catalog(network, k, pairs);
}

Flow alternative_flow(const Flow& flow, const PathCatalog& catalog, Rng& rng) {
  const auto& options = catalog.paths(flow.request->source, flow.request->terminal);
  std::vector<const Path*> others;
  others.reserve(options.size());
  for (const auto& p : options) {
    if (p != flow.path) others.push_back(&p);
  }
  if (others.empty()) return flow;
  std::uniform_int_distribution<std::size_t> pick(0, others.size() - 1);
  return Flow{flow.request, *others[pick(rng)]};
}

std::size_t edit_distance(std::span<const LinkId> a, std::span<const LinkId> b) {
  // Two-row LCS table.
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return a.size() + b.size() - 2 * prev[b.size()];
}

}  // namespace dices
