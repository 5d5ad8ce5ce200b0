#pragma once

// Brute-force reference implementations. None of these call into the library
// algorithms they are used to check; they only read its data types.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "dices/fitness.hpp"
#include "dices/network.hpp"
#include "dices/paths.hpp"

namespace oracle {

using dices::FitnessTriple;
using dices::Flow;
using dices::FlowSet;
using dices::LinkId;
using dices::Network;
using dices::Path;
using dices::SwitchId;

/// Every simple path from s to t, found by depth-first search over the full
/// link list.
inline std::vector<Path> simple_paths(const Network& net, SwitchId s, SwitchId t) {
  std::vector<Path> out;
  std::vector<bool> seen(net.switch_count(), false);
  Path current;
  std::function<void(SwitchId)> visit = [&](SwitchId at) {
    if (at == t) {
      out.push_back(current);
      return;
    }
    seen[dices::index(at)] = true;
    for (std::size_t i = 0; i < net.link_count(); ++i) {
      const auto& link = net.links()[i];
      if (link.from != at || seen[dices::index(link.to)]) continue;
      current.push_back(LinkId{static_cast<std::uint32_t>(i)});
      visit(link.to);
      current.pop_back();
    }
    seen[dices::index(at)] = false;
  };
  visit(s);
  return out;
}

inline double path_cost(const Path& path, std::span<const double> weights) {
  double sum = 0.0;
  for (LinkId e : path) sum += weights[dices::index(e)];
  return sum;
}

/// Longest common subsequence by the full (n+1) x (m+1) table.
inline std::size_t lcs_length(std::span<const LinkId> a, std::span<const LinkId> b) {
  std::vector<std::vector<std::size_t>> table(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      table[i][j] = a[i - 1] == b[j - 1] ? table[i - 1][j - 1] + 1
                                         : std::max(table[i - 1][j], table[i][j - 1]);
    }
  }
  return table[a.size()][b.size()];
}

inline std::size_t edit_distance(std::span<const LinkId> a, std::span<const LinkId> b) {
  return a.size() + b.size() - 2 * lcs_length(a, b);
}

inline bool dominates(const FitnessTriple& a, const FitnessTriple& b) {
  const auto x = a.objectives();
  const auto y = b.objectives();
  bool strictly = false;
  for (std::size_t k = 0; k < 3; ++k) {
    if (x[k] > y[k]) return false;
    if (x[k] < y[k]) strictly = true;
  }
  return strictly;
}

/// Fronts by repeated peeling: each round keeps the members no remaining
/// member dominates.
inline std::vector<std::vector<std::size_t>> pareto_layers(std::span<const FitnessTriple> f) {
  std::vector<std::vector<std::size_t>> layers;
  std::vector<std::size_t> remaining(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) remaining[i] = i;
  while (!remaining.empty()) {
    std::vector<std::size_t> layer, rest;
    for (std::size_t i : remaining) {
      bool dominated = false;
      for (std::size_t j : remaining) dominated = dominated || oracle::dominates(f[j], f[i]);
      (dominated ? rest : layer).push_back(i);
    }
    layers.push_back(layer);
    remaining = rest;
  }
  return layers;
}

/// Max-min fair rates by water level bisection: every unfrozen flow gets
/// min(demand, level); the level is raised until some link or demand binds,
/// the bound flows are frozen, and the process repeats.
inline std::vector<double> water_fill(std::span<const double> capacity,
                                      std::span<const std::vector<std::size_t>> paths,
                                      std::span<const double> demand) {
  const std::size_t n = demand.size();
  std::vector<double> rate(n, 0.0);
  std::vector<bool> frozen(n, false);
  for (std::size_t f = 0; f < n; ++f) {
    if (paths[f].empty()) {
      rate[f] = demand[f];
      frozen[f] = true;
    }
  }
  const auto load_at = [&](double level, std::size_t link) {
    double sum = 0.0;
    for (std::size_t f = 0; f < n; ++f) {
      if (std::find(paths[f].begin(), paths[f].end(), link) == paths[f].end()) continue;
      sum += frozen[f] ? rate[f] : std::min(demand[f], level);
    }
    return sum;
  };
  const auto feasible = [&](double level) {
    for (std::size_t e = 0; e < capacity.size(); ++e) {
      if (load_at(level, e) > capacity[e]) return false;
    }
    return true;
  };
  constexpr double tol = 1e-9;
  while (std::find(frozen.begin(), frozen.end(), false) != frozen.end()) {
    double hi = 0.0;
    for (std::size_t f = 0; f < n; ++f) {
      if (!frozen[f]) hi = std::max(hi, demand[f]);
    }
    double level = hi;
    if (!feasible(hi)) {
      double lo = 0.0;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
      }
      level = lo;
    }
    std::vector<bool> tight(capacity.size(), false);
    for (std::size_t e = 0; e < capacity.size(); ++e) {
      tight[e] = capacity[e] - load_at(level, e) <= tol * std::max(1.0, capacity[e]);
    }
    bool progressed = false;
    for (std::size_t f = 0; f < n; ++f) {
      if (frozen[f]) continue;
      bool bound = demand[f] <= level + tol;
      for (std::size_t e : paths[f]) bound = bound || tight[e];
      if (bound) {
        rate[f] = std::min(demand[f], level);
        frozen[f] = true;
        progressed = true;
      }
    }
    if (!progressed) break;
  }
  return rate;
}

/// (util, cost, delay) straight from the definitions: per-link sums by
/// scanning every flow, cost by the table LCS, delay over the set of used
/// links.
inline FitnessTriple fitness(const Network& net, const FlowSet& candidate, const FlowSet& baseline,
                             double threshold) {
  FitnessTriple out;
  std::set<LinkId> used;
  for (std::size_t e = 0; e < net.link_count(); ++e) {
    const LinkId id{static_cast<std::uint32_t>(e)};
    std::int64_t kbps = 0;
    for (const Flow& f : candidate) {
      if (std::find(f.path.begin(), f.path.end(), id) != f.path.end()) {
        kbps += f.request->rate_kbps;
        used.insert(id);
      }
    }
    out.util = std::max(out.util, static_cast<double>(kbps) /
                                      (static_cast<double>(net.links()[e].bandwidth_mbps) * 1000.0));
  }
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    out.cost += static_cast<std::int64_t>(oracle::edit_distance(baseline[i].path, candidate[i].path));
  }
  if (out.util > threshold) {
    std::int64_t total = 0;
    for (const auto& link : net.links()) total += link.delay_ms;
    out.delay = static_cast<std::int64_t>(candidate.size()) * total + 1;
  } else {
    for (LinkId e : used) out.delay += net.link(e).delay_ms;
  }
  return out;
}

/// Knee by min-max normalized distance to the origin. Members above the
/// threshold are left out unless all are, in which case delay is ignored.
/// Ties go to the lexicographically smaller triple.
inline FitnessTriple knee(std::span<const FitnessTriple> front, double threshold) {
  std::vector<FitnessTriple> pool;
  for (const auto& f : front) {
    if (f.util <= threshold) pool.push_back(f);
  }
  const bool two_objectives = pool.empty();
  if (two_objectives) pool.assign(front.begin(), front.end());
  const std::size_t dims = two_objectives ? 2 : 3;
  std::array<double, 3> lo{}, hi{};
  for (std::size_t k = 0; k < dims; ++k) {
    lo[k] = hi[k] = pool.front().objectives()[k];
    for (const auto& f : pool) {
      lo[k] = std::min(lo[k], f.objectives()[k]);
      hi[k] = std::max(hi[k], f.objectives()[k]);
    }
  }
  const auto key = [&](const FitnessTriple& f) {
    double sq = 0.0;
    for (std::size_t k = 0; k < dims; ++k) {
      const double x = hi[k] > lo[k] ? (f.objectives()[k] - lo[k]) / (hi[k] - lo[k]) : 0.0;
      sq += x * x;
    }
    return std::make_tuple(std::sqrt(sq), f.util, f.cost, f.delay);
  };
  return *std::min_element(pool.begin(), pool.end(),
                           [&](const FitnessTriple& a, const FitnessTriple& b) { return key(a) < key(b); });
}

/// Every flow set that picks one catalog path per flow of the incumbent.
inline std::vector<FlowSet> all_flow_sets(const FlowSet& incumbent, const dices::PathCatalog& catalog) {
  std::vector<FlowSet> out{incumbent};
  for (std::size_t i = 0; i < incumbent.size(); ++i) {
    const auto& req = *incumbent[i].request;
    std::vector<FlowSet> next;
    for (const FlowSet& partial : out) {
      for (const Path& p : catalog.paths(req.source, req.terminal)) {
        FlowSet copy = partial;
        copy.set_path(i, p);
        next.push_back(std::move(copy));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Fitness values of the non-dominated members, deduplicated.
inline std::vector<FitnessTriple> true_front(std::span<const FitnessTriple> all) {
  std::vector<FitnessTriple> out;
  for (const auto& a : all) {
    bool dominated = false;
    for (const auto& b : all) dominated = dominated || oracle::dominates(b, a);
    if (!dominated && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return out;
}

/// Exact dominated volume of a minimization point set below `ref`, by slicing
/// along the first objective and sweeping the other two.
inline double hypervolume(std::vector<std::array<double, 3>> points, const std::array<double, 3>& ref) {
  std::erase_if(points, [&](const auto& p) { return p[0] >= ref[0] || p[1] >= ref[1] || p[2] >= ref[2]; });
  std::sort(points.begin(), points.end());
  const auto area = [&](std::size_t count) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < count; ++i) pts.emplace_back(points[i][1], points[i][2]);
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    double best_z = ref[2];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      best_z = std::min(best_z, pts[i].second);
      const double next_y = i + 1 < pts.size() ? pts[i + 1].first : ref[1];
      sum += (next_y - pts[i].first) * (ref[2] - best_z);
    }
    return sum;
  };
  double volume = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double next_x = i + 1 < points.size() ? points[i + 1][0] : ref[0];
    volume += (next_x - points[i][0]) * area(i + 1);
  }
  return volume;
}

}  // namespace oracle
