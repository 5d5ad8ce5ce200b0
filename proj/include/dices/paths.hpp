#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dices/network.hpp"

namespace dices {

using Rng = std::mt19937_64;

/// Link weights w(e), indexed by LinkId.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {}
  static WeightVector uniform(std::size_t link_count, double value = 1.0) {
    return WeightVector(std::vector<double>(link_count, value));
  }

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](LinkId e) const { return weights_.at(index(e)); }
  void set(LinkId e, double w) { weights_.at(index(e)) = w; }
  std::span<const double> values() const noexcept { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

class UnreachableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double path_weight(std::span<const LinkId> path, const WeightVector& weights);
std::int64_t path_delay(const Network& network, std::span<const LinkId> path);

/// Minimum-weight simple path. Ties: fewest hops, then the lexicographically
/// smallest link-id sequence. Throws UnreachableError when no path exists and
/// std::invalid_argument for source == terminal or non-positive weights.
Path shortest_path(const Network& network, SwitchId source, SwitchId terminal,
                   const WeightVector& weights);

/// Up to K simple paths per ordered switch pair, ascending by total delay with
/// ties broken by link-id sequence.
class PathCatalog {
 public:
  PathCatalog() = default;
  explicit PathCatalog(std::size_t k) : k_(k) {}

  std::size_t k() const noexcept { return k_; }
  bool contains(SwitchId source, SwitchId terminal) const;
  /// Throws std::out_of_range if the pair was not catalogued.
  const std::vector<Path>& paths(SwitchId source, SwitchId terminal) const;
  void insert(SwitchId source, SwitchId terminal, std::vector<Path> paths);
  std::size_t pair_count() const noexcept { return entries_.size(); }

 private:
  std::size_t k_ = 0;
  std::map<std::pair<SwitchId, SwitchId>, std::vector<Path>> entries_;
};

/// K delay-shortest loop-free paths from source to terminal (Yen's algorithm).
std::vector<Path> k_shortest_paths(const Network& network, SwitchId source, SwitchId terminal,
                                   std::size_t k);

/// Catalog over every ordered pair. Throws std::invalid_argument for K == 0.
PathCatalog build_catalog(const Network& network, std::size_t k);

/// Catalog over the given pairs only.
PathCatalog build_catalog(const Network& network, std::size_t k,
                          std::span<const std::pair<SwitchId, SwitchId>> pairs);

/// Same request, path drawn uniformly from the catalog minus the current path.
/// Returns the flow unchanged when no other catalog path exists.
Flow alternative_flow(const Flow& flow, const PathCatalog& catalog, Rng& rng);

/// |a| + |b| - 2 LCS(a, b) over link identities.
std::size_t edit_distance(std::span<const LinkId> a, std::span<const LinkId> b);

}  // namespace dices
