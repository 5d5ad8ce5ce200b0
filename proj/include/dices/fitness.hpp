#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "dices/network.hpp"

namespace dices {

/// (fitUtil, fitCost, fitDelay). delay carries the UNDEF sentinel when
/// util exceeds the threshold the triple was evaluated against.
struct FitnessTriple {
  double util = 0.0;
  std::int64_t cost = 0;
  std::int64_t delay = 0;

  std::array<double, 3> objectives() const noexcept {
    return {util, static_cast<double>(cost), static_cast<double>(delay)};
  }
  friend bool operator==(const FitnessTriple&, const FitnessTriple&) = default;
};

/// |F| * sum of l(e) over E, plus one: larger than any feasible delay sum.
std::int64_t undefined_delay(const Network& network, std::size_t flow_count) noexcept;

/// Evaluates candidates against a fixed baseline F_i. Holds references; the
/// network and baseline must outlive it.
class FitnessEvaluator {
 public:
  /// Throws std::invalid_argument unless 0 < threshold <= 1.
  FitnessEvaluator(const Network& network, const FlowSet& baseline, double threshold);

  const Network& network() const noexcept { return *network_; }
  const FlowSet& baseline() const noexcept { return *baseline_; }
  double threshold() const noexcept { return threshold_; }
  std::int64_t undef() const noexcept { return undef_; }

  /// Throws std::invalid_argument if the candidate serves other requests.
  FitnessTriple operator()(const FlowSet& candidate) const;

  /// Same, reusing a caller-owned per-link buffer of size link_count().
  FitnessTriple evaluate(const FlowSet& candidate, std::span<std::int64_t> load_kbps) const;

 private:
  const Network* network_;
  const FlowSet* baseline_;
  double threshold_;
  std::int64_t undef_;
};

/// Convenience wrapper for a single evaluation.
FitnessTriple evaluate(const Network& network, const FlowSet& candidate, const FlowSet& baseline,
                       double threshold);

/// Reference kernel: one candidate after another.
std::vector<FitnessTriple> evaluate_population_serial(const FitnessEvaluator& evaluator,
                                                      std::span<const FlowSet> population);

/// OpenMP kernel; element-wise identical to the serial kernel.
std::vector<FitnessTriple> evaluate_population(const FitnessEvaluator& evaluator,
                                               std::span<const FlowSet> population);

}  // namespace dices
