#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dices/report.hpp"
#include "dices/runner.hpp"

namespace dices {

/// `repeat` isolated runs; run i uses search seed `seed + i`.
std::vector<RunOutput> run_repeated(const Network& network, const TrafficScenario& scenario,
                                    const RunConfig& config, std::uint64_t seed, std::size_t repeat);

enum class Exp2Study { size, requests };

struct Exp2Sample {
  Exp2Study study = Exp2Study::size;
  std::size_t parameter = 0;  // switches or requests
  std::size_t links = 0;
  std::size_t requests = 0;
  std::size_t run = 0;
  double compute_ms = 0.0;    // search + weight adjustment, summed over ticks
};

/// Size study: complete graphs with `parameter` switches and 5 requests.
/// Request study: complete5 with `parameter` requests. 150 Mbps in total.
std::vector<Exp2Sample> run_exp2(Exp2Study study, std::span<const std::size_t> parameters, std::size_t runs,
                                 const RunConfig& config, std::uint64_t seed);

/// Regression of compute_ms against link count (size) or request count.
LinearFit fit_exp2(std::span<const Exp2Sample> samples);

}  // namespace dices
