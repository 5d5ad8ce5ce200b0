#include "dices/experiments.hpp"

#include "dices/builtins.hpp"

namespace dices {

std::vector<RunOutput> run_repeated(const Network& network, const TrafficScenario& scenario,
                                    const RunConfig& config, std::uint64_t seed, std::size_t repeat) {
  std::vector<RunOutput> out;
  out.reserve(repeat);
  for (std::size_t i = 0; i < repeat; ++i) {
    RunConfig run_config = config;
    run_config.control.search.seed = seed + i;
    out.push_back(RunOutput{i, seed + i, run_scenario(network, scenario, run_config)});
  }
  return out;
}

std::vector<Exp2Sample> run_exp2(Exp2Study study, std::span<const std::size_t> parameters, std::size_t runs,
                                 const RunConfig& config, std::uint64_t seed) {
  std::vector<Exp2Sample> samples;
  if (!parameters.empty()) {
    // discarded warm-up: heap growth and cold caches inflate the first timings
    const Network network = complete_topology(study == Exp2Study::size ? parameters.front() : 5);
    const std::size_t requests = study == Exp2Study::size ? 5 : parameters.front();
    run_repeated(network, exp2_scenario(network, requests), config, seed, 1);
  }
  for (std::size_t p : parameters) {
    const Network network = complete_topology(study == Exp2Study::size ? p : 5);
    const std::size_t requests = study == Exp2Study::size ? 5 : p;
    const TrafficScenario scenario = exp2_scenario(network, requests);
    for (const auto& run : run_repeated(network, scenario, config, seed, runs)) {
      double ms = 0.0;
      for (const auto& t : run.result.ticks) ms += t.search_ms;
      samples.push_back(Exp2Sample{study, p, network.link_count(), requests, run.run, ms});
    }
  }
  return samples;
}

LinearFit fit_exp2(std::span<const Exp2Sample> samples) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& s : samples) {
    x.push_back(static_cast<double>(s.study == Exp2Study::size ? s.links : s.requests));
    y.push_back(s.compute_ms);
  }
  return fit_linear(x, y);
}

}  // namespace dices
