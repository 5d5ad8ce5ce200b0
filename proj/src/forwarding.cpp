#include "dices/forwarding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dices {

std::string_view to_string(PolicyKind kind) noexcept {
  switch (kind) {
    case PolicyKind::dices_dynamic: return "dices";
    case PolicyKind::rfwd_unit: return "rfwd";
    case PolicyKind::ospf_inverse_bw: return "ospf";
  }
  return "?";
}

PolicyKind parse_policy(std::string_view text) {
  if (text == "dices") return PolicyKind::dices_dynamic;
  if (text == "rfwd") return PolicyKind::rfwd_unit;
  if (text == "ospf") return PolicyKind::ospf_inverse_bw;
  throw std::invalid_argument("unknown policy '" + std::string(text) + "' (expected dices|rfwd|ospf)");
}

WeightVector ospf_weights(const Network& network) {
  const double c_max = static_cast<double>(network.max_bandwidth_mbps());
  std::vector<double> w(network.link_count());
  for (std::size_t e = 0; e < w.size(); ++e) {
    const double ratio = c_max / static_cast<double>(network.links()[e].bandwidth_mbps);
    w[e] = std::max(1.0, std::round(ratio));
  }
  return WeightVector(std::move(w));
}

ForwardingPolicy::ForwardingPolicy(PolicyKind kind, const Network& network)
    : kind_(kind),
      weights_(kind == PolicyKind::ospf_inverse_bw ? ospf_weights(network)
                                                   : WeightVector::uniform(network.link_count())) {}

void ForwardingPolicy::install_weights(WeightVector weights) {
  if (!adaptive()) throw std::logic_error("baseline forwarding policies keep fixed weights");
  if (weights.size() != weights_.size()) throw std::invalid_argument("weight vector size mismatch");
  weights_ = std::move(weights);
}

Flow forward(const Network& network, const RequestPtr& request, const ForwardingPolicy& policy) {
  return Flow{request, shortest_path(network, request->source, request->terminal, policy.weights())};
}

}  // namespace dices
