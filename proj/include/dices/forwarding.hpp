#pragma once

#include <string_view>

#include "dices/network.hpp"
#include "dices/paths.hpp"

namespace dices {

enum class PolicyKind {
  dices_dynamic,    // starts at unit weights, updated by weight control
  rfwd_unit,        // reactive forwarding: unit weights, never modified
  ospf_inverse_bw,  // static weights round(C_max / c(e)), floor 1
};

std::string_view to_string(PolicyKind kind) noexcept;
/// Accepts "dices", "rfwd", "ospf".
PolicyKind parse_policy(std::string_view text);

class ForwardingPolicy {
 public:
  ForwardingPolicy(PolicyKind kind, const Network& network);

  PolicyKind kind() const noexcept { return kind_; }
  const WeightVector& weights() const noexcept { return weights_; }
  bool adaptive() const noexcept { return kind_ == PolicyKind::dices_dynamic; }

  /// Only the adaptive policy accepts new weights; baselines throw
  /// std::logic_error.
  void install_weights(WeightVector weights);

 private:
  PolicyKind kind_;
  WeightVector weights_;
};

WeightVector ospf_weights(const Network& network);

/// Routes a new request on the weighted shortest path under the policy's
/// current weights. Utilization is never consulted. Propagates
/// UnreachableError.
Flow forward(const Network& network, const RequestPtr& request, const ForwardingPolicy& policy);

}  // namespace dices
