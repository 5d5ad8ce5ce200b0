#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dices/network.hpp"
#include "dices/traffic.hpp"

namespace dices {

/// Complete directed graph on n switches. Names are s1..sn, zero-padded
/// (s01, s02, ...) when n >= 10 so that lexicographic order is numeric order.
Network complete_topology(std::size_t n, std::int64_t bandwidth_mbps = 100, std::int64_t delay_ms = 25);

/// Emergency-management network: terrestrial links (100 Mbps, 25 ms) among
/// s1..s7 and satellite links (10 Mbps, 275 ms) from the ground station s7.
Network ems_topology();
Placement ems_placement();

/// Six switches, eight links with mixed bandwidth and delay (e1..e8).
Network example_topology();

/// "ems", "example", "complete<N>".
bool is_builtin_topology(std::string_view name);
Network builtin_topology(std::string_view name);

/// A builtin name or a path to a JSON topology file.
Network resolve_topology(const std::string& ref);

/// Two 30 Mbps inelastic requests (s1->s2 and s2->s1) every 10 s from t = 0
/// to 40 s; horizon 50 s.
TrafficScenario exp1_scenario(const Network& network);

/// `requests` inelastic requests s1->s2 at t = 0 sharing 150 Mbps.
TrafficScenario exp2_scenario(const Network& network, std::size_t requests, std::int64_t horizon_ms = 1000);

/// Disaster profile on the EMS network, 60 s horizon.
TrafficScenario exp3_scenario(const Network& network);

/// "exp1", "exp2-size-<n>", "exp2-reqs-<n>", "exp3", "exp3-ems".
bool is_builtin_scenario(std::string_view name);
/// Default topology of a builtin scenario.
std::string builtin_scenario_topology(std::string_view name);
TrafficScenario builtin_scenario(std::string_view name, const Network& network);

std::vector<std::string> builtin_topology_names();
std::vector<std::string> builtin_scenario_names();

}  // namespace dices
