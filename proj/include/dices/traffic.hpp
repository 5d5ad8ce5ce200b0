#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dices/network.hpp"

namespace dices {

enum class EventKind { arrive, depart };

struct TrafficEvent {
  std::int64_t time_ms = 0;
  EventKind kind = EventKind::arrive;
  RequestPtr request;         // arrive
  RequestId request_id = 0;   // both kinds
};

/// Entity name (RM, MC, CS, GS, EN-N, EN-D, ...) -> switches hosting it.
using Placement = std::map<std::string, std::vector<std::string>>;

struct TrafficScenario {
  std::string name;
  std::string topology;  // builtin name or file path
  std::int64_t horizon_ms = 0;
  std::uint64_t seed = 0;
  Placement placement;
  std::vector<TrafficEvent> events;

  /// Throws std::invalid_argument for unordered events, times outside
  /// [0, horizon), duplicate request ids, and departures without a prior
  /// arrival.
  void validate() const;

  /// Distinct (source, terminal) pairs of all arriving requests.
  std::vector<std::pair<SwitchId, SwitchId>> request_pairs() const;

  /// Total requested rate per traffic type, in Mbps.
  std::map<std::string, double> type_throughput_mbps() const;
};

/// One row of a traffic profile: `count` identical requests.
struct ProfileRow {
  std::string sender;
  std::string receiver;
  std::string type;  // label used for per-type reporting
  Protocol protocol = Protocol::inelastic;
  std::int64_t rate_kbps = 0;
  std::size_t count = 0;
};

/// The 28-request disaster-situation profile of the EMS case study.
std::vector<ProfileRow> disaster_profile();

/// Expands a profile into simultaneous arrivals at `arrival_ms`. Requests of a
/// row are spread round-robin over the switches hosting its sender and
/// receiver entities. Throws std::invalid_argument when the placement lacks an
/// entity or maps it to an unknown switch.
TrafficScenario generate_profile(const Network& network, std::span<const ProfileRow> profile,
                                 const Placement& placement, std::int64_t horizon_ms,
                                 std::int64_t arrival_ms = 0);

// Scenario files are JSON:
//   { "name": "exp1", "topology": "complete5", "horizon_ms": 50000, "seed": 0,
//     "placement": { "CS": ["s1"] },
//     "events": [ {"time_ms": 0, "arrive": {"id": 1, "source": "s1", "terminal": "s2",
//                                           "rate_kbps": 30000, "protocol": "inelastic",
//                                           "type": "bulk"}},
//                 {"time_ms": 9000, "depart": 1} ] }
// "rate_mbps" may be given instead of "rate_kbps".

/// The "topology" field of a scenario document.
std::string scenario_topology(const std::string& text);
TrafficScenario parse_scenario(const std::string& text, const Network& network);
std::string dump_scenario(const TrafficScenario& scenario, const Network& network);

}  // namespace dices
