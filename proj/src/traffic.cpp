#include "dices/traffic.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace dices {

using nlohmann::json;

void TrafficScenario::validate() const {
  if (horizon_ms <= 0) throw std::invalid_argument("scenario horizon must be positive");
  std::set<RequestId> arrived;
  std::set<RequestId> departed;
  std::int64_t last = 0;
  for (const auto& ev : events) {
    if (ev.time_ms < 0 || ev.time_ms >= horizon_ms) {
      throw std::invalid_argument("event at " + std::to_string(ev.time_ms) + " ms lies outside the horizon");
    }
    if (ev.time_ms < last) throw std::invalid_argument("scenario events are not time-ordered");
    last = ev.time_ms;
    if (ev.kind == EventKind::arrive) {
      if (!ev.request || ev.request->id != ev.request_id) {
        throw std::invalid_argument("arrival event without a matching request");
      }
      if (!arrived.insert(ev.request_id).second) {
        throw std::invalid_argument("duplicate request id " + std::to_string(ev.request_id));
      }
    } else {
      if (!arrived.contains(ev.request_id) || !departed.insert(ev.request_id).second) {
        throw std::invalid_argument("departure of request " + std::to_string(ev.request_id) +
                                    " without a prior arrival");
      }
    }
  }
}

std::vector<std::pair<SwitchId, SwitchId>> TrafficScenario::request_pairs() const {
  std::set<std::pair<SwitchId, SwitchId>> pairs;
  for (const auto& ev : events) {
    if (ev.kind == EventKind::arrive) pairs.emplace(ev.request->source, ev.request->terminal);
  }
  return {pairs.begin(), pairs.end()};
}

std::map<std::string, double> TrafficScenario::type_throughput_mbps() const {
  std::map<std::string, double> out;
  for (const auto& ev : events) {
    if (ev.kind == EventKind::arrive) out[ev.request->traffic_type] += ev.request->rate_mbps();
  }
  return out;
}

std::vector<ProfileRow> disaster_profile() {
  using P = Protocol;
  return {
      {"RM", "MC", "sensor_mc", P::elastic, 100, 5},
      {"CS", "MC", "audio_mc", P::inelastic, 64, 4},
      {"CS", "MC", "video_mc", P::inelastic, 10'000, 2},
      {"MC", "CS", "audio_cs", P::inelastic, 64, 4},
      {"MC", "CS", "video_cs", P::inelastic, 10'000, 2},
      {"MC", "CS", "map_cs", P::elastic, 30'000, 1},
      {"EN-N", "EN-D", "external", P::inelastic, 20'000, 5},
      {"EN-D", "EN-N", "external", P::inelastic, 20'000, 5},
  };
}

TrafficScenario generate_profile(const Network& network, std::span<const ProfileRow> profile,
                                 const Placement& placement, std::int64_t horizon_ms,
                                 std::int64_t arrival_ms) {
  const auto hosts = [&](const std::string& entity) -> const std::vector<std::string>& {
    const auto it = placement.find(entity);
    if (it == placement.end() || it->second.empty()) {
      throw std::invalid_argument("placement has no switch for entity " + entity);
    }
    return it->second;
  };

  TrafficScenario scenario;
  scenario.horizon_ms = horizon_ms;
  scenario.placement = placement;
  RequestId next_id = 1;
  for (const auto& row : profile) {
    const auto& senders = hosts(row.sender);
    const auto& receivers = hosts(row.receiver);
    for (std::size_t i = 0; i < row.count; ++i) {
      Request q;
      q.id = next_id++;
      q.source = network.require_switch(senders[i % senders.size()]);
      q.terminal = network.require_switch(receivers[i % receivers.size()]);
      q.rate_kbps = row.rate_kbps;
      q.protocol = row.protocol;
      q.arrival_ms = arrival_ms;
      q.traffic_type = row.type;
      auto request = make_request(std::move(q));
      scenario.events.push_back(TrafficEvent{arrival_ms, EventKind::arrive, request, request->id});
    }
  }
  scenario.validate();
  return scenario;
}

std::string scenario_topology(const std::string& text) {
  try {
    return json::parse(text).at("topology").get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scenario lacks a topology reference: ") + e.what());
  }
}

TrafficScenario parse_scenario(const std::string& text, const Network& network) {
  TrafficScenario scenario;
  try {
    const json doc = json::parse(text);
    scenario.name = doc.value("name", "");
    scenario.topology = doc.at("topology").get<std::string>();
    scenario.horizon_ms = doc.at("horizon_ms").get<std::int64_t>();
    scenario.seed = doc.value("seed", std::uint64_t{0});
    if (doc.contains("placement")) {
      scenario.placement = doc.at("placement").get<Placement>();
    }

    std::map<RequestId, std::size_t> arrival_index;
    std::vector<std::pair<RequestId, std::int64_t>> departures;
    for (const auto& entry : doc.at("events")) {
      const auto time = entry.at("time_ms").get<std::int64_t>();
      if (entry.contains("arrive")) {
        const auto& r = entry.at("arrive");
        Request q;
        q.id = r.at("id").get<RequestId>();
        q.source = network.require_switch(r.at("source").get<std::string>());
        q.terminal = network.require_switch(r.at("terminal").get<std::string>());
        if (r.contains("rate_kbps")) {
          q.rate_kbps = r.at("rate_kbps").get<std::int64_t>();
        } else {
          q.rate_kbps = std::llround(r.at("rate_mbps").get<double>() * 1000.0);
        }
        q.protocol = parse_protocol(r.value("protocol", "inelastic"));
        q.traffic_type = r.value("type", "");
        q.arrival_ms = time;
        arrival_index[q.id] = scenario.events.size();
        scenario.events.push_back(TrafficEvent{time, EventKind::arrive, nullptr, q.id});
        // Request is finalized below once its departure time is known.
        scenario.events.back().request = std::make_shared<const Request>(std::move(q));
      } else if (entry.contains("depart")) {
        const auto id = entry.at("depart").get<RequestId>();
        departures.emplace_back(id, time);
        scenario.events.push_back(TrafficEvent{time, EventKind::depart, nullptr, id});
      } else {
        throw std::invalid_argument("event needs 'arrive' or 'depart'");
      }
    }
    for (const auto& [id, time] : departures) {
      const auto it = arrival_index.find(id);
      if (it == arrival_index.end()) continue;  // reported by validate()
      Request q = *scenario.events[it->second].request;
      q.departure_ms = time;
      scenario.events[it->second].request = std::make_shared<const Request>(std::move(q));
    }
    for (auto& ev : scenario.events) {
      if (ev.kind == EventKind::arrive) ev.request = make_request(*ev.request);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed scenario: ") + e.what());
  }
  scenario.validate();
  return scenario;
}

std::string dump_scenario(const TrafficScenario& scenario, const Network& network) {
  json doc;
  doc["name"] = scenario.name;
  doc["topology"] = scenario.topology;
  doc["horizon_ms"] = scenario.horizon_ms;
  doc["seed"] = scenario.seed;
  if (!scenario.placement.empty()) doc["placement"] = scenario.placement;
  json events = json::array();
  for (const auto& ev : scenario.events) {
    json entry;
    entry["time_ms"] = ev.time_ms;
    if (ev.kind == EventKind::arrive) {
      const Request& q = *ev.request;
      entry["arrive"] = json{{"id", q.id},
                             {"source", network.switch_name(q.source)},
                             {"terminal", network.switch_name(q.terminal)},
                             {"rate_kbps", q.rate_kbps},
                             {"protocol", std::string(to_string(q.protocol))},
                             {"type", q.traffic_type}};
    } else {
      entry["depart"] = ev.request_id;
    }
    events.push_back(std::move(entry));
  }
  doc["events"] = std::move(events);
  return doc.dump(2) + "\n";
}

}  // namespace dices
