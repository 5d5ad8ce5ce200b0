#include "dices/builtins.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>

#include "dices/topology_io.hpp"

namespace dices {

namespace {

constexpr std::string_view kComplete = "complete";
constexpr std::string_view kExp2Size = "exp2-size-";
constexpr std::string_view kExp2Reqs = "exp2-reqs-";

std::optional<std::size_t> parse_suffix(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
  std::size_t n = 0;
  const auto* first = name.data() + prefix.size();
  const auto* last = name.data() + name.size();
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return n;
}

std::string switch_label(std::size_t i, std::size_t n) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(n).size();
  return "s" + std::string(width - digits.size(), '0') + digits;
}

void add_bidirectional(std::vector<LinkSpec>& links, const std::string& a, const std::string& b,
                       std::int64_t bandwidth, std::int64_t delay) {
  links.push_back({a, b, bandwidth, delay, ""});
  links.push_back({b, a, bandwidth, delay, ""});
}

}  // namespace

Network complete_topology(std::size_t n, std::int64_t bandwidth_mbps, std::int64_t delay_ms) {
  if (n < 2) throw std::invalid_argument("a complete topology needs at least 2 switches");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(switch_label(i, n));
  std::vector<LinkSpec> links;
  for (const auto& a : names) {
    for (const auto& b : names) {
      if (a != b) links.push_back({a, b, bandwidth_mbps, delay_ms, ""});
    }
  }
  return Network(std::move(names), std::move(links));
}

Network ems_topology() {
  std::vector<std::string> names{"s1", "s2", "s3", "s4", "s5", "s6", "s7"};
  std::vector<LinkSpec> links;
  const std::pair<const char*, const char*> terrestrial[] = {
      {"s1", "s2"}, {"s1", "s3"}, {"s1", "s4"}, {"s2", "s3"}, {"s3", "s4"},
      {"s2", "s5"}, {"s4", "s5"}, {"s3", "s5"}, {"s5", "s6"}, {"s6", "s7"},
  };
  for (const auto& [a, b] : terrestrial) add_bidirectional(links, a, b, 100, 25);
  for (const char* remote : {"s1", "s2", "s3", "s4", "s5"}) add_bidirectional(links, "s7", remote, 10, 275);
  return Network(std::move(names), std::move(links));
}

Placement ems_placement() {
  return {
      {"RM", {"s1", "s2", "s3", "s4", "s5"}},
      {"MC", {"s6"}},
      {"GS", {"s7"}},
      {"CS", {"s1"}},
      {"EN-D", {"s1"}},
      {"EN-N", {"s2", "s3", "s4", "s5", "s6", "s7"}},
  };
}

Network example_topology() {
  std::vector<std::string> names{"v1", "v2", "v3", "v4", "v5", "v6"};
  std::vector<LinkSpec> links{
      {"v1", "v2", 20, 250, "e1"}, {"v2", "v3", 20, 250, "e2"}, {"v1", "v4", 10, 250, "e3"},
      {"v4", "v3", 10, 250, "e4"}, {"v3", "v6", 20, 25, "e5"},  {"v4", "v5", 20, 25, "e6"},
      {"v5", "v6", 10, 25, "e7"},  {"v2", "v5", 20, 25, "e8"},
  };
  return Network(std::move(names), std::move(links));
}

bool is_builtin_topology(std::string_view name) {
  if (name == "ems" || name == "example") return true;
  const auto n = parse_suffix(name, kComplete);
  return n && *n >= 2;
}

Network builtin_topology(std::string_view name) {
  if (name == "ems") return ems_topology();
  if (name == "example") return example_topology();
  if (const auto n = parse_suffix(name, kComplete); n && *n >= 2) return complete_topology(*n);
  throw std::invalid_argument("unknown builtin topology " + std::string(name));
}

Network resolve_topology(const std::string& ref) {
  if (is_builtin_topology(ref)) return builtin_topology(ref);
  return load_topology(ref);
}

TrafficScenario exp1_scenario(const Network& network) {
  TrafficScenario scenario;
  scenario.name = "exp1";
  scenario.topology = "complete5";
  scenario.horizon_ms = 50'000;
  const SwitchId a = network.require_switch("s1");
  const SwitchId b = network.require_switch("s2");
  RequestId id = 1;
  for (std::int64_t t = 0; t <= 40'000; t += 10'000) {
    for (const auto& [s, d] : {std::pair{a, b}, std::pair{b, a}}) {
      Request q;
      q.id = id++;
      q.source = s;
      q.terminal = d;
      q.rate_kbps = 30'000;
      q.protocol = Protocol::inelastic;
      q.arrival_ms = t;
      q.traffic_type = "bulk";
      auto request = make_request(std::move(q));
      scenario.events.push_back(TrafficEvent{t, EventKind::arrive, request, request->id});
    }
  }
  scenario.validate();
  return scenario;
}

TrafficScenario exp2_scenario(const Network& network, std::size_t requests, std::int64_t horizon_ms) {
  if (requests == 0) throw std::invalid_argument("at least one request is required");
  constexpr std::int64_t total_kbps = 150'000;
  TrafficScenario scenario;
  scenario.horizon_ms = horizon_ms;
  const auto names = network.switch_names();
  const SwitchId source = network.require_switch(names[0]);
  const SwitchId terminal = network.require_switch(names[1]);
  const auto n = static_cast<std::int64_t>(requests);
  for (std::int64_t i = 0; i < n; ++i) {
    Request q;
    q.id = static_cast<RequestId>(i + 1);
    q.source = source;
    q.terminal = terminal;
    q.rate_kbps = total_kbps / n + (i < total_kbps % n ? 1 : 0);
    q.protocol = Protocol::inelastic;
    q.traffic_type = "bulk";
    auto request = make_request(std::move(q));
    scenario.events.push_back(TrafficEvent{0, EventKind::arrive, request, request->id});
  }
  scenario.validate();
  return scenario;
}

TrafficScenario exp3_scenario(const Network& network) {
  const auto profile = disaster_profile();
  TrafficScenario scenario = generate_profile(network, profile, ems_placement(), 60'000);
  scenario.name = "exp3-ems";
  scenario.topology = "ems";
  return scenario;
}

bool is_builtin_scenario(std::string_view name) {
  if (name == "exp1" || name == "exp3" || name == "exp3-ems") return true;
  const auto size = parse_suffix(name, kExp2Size);
  const auto reqs = parse_suffix(name, kExp2Reqs);
  return (size && *size >= 3) || (reqs && *reqs >= 1);
}

std::string builtin_scenario_topology(std::string_view name) {
  if (!is_builtin_scenario(name)) throw std::invalid_argument("unknown builtin scenario " + std::string(name));
  if (name == "exp1" || name.starts_with(kExp2Reqs)) return "complete5";
  if (const auto n = parse_suffix(name, kExp2Size)) return "complete" + std::to_string(*n);
  return "ems";
}

TrafficScenario builtin_scenario(std::string_view name, const Network& network) {
  if (!is_builtin_scenario(name)) throw std::invalid_argument("unknown builtin scenario " + std::string(name));
  if (name == "exp1") return exp1_scenario(network);
  if (name == "exp3" || name == "exp3-ems") return exp3_scenario(network);
  TrafficScenario scenario;
  if (parse_suffix(name, kExp2Size)) {
    scenario = exp2_scenario(network, 5);
  } else {
    scenario = exp2_scenario(network, *parse_suffix(name, kExp2Reqs));
  }
  scenario.name = std::string(name);
  scenario.topology = builtin_scenario_topology(name);
  return scenario;
}

std::vector<std::string> builtin_topology_names() {
  std::vector<std::string> names{"ems", "example"};
  for (std::size_t n = 5; n <= 50; n += 5) names.push_back("complete" + std::to_string(n));
  return names;
}

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> names{"exp1", "exp3-ems"};
  for (std::size_t n = 5; n <= 50; n += 5) names.push_back(std::string(kExp2Size) + std::to_string(n));
  for (std::size_t n = 5; n <= 50; n += 5) names.push_back(std::string(kExp2Reqs) + std::to_string(n));
  return names;
}

}  // namespace dices
