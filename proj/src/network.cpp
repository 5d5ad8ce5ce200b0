#include "dices/network.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dices {

Network::Network(std::vector<std::string> switches, std::vector<LinkSpec> links) {
  std::sort(switches.begin(), switches.end());
  if (std::adjacent_find(switches.begin(), switches.end()) != switches.end()) {
    throw std::invalid_argument("duplicate switch id");
  }
  switches_ = std::move(switches);

  for (auto& spec : links) {
    if (spec.id.empty()) spec.id = spec.from + "-" + spec.to;
  }
  std::sort(links.begin(), links.end(),
            [](const LinkSpec& a, const LinkSpec& b) { return a.id < b.id; });

  links_.reserve(links.size());
  out_.resize(switches_.size());
  for (const auto& spec : links) {
    const auto from = find_switch(spec.from);
    const auto to = find_switch(spec.to);
    if (!from || !to) throw std::invalid_argument("link " + spec.id + " references an unknown switch");
    if (*from == *to) throw std::invalid_argument("self-loop link " + spec.id);
    if (spec.bandwidth_mbps < 1) throw std::invalid_argument("link " + spec.id + " needs bandwidth >= 1");
    if (spec.delay_ms < 1) throw std::invalid_argument("link " + spec.id + " needs delay >= 1");
    if (!links_.empty() && links_.back().id == spec.id) {
      throw std::invalid_argument("duplicate link id " + spec.id);
    }
    if (find_link(*from, *to)) {
      throw std::invalid_argument("parallel link " + spec.from + "->" + spec.to);
    }
    const auto id = static_cast<LinkId>(links_.size());
    links_.push_back(Link{spec.id, *from, *to, spec.bandwidth_mbps, spec.delay_ms});
    out_[index(*from)].push_back(id);
    max_bandwidth_ = std::max(max_bandwidth_, spec.bandwidth_mbps);
    total_delay_ += spec.delay_ms;
  }
}

std::optional<SwitchId> Network::find_switch(std::string_view name) const {
  const auto it = std::lower_bound(switches_.begin(), switches_.end(), name);
  if (it == switches_.end() || *it != name) return std::nullopt;
  return static_cast<SwitchId>(it - switches_.begin());
}

SwitchId Network::require_switch(std::string_view name) const {
  if (auto id = find_switch(name)) return *id;
  throw std::invalid_argument("unknown switch " + std::string(name));
}

std::optional<LinkId> Network::find_link(SwitchId from, SwitchId to) const {
  if (index(from) >= out_.size()) return std::nullopt;
  for (LinkId id : out_[index(from)]) {
    if (links_[index(id)].to == to) return id;
  }
  return std::nullopt;
}

std::optional<LinkId> Network::find_link(std::string_view id) const {
  const auto it = std::lower_bound(links_.begin(), links_.end(), id,
                                   [](const Link& l, std::string_view v) { return l.id < v; });
  if (it == links_.end() || it->id != id) return std::nullopt;
  return static_cast<LinkId>(it - links_.begin());
}

std::string_view to_string(Protocol p) noexcept {
  return p == Protocol::elastic ? "elastic" : "inelastic";
}

Protocol parse_protocol(std::string_view text) {
  if (text == "elastic" || text == "tcp" || text == "TCP") return Protocol::elastic;
  if (text == "inelastic" || text == "udp" || text == "UDP") return Protocol::inelastic;
  throw std::invalid_argument("unknown protocol class '" + std::string(text) + "'");
}

RequestPtr make_request(Request request) {
  if (request.source == request.terminal) {
    throw std::invalid_argument("request " + std::to_string(request.id) + " has source == terminal");
  }
  if (request.rate_kbps <= 0) {
    throw std::invalid_argument("request " + std::to_string(request.id) + " needs a positive rate");
  }
  return std::make_shared<const Request>(std::move(request));
}

namespace {

bool by_request_id(const Flow& a, const Flow& b) { return a.request->id < b.request->id; }

}  // namespace

FlowSet::FlowSet(std::vector<Flow> flows) : flows_(std::move(flows)) {
  for (const auto& f : flows_) {
    if (!f.request) throw std::invalid_argument("flow without a request");
  }
  std::sort(flows_.begin(), flows_.end(), by_request_id);
  for (std::size_t i = 1; i < flows_.size(); ++i) {
    if (flows_[i - 1].request->id == flows_[i].request->id) {
      throw std::invalid_argument("two flows for request " + std::to_string(flows_[i].request->id));
    }
  }
}

std::optional<std::size_t> FlowSet::position_of(RequestId id) const {
  const auto it = std::lower_bound(flows_.begin(), flows_.end(), id,
                                   [](const Flow& f, RequestId v) { return f.request->id < v; });
  if (it == flows_.end() || it->request->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - flows_.begin());
}

void FlowSet::upsert(Flow flow) {
  if (!flow.request) throw std::invalid_argument("flow without a request");
  const auto it = std::lower_bound(flows_.begin(), flows_.end(), flow, by_request_id);
  if (it != flows_.end() && it->request->id == flow.request->id) {
    *it = std::move(flow);
  } else {
    flows_.insert(it, std::move(flow));
  }
}

bool FlowSet::erase(RequestId id) {
  const auto pos = position_of(id);
  if (!pos) return false;
  flows_.erase(flows_.begin() + static_cast<std::ptrdiff_t>(*pos));
  return true;
}

bool FlowSet::same_requests(const FlowSet& other) const noexcept {
  return std::equal(flows_.begin(), flows_.end(), other.flows_.begin(), other.flows_.end(),
                    [](const Flow& a, const Flow& b) { return a.request->id == b.request->id; });
}

bool operator==(const FlowSet& a, const FlowSet& b) noexcept {
  return std::equal(a.flows_.begin(), a.flows_.end(), b.flows_.begin(), b.flows_.end(),
                    [](const Flow& x, const Flow& y) {
                      return x.request->id == y.request->id && x.path == y.path;
                    });
}

std::vector<std::int64_t> link_throughput_kbps(const Network& network, const FlowSet& flows) {
  std::vector<std::int64_t> load(network.link_count(), 0);
  for (const auto& f : flows) {
    for (LinkId e : f.path) load.at(index(e)) += f.request->rate_kbps;
  }
  return load;
}

namespace {

void check_link(const Network& network, LinkId link) {
  if (index(link) >= network.link_count()) {
    throw std::out_of_range("unknown link index " + std::to_string(index(link)));
  }
}

std::int64_t throughput_kbps(LinkId link, const FlowSet& flows) {
  std::int64_t sum = 0;
  for (const auto& f : flows) {
    if (std::find(f.path.begin(), f.path.end(), link) != f.path.end()) sum += f.request->rate_kbps;
  }
  return sum;
}

double as_utilization(std::int64_t kbps, std::int64_t bandwidth_mbps) {
  return static_cast<double>(kbps) / (static_cast<double>(bandwidth_mbps) * 1000.0);
}

}  // namespace

double throughput(const Network& network, LinkId link, const FlowSet& flows) {
  check_link(network, link);
  return static_cast<double>(throughput_kbps(link, flows)) / 1000.0;
}

double utilization(const Network& network, LinkId link, const FlowSet& flows) {
  check_link(network, link);
  return as_utilization(throughput_kbps(link, flows), network.link(link).bandwidth_mbps);
}

std::vector<double> utilizations(const Network& network, const FlowSet& flows) {
  const auto load = link_throughput_kbps(network, flows);
  std::vector<double> util(load.size());
  for (std::size_t e = 0; e < load.size(); ++e) {
    util[e] = as_utilization(load[e], network.links()[e].bandwidth_mbps);
  }
  return util;
}

double max_utilization(const Network& network, const FlowSet& flows) {
  const auto util = utilizations(network, flows);
  return util.empty() ? 0.0 : *std::max_element(util.begin(), util.end());
}

CongestionReport is_congested(const Network& network, const FlowSet& flows, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("utilization threshold must lie in (0, 1]");
  }
  const auto util = utilizations(network, flows);
  CongestionReport report;
  for (std::size_t e = 0; e < util.size(); ++e) {
    if (util[e] > threshold) report.links.push_back({static_cast<LinkId>(e), util[e]});
  }
  std::sort(report.links.begin(), report.links.end(),
            [](const LinkUtilization& a, const LinkUtilization& b) {
              if (a.utilization != b.utilization) return a.utilization > b.utilization;
              return a.link < b.link;
            });
  report.congested = !report.links.empty();
  return report;
}

std::vector<LinkId> links_of(const Network& network, const FlowSet& flows) {
  std::vector<char> used(network.link_count(), 0);
  for (const auto& f : flows) {
    for (LinkId e : f.path) used.at(index(e)) = 1;
  }
  std::vector<LinkId> out;
  for (std::size_t e = 0; e < used.size(); ++e) {
    if (used[e]) out.push_back(static_cast<LinkId>(e));
  }
  return out;
}

std::optional<std::string> validate_path(const Network& network, SwitchId source,
                                         SwitchId terminal, std::span<const LinkId> path) {
  if (path.empty()) return "empty path";
  std::vector<char> visited(network.switch_count(), 0);
  visited.at(index(source)) = 1;
  SwitchId at = source;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (index(path[i]) >= network.link_count()) {
      return "unknown link at index " + std::to_string(i);
    }
    const Link& link = network.link(path[i]);
    if (link.from != at) {
      if (i == 0) return "path does not start at source " + network.switch_name(source);
      return "discontinuity at index " + std::to_string(i);
    }
    at = link.to;
    if (visited[index(at)]) {
      return "repeated switch " + network.switch_name(at) + " at index " + std::to_string(i);
    }
    visited[index(at)] = 1;
  }
  if (at != terminal) return "path does not end at terminal " + network.switch_name(terminal);
  return std::nullopt;
}

std::optional<std::string> validate_flow(const Flow& flow, const Network& network) {
  if (!flow.request) return "flow without a request";
  return validate_path(network, flow.request->source, flow.request->terminal, flow.path);
}

}  // namespace dices
