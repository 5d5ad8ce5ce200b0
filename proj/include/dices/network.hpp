#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dices {

// Switches and links are addressed by dense indices. Both are assigned in
// lexicographic order of their string ids, so comparing indices compares ids.
enum class SwitchId : std::uint32_t {};
enum class LinkId : std::uint32_t {};

constexpr std::size_t index(SwitchId id) noexcept { return static_cast<std::size_t>(id); }
constexpr std::size_t index(LinkId id) noexcept { return static_cast<std::size_t>(id); }

/// An ordered sequence of directed links.
using Path = std::vector<LinkId>;

struct LinkSpec {
  std::string from;
  std::string to;
  std::int64_t bandwidth_mbps = 0;
  std::int64_t delay_ms = 0;
  std::string id;  // empty: derived as "<from>-<to>"
};

struct Link {
  std::string id;
  SwitchId from{};
  SwitchId to{};
  std::int64_t bandwidth_mbps = 0;
  std::int64_t delay_ms = 0;
};

/// Directed graph G = (V, E, c, l). Immutable after construction.
class Network {
 public:
  /// Throws std::invalid_argument on self-loops, parallel links, unknown or
  /// duplicate switches, duplicate link ids, and non-positive c(e) or l(e).
  Network(std::vector<std::string> switches, std::vector<LinkSpec> links);

  std::size_t switch_count() const noexcept { return switches_.size(); }
  std::size_t link_count() const noexcept { return links_.size(); }

  const std::string& switch_name(SwitchId id) const { return switches_.at(index(id)); }
  std::span<const std::string> switch_names() const noexcept { return switches_; }

  const Link& link(LinkId id) const { return links_.at(index(id)); }
  std::span<const Link> links() const noexcept { return links_; }

  std::optional<SwitchId> find_switch(std::string_view name) const;
  SwitchId require_switch(std::string_view name) const;
  std::optional<LinkId> find_link(SwitchId from, SwitchId to) const;
  std::optional<LinkId> find_link(std::string_view id) const;

  /// Outgoing links of a switch, ascending by link id.
  std::span<const LinkId> out_links(SwitchId id) const { return out_.at(index(id)); }

  std::int64_t max_bandwidth_mbps() const noexcept { return max_bandwidth_; }
  std::int64_t total_delay_ms() const noexcept { return total_delay_; }

 private:
  std::vector<std::string> switches_;
  std::vector<Link> links_;
  std::vector<std::vector<LinkId>> out_;
  std::int64_t max_bandwidth_ = 0;
  std::int64_t total_delay_ = 0;
};

enum class Protocol { elastic, inelastic };

std::string_view to_string(Protocol p) noexcept;
Protocol parse_protocol(std::string_view text);

using RequestId = std::uint64_t;

/// A demand q to carry q.d from q.s to q.t. Rates are kept in integer kbps so
/// that sub-Mbps traffic (sensor and audio streams) stays exact.
struct Request {
  RequestId id = 0;
  SwitchId source{};
  SwitchId terminal{};
  std::int64_t rate_kbps = 0;
  Protocol protocol = Protocol::inelastic;
  std::int64_t arrival_ms = 0;
  std::optional<std::int64_t> departure_ms;
  std::string traffic_type;

  double rate_mbps() const noexcept { return static_cast<double>(rate_kbps) / 1000.0; }
};

using RequestPtr = std::shared_ptr<const Request>;

/// Throws std::invalid_argument when source == terminal or rate <= 0.
RequestPtr make_request(Request request);

struct Flow {
  RequestPtr request;
  Path path;
};

/// One flow per request, kept sorted by request id.
class FlowSet {
 public:
  FlowSet() = default;
  /// Sorts by request id; throws std::invalid_argument on duplicate requests.
  explicit FlowSet(std::vector<Flow> flows);

  std::size_t size() const noexcept { return flows_.size(); }
  bool empty() const noexcept { return flows_.empty(); }
  const Flow& operator[](std::size_t i) const { return flows_[i]; }
  std::span<const Flow> flows() const noexcept { return flows_; }
  auto begin() const noexcept { return flows_.begin(); }
  auto end() const noexcept { return flows_.end(); }

  void set_path(std::size_t i, Path path) { flows_.at(i).path = std::move(path); }
  std::optional<std::size_t> position_of(RequestId id) const;

  /// Inserts or replaces the flow for its request; order is maintained.
  void upsert(Flow flow);
  bool erase(RequestId id);

  /// True when both sets serve the same request ids in the same order.
  bool same_requests(const FlowSet& other) const noexcept;

  friend bool operator==(const FlowSet& a, const FlowSet& b) noexcept;

 private:
  std::vector<Flow> flows_;
};

/// Dense per-link throughput in kbps.
std::vector<std::int64_t> link_throughput_kbps(const Network& network, const FlowSet& flows);

/// throughput(e, F) in Mbps. Throws std::out_of_range for an unknown link.
double throughput(const Network& network, LinkId link, const FlowSet& flows);

/// throughput(e, F) / c(e); may exceed 1.
double utilization(const Network& network, LinkId link, const FlowSet& flows);

/// Utilization of every link, indexed by LinkId.
std::vector<double> utilizations(const Network& network, const FlowSet& flows);

double max_utilization(const Network& network, const FlowSet& flows);

struct LinkUtilization {
  LinkId link{};
  double utilization = 0.0;
};

struct CongestionReport {
  bool congested = false;
  /// Descending utilization, ties by link id.
  std::vector<LinkUtilization> links;
};

/// Links with util(e, F) > threshold. Throws std::invalid_argument unless
/// 0 < threshold <= 1.
CongestionReport is_congested(const Network& network, const FlowSet& flows, double threshold);

/// links(F): every link used by some flow, ascending.
std::vector<LinkId> links_of(const Network& network, const FlowSet& flows);

/// Empty on success, otherwise the first violated path invariant.
std::optional<std::string> validate_path(const Network& network, SwitchId source,
                                         SwitchId terminal, std::span<const LinkId> path);
std::optional<std::string> validate_flow(const Flow& flow, const Network& network);

}  // namespace dices
