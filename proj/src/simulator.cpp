#include "dices/simulator.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dices {

namespace {

constexpr double kEps = 1e-9;

}  // namespace

std::vector<double> max_min_shares(std::span<const double> capacity,
                                   std::span<const std::vector<std::size_t>> paths,
                                   std::span<const double> demand) {
  if (paths.size() != demand.size()) throw std::invalid_argument("one demand per path expected");
  const std::size_t n = demand.size();
  std::vector<double> alloc(n, 0.0);
  std::vector<double> residual(capacity.begin(), capacity.end());
  std::vector<char> frozen(n, 0);
  for (std::size_t f = 0; f < n; ++f) {
    if (demand[f] <= 0.0) frozen[f] = 1;
  }

  std::vector<std::size_t> count(capacity.size());
  for (;;) {
    std::fill(count.begin(), count.end(), 0);
    bool any = false;
    for (std::size_t f = 0; f < n; ++f) {
      if (frozen[f]) continue;
      any = true;
      for (std::size_t e : paths[f]) ++count[e];
    }
    if (!any) break;

    // Largest common increment before a link saturates or a demand is met.
    double delta = std::numeric_limits<double>::infinity();
    std::optional<std::size_t> bottleneck_link;
    std::optional<std::size_t> bottleneck_flow;
    for (std::size_t e = 0; e < count.size(); ++e) {
      if (count[e] == 0) continue;
      const double share = std::max(0.0, residual[e]) / static_cast<double>(count[e]);
      if (share < delta) {
        delta = share;
        bottleneck_link = e;
      }
    }
    for (std::size_t f = 0; f < n; ++f) {
      if (frozen[f]) continue;
      const double rest = demand[f] - alloc[f];
      if (rest < delta) {
        delta = rest;
        bottleneck_flow = f;
        bottleneck_link.reset();
      }
    }

    for (std::size_t f = 0; f < n; ++f) {
      if (frozen[f]) continue;
      alloc[f] += delta;
      for (std::size_t e : paths[f]) residual[e] -= delta;
    }

    for (std::size_t f = 0; f < n; ++f) {
      if (frozen[f]) continue;
      bool stop = bottleneck_flow == f || alloc[f] >= demand[f] - kEps * std::max(1.0, demand[f]);
      for (std::size_t e : paths[f]) {
        if (bottleneck_link == e || residual[e] <= kEps * std::max(1.0, capacity[e])) stop = true;
      }
      if (stop) {
        frozen[f] = 1;
        alloc[f] = std::min(alloc[f], demand[f]);
      }
    }
  }
  return alloc;
}

LinkLoads link_loads(const Network& network, const FlowSet& flows) {
  LinkLoads loads;
  loads.flow_offered.assign(flows.size(), 0.0);
  loads.link_offered.assign(network.link_count(), 0.0);

  std::vector<std::size_t> elastic;
  for (std::size_t i = 0; i < flows.size(); ++i) {
    const Flow& f = flows[i];
    if (f.request->protocol == Protocol::elastic) {
      elastic.push_back(i);
      continue;
    }
    loads.flow_offered[i] = f.request->rate_mbps();
    for (LinkId e : f.path) loads.link_offered[index(e)] += loads.flow_offered[i];
  }
  if (elastic.empty()) return loads;

  std::vector<double> residual(network.link_count());
  for (std::size_t e = 0; e < residual.size(); ++e) {
    residual[e] = std::max(0.0, static_cast<double>(network.links()[e].bandwidth_mbps) - loads.link_offered[e]);
  }
  std::vector<std::vector<std::size_t>> paths;
  std::vector<double> demand;
  for (std::size_t i : elastic) {
    std::vector<std::size_t> p;
    for (LinkId e : flows[i].path) p.push_back(index(e));
    paths.push_back(std::move(p));
    demand.push_back(flows[i].request->rate_mbps());
  }
  const auto shares = max_min_shares(residual, paths, demand);
  for (std::size_t k = 0; k < elastic.size(); ++k) {
    loads.flow_offered[elastic[k]] = shares[k];
    for (std::size_t e : paths[k]) loads.link_offered[e] += shares[k];
  }
  return loads;
}

double queuing_factor(double util) { return 1.0 / (1.0 - std::min(util, 0.95)); }

std::vector<FlowMetrics> flow_metrics(const Network& network, const FlowSet& flows,
                                      const LinkLoads& loads) {
  std::vector<FlowMetrics> out;
  out.reserve(flows.size());
  for (std::size_t i = 0; i < flows.size(); ++i) {
    const Flow& f = flows[i];
    FlowMetrics m;
    m.id = f.request->id;
    m.offered_mbps = loads.flow_offered[i];
    double survival = 1.0;
    for (LinkId e : f.path) {
      const Link& link = network.link(e);
      const double c = static_cast<double>(link.bandwidth_mbps);
      const double offered = loads.link_offered[index(e)];
      if (offered > c) survival *= c / offered;
      m.delay_ms += static_cast<double>(link.delay_ms) * queuing_factor(offered / c);
    }
    m.delivered_mbps = std::min(m.offered_mbps, m.offered_mbps * survival);
    m.loss = m.offered_mbps > 0.0 ? 1.0 - m.delivered_mbps / m.offered_mbps : 0.0;
    out.push_back(m);
  }
  return out;
}

std::size_t apply_adaptation(SimState& state, const FlowSet& best, const WeightVector& weights) {
  std::size_t changed = 0;
  for (const auto& f : best) {
    const auto pos = state.flows.position_of(f.request->id);
    if (!pos || state.flows[*pos].path == f.path) continue;
    state.flows.set_path(*pos, f.path);
    ++changed;
  }
  if (state.policy.adaptive()) state.policy.install_weights(weights);
  return changed;
}

void admit_events(SimState& state, const Network& network, const TrafficScenario& scenario,
                  std::int64_t until_ms) {
  const auto& events = scenario.events;
  for (; state.next_event < events.size() && events[state.next_event].time_ms <= until_ms; ++state.next_event) {
    const TrafficEvent& ev = events[state.next_event];
    if (ev.kind == EventKind::depart) {
      state.flows.erase(ev.request_id);
      continue;
    }
    try {
      state.flows.upsert(forward(network, ev.request, state.policy));
    } catch (const UnreachableError&) {
      state.dropped.push_back(ev.request_id);
    }
  }
}

SimState step(SimState state, const Network& network, const TrafficScenario& scenario,
              std::int64_t dt_ms) {
  if (dt_ms <= 0) throw std::invalid_argument("step size must be positive");

  if (state.pending && state.pending->due_ms <= state.clock_ms) {
    PendingApply pending = std::move(*state.pending);
    state.pending.reset();
    apply_adaptation(state, pending.flows, pending.weights);
  }

  const std::int64_t end = state.clock_ms + dt_ms;
  admit_events(state, network, scenario, end - 1);

  state.metrics = flow_metrics(network, state.flows, link_loads(network, state.flows));
  state.max_util = max_utilization(network, state.flows);
  state.clock_ms = end;
  return state;
}

}  // namespace dices
