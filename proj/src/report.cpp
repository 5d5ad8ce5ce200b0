#include "dices/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dices {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (value == 0.0) return "0";  // folds -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("cannot format value");
  return {buf, ptr};
}

void write_ticks_csv(std::ostream& out, std::span<const RunOutput> runs, const Network& network) {
  out << "run,seed,tick,time_ms,flows,max_util,congested,congested_links,search_ms,"
         "fit_util,fit_cost,fit_delay,evaluations,flows_changed,weights_changed,post_util\n";
  for (const auto& run : runs) {
    for (const auto& r : run.result.ticks) {
      std::string links;
      for (const auto& c : r.congested_links) {
        if (!links.empty()) links += ';';
        links += network.link(c.link).id;
      }
      out << run.run << ',' << run.seed << ',' << r.tick << ',' << r.time_ms << ',' << r.flow_count << ','
          << format_double(r.max_util) << ',' << (r.congested ? 1 : 0) << ',' << links << ','
          << format_double(r.search_ms) << ',';
      if (r.fitness) {
        out << format_double(r.fitness->util) << ',' << r.fitness->cost << ',' << r.fitness->delay;
      } else {
        out << ",,";
      }
      out << ',' << r.evaluations << ',' << r.flows_changed << ',' << r.weights_changed << ','
          << format_double(r.post_util) << '\n';
    }
  }
}

void write_flows_csv(std::ostream& out, std::span<const RunOutput> runs) {
  out << "run,tick,flow_id,type,protocol,demand_mbps,offered_mbps,delivered_mbps,loss,delay_ms\n";
  for (const auto& run : runs) {
    for (const auto& f : run.result.flows) {
      out << run.run << ',' << f.tick << ',' << f.id << ',' << f.type << ',' << to_string(f.protocol) << ','
          << format_double(f.demand_mbps) << ',' << format_double(f.offered_mbps) << ','
          << format_double(f.delivered_mbps) << ',' << format_double(f.loss) << ','
          << format_double(f.delay_ms) << '\n';
    }
  }
}

void write_trace_csv(std::ostream& out, std::span<const RunOutput> runs) {
  out << "run,tick,generation,evaluations,front_size,best_util,best_cost,best_delay,"
         "median_util,median_cost,median_delay\n";
  for (const auto& run : runs) {
    for (const auto& t : run.result.trace) {
      const auto& s = t.stats;
      out << run.run << ',' << t.tick << ',' << s.generation << ',' << s.evaluations << ',' << s.front_size
          << ',' << format_double(s.best.util) << ',' << s.best.cost << ',' << s.best.delay << ','
          << format_double(s.median.util) << ',' << s.median.cost << ',' << s.median.delay << '\n';
    }
  }
}

WeightedSummary summarize_exp3(std::span<const FlowTickRow> rows,
                               const std::map<std::string, double>& type_throughput_mbps) {
  std::map<std::string, TypeStat> by_type;
  for (const auto& row : rows) {
    TypeStat& s = by_type[row.type];
    s.type = row.type;
    s.delay_s += row.delay_ms / 1000.0;
    s.loss_pct += row.loss * 100.0;
    ++s.samples;
  }
  WeightedSummary summary;
  double weight_sum = 0.0;
  for (auto& [type, s] : by_type) {
    const double n = static_cast<double>(s.samples);
    s.delay_s /= n;
    s.loss_pct /= n;
    const auto it = type_throughput_mbps.find(type);
    s.throughput_mbps = it == type_throughput_mbps.end() ? 0.0 : it->second;
    weight_sum += s.throughput_mbps;
    summary.delay_s += s.delay_s * s.throughput_mbps;
    summary.loss_pct += s.loss_pct * s.throughput_mbps;
    summary.types.push_back(s);
  }
  if (weight_sum > 0.0) {
    summary.delay_s /= weight_sum;
    summary.loss_pct /= weight_sum;
  }
  return summary;
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in length");
  if (x.size() < 3) throw std::invalid_argument("regression needs at least 3 points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("regression x values have zero variance");

  LinearFit fit;
  fit.points = x.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy == 0.0) {
    fit.r2 = 0.0;
    fit.r2_defined = false;
    return fit;
  }
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r2 = 1.0 - ss_res / syy;
  return fit;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

std::map<std::string, double> run_metrics(const RunResult& result,
                                          const std::map<std::string, double>& type_throughput_mbps) {
  std::map<std::string, double> m;
  double peak = 0.0;
  double congested = 0.0;
  double changed = 0.0;
  std::vector<double> post;
  std::vector<double> search;
  for (const auto& t : result.ticks) {
    peak = std::max(peak, t.max_util);
    if (t.congested) congested += 1.0;
    if (t.fitness) {
      post.push_back(t.post_util);
      search.push_back(t.search_ms);
      changed += static_cast<double>(t.flows_changed);
    }
  }
  m["peak_max_util"] = peak;
  m["congested_ticks"] = congested;
  m["adaptations"] = static_cast<double>(post.size());
  m["flows_changed"] = changed;
  m["dropped_requests"] = static_cast<double>(result.dropped.size());
  if (!post.empty()) {
    m["post_adaptation_util"] = median(post);
    m["search_ms_mean"] = std::accumulate(search.begin(), search.end(), 0.0) / static_cast<double>(search.size());
  }
  if (!result.flows.empty()) {
    const auto summary = summarize_exp3(result.flows, type_throughput_mbps);
    m["weighted_delay_s"] = summary.delay_s;
    m["weighted_loss_pct"] = summary.loss_pct;
    for (const auto& s : summary.types) {
      m["delay_s:" + s.type] = s.delay_s;
      m["loss_pct:" + s.type] = s.loss_pct;
    }
  }
  return m;
}

std::vector<SummaryRow> summarize_runs(std::span<const RunOutput> runs,
                                       const std::map<std::string, double>& type_throughput_mbps) {
  std::map<std::string, std::vector<double>> values;
  for (const auto& run : runs) {
    for (const auto& [name, v] : run_metrics(run.result, type_throughput_mbps)) values[name].push_back(v);
  }
  std::vector<SummaryRow> rows;
  for (auto& [name, v] : values) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    rows.push_back(SummaryRow{name, median(v), *lo, *hi, v.size()});
  }
  return rows;
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "metric,median,min,max,runs\n";
  for (const auto& r : rows) {
    out << r.metric << ',' << format_double(r.median) << ',' << format_double(r.min) << ','
        << format_double(r.max) << ',' << r.runs << '\n';
  }
}

}  // namespace dices
