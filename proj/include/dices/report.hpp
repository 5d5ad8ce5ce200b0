#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dices/network.hpp"
#include "dices/runner.hpp"

namespace dices {

struct RunOutput {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  RunResult result;
};

/// Shortest round-trip decimal form; identical bits give identical text.
std::string format_double(double value);

// CSV schemas (one header line, comma separated, '\n' line endings):
//   ticks.csv   run,seed,tick,time_ms,flows,max_util,congested,congested_links,search_ms,
//               fit_util,fit_cost,fit_delay,evaluations,flows_changed,weights_changed,post_util
//   flows.csv   run,tick,flow_id,type,protocol,demand_mbps,offered_mbps,delivered_mbps,loss,delay_ms
//   trace.csv   run,tick,generation,evaluations,front_size,best_util,best_cost,best_delay,
//               median_util,median_cost,median_delay
//   summary.csv metric,median,min,max,runs
// congested_links is a ';'-separated list of link ids; the fitness columns are
// empty on ticks without a search.
void write_ticks_csv(std::ostream& out, std::span<const RunOutput> runs, const Network& network);
void write_flows_csv(std::ostream& out, std::span<const RunOutput> runs);
void write_trace_csv(std::ostream& out, std::span<const RunOutput> runs);

struct TypeStat {
  std::string type;
  double throughput_mbps = 0.0;  // weight: requested rate of the type
  double delay_s = 0.0;          // mean per-flow delay
  double loss_pct = 0.0;         // mean per-flow loss
  std::size_t samples = 0;
};

struct WeightedSummary {
  std::vector<TypeStat> types;
  double delay_s = 0.0;
  double loss_pct = 0.0;
};

/// Per-type mean delay and loss over flow rows, and their averages weighted
/// by each type's total requested throughput. Types without rows are
/// skipped.
WeightedSummary summarize_exp3(std::span<const FlowTickRow> rows,
                               const std::map<std::string, double>& type_throughput_mbps);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  /// False when y has zero variance; r2 is then reported as 0.
  bool r2_defined = true;
  std::size_t points = 0;
};

/// Ordinary least squares. Throws std::invalid_argument for fewer than 3
/// points, mismatched sizes, or zero variance in x.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

double median(std::vector<double> values);

/// Scalar metrics of one run, keyed by name.
std::map<std::string, double> run_metrics(const RunResult& result,
                                          const std::map<std::string, double>& type_throughput_mbps);

struct SummaryRow {
  std::string metric;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t runs = 0;
};

/// Median, min and max of every run metric across runs. A metric missing
/// from some runs is summarized over the runs that define it.
std::vector<SummaryRow> summarize_runs(std::span<const RunOutput> runs,
                                       const std::map<std::string, double>& type_throughput_mbps);
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

}  // namespace dices
