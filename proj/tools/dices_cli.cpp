// dices: run scenarios under the DICES controller or a baseline policy and
// emit per-tick / per-flow CSV.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dices/builtins.hpp"
#include "dices/experiments.hpp"
#include "dices/report.hpp"
#include "dices/runner.hpp"
#include "dices/topology_io.hpp"
#include "dices/traffic.hpp"

namespace fs = std::filesystem;
using namespace dices;

namespace {

struct ControlFlags {
  std::uint64_t seed = 0;
  std::int64_t delta_ms = 1000;
  double threshold = 0.8;
  std::size_t psize = 100;
  std::size_t neval = 10'000;
  std::size_t catalog_k = 8;
  std::string budget = "evaluations";
  std::int64_t apply_latency_ms = 0;
  bool reset_weights = false;
  bool no_wallclock = false;
  bool serial = false;

  void attach(CLI::App& app) {
    app.add_option("--seed", seed, "Base seed; run i uses seed + i");
    app.add_option("--delta-ms", delta_ms, "Control period")->check(CLI::PositiveNumber);
    app.add_option("--threshold", threshold, "Utilization threshold u")->check(CLI::Range(0.0, 1.0));
    app.add_option("--psize", psize, "Population size (even)");
    app.add_option("--neval", neval, "Search budget");
    app.add_option("--catalog-k", catalog_k, "Paths per switch pair")->check(CLI::PositiveNumber);
    app.add_option("--budget", budget, "How --neval is counted")
        ->check(CLI::IsMember({"evaluations", "generations"}));
    app.add_option("--apply-latency-ms", apply_latency_ms, "Delay between compute and apply");
    app.add_flag("--reset-weights", reset_weights, "Reset weights of links outside the best solution to 1");
    app.add_flag("--no-wallclock", no_wallclock, "Write search_ms as 0 (byte-reproducible output)");
    app.add_flag("--serial", serial, "Evaluate populations without OpenMP");
  }

  RunConfig config(PolicyKind policy) const {
    RunConfig c;
    c.policy = policy;
    c.control.delta_ms = delta_ms;
    c.control.apply_latency_ms = apply_latency_ms;
    c.control.measure_wallclock = !no_wallclock;
    c.control.search.threshold = threshold;
    c.control.search.psize = psize;
    c.control.search.neval = neval;
    c.control.search.catalog_k = catalog_k;
    c.control.search.budget = budget == "generations" ? BudgetMode::generations : BudgetMode::evaluations;
    c.control.search.parallel_evaluation = !serial;
    c.control.weights.threshold = threshold;
    c.control.weights.reset_untouched_weights = reset_weights;
    return c;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

struct Loaded {
  Network network;
  TrafficScenario scenario;
};

Loaded load(const std::string& scenario_ref, const std::string& topology_ref) {
  if (is_builtin_scenario(scenario_ref)) {
    Network network = resolve_topology(topology_ref.empty() ? builtin_scenario_topology(scenario_ref) : topology_ref);
    TrafficScenario scenario = builtin_scenario(scenario_ref, network);
    return {std::move(network), std::move(scenario)};
  }
  const std::string text = read_file(scenario_ref);
  std::string topo = topology_ref.empty() ? scenario_topology(text) : topology_ref;
  // file references are relative to the scenario file
  if (topology_ref.empty() && !is_builtin_topology(topo) && fs::path(topo).is_relative()) {
    topo = (fs::path(scenario_ref).parent_path() / topo).string();
  }
  Network network = resolve_topology(topo);
  TrafficScenario scenario = parse_scenario(text, network);
  return {std::move(network), std::move(scenario)};
}

void print_exp3_table(std::ostream& out, const std::string& policy, const WeightedSummary& s) {
  out << policy << '\n';
  std::fprintf(stdout, "  %-12s %12s %10s %10s\n", "type", "Mbps", "delay_s", "loss_%");
  for (const auto& t : s.types) {
    std::fprintf(stdout, "  %-12s %12.3f %10.4f %10.3f\n", t.type.c_str(), t.throughput_mbps, t.delay_s,
                 t.loss_pct);
  }
  std::fprintf(stdout, "  %-12s %12s %10.4f %10.3f\n", "weighted", "", s.delay_s, s.loss_pct);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DICES congestion control on a flow-level SDN simulator"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run one scenario under one policy");
  ControlFlags run_flags;
  std::string topology, scenario_ref, policy = "dices", out_dir = ".";
  std::size_t repeat = 1;
  bool trace = false;
  run->add_option("--topology", topology, "Builtin name or JSON file (default: the scenario's)");
  run->add_option("--scenario", scenario_ref, "Builtin name or JSON file")->required();
  run->add_option("--policy", policy, "Forwarding policy")->check(CLI::IsMember({"dices", "rfwd", "ospf"}));
  run->add_option("--repeat", repeat, "Number of seeded runs")->check(CLI::PositiveNumber);
  run->add_option("--out", out_dir, "Output directory");
  run->add_flag("--trace-search", trace, "Write per-generation search statistics to trace.csv");
  run_flags.attach(*run);

  // exp2
  auto* exp2 = app.add_subcommand("exp2", "Compute-step scaling over network size and request count");
  ControlFlags exp2_flags;
  std::size_t exp2_runs = 10;
  std::string exp2_out = ".";
  exp2->add_option("--runs", exp2_runs, "Runs per configuration")->check(CLI::PositiveNumber);
  exp2->add_option("--out", exp2_out, "Output directory");
  exp2_flags.attach(*exp2);

  // exp3
  auto* exp3 = app.add_subcommand("exp3", "EMS case study under all three policies");
  ControlFlags exp3_flags;
  std::size_t exp3_runs = 50;
  std::string exp3_out = ".";
  exp3->add_option("--runs", exp3_runs, "Seeded runs per policy")->check(CLI::PositiveNumber);
  exp3->add_option("--out", exp3_out, "Output directory");
  exp3_flags.attach(*exp3);

  // export
  auto* exp = app.add_subcommand("export", "Write builtin topologies and scenarios as JSON");
  std::string export_dir = "data";
  exp->add_option("--out", export_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const Loaded loaded = load(scenario_ref, topology);
      const RunConfig config = run_flags.config(parse_policy(policy));
      config.control.search.validate();
      RunConfig traced = config;
      traced.trace_search = trace;
      const auto runs = run_repeated(loaded.network, loaded.scenario, traced, run_flags.seed, repeat);

      fs::create_directories(out_dir);
      std::ostringstream ticks, flows, summary;
      write_ticks_csv(ticks, runs, loaded.network);
      write_flows_csv(flows, runs);
      const auto rows = summarize_runs(runs, loaded.scenario.type_throughput_mbps());
      write_summary_csv(summary, rows);
      write_file(fs::path(out_dir) / "ticks.csv", ticks.str());
      write_file(fs::path(out_dir) / "flows.csv", flows.str());
      write_file(fs::path(out_dir) / "summary.csv", summary.str());
      if (trace) {
        std::ostringstream t;
        write_trace_csv(t, runs);
        write_file(fs::path(out_dir) / "trace.csv", t.str());
      }
      std::cout << summary.str();
      return 0;
    }

    if (*exp2) {
      const RunConfig config = exp2_flags.config(PolicyKind::dices_dynamic);
      const std::vector<std::size_t> params{5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
      fs::create_directories(exp2_out);
      std::ostringstream csv;
      csv << "study,parameter,links,requests,run,compute_ms\n";
      for (const auto study : {Exp2Study::size, Exp2Study::requests}) {
        const auto samples = run_exp2(study, params, exp2_runs, config, exp2_flags.seed);
        for (const auto& s : samples) {
          csv << (study == Exp2Study::size ? "size" : "requests") << ',' << s.parameter << ',' << s.links << ','
              << s.requests << ',' << s.run << ',' << format_double(s.compute_ms) << '\n';
        }
        const LinearFit fit = fit_exp2(samples);
        std::cout << (study == Exp2Study::size ? "links" : "requests") << ": compute_ms = "
                  << format_double(fit.intercept) << " + " << format_double(fit.slope) << " x, R2 = "
                  << format_double(fit.r2) << (fit.r2_defined ? "" : " (undefined)") << '\n';
      }
      write_file(fs::path(exp2_out) / "exp2.csv", csv.str());
      return 0;
    }

    if (*exp3) {
      const Network network = ems_topology();
      const TrafficScenario scenario = exp3_scenario(network);
      const auto weights = scenario.type_throughput_mbps();
      fs::create_directories(exp3_out);
      std::ostringstream csv;
      csv << "policy,type,throughput_mbps,delay_s,loss_pct\n";
      for (const auto kind : {PolicyKind::dices_dynamic, PolicyKind::rfwd_unit, PolicyKind::ospf_inverse_bw}) {
        const auto runs = run_repeated(network, scenario, exp3_flags.config(kind), exp3_flags.seed, exp3_runs);
        std::vector<FlowTickRow> pooled;
        for (const auto& r : runs) pooled.insert(pooled.end(), r.result.flows.begin(), r.result.flows.end());
        const WeightedSummary s = summarize_exp3(pooled, weights);
        for (const auto& t : s.types) {
          csv << to_string(kind) << ',' << t.type << ',' << format_double(t.throughput_mbps) << ','
              << format_double(t.delay_s) << ',' << format_double(t.loss_pct) << '\n';
        }
        csv << to_string(kind) << ",weighted,," << format_double(s.delay_s) << ','
            << format_double(s.loss_pct) << '\n';
        print_exp3_table(std::cout, std::string(to_string(kind)), s);
      }
      write_file(fs::path(exp3_out) / "exp3.csv", csv.str());
      return 0;
    }

    if (*exp) {
      const fs::path root(export_dir);
      fs::create_directories(root / "topologies");
      fs::create_directories(root / "scenarios");
      for (const auto& name : builtin_topology_names()) {
        write_file(root / "topologies" / (name + ".json"), dump_topology(builtin_topology(name)));
      }
      for (const auto& name : builtin_scenario_names()) {
        const std::string topo = builtin_scenario_topology(name);
        const Network network = builtin_topology(topo);
        TrafficScenario s = builtin_scenario(name, network);
        s.topology = "../topologies/" + topo + ".json";
        write_file(root / "scenarios" / (name + ".json"), dump_scenario(s, network));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "dices: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
