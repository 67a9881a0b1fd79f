#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ialign/errors.hpp"
#include "ialign/harness/csv.hpp"
#include "ialign/harness/experiment.hpp"
#include "ialign/harness/summary.hpp"
#include "ialign/pso.hpp"

namespace {

using ialign::OmegaMode;
using ialign::PsoConfig;
namespace harness = ialign::harness;

struct Settings {
  int k = 3;
  int m = 5;
  int n = 5;
  int d = 2;
  std::string algo = "cpso";
  std::optional<int> swarm_size;
  std::optional<double> omega;
  std::optional<double> omega_c;
  int iters = 5000;
  int runs = 10;
  std::uint64_t seed = 1;
  double init_lo = -1.0;
  double init_hi = 1.0;
  double rank_tol = 1e-8;
  std::string out_dir = ".";
  bool trace = true;
  bool paper = false;
};

void apply_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ialign::IoError("cannot open config file " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  if (doc.contains("k")) s.k = doc["k"].get<int>();
  if (doc.contains("m")) s.m = doc["m"].get<int>();
  if (doc.contains("n")) s.n = doc["n"].get<int>();
  if (doc.contains("d")) s.d = doc["d"].get<int>();
  if (doc.contains("algo")) s.algo = doc["algo"].get<std::string>();
  if (doc.contains("swarm_size")) s.swarm_size = doc["swarm_size"].get<int>();
  if (doc.contains("omega")) s.omega = doc["omega"].get<double>();
  if (doc.contains("omega_c")) s.omega_c = doc["omega_c"].get<double>();
  if (doc.contains("iters")) s.iters = doc["iters"].get<int>();
  if (doc.contains("runs")) s.runs = doc["runs"].get<int>();
  if (doc.contains("seed")) s.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("init_lo")) s.init_lo = doc["init_lo"].get<double>();
  if (doc.contains("init_hi")) s.init_hi = doc["init_hi"].get<double>();
  if (doc.contains("rank_tol")) s.rank_tol = doc["rank_tol"].get<double>();
  if (doc.contains("out_dir")) s.out_dir = doc["out_dir"].get<std::string>();
  if (doc.contains("trace")) s.trace = doc["trace"].get<bool>();
  if (doc.contains("paper")) s.paper = doc["paper"].get<bool>();
}

harness::Algorithm parse_algorithm(const std::string& name) {
  if (name == "pso") return harness::Algorithm::kPso;
  if (name == "cpso") return harness::Algorithm::kCpso;
  throw std::invalid_argument("unknown algorithm '" + name + "' (expected pso or cpso)");
}

PsoConfig make_optimizer(const Settings& s, harness::Algorithm algorithm) {
  if (s.omega && s.omega_c) {
    throw std::invalid_argument("--omega and --omega-c are mutually exclusive");
  }
  const bool pso = algorithm == harness::Algorithm::kPso;
  PsoConfig cfg;
  cfg.swarm_size = s.swarm_size.value_or(pso ? 100 : 50);
  if (s.omega_c) {
    cfg.omega = OmegaMode::scaled(*s.omega_c);
  } else {
    cfg.omega = OmegaMode::fixed(s.omega.value_or(pso ? 3.0 : 1e-3));
  }
  cfg.max_iters = s.iters;
  cfg.init_lo = s.init_lo;
  cfg.init_hi = s.init_hi;
  return cfg;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ialign::InvalidDimensionsError*>(&e)) return "invalid_dimensions";
  if (dynamic_cast<const ialign::DimensionMismatchError*>(&e)) return "dimension_mismatch";
  if (dynamic_cast<const ialign::SingularChannelError*>(&e)) return "singular_channel";
  if (dynamic_cast<const ialign::NonFiniteCostError*>(&e)) return "non_finite_cost";
  if (dynamic_cast<const ialign::IoError*>(&e)) return "io";
  if (dynamic_cast<const nlohmann::json::exception*>(&e)) return "config_parse";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid_argument";
  if (dynamic_cast<const std::out_of_range*>(&e)) return "out_of_range";
  return "error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Minimizes interference leakage in the K-user MIMO interference channel "
      "with swarm optimizers and reports per-run traces and campaign summaries."};

  std::string config_path;
  Settings cli;
  app.add_option("--config", config_path, "JSON config file; explicit flags override it");
  auto* k_opt = app.add_option("--k", cli.k, "number of users");
  auto* m_opt = app.add_option("--m", cli.m, "transmit antennas per user");
  auto* n_opt = app.add_option("--n", cli.n, "receive antennas per user");
  auto* d_opt = app.add_option("--d", cli.d, "streams per user");
  auto* algo_opt = app.add_option("--algo", cli.algo, "optimizer: pso or cpso (default cpso)");
  int swarm_cli = 0;
  auto* swarm_opt =
      app.add_option("--swarm-size", swarm_cli, "particles per swarm (default: pso 100, cpso 50)");
  double omega_cli = 0;
  auto* omega_opt =
      app.add_option("--omega", omega_cli, "fixed velocity weight (default: pso 3, cpso 1e-3)");
  double omega_c_cli = 0;
  auto* omega_c_opt = app.add_option("--omega-c", omega_c_cli,
                                     "scaled mode: omega = c * U[0,1] redrawn per update");
  auto* iters_opt = app.add_option("--iters", cli.iters, "iterations per run");
  auto* runs_opt = app.add_option("--runs", cli.runs, "independent runs per campaign");
  auto* seed_opt = app.add_option("--seed", cli.seed, "master seed; run r uses seed + r");
  auto* lo_opt = app.add_option("--init-lo", cli.init_lo, "initialization range lower bound");
  auto* hi_opt = app.add_option("--init-hi", cli.init_hi, "initialization range upper bound");
  auto* tol_opt = app.add_option("--rank-tol", cli.rank_tol, "relative rank tolerance");
  auto* out_opt = app.add_option("--out-dir", cli.out_dir, "output directory for CSV files");
  auto* trace_opt =
      app.add_flag("--trace,!--no-trace", cli.trace, "write per-run trace CSVs (default on)");
  auto* paper_opt = app.add_flag(
      "--paper", cli.paper,
      "run all six 5x5, d=2 scenarios (K=3,5,7,9,11,13) with both optimizers; expensive at "
      "full settings, scale down with --iters/--runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) {
      nlohmann::json err = {{"error", "cli_parse"}, {"message", e.what()}};
      std::cerr << err.dump() << "\n";
    }
    return app.exit(e);
  }

  try {
    Settings s;
    if (!config_path.empty()) apply_config_file(s, config_path);
    if (k_opt->count()) s.k = cli.k;
    if (m_opt->count()) s.m = cli.m;
    if (n_opt->count()) s.n = cli.n;
    if (d_opt->count()) s.d = cli.d;
    if (algo_opt->count()) s.algo = cli.algo;
    if (swarm_opt->count()) s.swarm_size = swarm_cli;
    if (omega_opt->count()) s.omega = omega_cli;
    if (omega_c_opt->count()) s.omega_c = omega_c_cli;
    if (iters_opt->count()) s.iters = cli.iters;
    if (runs_opt->count()) s.runs = cli.runs;
    if (seed_opt->count()) s.seed = cli.seed;
    if (lo_opt->count()) s.init_lo = cli.init_lo;
    if (hi_opt->count()) s.init_hi = cli.init_hi;
    if (tol_opt->count()) s.rank_tol = cli.rank_tol;
    if (out_opt->count()) s.out_dir = cli.out_dir;
    if (trace_opt->count()) s.trace = cli.trace;
    if (paper_opt->count()) s.paper = cli.paper;

    std::vector<harness::RunRecord> records;
    auto run_campaign = [&records, &s](int k, int m, int n, int d, harness::Algorithm algorithm) {
      harness::ExperimentConfig cfg;
      cfg.scenario = "k" + std::to_string(k);
      cfg.algorithm = algorithm;
      cfg.num_users = k;
      cfg.tx_antennas = m;
      cfg.rx_antennas = n;
      cfg.streams = d;
      cfg.optimizer = make_optimizer(s, algorithm);
      cfg.runs = s.runs;
      cfg.master_seed = s.seed;
      cfg.rank_tol = s.rank_tol;
      cfg.out_dir = s.out_dir;
      cfg.write_traces = s.trace;
      std::cerr << "running " << cfg.scenario << " " << harness::algorithm_name(algorithm) << ": "
                << cfg.runs << " runs, swarm " << cfg.optimizer.swarm_size << ", "
                << cfg.optimizer.max_iters << " iterations\n";
      std::vector<harness::RunRecord> batch = harness::run_experiment(cfg);
      records.insert(records.end(), batch.begin(), batch.end());
    };

    if (s.paper) {
      for (int k : {3, 5, 7, 9, 11, 13}) {
        run_campaign(k, 5, 5, 2, harness::Algorithm::kPso);
        run_campaign(k, 5, 5, 2, harness::Algorithm::kCpso);
      }
    } else {
      run_campaign(s.k, s.m, s.n, s.d, parse_algorithm(s.algo));
    }

    const std::vector<harness::SummaryRow> rows = harness::summarize(records);
    harness::write_text_file(std::filesystem::path(s.out_dir) / "summary.csv",
                             harness::summary_csv(rows));
    if (s.trace) harness::emit_plot_data(records, s.out_dir);
    std::cout << harness::summary_table(rows);
    return 0;
  } catch (const std::exception& e) {
    nlohmann::json err = {{"error", error_kind(e)}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
