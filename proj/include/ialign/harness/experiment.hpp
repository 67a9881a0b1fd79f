#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ialign/pso.hpp"

namespace ialign::harness {

enum class Algorithm { kPso, kCpso };

// Lowercase name used in CSV cells and output file names.
std::string algorithm_name(Algorithm algorithm);

// One campaign: a scenario, an optimizer, and a number of independent runs.
// Run r uses seed master_seed + r, which drives both its channel realization
// and its swarm randomness, so a campaign is reproducible from the config
// alone. PSO and CPSO campaigns with the same master seed therefore optimize
// the same channel realizations.
struct ExperimentConfig {
  std::string scenario;  // label used in file names and summary rows
  Algorithm algorithm = Algorithm::kPso;
  int num_users = 3;
  int tx_antennas = 5;
  int rx_antennas = 5;
  int streams = 2;
  PsoConfig optimizer;
  int runs = 10;
  std::uint64_t master_seed = 1;
  double rank_tol = 1e-8;
  std::filesystem::path out_dir = ".";
  bool write_traces = true;
};

// Result of a single run. final_leakage is always the last trace entry.
struct RunRecord {
  std::string scenario;
  Algorithm algorithm = Algorithm::kPso;
  int run_index = 0;
  std::uint64_t seed = 0;
  int num_users = 0;
  int dimension = 0;
  double final_leakage = 0;
  int iterations = 0;
  bool rank_pass = false;
  std::vector<int> achieved_ranks;
  double wall_seconds = 0;
  std::vector<double> trace;
  std::filesystem::path trace_path;  // empty when traces are disabled
};

// Runs the campaign sequentially (runs share nothing but the config, so the
// order does not affect results). Writes trace_<scenario>_<algo>_run<r>.csv
// per run when enabled and summary_<scenario>_<algo>.csv at the end, then
// returns the records.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);

}  // namespace ialign::harness
