#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ialign/harness/experiment.hpp"

namespace ialign::harness {

// Aggregate of one (scenario, algorithm) group of runs.
struct SummaryRow {
  std::string scenario;
  Algorithm algorithm = Algorithm::kPso;
  int num_users = 0;
  int dimension = 0;
  int runs = 0;
  double best_il = 0;
  double median_il = 0;
  double worst_il = 0;
  double rank_pass_fraction = 0;
  double mean_wall_s = 0;
};

// Groups records by (scenario, algorithm) in first-appearance order and
// aggregates final leakages: best = min, worst = max, median = sorted middle
// (mean of the two middles for even counts). Throws std::invalid_argument on
// empty input.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);

// CSV rendering with header
// scenario,algorithm,k,dimension,runs,best_il,median_il,worst_il,rank_pass_fraction,mean_wall_s
std::string summary_csv(const std::vector<SummaryRow>& rows);

// Column-aligned text table of the same rows.
std::string summary_table(const std::vector<SummaryRow>& rows);

// Per (scenario, algorithm) group writes plot_<scenario>_<algo>.csv with
// columns iteration,median_il,min_il,max_il taken across the group's runs at
// each iteration. Traces shorter than the group's longest are extended with
// their final value. Returns the written paths.
std::vector<std::filesystem::path> emit_plot_data(const std::vector<RunRecord>& records,
                                                  const std::filesystem::path& out_dir);

}  // namespace ialign::harness
