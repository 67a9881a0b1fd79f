#include "ialign/harness/experiment.hpp"

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "ialign/channel.hpp"
#include "ialign/harness/csv.hpp"
#include "ialign/harness/summary.hpp"
#include "ialign/objective.hpp"
#include "ialign/problem.hpp"
#include "ialign/pso.hpp"
#include "ialign/cpso.hpp"

namespace ialign::harness {

std::string algorithm_name(Algorithm algorithm) {
  return algorithm == Algorithm::kPso ? "pso" : "cpso";
}

namespace {

std::string trace_csv(const std::vector<double>& trace) {
  std::string out = "iteration,best_il\n";
  for (std::size_t t = 0; t < trace.size(); ++t) {
    out += std::to_string(t + 1);
    out += ',';
    out += format_double(trace[t]);
    out += '\n';
  }
  return out;
}

}  // namespace

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (cfg.scenario.empty()) throw std::invalid_argument("scenario label must not be empty");
  if (!(cfg.rank_tol > 0)) throw std::invalid_argument("rank tolerance must be positive");
  const ProblemSpec spec =
      make_problem(cfg.num_users, cfg.tx_antennas, cfg.rx_antennas, cfg.streams);
  validate_config(cfg.optimizer);

  const std::string algo = algorithm_name(cfg.algorithm);
  std::vector<RunRecord> records;
  records.reserve(static_cast<std::size_t>(cfg.runs));
  for (int r = 0; r < cfg.runs; ++r) {
    const std::uint64_t seed = cfg.master_seed + static_cast<std::uint64_t>(r);
    RunRecord rec;
    rec.scenario = cfg.scenario;
    rec.algorithm = cfg.algorithm;
    rec.run_index = r;
    rec.seed = seed;
    rec.num_users = spec.num_users;
    rec.dimension = spec.real_dimension;

    const auto start = std::chrono::steady_clock::now();
    const ChannelSet<double> channels = generate_channels<double>(spec, seed);
    LeakageEvaluator<double> evaluator(channels, spec);
    RunResult<double> result =
        cfg.algorithm == Algorithm::kPso
            ? run_pso<double>(spec.real_dimension, evaluator, cfg.optimizer, seed)
            : run_cpso<double>(spec.real_dimension, evaluator, cfg.optimizer, seed);
    const auto stop = std::chrono::steady_clock::now();

    rec.final_leakage = result.best_cost;
    const RankReport rank = rank_check<double>(result.best, channels, spec, cfg.rank_tol);
    rec.rank_pass = rank.pass;
    rec.achieved_ranks = rank.achieved_rank;
    rec.trace = std::move(result.trace);
    rec.iterations = static_cast<int>(rec.trace.size());
    rec.wall_seconds = std::chrono::duration<double>(stop - start).count();

    if (cfg.write_traces) {
      rec.trace_path = cfg.out_dir / ("trace_" + cfg.scenario + "_" + algo + "_run" +
                                      std::to_string(r) + ".csv");
      write_text_file(rec.trace_path, trace_csv(rec.trace));
    }
    records.push_back(std::move(rec));
  }

  const std::vector<SummaryRow> rows = summarize(records);
  write_text_file(cfg.out_dir / ("summary_" + cfg.scenario + "_" + algo + ".csv"),
                  summary_csv(rows));
  return records;
}

}  // namespace ialign::harness
