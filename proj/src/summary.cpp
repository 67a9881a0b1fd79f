#include "ialign/harness/summary.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ialign/harness/csv.hpp"

namespace ialign::harness {

namespace {

double sorted_median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

struct Group {
  std::string scenario;
  Algorithm algorithm;
  std::vector<const RunRecord*> records;
};

std::vector<Group> group_records(const std::vector<RunRecord>& records) {
  std::vector<Group> groups;
  for (const RunRecord& rec : records) {
    auto it = std::find_if(groups.begin(), groups.end(), [&rec](const Group& g) {
      return g.scenario == rec.scenario && g.algorithm == rec.algorithm;
    });
    if (it == groups.end()) {
      groups.push_back({rec.scenario, rec.algorithm, {}});
      it = groups.end() - 1;
    }
    it->records.push_back(&rec);
  }
  return groups;
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
  if (records.empty()) throw std::invalid_argument("no run records to summarize");
  std::vector<SummaryRow> rows;
  for (const Group& group : group_records(records)) {
    SummaryRow row;
    row.scenario = group.scenario;
    row.algorithm = group.algorithm;
    row.num_users = group.records.front()->num_users;
    row.dimension = group.records.front()->dimension;
    row.runs = static_cast<int>(group.records.size());

    std::vector<double> leakages;
    leakages.reserve(group.records.size());
    int rank_passes = 0;
    double wall_total = 0;
    for (const RunRecord* rec : group.records) {
      leakages.push_back(rec->final_leakage);
      rank_passes += rec->rank_pass ? 1 : 0;
      wall_total += rec->wall_seconds;
    }
    row.best_il = *std::min_element(leakages.begin(), leakages.end());
    row.worst_il = *std::max_element(leakages.begin(), leakages.end());
    row.median_il = sorted_median(leakages);
    row.rank_pass_fraction = static_cast<double>(rank_passes) / row.runs;
    row.mean_wall_s = wall_total / row.runs;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out =
      "scenario,algorithm,k,dimension,runs,best_il,median_il,worst_il,"
      "rank_pass_fraction,mean_wall_s\n";
  for (const SummaryRow& row : rows) {
    out += row.scenario;
    out += ',';
    out += algorithm_name(row.algorithm);
    out += ',';
    out += std::to_string(row.num_users);
    out += ',';
    out += std::to_string(row.dimension);
    out += ',';
    out += std::to_string(row.runs);
    out += ',';
    out += format_double(row.best_il);
    out += ',';
    out += format_double(row.median_il);
    out += ',';
    out += format_double(row.worst_il);
    out += ',';
    out += format_double(row.rank_pass_fraction);
    out += ',';
    out += format_double(row.mean_wall_s);
    out += '\n';
  }
  return out;
}

std::string summary_table(const std::vector<SummaryRow>& rows) {
  const std::vector<std::string> header = {"scenario",  "algo",      "k",
                                           "dimension", "runs",      "best_il",
                                           "median_il", "worst_il",  "rank_pass",
                                           "mean_wall_s"};
  std::vector<std::vector<std::string>> cells;
  cells.push_back(header);
  for (const SummaryRow& row : rows) {
    cells.push_back({row.scenario, algorithm_name(row.algorithm), std::to_string(row.num_users),
                     std::to_string(row.dimension), std::to_string(row.runs),
                     format_double(row.best_il), format_double(row.median_il),
                     format_double(row.worst_il), format_double(row.rank_pass_fraction),
                     format_double(row.mean_wall_s)});
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      widths[c] = std::max(widths[c], line[c].size());
    }
  }
  std::string out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out += line[c];
      if (c + 1 < line.size()) out += std::string(widths[c] - line[c].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

std::vector<std::filesystem::path> emit_plot_data(const std::vector<RunRecord>& records,
                                                  const std::filesystem::path& out_dir) {
  if (records.empty()) throw std::invalid_argument("no run records to plot");
  std::vector<std::filesystem::path> written;
  for (const Group& group : group_records(records)) {
    std::size_t longest = 0;
    for (const RunRecord* rec : group.records) {
      if (rec->trace.empty()) throw std::invalid_argument("run record has an empty trace");
      longest = std::max(longest, rec->trace.size());
    }
    std::string out = "iteration,median_il,min_il,max_il\n";
    std::vector<double> column(group.records.size());
    for (std::size_t t = 0; t < longest; ++t) {
      for (std::size_t r = 0; r < group.records.size(); ++r) {
        const std::vector<double>& trace = group.records[r]->trace;
        column[r] = t < trace.size() ? trace[t] : trace.back();
      }
      out += std::to_string(t + 1);
      out += ',';
      out += format_double(sorted_median(column));
      out += ',';
      out += format_double(*std::min_element(column.begin(), column.end()));
      out += ',';
      out += format_double(*std::max_element(column.begin(), column.end()));
      out += '\n';
    }
    const std::filesystem::path path =
        out_dir / ("plot_" + group.scenario + "_" + algorithm_name(group.algorithm) + ".csv");
    write_text_file(path, out);
    written.push_back(path);
  }
  return written;
}

}  // namespace ialign::harness
