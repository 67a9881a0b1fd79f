#pragma once

#include <string>
#include <vector>

#include "ialign/errors.hpp"

namespace ialign {

// A K-user interference channel scenario: per-user transmit/receive antenna
// counts and stream counts, plus the derived variable/equation bookkeeping.
// Immutable after construction through make_problem.
struct ProblemSpec {
  int num_users = 0;             // K
  std::vector<int> tx_antennas;  // M_i
  std::vector<int> rx_antennas;  // N_i
  std::vector<int> streams;      // d_i

  // Complex precoder/decoder entries across all users: sum_i (M_i + N_i) d_i.
  int complex_variables = 0;
  // Scalar alignment equations: sum_{i != j} d_i d_j.
  int complex_equations = 0;
  // Length of the packed real vector, two reals per complex variable.
  int real_dimension = 0;
  // Variable count covers the equation count. When false, exact alignment is
  // generically impossible and the minimum leakage stays bounded away from
  // zero; the scenario remains a valid optimization target.
  bool proper = false;
};

inline ProblemSpec make_problem(int num_users, std::vector<int> tx_antennas,
                                std::vector<int> rx_antennas, std::vector<int> streams) {
  if (num_users < 1) {
    throw InvalidDimensionsError("user count must be at least 1, got " +
                                 std::to_string(num_users));
  }
  const auto k = static_cast<std::size_t>(num_users);
  if (tx_antennas.size() != k || rx_antennas.size() != k || streams.size() != k) {
    throw InvalidDimensionsError("antenna/stream lists must have one entry per user");
  }
  for (int i = 0; i < num_users; ++i) {
    const int m = tx_antennas[i];
    const int n = rx_antennas[i];
    const int d = streams[i];
    if (m < 1 || n < 1 || d < 1) {
      throw InvalidDimensionsError("antenna and stream counts must be positive (user " +
                                   std::to_string(i) + ")");
    }
    if (d > std::min(m, n)) {
      throw InvalidDimensionsError("stream count exceeds min(M, N) for user " +
                                   std::to_string(i));
    }
  }

  ProblemSpec spec;
  spec.num_users = num_users;
  spec.tx_antennas = std::move(tx_antennas);
  spec.rx_antennas = std::move(rx_antennas);
  spec.streams = std::move(streams);
  for (int i = 0; i < num_users; ++i) {
    spec.complex_variables += (spec.tx_antennas[i] + spec.rx_antennas[i]) * spec.streams[i];
    for (int j = 0; j < num_users; ++j) {
      if (j != i) spec.complex_equations += spec.streams[i] * spec.streams[j];
    }
  }
  spec.real_dimension = 2 * spec.complex_variables;
  spec.proper = spec.complex_variables >= spec.complex_equations;
  return spec;
}

// Scalar counts broadcast to every user.
inline ProblemSpec make_problem(int num_users, int tx_antennas, int rx_antennas, int streams) {
  if (num_users < 1) {
    throw InvalidDimensionsError("user count must be at least 1, got " +
                                 std::to_string(num_users));
  }
  const auto k = static_cast<std::size_t>(num_users);
  return make_problem(num_users, std::vector<int>(k, tx_antennas),
                      std::vector<int>(k, rx_antennas), std::vector<int>(k, streams));
}

}  // namespace ialign
