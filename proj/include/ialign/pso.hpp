#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ialign/errors.hpp"
#include "ialign/rng.hpp"
#include "ialign/types.hpp"

namespace ialign {

// Scaling parameter for the velocity update: either a fixed value, or
// omega = c * r3 with r3 ~ U[0,1] redrawn for every particle update.
struct OmegaMode {
  enum class Kind { kFixed, kScaled };
  Kind kind = Kind::kFixed;
  double value = 1.0;  // omega when fixed, c when scaled

  static OmegaMode fixed(double omega) { return {Kind::kFixed, omega}; }
  static OmegaMode scaled(double c) { return {Kind::kScaled, c}; }
};

struct PsoConfig {
  int swarm_size = 100;
  OmegaMode omega = OmegaMode::fixed(1.0);
  double init_lo = -1.0;  // uniform position initialization range
  double init_hi = 1.0;
  int max_iters = 1000;
  std::optional<double> target_cost;  // stop once the best cost reaches it
};

inline void validate_config(const PsoConfig& cfg) {
  if (cfg.swarm_size < 2) throw InvalidDimensionsError("swarm size must be at least 2");
  if (!(cfg.init_lo < cfg.init_hi)) {
    throw InvalidDimensionsError("initialization range must satisfy lo < hi");
  }
  if (cfg.max_iters < 1) throw InvalidDimensionsError("iteration budget must be at least 1");
  if (!(cfg.omega.value > 0)) throw InvalidDimensionsError("omega parameter must be positive");
}

// One swarm: particles are stored one per column. Personal and global bests
// carry their cost values; both are non-increasing over the run.
template <typename Scalar>
struct SwarmState {
  MatrixX<Scalar> positions;   // dim x swarm_size
  MatrixX<Scalar> velocities;  // dim x swarm_size
  MatrixX<Scalar> personal_best;
  VectorX<Scalar> personal_best_cost;
  VectorX<Scalar> global_best;
  Scalar global_best_cost = std::numeric_limits<Scalar>::infinity();
  int global_best_index = 0;
  int iteration = 0;
};

template <typename Scalar>
struct RunResult {
  VectorX<Scalar> best;
  Scalar best_cost = std::numeric_limits<Scalar>::infinity();
  std::vector<Scalar> trace;  // best-so-far cost after each iteration
};

namespace detail {

template <typename Scalar>
void ensure_finite(Scalar cost, int iteration, int particle) {
  if (!std::isfinite(cost)) {
    throw NonFiniteCostError("cost function returned a non-finite value (" +
                             std::to_string(static_cast<double>(cost)) + ") at iteration " +
                             std::to_string(iteration) + ", particle " +
                             std::to_string(particle));
  }
}

// Draws for one particle update, in the order they are consumed from the
// stream: random informant index, mixing weight r, then r3 when omega is
// scaled. The order is part of the determinism contract.
template <typename Scalar>
struct UpdateDraws {
  int informant = 0;
  Scalar mix = 0;
  Scalar omega = 0;
};

template <typename Scalar>
UpdateDraws<Scalar> draw_update(Rng& rng, int swarm_size, const OmegaMode& omega) {
  UpdateDraws<Scalar> draws;
  draws.informant = rng.index(swarm_size);
  draws.mix = static_cast<Scalar>(rng.uniform());
  draws.omega = omega.kind == OmegaMode::Kind::kScaled
                    ? static_cast<Scalar>(omega.value * rng.uniform())
                    : static_cast<Scalar>(omega.value);
  return draws;
}

}  // namespace detail

// The modified velocity/position update for one particle:
//
//   v <- omega * |p_other - p_self| * sign(v) + r * (p_self - x) + (1 - r) * (p_global - x)
//   x <- x + v
//
// applied coefficient-wise, with sign(0) = 0 so a resting particle sitting at
// the shared best receives no kick. p_other is the personal best of a
// uniformly drawn particle (self allowed); r is shared across the dimensions
// of one particle update.
template <typename Scalar, typename VecV, typename VecX, typename VecPS, typename VecPO,
          typename VecPG>
void velocity_position_update(Eigen::MatrixBase<VecV> const& velocity_in,
                              Eigen::MatrixBase<VecX> const& position_in,
                              const Eigen::MatrixBase<VecPS>& best_self,
                              const Eigen::MatrixBase<VecPO>& best_other,
                              const Eigen::MatrixBase<VecPG>& best_global, Scalar omega,
                              Scalar mix) {
  auto& velocity = const_cast<Eigen::MatrixBase<VecV>&>(velocity_in);
  auto& position = const_cast<Eigen::MatrixBase<VecX>&>(position_in);
  velocity.array() = omega * (best_other - best_self).array().abs() * velocity.array().sign() +
                     mix * (best_self - position).array() +
                     (Scalar(1) - mix) * (best_global - position).array();
  position.array() += velocity.array();
}

// Uniform initialization: positions in [lo, hi]^dim, velocities in
// [-(hi-lo), hi-lo]^dim, personal bests at the initial positions, global best
// at the cheapest particle (lowest index on ties). Draw order: all positions
// particle-major, then all velocities particle-major.
template <typename Scalar, typename CostFn>
SwarmState<Scalar> init_swarm(int dim, CostFn&& cost, const PsoConfig& cfg, Rng& rng) {
  if (dim < 1) throw InvalidDimensionsError("dimension must be at least 1");
  validate_config(cfg);
  const int n = cfg.swarm_size;
  const Scalar lo = static_cast<Scalar>(cfg.init_lo);
  const Scalar hi = static_cast<Scalar>(cfg.init_hi);
  const Scalar span = hi - lo;

  SwarmState<Scalar> state;
  state.positions.resize(dim, n);
  state.velocities.resize(dim, n);
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < dim; ++d) {
      state.positions(d, i) = static_cast<Scalar>(rng.uniform(lo, hi));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < dim; ++d) {
      state.velocities(d, i) = static_cast<Scalar>(rng.uniform(-span, span));
    }
  }
  state.personal_best = state.positions;
  state.personal_best_cost.resize(n);
  for (int i = 0; i < n; ++i) {
    state.personal_best_cost[i] = cost(state.positions.col(i));
    detail::ensure_finite(state.personal_best_cost[i], 0, i);
  }
  state.global_best_index = 0;
  for (int i = 1; i < n; ++i) {
    if (state.personal_best_cost[i] < state.personal_best_cost[state.global_best_index]) {
      state.global_best_index = i;
    }
  }
  state.global_best = state.personal_best.col(state.global_best_index);
  state.global_best_cost = state.personal_best_cost[state.global_best_index];
  return state;
}

// One synchronous iteration: per particle (ascending index) draw the update
// randomness and move, then evaluate all moved particles, then fold the new
// costs into personal/global bests (strict improvement only). The velocity
// update reads the bests as they stood at the start of the iteration, so the
// evaluations may run in any order or concurrently without changing the
// result.
template <typename Scalar, typename CostFn>
void step(SwarmState<Scalar>& state, CostFn&& cost, const PsoConfig& cfg, Rng& rng) {
  const int n = cfg.swarm_size;
  for (int i = 0; i < n; ++i) {
    const auto draws = detail::draw_update<Scalar>(rng, n, cfg.omega);
    velocity_position_update<Scalar>(state.velocities.col(i), state.positions.col(i),
                                     state.personal_best.col(i),
                                     state.personal_best.col(draws.informant),
                                     state.global_best, draws.omega, draws.mix);
  }
  ++state.iteration;
  for (int i = 0; i < n; ++i) {
    const Scalar value = cost(state.positions.col(i));
    detail::ensure_finite(value, state.iteration, i);
    if (value < state.personal_best_cost[i]) {
      state.personal_best.col(i) = state.positions.col(i);
      state.personal_best_cost[i] = value;
      if (value < state.global_best_cost) {
        state.global_best_cost = value;
        state.global_best_index = i;
        state.global_best = state.personal_best.col(i);
      }
    }
  }
}

// Single optimization run from the swarm substream of `seed`. The trace holds
// the best-so-far cost after each iteration; the run stops early once the
// best cost reaches cfg.target_cost.
template <typename Scalar, typename CostFn>
RunResult<Scalar> run_pso(int dim, CostFn&& cost, const PsoConfig& cfg, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, kSwarmStream);
  SwarmState<Scalar> state = init_swarm<Scalar>(dim, cost, cfg, rng);
  RunResult<Scalar> result;
  result.trace.reserve(cfg.max_iters);
  for (int t = 0; t < cfg.max_iters; ++t) {
    step(state, cost, cfg, rng);
    result.trace.push_back(state.global_best_cost);
    if (cfg.target_cost && state.global_best_cost <= *cfg.target_cost) break;
  }
  result.best = state.global_best;
  result.best_cost = state.global_best_cost;
  return result;
}

}  // namespace ialign
