#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ialign/errors.hpp"
#include "ialign/pso.hpp"
#include "ialign/rng.hpp"
#include "ialign/types.hpp"

namespace ialign {

// Cooperative PSO state: one 1-D swarm per coordinate of the n-dimensional
// problem. Swarm j's particle data lives in column j; the context vector
// holds every swarm's global best position, so component j is P_j's best and
// the full vector is the current incumbent solution. context_cost is always
// the exact cost of the context vector and never increases.
//
// Personal-best costs are deliberately not cached: the cost of a 1-D position
// depends on the other swarms' context components, so any stored value goes
// stale as soon as another swarm improves. Comparisons against personal bests
// re-evaluate them through the current context instead.
template <typename Scalar>
struct CpsoState {
  MatrixX<Scalar> positions;      // swarm_size x n
  MatrixX<Scalar> velocities;     // swarm_size x n
  MatrixX<Scalar> personal_best;  // swarm_size x n
  VectorX<Scalar> context;        // n
  Scalar context_cost = std::numeric_limits<Scalar>::infinity();
  int iteration = 0;

  int swarm_size() const { return static_cast<int>(positions.rows()); }
  int dimension() const { return static_cast<int>(positions.cols()); }
};

// The context vector with component j replaced by z; the state is not
// modified.
template <typename Scalar>
VectorX<Scalar> compose_context(const CpsoState<Scalar>& state, int j, Scalar z) {
  if (j < 0 || j >= state.dimension()) {
    throw std::out_of_range("swarm index " + std::to_string(j) + " outside [0, " +
                            std::to_string(state.dimension()) + ")");
  }
  VectorX<Scalar> probe = state.context;
  probe[j] = z;
  return probe;
}

namespace detail {

// Evaluates every particle of swarm j through the context. Each particle
// costs two evaluations, position and personal best, both under the current
// context; the personal best moves to the position when the fresh comparison
// favors it, and the (possibly updated) personal best replaces the context
// component when it beats the incumbent cost. Re-evaluating the personal best
// also lets an old position re-qualify for the context after other swarms
// have shifted it. Exactly 2 * swarm_size cost evaluations.
template <typename Scalar, typename CostFn>
void evaluate_swarm(CpsoState<Scalar>& state, int j, CostFn&& cost, VectorX<Scalar>& probe) {
  probe = state.context;
  const int s = state.swarm_size();
  for (int i = 0; i < s; ++i) {
    probe[j] = state.positions(i, j);
    const Scalar position_cost = cost(probe);
    probe[j] = state.personal_best(i, j);
    Scalar best_cost = cost(probe);
    if (!std::isfinite(position_cost) || !std::isfinite(best_cost)) {
      throw NonFiniteCostError("cost function returned a non-finite value at iteration " +
                               std::to_string(state.iteration) + ", swarm " + std::to_string(j) +
                               ", particle " + std::to_string(i));
    }
    if (position_cost < best_cost) {
      state.personal_best(i, j) = state.positions(i, j);
      best_cost = position_cost;
    }
    if (best_cost < state.context_cost) {
      state.context[j] = state.personal_best(i, j);
      state.context_cost = best_cost;
    }
  }
}

// Applies the velocity/position update to swarm j's 1-D particles, with the
// swarm's context component as the global best. Same per-particle draw order
// as the full-vector swarm.
//
// The reference particle for the velocity-scale term is drawn from the whole
// cooperative population, not just swarm j. A coordinate's own particles
// cluster within a few dozen iterations, and once they coincide a swarm-local
// reference distance is zero, freezing the coordinate for the rest of the
// run. Personal bests of different coordinates keep order-one separation, so
// the population-wide draw keeps the exploration scale tied to the overall
// solution diversity instead. With a single swarm the pool is that swarm and
// the update reduces to the full-vector rule.
template <typename Scalar>
void move_swarm(CpsoState<Scalar>& state, int j, const PsoConfig& cfg, Rng& rng) {
  const int s = state.swarm_size();
  const int n = state.dimension();
  for (int i = 0; i < s; ++i) {
    const auto draws = draw_update<Scalar>(rng, s * n, cfg.omega);
    const int other_particle = draws.informant % s;
    const int other_swarm = draws.informant / s;
    velocity_position_update<Scalar>(
        state.velocities.block(i, j, 1, 1), state.positions.block(i, j, 1, 1),
        state.personal_best.block(i, j, 1, 1),
        state.personal_best.block(other_particle, other_swarm, 1, 1), state.context.segment(j, 1),
        draws.omega, draws.mix);
  }
}

}  // namespace detail

// Creates the n one-dimensional swarms. Positions and velocities draw from
// the same ranges as a full-vector swarm, swarm-major (all positions, then
// all velocities). Personal bests start at the positions; the initial context
// takes particle 0 of every swarm and is evaluated once.
template <typename Scalar, typename CostFn>
CpsoState<Scalar> init_cpso(int dim, CostFn&& cost, const PsoConfig& cfg, Rng& rng) {
  if (dim < 1) throw InvalidDimensionsError("dimension must be at least 1");
  validate_config(cfg);
  const int s = cfg.swarm_size;
  const Scalar lo = static_cast<Scalar>(cfg.init_lo);
  const Scalar hi = static_cast<Scalar>(cfg.init_hi);
  const Scalar span = hi - lo;

  CpsoState<Scalar> state;
  state.positions.resize(s, dim);
  state.velocities.resize(s, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < s; ++i) {
      state.positions(i, j) = static_cast<Scalar>(rng.uniform(lo, hi));
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < s; ++i) {
      state.velocities(i, j) = static_cast<Scalar>(rng.uniform(-span, span));
    }
  }
  state.personal_best = state.positions;
  state.context = state.positions.row(0).transpose();
  state.context_cost = cost(state.context);
  if (!std::isfinite(state.context_cost)) {
    throw NonFiniteCostError("cost function returned a non-finite value for the initial context");
  }
  return state;
}

// One outer iteration exactly as in the cooperative algorithm: for each swarm
// in ascending order, evaluate its particles through the context, then move
// them with the velocity/position update. Swarm j+1 sees swarm j's updated
// context component. Costs the documented constant of 2 * dim * swarm_size
// evaluations.
template <typename Scalar, typename CostFn>
void cpso_iteration(CpsoState<Scalar>& state, CostFn&& cost, const PsoConfig& cfg, Rng& rng) {
  VectorX<Scalar> probe(state.dimension());
  for (int j = 0; j < state.dimension(); ++j) {
    detail::evaluate_swarm(state, j, cost, probe);
    detail::move_swarm(state, j, cfg, rng);
  }
  ++state.iteration;
}

// Cooperative run with one 1-D swarm per coordinate. After initialization the
// swarms' initial positions are evaluated once (the counterpart of the
// full-vector swarm's initial evaluation); each iteration then moves and
// evaluates every swarm in order. This is the same operation sequence as
// repeating cpso_iteration — evaluations commute with the moves of other
// swarms — with the iteration boundary drawn after each swarm's evaluation,
// so the trace lines up with run_pso and the two produce identical traces at
// dim = 1. Evaluation budget: 1 + 2 * dim * swarm_size at startup, then
// exactly 2 * dim * swarm_size per iteration.
template <typename Scalar, typename CostFn>
RunResult<Scalar> run_cpso(int dim, CostFn&& cost, const PsoConfig& cfg, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, kSwarmStream);
  CpsoState<Scalar> state = init_cpso<Scalar>(dim, cost, cfg, rng);
  VectorX<Scalar> probe(dim);
  for (int j = 0; j < dim; ++j) {
    detail::evaluate_swarm(state, j, cost, probe);
  }
  RunResult<Scalar> result;
  result.trace.reserve(cfg.max_iters);
  for (int t = 0; t < cfg.max_iters; ++t) {
    for (int j = 0; j < dim; ++j) {
      detail::move_swarm(state, j, cfg, rng);
      detail::evaluate_swarm(state, j, cost, probe);
    }
    ++state.iteration;
    result.trace.push_back(state.context_cost);
    if (cfg.target_cost && state.context_cost <= *cfg.target_cost) break;
  }
  result.best = state.context;
  result.best_cost = state.context_cost;
  return result;
}

}  // namespace ialign
