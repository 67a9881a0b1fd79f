#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "ialign/errors.hpp"
#include "ialign/pso.hpp"
#include "ialign/rng.hpp"

using namespace ialign;

namespace {

const auto sphere = [](const auto& x) { return x.squaredNorm(); };

bool non_increasing(const std::vector<double>& trace) {
  for (std::size_t t = 1; t < trace.size(); ++t) {
    if (trace[t] > trace[t - 1]) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("pso") {
  TEST_CASE("velocity and position update by hand") {
    VectorX<double> v(2), x(2), self(2), other(2), global(2);
    v << 1, -2;
    x << 0.5, 1;
    self << 1, 2;
    other << 3, -1;
    global << 0, 0;
    velocity_position_update<double>(v, x, self, other, global, 2.0, 0.25);
    // dim 0: 2 * |3-1| * 1 + 0.25 * (1-0.5) + 0.75 * (0-0.5) = 3.75
    // dim 1: 2 * |-1-2| * -1 + 0.25 * (2-1) + 0.75 * (0-1) = -6.5
    VectorX<double> ev(2), ex(2);
    ev << 3.75, -6.5;
    ex << 4.25, -5.5;
    CHECK((v - ev).cwiseAbs().maxCoeff() == 0.0);
    CHECK((x - ex).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("zero velocity kills the momentum term") {
    VectorX<double> v(1), x(1), self(1), other(1), global(1);
    v << 0;
    x << 2;
    self << 3;
    other << -50;
    global << 7;
    velocity_position_update<double>(v, x, self, other, global, 1e9, 0.5);
    CHECK(v[0] == 0.5 * (3 - 2) + 0.5 * (7 - 2));
    CHECK(x[0] == 2 + v[0]);
  }

  TEST_CASE("mixing weight extremes isolate the attraction terms") {
    VectorX<double> v(1), x(1), self(1), other(1), global(1);
    v << 0;
    x << 1;
    self << 4;
    other << 4;
    global << -9;
    VectorX<double> v1 = v, x1 = x;
    velocity_position_update<double>(v1, x1, self, other, global, 1.0, 1.0);
    CHECK(v1[0] == 3.0);  // only the personal term remains
    VectorX<double> v0 = v, x0 = x;
    velocity_position_update<double>(v0, x0, self, other, global, 1.0, 0.0);
    CHECK(v0[0] == -10.0);  // only the global term remains
  }

  TEST_CASE("consensus point with zero velocity is a fixed point") {
    VectorX<double> v(3), x(3), best(3);
    v.setZero();
    best << 1, -2, 3;
    x = best;
    velocity_position_update<double>(v, x, best, best, best, 3.0, 0.7);
    CHECK(v.cwiseAbs().maxCoeff() == 0.0);
    CHECK((x - best).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("initialization ranges and first-index tie breaking") {
    PsoConfig cfg;
    cfg.swarm_size = 12;
    cfg.init_lo = -2.0;
    cfg.init_hi = 3.0;
    Rng rng(99);
    const auto constant = [](const auto&) { return 4.5; };
    const SwarmState<double> state = init_swarm<double>(6, constant, cfg, rng);
    CHECK(state.positions.minCoeff() >= -2.0);
    CHECK(state.positions.maxCoeff() <= 3.0);
    CHECK(state.velocities.cwiseAbs().maxCoeff() <= 5.0);
    CHECK(state.personal_best == state.positions);
    CHECK(state.personal_best_cost.minCoeff() == 4.5);
    CHECK(state.global_best_index == 0);
    CHECK(state.global_best == state.positions.col(0));
    CHECK(state.global_best_cost == 4.5);
    CHECK(state.iteration == 0);
  }

  TEST_CASE("initial global best is the cheapest particle") {
    PsoConfig cfg;
    cfg.swarm_size = 20;
    Rng rng(5);
    const SwarmState<double> state = init_swarm<double>(4, sphere, cfg, rng);
    int expected = 0;
    for (int i = 1; i < 20; ++i) {
      if (state.personal_best_cost[i] < state.personal_best_cost[expected]) expected = i;
    }
    CHECK(state.global_best_index == expected);
    CHECK(state.global_best_cost == sphere(state.positions.col(expected)));
  }

  TEST_CASE("runs are deterministic in the seed") {
    PsoConfig cfg;
    cfg.swarm_size = 10;
    cfg.max_iters = 40;
    const RunResult<double> a = run_pso<double>(6, sphere, cfg, 31);
    const RunResult<double> b = run_pso<double>(6, sphere, cfg, 31);
    const RunResult<double> c = run_pso<double>(6, sphere, cfg, 32);
    CHECK(a.best == b.best);
    CHECK(a.best_cost == b.best_cost);
    CHECK(a.trace == b.trace);
    CHECK(a.trace != c.trace);
  }

  TEST_CASE("trace is one entry per iteration and never increases") {
    PsoConfig cfg;
    cfg.swarm_size = 8;
    cfg.max_iters = 60;
    const RunResult<double> result = run_pso<double>(5, sphere, cfg, 17);
    CHECK(result.trace.size() == 60);
    CHECK(non_increasing(result.trace));
    CHECK(result.best_cost == result.trace.back());
    CHECK(result.best_cost == sphere(result.best));
  }

  TEST_CASE("an immediately satisfied target stops after one iteration") {
    PsoConfig cfg;
    cfg.swarm_size = 5;
    cfg.max_iters = 100;
    cfg.target_cost = std::numeric_limits<double>::infinity();
    const RunResult<double> result = run_pso<double>(3, sphere, cfg, 2);
    CHECK(result.trace.size() == 1);
  }

  TEST_CASE("a reachable target truncates the run") {
    PsoConfig cfg;
    cfg.swarm_size = 30;
    cfg.omega = OmegaMode::fixed(0.7);
    cfg.max_iters = 500;
    cfg.target_cost = 1e-2;
    const RunResult<double> result = run_pso<double>(5, sphere, cfg, 9);
    CHECK(result.best_cost <= 1e-2);
    CHECK(result.trace.size() < 500);
  }

  TEST_CASE("non-finite costs are reported") {
    PsoConfig cfg;
    cfg.swarm_size = 4;
    cfg.max_iters = 10;
    const auto nan_cost = [](const auto&) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(run_pso<double>(2, nan_cost, cfg, 1), NonFiniteCostError);
    const auto inf_cost = [](const auto&) { return std::numeric_limits<double>::infinity(); };
    CHECK_THROWS_AS(run_pso<double>(2, inf_cost, cfg, 1), NonFiniteCostError);
  }

  TEST_CASE("configuration validation") {
    PsoConfig cfg;
    cfg.swarm_size = 1;
    CHECK_THROWS_AS(validate_config(cfg), InvalidDimensionsError);
    cfg = PsoConfig{};
    cfg.init_lo = 1.0;
    cfg.init_hi = 1.0;
    CHECK_THROWS_AS(validate_config(cfg), InvalidDimensionsError);
    cfg = PsoConfig{};
    cfg.max_iters = 0;
    CHECK_THROWS_AS(validate_config(cfg), InvalidDimensionsError);
    cfg = PsoConfig{};
    cfg.omega = OmegaMode::fixed(0.0);
    CHECK_THROWS_AS(validate_config(cfg), InvalidDimensionsError);
    cfg.omega = OmegaMode::scaled(-2.0);
    CHECK_THROWS_AS(validate_config(cfg), InvalidDimensionsError);
    CHECK_THROWS_AS(run_pso<double>(0, sphere, PsoConfig{}, 1), InvalidDimensionsError);
  }

  TEST_CASE("sphere minimization makes steady progress") {
    PsoConfig cfg;
    cfg.swarm_size = 30;
    cfg.omega = OmegaMode::fixed(0.7);
    cfg.max_iters = 200;
    const RunResult<double> result = run_pso<double>(10, sphere, cfg, 3);
    CHECK(result.best_cost < 1e-4);
  }

  TEST_CASE("small velocity weights refine better than large ones on the sphere") {
    const auto mean_final = [](double omega) {
      PsoConfig cfg;
      cfg.swarm_size = 20;
      cfg.omega = OmegaMode::fixed(omega);
      cfg.max_iters = 100;
      double total = 0;
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        total += std::log10(run_pso<double>(5, sphere, cfg, seed).best_cost);
      }
      return total / 20.0;
    };
    CHECK(mean_final(0.5) < mean_final(2.5));
  }

  TEST_CASE("scaled velocity weights draw fresh randomness per update") {
    PsoConfig fixed_cfg;
    fixed_cfg.swarm_size = 10;
    fixed_cfg.max_iters = 30;
    fixed_cfg.omega = OmegaMode::fixed(1.0);
    PsoConfig scaled_cfg = fixed_cfg;
    scaled_cfg.omega = OmegaMode::scaled(1.0);
    const RunResult<double> fixed_run = run_pso<double>(4, sphere, fixed_cfg, 8);
    const RunResult<double> scaled_a = run_pso<double>(4, sphere, scaled_cfg, 8);
    const RunResult<double> scaled_b = run_pso<double>(4, sphere, scaled_cfg, 8);
    CHECK(scaled_a.trace == scaled_b.trace);
    CHECK(scaled_a.trace != fixed_run.trace);
  }
}
