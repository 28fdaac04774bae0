// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#include "sixdma/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sixdma/metrics.hpp"

namespace sixdma::pso {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Eval {
  double fitness = 0.0;       // coupling fitness, no penalty
  double violation_sq = 0.0;  // sum of squared half-space violations
  bool feasible() const { return violation_sq == 0.0; }
  double penalized(double tau) const { return fitness + tau * violation_sq; }
};

Eval evaluate(const std::array<double, 6>& g, const Scenario& sc,
              const PhaseVector& v_fixed) {
  const Pose6D pose = to_pose(g);
  Eval e;
  e.fitness = coupling_fitness(sc, pose, v_fixed);
  for (const Vec3* node : {&sc.p_bs, &sc.p_ue, &sc.p_target}) {
    const double viol = halfspace_violation(pose, *node);
    e.violation_sq += viol * viol;
  }
  return e;
}

std::array<double, 6> from_pose(const Pose6D& pose) {
  return {pose.position.x(), pose.position.y(), pose.position.z(),
          pose.euler.x(),    pose.euler.y(),    pose.euler.z()};
}

void track_feasible(Swarm& swarm, const std::array<double, 6>& g,
                    const Eval& e) {
  if (!e.feasible()) return;
  if (!swarm.best_feasible || e.fitness < swarm.best_feasible_value) {
    swarm.best_feasible = g;
    swarm.best_feasible_value = e.fitness;
  }
}

}  // namespace

PoseBounds PoseBounds::fixed(const Pose6D& pose) {
  PoseBounds b;
  const auto g = from_pose(pose);
  b.lo = g;
  b.hi = g;
  return b;
}

PoseBounds PoseBounds::orientation_only(const Pose6D& anchor) {
  PoseBounds b = fixed(anchor);
  for (int d = 3; d < 6; ++d) {
    b.lo[d] = 0.0;
    b.hi[d] = kTwoPi;
  }
  return b;
}

PoseBounds PoseBounds::full(const Region& region) {
  PoseBounds b;
  b.lo = {region.x_min, region.y_min, region.altitude, 0.0, 0.0, 0.0};
  b.hi = {region.x_max, region.y_max, region.altitude, kTwoPi, kTwoPi, kTwoPi};
  return b;
}

void PoseBounds::project(std::array<double, 6>& g) const {
  for (int d = 0; d < 6; ++d) {
    if (collapsed(d)) {
      g[d] = lo[d];
    } else if (is_angle(d)) {
      g[d] = wrap_angle(g[d]);
    } else {
      g[d] = std::clamp(g[d], lo[d], hi[d]);
    }
  }
}

double inertia(int t, const SwarmConfig& cfg) {
  const double frac =
      static_cast<double>(cfg.max_iters - t) / static_cast<double>(cfg.max_iters);
  return (cfg.omega_ini - cfg.omega_end) * frac + cfg.omega_end;
}

Pose6D to_pose(const std::array<double, 6>& g) {
  return Pose6D({g[0], g[1], g[2]}, {g[3], g[4], g[5]});
}

Swarm init_swarm(const SwarmConfig& cfg, const Scenario& sc,
                 const PhaseVector& v_fixed, const PoseBounds& bounds,
                 const Pose6D& anchor, Rng& rng) {
  cfg.validate();
  for (int d = 0; d < 3; ++d) {
    if (bounds.range(d) < 0.0) {
      throw std::invalid_argument("init_swarm: empty search box");
    }
  }

  Swarm swarm;
  swarm.particles.resize(cfg.particles);
  std::vector<Eval> evals(cfg.particles);

  for (int m = 0; m < cfg.particles; ++m) {
    Particle& part = swarm.particles[m];
    if (m == 0) {
      part.position = from_pose(anchor);
      bounds.project(part.position);
    } else {
      for (int d = 0; d < 6; ++d) {
        part.position[d] =
            bounds.collapsed(d) ? bounds.lo[d] : rng.uniform(bounds.lo[d], bounds.hi[d]);
      }
    }
    for (int d = 0; d < 6; ++d) {
      const double cap = cfg.v_clamp_frac * bounds.range(d);
      part.velocity[d] = bounds.collapsed(d) ? 0.0 : rng.uniform(-cap, cap);
    }
    part.best_position = part.position;
    evals[m] = evaluate(part.position, sc, v_fixed);
  }

  // The penalty weight scales with the raw objective at the best initial
  // particle so that violations dominate fitness differences.
  if (cfg.tau > 0.0) {
    swarm.tau = cfg.tau;
  } else {
    double best_raw = std::numeric_limits<double>::infinity();
    for (const Eval& e : evals) best_raw = std::min(best_raw, e.fitness);
    swarm.tau = cfg.tau_auto_factor * std::abs(best_raw);
    if (swarm.tau <= 0.0) swarm.tau = 1.0;
  }

  swarm.gbest_value = std::numeric_limits<double>::infinity();
  for (int m = 0; m < cfg.particles; ++m) {
    Particle& part = swarm.particles[m];
    part.best_value = evals[m].penalized(swarm.tau);
    track_feasible(swarm, part.position, evals[m]);
    if (part.best_value < swarm.gbest_value) {
      swarm.gbest_value = part.best_value;
      swarm.gbest_position = part.position;
    }
  }
  return swarm;
}

void step(Swarm& swarm, int t, const SwarmConfig& cfg, const Scenario& sc,
          const PhaseVector& v_fixed, const PoseBounds& bounds, Rng& rng) {
  const double w = inertia(t, cfg);
  for (Particle& part : swarm.particles) {
    double r1 = rng.uniform();
    double r2 = rng.uniform();
    for (int d = 0; d < 6; ++d) {
      if (bounds.collapsed(d)) {
        part.velocity[d] = 0.0;
        continue;
      }
      if (cfg.per_dim_random && d > 0) {
        r1 = rng.uniform();
        r2 = rng.uniform();
      }
      const double cap = cfg.v_clamp_frac * bounds.range(d);
      double mu = w * part.velocity[d] +
                  cfg.c1 * r1 * (part.best_position[d] - part.position[d]) +
                  cfg.c2 * r2 * (swarm.gbest_position[d] - part.position[d]);
      part.velocity[d] = std::clamp(mu, -cap, cap);
      part.position[d] += part.velocity[d];
    }
    bounds.project(part.position);

    const Eval e = evaluate(part.position, sc, v_fixed);
    track_feasible(swarm, part.position, e);
    const double value = e.penalized(swarm.tau);
    if (value < part.best_value) {
      part.best_value = value;
      part.best_position = part.position;
    }
  }
  // Synchronous global-best update: all moves above used last iteration's.
  for (const Particle& part : swarm.particles) {
    if (part.best_value < swarm.gbest_value) {
      swarm.gbest_value = part.best_value;
      swarm.gbest_position = part.best_position;
    }
  }
}

RunResult run(const SwarmConfig& cfg, const Scenario& sc,
              const PhaseVector& v_fixed, const PoseBounds& bounds,
              const Pose6D& anchor, Rng& rng) {
  Swarm swarm = init_swarm(cfg, sc, v_fixed, bounds, anchor, rng);

  RunResult out;
  out.trace.push_back(swarm.gbest_value);
  int stalled = 0;
  for (int t = 0; t < cfg.max_iters; ++t) {
    const double prev = swarm.gbest_value;
    step(swarm, t, cfg, sc, v_fixed, bounds, rng);
    out.trace.push_back(swarm.gbest_value);

    const double rel =
        (prev - swarm.gbest_value) / std::max(std::abs(prev), 1e-300);
    stalled = rel < cfg.stop_tol ? stalled + 1 : 0;
    if (stalled >= cfg.patience) break;
  }

  // The penalized optimum is usually feasible; if not, try to recover a
  // feasible pose by perturbing the orientation around the global best.
  if (!swarm.best_feasible || swarm.gbest_value < swarm.best_feasible_value) {
    const bool angles_free = !bounds.collapsed(3) || !bounds.collapsed(4) ||
                             !bounds.collapsed(5);
    if (angles_free) {
      for (double scale : {0.05, 0.1, 0.2, 0.4, 0.8}) {
        for (int k = 0; k < 8; ++k) {
          std::array<double, 6> g = swarm.gbest_position;
          for (int d = 3; d < 6; ++d) {
            if (!bounds.collapsed(d)) g[d] += rng.uniform(-scale, scale);
          }
          bounds.project(g);
          const Eval e = evaluate(g, sc, v_fixed);
          track_feasible(swarm, g, e);
        }
      }
    }
  }

  if (!swarm.best_feasible) {
    double worst = 0.0;
    for (const Vec3* node : {&sc.p_bs, &sc.p_ue, &sc.p_target}) {
      worst = std::max(
          worst, halfspace_violation(to_pose(swarm.gbest_position), *node));
    }
    throw InfeasibleError(to_pose(swarm.gbest_position), worst);
  }
  out.pose = to_pose(*swarm.best_feasible);
  return out;
}

}  // namespace sixdma::pso
