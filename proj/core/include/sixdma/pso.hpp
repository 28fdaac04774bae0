// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sixdma/channel.hpp"
#include "sixdma/geometry.hpp"
#include "sixdma/rng.hpp"
#include "sixdma/types.hpp"

namespace sixdma::pso {

/// Per-dimension search box over (x, y, z, gx, gy, gz). A collapsed
/// dimension (hi == lo) pins the coordinate; angle dimensions wrap modulo
/// 2*pi instead of clamping.
struct PoseBounds {
  std::array<double, 6> lo{};
  std::array<double, 6> hi{};

  static PoseBounds fixed(const Pose6D& pose);
  static PoseBounds orientation_only(const Pose6D& anchor);
  static PoseBounds full(const Region& region);

  bool collapsed(int d) const { return hi[d] <= lo[d]; }
  static bool is_angle(int d) { return d >= 3; }
  double range(int d) const { return hi[d] - lo[d]; }

  /// Projection operator: clamp box dimensions, pin collapsed ones, wrap
  /// angles into [0, 2*pi).
  void project(std::array<double, 6>& g) const;
};

struct SwarmConfig {
  int particles = 50;
  int max_iters = 200;
  double c1 = 1.6;  // cognitive factor
  double c2 = 2.0;  // social factor
  double omega_ini = 0.9;
  double omega_end = 0.1;
  double tau = 0.0;  // penalty weight; <= 0 selects the automatic rule
  double tau_auto_factor = 10.0;
  double v_clamp_frac = 0.2;  // velocity cap as a fraction of each range
  double stop_tol = 1e-4;    // relative global-best improvement
  int patience = 30;         // consecutive stalled iterations before stopping
  bool per_dim_random = false;  // draw r1, r2 per dimension instead of scalar

  void validate() const {
    if (particles < 2) throw std::invalid_argument("SwarmConfig: need >= 2 particles");
    if (max_iters < 1) throw std::invalid_argument("SwarmConfig: need >= 1 iteration");
    if (omega_end < 0.0 || omega_ini < omega_end) {
      throw std::invalid_argument("SwarmConfig: need 0 <= omega_end <= omega_ini");
    }
  }
};

struct Particle {
  std::array<double, 6> position{};
  std::array<double, 6> velocity{};
  std::array<double, 6> best_position{};
  double best_value = 0.0;
};

struct Swarm {
  std::vector<Particle> particles;
  std::array<double, 6> gbest_position{};
  double gbest_value = 0.0;
  double tau = 1.0;
  // Best half-space-feasible pose seen anywhere in the run.
  std::optional<std::array<double, 6>> best_feasible;
  double best_feasible_value = 0.0;
};

/// Inertia weight at iteration t: linear decay from omega_ini to omega_end.
double inertia(int t, const SwarmConfig& cfg);

Pose6D to_pose(const std::array<double, 6>& g);

/// Seed a swarm: particle 0 sits on `anchor` (the incumbent), the rest are
/// uniform over the search box; velocities are uniform within the clamp.
Swarm init_swarm(const SwarmConfig& cfg, const Scenario& sc,
                 const PhaseVector& v_fixed, const PoseBounds& bounds,
                 const Pose6D& anchor, Rng& rng);

/// One synchronous swarm iteration with inertia weight of iteration t.
void step(Swarm& swarm, int t, const SwarmConfig& cfg, const Scenario& sc,
          const PhaseVector& v_fixed, const PoseBounds& bounds, Rng& rng);

struct RunResult {
  Pose6D pose;                // best feasible pose
  std::vector<double> trace;  // penalized global best per iteration
};

class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const Pose6D& best, double violation)
      : std::runtime_error("pso: no half-space-feasible pose found (violation " +
                           std::to_string(violation) + ")"),
        best_infeasible(best),
        violation_magnitude(violation) {}

  Pose6D best_infeasible;
  double violation_magnitude;
};

/// Full swarm search over the bounds at fixed reflection phases. Stops early
/// once the relative global-best improvement stays below stop_tol for
/// `patience` iterations. Throws InfeasibleError when nothing feasible was
/// visited and local angle perturbation around the best pose fails too.
RunResult run(const SwarmConfig& cfg, const Scenario& sc,
              const PhaseVector& v_fixed, const PoseBounds& bounds,
              const Pose6D& anchor, Rng& rng);

}  // namespace sixdma::pso
