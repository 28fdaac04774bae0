// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sixdma/beamformer.hpp"
#include "sixdma/channel.hpp"
#include "sixdma/pbf.hpp"
#include "sixdma/pso.hpp"
#include "sixdma/trace.hpp"
#include "sixdma/types.hpp"

namespace sixdma {

enum class SchemeKind { PbfOnly, OrientPbf, SixDPbf };

/// One of the compared deployment strategies: reflection phases only,
/// orientation plus phases at a fixed location, or the full movable search.
struct Scheme {
  SchemeKind kind = SchemeKind::PbfOnly;
  std::string name;
  Pose6D fixed_pose;  // PbfOnly / OrientPbf anchor
  Region region;      // SixDPbf search region

  static Scheme pbf_only(const Pose6D& pose) {
    return {SchemeKind::PbfOnly, "pbf-only", pose, {}};
  }
  static Scheme orient_pbf(const Pose6D& pose) {
    return {SchemeKind::OrientPbf, "orient-pbf", pose, {}};
  }
  static Scheme six_d(std::string name, const Region& region) {
    return {SchemeKind::SixDPbf, std::move(name), {}, region};
  }
};

struct AoOptions {
  int max_rounds = 10;
  double tol = 1e-3;  // relative fitness improvement between rounds
};

struct SolverConfig {
  pso::SwarmConfig pso;
  pbf::Options pbf;
  AoOptions ao;
};

struct AoResult {
  Pose6D pose;
  PhaseVector v;
  std::vector<double> fitness_trace;  // initial value plus one per round
  int rounds = 0;
};

/// Alternating optimization of pose and reflection phases: a swarm search
/// over the dimensions the scheme unlocks, then manifold descent on the
/// phases, repeated until the fitness improvement stalls. Both blocks are
/// warm-started from the incumbent, so the trace never increases.
AoResult alternate_optimize(const Scenario& sc, const Scheme& scheme,
                            const SolverConfig& cfg, std::uint64_t seed,
                            TraceWriter* trace = nullptr);

struct SchemeResult {
  Pose6D pose;
  PhaseVector v;
  Beamformer f;
  double snr_s_db = 0.0;
  double snr_c_db = 0.0;
  double rho = 0.0;
  bool bf_feasible = true;
  bool bf_constraint_active = false;
  std::vector<double> fitness_trace;
  int ao_rounds = 0;
  std::uint64_t seed = 0;
};

/// alternate_optimize followed by the closed-form transmit beamformer at the
/// optimized pose and phases. Beamformer infeasibility is recorded in the
/// result (NaN SNRs), not thrown.
SchemeResult run_scheme(const Scenario& sc, const Scheme& scheme,
                        const SolverConfig& cfg, std::uint64_t seed,
                        TraceWriter* trace = nullptr);

}  // namespace sixdma
