// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#include "sixdma/schemes.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sixdma/metrics.hpp"

namespace sixdma {

namespace {

void write_trace(TraceWriter* trace, const std::string& scheme,
                 std::uint64_t seed, const char* stage, int round,
                 const std::vector<double>& values) {
  if (trace == nullptr) return;
  std::ostringstream os;
  os << "{\"scheme\":\"" << scheme << "\",\"seed\":" << seed << ",\"stage\":\""
     << stage << "\",\"round\":" << round << ",\"values\":[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) os << ',';
    os << values[i];
  }
  os << "]}";
  trace->write(os.str());
}

}  // namespace

AoResult alternate_optimize(const Scenario& sc_in, const Scheme& scheme,
                            const SolverConfig& cfg, std::uint64_t seed,
                            TraceWriter* trace) {
  Scenario sc = sc_in;
  Pose6D pose;
  pso::PoseBounds bounds;
  switch (scheme.kind) {
    case SchemeKind::PbfOnly:
      pose = scheme.fixed_pose;
      bounds = pso::PoseBounds::fixed(pose);
      break;
    case SchemeKind::OrientPbf:
      pose = scheme.fixed_pose;
      bounds = pso::PoseBounds::orientation_only(pose);
      break;
    case SchemeKind::SixDPbf:
      sc.region = scheme.region;
      pose = Pose6D(scheme.region.center(), Vec3::Zero());
      bounds = pso::PoseBounds::full(scheme.region);
      break;
  }
  sc.validate();

  Rng rng(seed);
  PhaseVector v = PhaseVector::ones(sc.irs_elements());

  AoResult out;
  double fitness = coupling_fitness(build_channels(sc, pose), v);
  out.fitness_trace.push_back(fitness);

  const bool pose_free = scheme.kind != SchemeKind::PbfOnly;
  for (int round = 1; round <= cfg.ao.max_rounds; ++round) {
    out.rounds = round;
    Pose6D candidate = pose;
    if (pose_free) {
      pso::RunResult ps = pso::run(cfg.pso, sc, v, bounds, pose, rng);
      candidate = ps.pose;
      write_trace(trace, scheme.name, seed, "pso", round, ps.trace);
    }

    const ChannelSet cs = build_channels(sc, candidate);
    const pbf::Problem problem = pbf::assemble(cs);
    pbf::Result pr = pbf::optimize(problem, v, cfg.pbf, &rng);
    write_trace(trace, scheme.name, seed, "pbf", round, pr.trace);

    // accept only improving rounds; a stalled round ends the alternation
    const double next = pbf::objective(problem, pr.v);
    const double rel = (fitness - next) / std::max(std::abs(fitness), 1e-300);
    if (next <= fitness) {
      pose = candidate;
      v = std::move(pr.v);
      fitness = next;
    }
    out.fitness_trace.push_back(fitness);
    if (!pose_free || rel < cfg.ao.tol) break;
  }

  out.pose = pose;
  out.v = std::move(v);
  return out;
}

SchemeResult run_scheme(const Scenario& sc, const Scheme& scheme,
                        const SolverConfig& cfg, std::uint64_t seed,
                        TraceWriter* trace) {
  AoResult ao = alternate_optimize(sc, scheme, cfg, seed, trace);

  const ChannelSet cs = build_channels(sc, ao.pose);
  const Eigen::RowVectorXcd h_c = comm_channel(cs, ao.v);
  const SensingChannels s = sensing_channels(cs, ao.v);

  SchemeResult r;
  r.pose = ao.pose;
  r.v = std::move(ao.v);
  r.fitness_trace = std::move(ao.fitness_trace);
  r.ao_rounds = ao.rounds;
  r.seed = seed;
  r.rho = channel_correlation(cs, r.v);
  try {
    BfSolution bf = solve_beamformer(s.h_st, s.h_sr.squaredNorm(), h_c, sc);
    r.f = std::move(bf.f);
    r.snr_s_db = bf.snr_s_db;
    r.snr_c_db = bf.snr_c_db;
    r.bf_constraint_active = bf.constraint_active;
  } catch (const BfInfeasibleError&) {
    r.bf_feasible = false;
    r.f = Beamformer(Eigen::VectorXcd::Zero(sc.n_tx));
    r.snr_s_db = std::numeric_limits<double>::quiet_NaN();
    r.snr_c_db = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

}  // namespace sixdma
