// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "sixdma/beamformer.hpp"
#include "sixdma/metrics.hpp"
#include "sixdma/pbf.hpp"
#include "sixdma/rng.hpp"

using namespace sixdma;

namespace {

Scenario scenario_with_grid(int n_x) {
  Scenario sc;
  sc.n_x = n_x;
  sc.n_y = n_x;
  sc.validate();
  return sc;
}

const Pose6D kPose({70.0, 60.0, 150.0}, {0.2, 0.1, 0.4});

}  // namespace

static void BM_BuildChannels(benchmark::State& state) {
  const Scenario sc = scenario_with_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_channels(sc, kPose));
  }
}
BENCHMARK(BM_BuildChannels)->Arg(4)->Arg(8)->Arg(16);

static void BM_CouplingFitness(benchmark::State& state) {
  const Scenario sc = scenario_with_grid(static_cast<int>(state.range(0)));
  const ChannelSet cs = build_channels(sc, kPose);
  const PhaseVector v = PhaseVector::ones(sc.irs_elements());
  for (auto _ : state) {
    benchmark::DoNotOptimize(coupling_fitness(cs, v));
  }
}
BENCHMARK(BM_CouplingFitness)->Arg(4)->Arg(8)->Arg(16);

static void BM_PoseFitness(benchmark::State& state) {
  const Scenario sc = scenario_with_grid(static_cast<int>(state.range(0)));
  const PhaseVector v = PhaseVector::ones(sc.irs_elements());
  for (auto _ : state) {
    benchmark::DoNotOptimize(coupling_fitness(sc, kPose, v));
  }
}
BENCHMARK(BM_PoseFitness)->Arg(4)->Arg(8)->Arg(16);

static void BM_PbfGradient(benchmark::State& state) {
  const Scenario sc = scenario_with_grid(static_cast<int>(state.range(0)));
  const pbf::Problem p = pbf::assemble(build_channels(sc, kPose));
  const PhaseVector v = PhaseVector::ones(sc.irs_elements());
  for (auto _ : state) {
    benchmark::DoNotOptimize(pbf::euclidean_gradient(p, v));
  }
}
BENCHMARK(BM_PbfGradient)->Arg(4)->Arg(8)->Arg(16);

static void BM_PbfOptimize(benchmark::State& state) {
  const Scenario sc = scenario_with_grid(static_cast<int>(state.range(0)));
  const pbf::Problem p = pbf::assemble(build_channels(sc, kPose));
  const PhaseVector v0 = PhaseVector::ones(sc.irs_elements());
  pbf::Options opts;
  opts.restarts = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pbf::optimize(p, v0, opts));
  }
}
BENCHMARK(BM_PbfOptimize)->Arg(4)->Arg(8);

static void BM_SolveBeamformer(benchmark::State& state) {
  const Scenario sc = scenario_with_grid(8);
  const ChannelSet cs = build_channels(sc, kPose);
  const PhaseVector v = PhaseVector::ones(sc.irs_elements());
  const Eigen::RowVectorXcd h_c = comm_channel(cs, v);
  const SensingChannels s = sensing_channels(cs, v);
  const double n2 = s.h_sr.squaredNorm();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_beamformer(s.h_st, n2, h_c, sc));
  }
}
BENCHMARK(BM_SolveBeamformer);

BENCHMARK_MAIN();
