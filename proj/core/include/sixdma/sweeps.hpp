// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "sixdma/schemes.hpp"

namespace sixdma {

/// One experiment cell, matching the CSV schema one to one.
struct ResultRow {
  std::string scheme;
  int n_x = 0;
  int n_y = 0;
  double gamma0_db = 0.0;
  std::uint64_t seed = 0;  // replicate index within the sweep
  double snr_s_db = 0.0;
  double snr_c_db = 0.0;
  double rho = 0.0;
  Pose6D pose;
  int ao_iters = 0;
};

struct ResultTable {
  std::vector<ResultRow> rows;

  /// Stable canonical order (scheme, n_x, gamma0, seed) so concurrent sweep
  /// execution cannot change the exported bytes.
  void sort_canonical();
};

/// Median of a sample; empty input throws.
double median(std::vector<double> samples);

/// run_scheme over the cross product schemes x n_x values x replicates,
/// with n_y = n_x. Cells run concurrently on up to `threads` workers; each
/// cell derives its own child seed from the master seed.
ResultTable sweep_elements(const Scenario& sc, const std::vector<Scheme>& schemes,
                           const std::vector<int>& n_x_values, int replicates,
                           const SolverConfig& cfg, std::uint64_t master_seed,
                           int threads = 0, TraceWriter* trace = nullptr);

/// Optimize the surface once per (scheme, replicate), then trace the
/// sensing/communication SNR boundary by re-solving the transmit beamformer
/// for each threshold. Cells where the threshold is unreachable get NaN SNRs.
ResultTable sweep_gamma(const Scenario& sc, const std::vector<Scheme>& schemes,
                        const std::vector<double>& gamma0_db_values,
                        int replicates, const SolverConfig& cfg,
                        std::uint64_t master_seed, int threads = 0,
                        TraceWriter* trace = nullptr);

}  // namespace sixdma
