// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#include "sixdma/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "sixdma/metrics.hpp"
#include "sixdma/rng.hpp"

namespace sixdma {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run `count` jobs on a small worker pool; job i writes only to slot i of
/// whatever the callable captures, so no further synchronization is needed.
void run_jobs(int count, int threads, const std::function<void(int)>& job) {
  threads = std::min(resolve_threads(threads), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

void ResultTable::sort_canonical() {
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.scheme != b.scheme) return a.scheme < b.scheme;
    if (a.n_x != b.n_x) return a.n_x < b.n_x;
    if (a.gamma0_db != b.gamma0_db) return a.gamma0_db < b.gamma0_db;
    return a.seed < b.seed;
  });
}

double median(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("median: empty sample");
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  return n % 2 == 1 ? samples[n / 2]
                    : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

ResultTable sweep_elements(const Scenario& sc, const std::vector<Scheme>& schemes,
                           const std::vector<int>& n_x_values, int replicates,
                           const SolverConfig& cfg, std::uint64_t master_seed,
                           int threads, TraceWriter* trace) {
  if (schemes.empty() || n_x_values.empty() || replicates < 1) {
    throw std::invalid_argument("sweep_elements: empty sweep");
  }

  struct Cell {
    const Scheme* scheme;
    int n_x;
    int replicate;
  };
  std::vector<Cell> cells;
  for (const Scheme& scheme : schemes) {
    for (int n_x : n_x_values) {
      for (int rep = 0; rep < replicates; ++rep) {
        cells.push_back({&scheme, n_x, rep});
      }
    }
  }

  ResultTable table;
  table.rows.resize(cells.size());
  run_jobs(static_cast<int>(cells.size()), threads, [&](int i) {
    const Cell& cell = cells[i];
    Scenario local = sc;
    local.n_x = cell.n_x;
    local.n_y = cell.n_x;
    local.validate();
    const std::uint64_t tokens[] = {fnv1a64(cell.scheme->name),
                                    static_cast<std::uint64_t>(cell.n_x),
                                    static_cast<std::uint64_t>(cell.replicate)};
    const SchemeResult res =
        run_scheme(local, *cell.scheme, cfg,
                   derive_seed(master_seed, tokens), trace);
    table.rows[i] = {cell.scheme->name,
                     cell.n_x,
                     cell.n_x,
                     local.gamma0_db,
                     static_cast<std::uint64_t>(cell.replicate),
                     res.snr_s_db,
                     res.snr_c_db,
                     res.rho,
                     res.pose,
                     res.ao_rounds};
  });
  table.sort_canonical();
  return table;
}

ResultTable sweep_gamma(const Scenario& sc, const std::vector<Scheme>& schemes,
                        const std::vector<double>& gamma0_db_values,
                        int replicates, const SolverConfig& cfg,
                        std::uint64_t master_seed, int threads,
                        TraceWriter* trace) {
  if (schemes.empty() || gamma0_db_values.empty() || replicates < 1) {
    throw std::invalid_argument("sweep_gamma: empty sweep");
  }

  struct Cell {
    const Scheme* scheme;
    int replicate;
  };
  std::vector<Cell> cells;
  for (const Scheme& scheme : schemes) {
    for (int rep = 0; rep < replicates; ++rep) cells.push_back({&scheme, rep});
  }

  std::vector<std::vector<ResultRow>> groups(cells.size());
  run_jobs(static_cast<int>(cells.size()), threads, [&](int i) {
    const Cell& cell = cells[i];
    const std::uint64_t tokens[] = {fnv1a64(cell.scheme->name),
                                    0x67616d6d61ULL,  // sweep discriminator
                                    static_cast<std::uint64_t>(cell.replicate)};
    const std::uint64_t seed = derive_seed(master_seed, tokens);

    // The surface configuration is optimized once per cell at the scenario's
    // own threshold, then held fixed across the swept thresholds.
    const AoResult ao = alternate_optimize(sc, *cell.scheme, cfg, seed, trace);
    const ChannelSet cs = build_channels(sc, ao.pose);
    const Eigen::RowVectorXcd h_c = comm_channel(cs, ao.v);
    const SensingChannels s = sensing_channels(cs, ao.v);
    const double h_sr_norm2 = s.h_sr.squaredNorm();
    const double rho = channel_correlation(cs, ao.v);

    for (double gamma0 : gamma0_db_values) {
      Scenario local = sc;
      local.gamma0_db = gamma0;
      ResultRow row{cell.scheme->name,
                    sc.n_x,
                    sc.n_y,
                    gamma0,
                    static_cast<std::uint64_t>(cell.replicate),
                    std::numeric_limits<double>::quiet_NaN(),
                    std::numeric_limits<double>::quiet_NaN(),
                    rho,
                    ao.pose,
                    ao.rounds};
      try {
        const BfSolution bf = solve_beamformer(s.h_st, h_sr_norm2, h_c, local);
        row.snr_s_db = bf.snr_s_db;
        row.snr_c_db = bf.snr_c_db;
      } catch (const BfInfeasibleError&) {
        // flagged by the NaN SNR columns
      }
      groups[i].push_back(std::move(row));
    }
  });

  ResultTable table;
  for (std::vector<ResultRow>& group : groups) {
    for (ResultRow& row : group) table.rows.push_back(std::move(row));
  }
  table.sort_canonical();
  return table;
}

}  // namespace sixdma
