// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

#include "sixdma/channel.hpp"
#include "sixdma/types.hpp"

namespace sixdma {

struct BfSolution {
  Beamformer f;
  double snr_s_db = 0.0;
  double snr_c_db = 0.0;
  bool constraint_active = false;
};

class BfInfeasibleError : public std::runtime_error {
 public:
  explicit BfInfeasibleError(double max_comm_db)
      : std::runtime_error(
            "solve_beamformer: communication threshold unreachable (max " +
            std::to_string(max_comm_db) + " dB)"),
        max_comm_snr_db(max_comm_db) {}

  /// Best communication SNR any unit-power beamformer can reach.
  double max_comm_snr_db;
};

/// Maximize the sensing SNR subject to the communication SNR threshold for
/// fixed channels. The optimum lives in span{h_st^H, h_c^H} and has unit
/// norm: either the sensing matched filter (constraint inactive) or the
/// two-vector split that meets the threshold with equality. Throws
/// BfInfeasibleError when even full power toward the UE misses gamma0.
BfSolution solve_beamformer(const Eigen::RowVectorXcd& h_st, double h_sr_norm2,
                            const Eigen::RowVectorXcd& h_c, const Scenario& sc);

}  // namespace sixdma
