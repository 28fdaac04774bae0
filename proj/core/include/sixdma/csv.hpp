// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string_view>

#include "sixdma/sweeps.hpp"

namespace sixdma {

/// Exact header line of every exported result file.
inline constexpr std::string_view kResultCsvHeader =
    "scheme,N_x,N_y,Gamma0_dB,seed,snr_s_dB,snr_c_dB,rho,"
    "p_R_x,p_R_y,p_R_z,gamma_x,gamma_y,gamma_z,ao_iters";

/// Write the table as UTF-8 CSV with LF line endings; floating-point
/// columns use shortest round-trip formatting.
void export_results(const ResultTable& table, const std::filesystem::path& path);

/// Inverse of export_results; rejects files whose header does not match.
ResultTable parse_results(const std::filesystem::path& path);

}  // namespace sixdma
