// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "sixdma/geometry.hpp"
#include "sixdma/types.hpp"

namespace sixdma {

/// Physical experiment configuration: node locations, array sizes, RF
/// constants, noise powers and the movable region of the surface.
struct Scenario {
  Vec3 p_bs{0.0, 0.0, 0.0};    // base station reference element
  Vec3 p_ue{280.0, 0.0, 0.0};  // user equipment
  Vec3 p_target{0.0, 20.0, 0.0};

  int n_tx = 32;  // BS transmit ULA size
  int n_rx = 32;  // BS receive ULA size
  int n_x = 4;    // surface elements along local x
  int n_y = 4;    // surface elements along local y

  double carrier_hz = 3.6e9;
  // Effective reference gain at 1 m (absorbs array/element gains). The
  // default puts the reflected path's crossover with the direct echo inside
  // the 16..256 element range of the stock experiments.
  double beta0 = 1e5;
  double eta_sensing = 2.2;  // BS-target, BS-surface, surface-target links
  double eta_comm = 3.0;     // BS-UE, surface-UE links
  double spacing_over_lambda = 0.5;

  double p_tx = 1.0;        // transmit power, W
  double sigma_c2 = 2.5e-4;  // UE noise power
  double sigma_s2 = 4e5;     // per-antenna echo noise power
  double gamma0_db = 10.0;  // communication SNR threshold

  Region region{50.0, 100.0, 50.0, 100.0, 150.0};

  int irs_elements() const { return n_x * n_y; }
  double wavelength() const { return kSpeedOfLight / carrier_hz; }
  double spacing() const { return spacing_over_lambda * wavelength(); }

  void validate() const;
};

/// Every pose-dependent LoS channel block, plus the element aperture gains.
/// Dimensions: h_bu, h_bt are 1 x n_tx; h_br is N x n_tx; h_ru, h_rt are
/// 1 x N; hbar_tb is n_rx; hbar_tr is N; hbar_rb is n_rx x N, with
/// N = n_x * n_y.
struct ChannelSet {
  Eigen::RowVectorXcd h_bu;
  Eigen::MatrixXcd h_br;
  Eigen::RowVectorXcd h_ru;
  Eigen::RowVectorXcd h_bt;
  Eigen::RowVectorXcd h_rt;
  Eigen::VectorXcd hbar_tb;
  Eigen::VectorXcd hbar_tr;
  Eigen::MatrixXcd hbar_rb;
  double f_cu = 0.0;  // aperture gain, BS->surface->UE
  double f_st = 0.0;  // aperture gain, BS->surface->target
  double f_sr = 0.0;  // aperture gain, target->surface->BS
};

/// Complex LoS path gain sqrt(beta0 * d^-eta) * exp(-j 2 pi d / lambda).
Complex path_gain(const Vec3& p_i, const Vec3& p_j, double eta,
                  const Scenario& sc);

/// ULA response for a given direction cosine along the array axis; entry k
/// is exp(j 2 pi (d/lambda) k cos_angle).
Eigen::VectorXcd ula_steering(double cos_angle, int n, const Scenario& sc);

/// UPA response for local elevation/azimuth, Kronecker-ordered with the
/// x factor varying slowest: entry (kx * n_y + ky).
Eigen::VectorXcd upa_steering(double elevation, double azimuth, int n_x,
                              int n_y, const Scenario& sc);

/// cos(incident) * cos(reflected) element aperture gain; angles are measured
/// from the outward face normal and clamped to [0, pi/2].
double aperture_gain(double incident, double reflected);

/// Synthesize every channel block for the given surface pose. Total in the
/// pose: half-space feasibility is the optimizer's job, not the builder's.
ChannelSet build_channels(const Scenario& sc, const Pose6D& pose);

/// Overall BS->UE channel h_bu + sqrt(f_cu) * h_ru * diag(v) * h_br.
/// The map is affine in v and defined for any complex vector; the
/// PhaseVector overload is the unit-modulus entry point.
Eigen::RowVectorXcd comm_channel(const ChannelSet& cs, const Eigen::VectorXcd& v);
Eigen::RowVectorXcd comm_channel(const ChannelSet& cs, const PhaseVector& v);

struct SensingChannels {
  Eigen::RowVectorXcd h_st;  // transmit side, 1 x n_tx
  Eigen::VectorXcd h_sr;     // receive side, n_rx

  /// Full echo matrix: the outer product h_sr * h_st (n_rx x n_tx, rank 1).
  Eigen::MatrixXcd matrix() const { return h_sr * h_st; }
};

/// Transmit and receive sensing channels for the given reflection phases.
SensingChannels sensing_channels(const ChannelSet& cs, const Eigen::VectorXcd& v);
SensingChannels sensing_channels(const ChannelSet& cs, const PhaseVector& v);

}  // namespace sixdma
