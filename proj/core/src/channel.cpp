// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#include "sixdma/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sixdma {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

void Scenario::validate() const {
  if (n_tx < 1 || n_rx < 1 || n_x < 1 || n_y < 1) {
    throw std::invalid_argument("Scenario: array sizes must be >= 1");
  }
  if (!(carrier_hz > 0.0) || !(beta0 > 0.0)) {
    throw std::invalid_argument("Scenario: carrier_hz and beta0 must be positive");
  }
  if (eta_sensing < 2.0 || eta_comm < 2.0) {
    throw std::invalid_argument("Scenario: path loss exponents must be >= 2");
  }
  if (!(p_tx > 0.0) || !(sigma_c2 > 0.0) || !(sigma_s2 > 0.0)) {
    throw std::invalid_argument("Scenario: powers must be positive");
  }
  if (!(spacing_over_lambda > 0.0)) {
    throw std::invalid_argument("Scenario: element spacing must be positive");
  }
  region.validate();
}

Complex path_gain(const Vec3& p_i, const Vec3& p_j, double eta,
                  const Scenario& sc) {
  const double dist = (p_j - p_i).norm();
  if (dist <= 0.0) {
    throw std::invalid_argument("path_gain: coincident nodes");
  }
  const double mag = std::sqrt(sc.beta0 * std::pow(dist, -eta));
  return std::polar(mag, -kTwoPi * dist / sc.wavelength());
}

Eigen::VectorXcd ula_steering(double cos_angle, int n, const Scenario& sc) {
  if (std::abs(cos_angle) > 1.0) {
    throw std::invalid_argument("ula_steering: |cos_angle| > 1");
  }
  const double k = kTwoPi * sc.spacing_over_lambda * cos_angle;
  Eigen::VectorXcd a(n);
  for (int i = 0; i < n; ++i) a(i) = std::polar(1.0, k * i);
  return a;
}

Eigen::VectorXcd upa_steering(double elevation, double azimuth, int n_x,
                              int n_y, const Scenario& sc) {
  const double base = kTwoPi * sc.spacing_over_lambda * std::sin(elevation);
  const double kx = base * std::cos(azimuth);
  const double ky = base * std::sin(azimuth);
  Eigen::VectorXcd a(static_cast<Eigen::Index>(n_x) * n_y);
  for (int ix = 0; ix < n_x; ++ix) {
    for (int iy = 0; iy < n_y; ++iy) {
      a(static_cast<Eigen::Index>(ix) * n_y + iy) =
          std::polar(1.0, kx * ix + ky * iy);
    }
  }
  return a;
}

double aperture_gain(double incident, double reflected) {
  const double ci = std::cos(std::clamp(incident, 0.0, 0.5 * kPi));
  const double cr = std::cos(std::clamp(reflected, 0.0, 0.5 * kPi));
  return ci * cr;
}

ChannelSet build_channels(const Scenario& sc, const Pose6D& pose) {
  const Vec3& p_b = sc.p_bs;
  const Vec3& p_u = sc.p_ue;
  const Vec3& p_t = sc.p_target;
  const Vec3& p_r = pose.position;

  // Direction cosines along the BS array axis (global z).
  const auto cos_from_bs = [&](const Vec3& node) {
    return (node - p_b).z() / (node - p_b).norm();
  };
  const auto cos_to_bs = [&](const Vec3& node) {
    return (p_b - node).z() / (p_b - node).norm();
  };

  const UpaAngles ang_b_to_r = upa_angles(pose, p_b, p_r);
  const UpaAngles ang_r_to_b = upa_angles(pose, p_r, p_b);
  const UpaAngles ang_r_to_u = upa_angles(pose, p_r, p_u);
  const UpaAngles ang_r_to_t = upa_angles(pose, p_r, p_t);
  const UpaAngles ang_t_to_r = upa_angles(pose, p_t, p_r);

  ChannelSet cs;
  cs.h_bu = path_gain(p_b, p_u, sc.eta_comm, sc) *
            ula_steering(cos_from_bs(p_u), sc.n_tx, sc).transpose();
  cs.h_br = path_gain(p_b, p_r, sc.eta_sensing, sc) *
            (upa_steering(ang_b_to_r.elevation, ang_b_to_r.azimuth, sc.n_x,
                          sc.n_y, sc) *
             ula_steering(cos_from_bs(p_r), sc.n_tx, sc).transpose());
  cs.h_ru = path_gain(p_r, p_u, sc.eta_comm, sc) *
            upa_steering(ang_r_to_u.elevation, ang_r_to_u.azimuth, sc.n_x,
                         sc.n_y, sc)
                .transpose();
  cs.h_bt = path_gain(p_b, p_t, sc.eta_sensing, sc) *
            ula_steering(cos_from_bs(p_t), sc.n_tx, sc).transpose();
  cs.h_rt = path_gain(p_r, p_t, sc.eta_sensing, sc) *
            upa_steering(ang_r_to_t.elevation, ang_r_to_t.azimuth, sc.n_x,
                         sc.n_y, sc)
                .transpose();
  cs.hbar_tb = path_gain(p_t, p_b, sc.eta_sensing, sc) *
               ula_steering(cos_to_bs(p_t), sc.n_rx, sc);
  cs.hbar_tr = path_gain(p_t, p_r, sc.eta_sensing, sc) *
               upa_steering(ang_t_to_r.elevation, ang_t_to_r.azimuth, sc.n_x,
                            sc.n_y, sc);
  cs.hbar_rb = path_gain(p_r, p_b, sc.eta_sensing, sc) *
               (ula_steering(cos_to_bs(p_r), sc.n_rx, sc) *
                upa_steering(ang_r_to_b.elevation, ang_r_to_b.azimuth, sc.n_x,
                             sc.n_y, sc)
                    .transpose());

  // Ray angles measured from the outward face normal (local -z): the
  // complement of the local elevation of the surface->node direction.
  const double hat_b = kPi - ang_r_to_b.elevation;
  const double hat_u = kPi - ang_r_to_u.elevation;
  const double hat_t = kPi - ang_r_to_t.elevation;
  cs.f_cu = aperture_gain(hat_b, hat_u);
  cs.f_st = aperture_gain(hat_b, hat_t);
  cs.f_sr = aperture_gain(hat_t, hat_b);
  return cs;
}

Eigen::RowVectorXcd comm_channel(const ChannelSet& cs, const Eigen::VectorXcd& v) {
  return cs.h_bu + std::sqrt(cs.f_cu) * (cs.h_ru.cwiseProduct(v.transpose()) * cs.h_br);
}

Eigen::RowVectorXcd comm_channel(const ChannelSet& cs, const PhaseVector& v) {
  return comm_channel(cs, v.vec());
}

SensingChannels sensing_channels(const ChannelSet& cs, const Eigen::VectorXcd& v) {
  SensingChannels out;
  out.h_st = cs.h_bt + std::sqrt(cs.f_st) * (cs.h_rt.cwiseProduct(v.transpose()) * cs.h_br);
  out.h_sr = cs.hbar_tb + std::sqrt(cs.f_sr) * (cs.hbar_rb * v.cwiseProduct(cs.hbar_tr));
  return out;
}

SensingChannels sensing_channels(const ChannelSet& cs, const PhaseVector& v) {
  return sensing_channels(cs, v.vec());
}

}  // namespace sixdma
