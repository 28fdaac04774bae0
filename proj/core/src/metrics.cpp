// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#include "sixdma/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sixdma {

double comm_snr(const ChannelSet& cs, const PhaseVector& v, const Beamformer& f,
                const Scenario& sc) {
  const Complex g = (comm_channel(cs, v) * f.vec())(0);
  return sc.p_tx * std::norm(g) / sc.sigma_c2;
}

double sensing_snr(const ChannelSet& cs, const PhaseVector& v,
                   const Beamformer& f, const Scenario& sc) {
  const SensingChannels s = sensing_channels(cs, v);
  const Complex g = (s.h_st * f.vec())(0);
  return sc.p_tx * s.h_sr.squaredNorm() * std::norm(g) / sc.sigma_s2;
}

double channel_correlation(const ChannelSet& cs, const PhaseVector& v) {
  const Eigen::RowVectorXcd h_c = comm_channel(cs, v);
  const SensingChannels s = sensing_channels(cs, v);
  const double nc = h_c.norm();
  const double nt = s.h_st.norm();
  if (nc == 0.0 || nt == 0.0) {
    throw std::invalid_argument("channel_correlation: zero channel");
  }
  const Complex z = (s.h_st * h_c.adjoint())(0);
  return std::min(1.0, std::abs(z) / (nt * nc));
}

double coupling_fitness(const ChannelSet& cs, const PhaseVector& v) {
  const Eigen::RowVectorXcd h_c = comm_channel(cs, v);
  const SensingChannels s = sensing_channels(cs, v);
  const Complex z = (s.h_st * h_c.adjoint())(0);
  return -s.h_sr.squaredNorm() * std::norm(z);
}

double coupling_fitness(const Scenario& sc, const Pose6D& pose,
                        const PhaseVector& v) {
  const Vec3& p_b = sc.p_bs;
  const Vec3& p_u = sc.p_ue;
  const Vec3& p_t = sc.p_target;
  const Vec3& p_r = pose.position;

  const auto cos_from_bs = [&](const Vec3& node) {
    return (node - p_b).z() / (node - p_b).norm();
  };
  const auto cos_to_bs = [&](const Vec3& node) {
    return (p_b - node).z() / (p_b - node).norm();
  };
  const auto upa = [&](const UpaAngles& ang) {
    return upa_steering(ang.elevation, ang.azimuth, sc.n_x, sc.n_y, sc);
  };

  const UpaAngles ang_b_to_r = upa_angles(pose, p_b, p_r);
  const UpaAngles ang_r_to_b = upa_angles(pose, p_r, p_b);
  const UpaAngles ang_r_to_u = upa_angles(pose, p_r, p_u);
  const UpaAngles ang_r_to_t = upa_angles(pose, p_r, p_t);
  const UpaAngles ang_t_to_r = upa_angles(pose, p_t, p_r);

  const Eigen::VectorXcd a_br = upa(ang_b_to_r);
  const Eigen::VectorXcd a_rb = upa(ang_r_to_b);
  const Eigen::VectorXcd a_ru = upa(ang_r_to_u);
  const Eigen::VectorXcd a_rt = upa(ang_r_to_t);
  const Eigen::VectorXcd a_tr = upa(ang_t_to_r);

  const double pi = std::numbers::pi;
  const double hat_b = pi - ang_r_to_b.elevation;
  const double hat_u = pi - ang_r_to_u.elevation;
  const double hat_t = pi - ang_r_to_t.elevation;
  const double f_cu = aperture_gain(hat_b, hat_u);
  const double f_st = aperture_gain(hat_b, hat_t);
  const double f_sr = aperture_gain(hat_t, hat_b);

  // cascade coefficients: h_xy diag(v) H_br collapses to a scalar times the
  // BS-side steering vector because H_br is an outer product
  const Eigen::VectorXcd& phases = v.vec();
  const Complex sum_cu = a_ru.cwiseProduct(phases).cwiseProduct(a_br).sum();
  const Complex sum_st = a_rt.cwiseProduct(phases).cwiseProduct(a_br).sum();
  const Complex sum_sr = a_rb.cwiseProduct(phases).cwiseProduct(a_tr).sum();

  const Complex alpha_br = path_gain(p_b, p_r, sc.eta_sensing, sc);
  const Complex s_c = std::sqrt(f_cu) * path_gain(p_r, p_u, sc.eta_comm, sc) *
                      alpha_br * sum_cu;
  const Complex s_t = std::sqrt(f_st) * path_gain(p_r, p_t, sc.eta_sensing, sc) *
                      alpha_br * sum_st;
  const Complex s_r = std::sqrt(f_sr) * path_gain(p_r, p_b, sc.eta_sensing, sc) *
                      path_gain(p_t, p_r, sc.eta_sensing, sc) * sum_sr;

  const Eigen::RowVectorXcd h_c =
      path_gain(p_b, p_u, sc.eta_comm, sc) *
          ula_steering(cos_from_bs(p_u), sc.n_tx, sc).transpose() +
      s_c * ula_steering(cos_from_bs(p_r), sc.n_tx, sc).transpose();
  const Eigen::RowVectorXcd h_st =
      path_gain(p_b, p_t, sc.eta_sensing, sc) *
          ula_steering(cos_from_bs(p_t), sc.n_tx, sc).transpose() +
      s_t * ula_steering(cos_from_bs(p_r), sc.n_tx, sc).transpose();
  const Eigen::VectorXcd h_sr =
      path_gain(p_t, p_b, sc.eta_sensing, sc) *
          ula_steering(cos_to_bs(p_t), sc.n_rx, sc) +
      s_r * ula_steering(cos_to_bs(p_r), sc.n_rx, sc);

  const Complex z = (h_st * h_c.adjoint())(0);
  return -h_sr.squaredNorm() * std::norm(z);
}

double penalized_fitness(const Pose6D& pose, const PhaseVector& v,
                         const Scenario& sc, double tau) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("penalized_fitness: tau must be positive");
  }
  double pen = 0.0;
  for (const Vec3* node : {&sc.p_bs, &sc.p_ue, &sc.p_target}) {
    const double viol = halfspace_violation(pose, *node);
    pen += viol * viol;
  }
  return coupling_fitness(sc, pose, v) + tau * pen;
}

}  // namespace sixdma
