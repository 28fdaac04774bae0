// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#include "sixdma/beamformer.hpp"

#include <cmath>

namespace sixdma {

BfSolution solve_beamformer(const Eigen::RowVectorXcd& h_st, double h_sr_norm2,
                            const Eigen::RowVectorXcd& h_c, const Scenario& sc) {
  const double hst_norm = h_st.norm();
  const double hc_norm = h_c.norm();
  if (hst_norm <= 0.0 || hc_norm <= 0.0) {
    throw std::invalid_argument("solve_beamformer: zero channel");
  }

  const double gamma0 = from_db(sc.gamma0_db);
  const double comm_full = sc.p_tx * hc_norm * hc_norm / sc.sigma_c2;

  const auto finish = [&](Eigen::VectorXcd f, bool active) {
    BfSolution s;
    s.snr_c_db = to_db(sc.p_tx * std::norm((h_c * f)(0)) / sc.sigma_c2);
    s.snr_s_db =
        to_db(sc.p_tx * h_sr_norm2 * std::norm((h_st * f)(0)) / sc.sigma_s2);
    s.constraint_active = active;
    s.f = Beamformer(std::move(f));
    return s;
  };

  // Sensing matched filter first: optimal whenever it already serves the UE.
  Eigen::VectorXcd f_mf = h_st.adjoint() / hst_norm;
  const double comm_mf = sc.p_tx * std::norm((h_c * f_mf)(0)) / sc.sigma_c2;
  if (comm_mf >= gamma0) return finish(std::move(f_mf), false);

  // Fraction of unit power that must land on the UE direction.
  const double rho_c = gamma0 / comm_full;
  if (rho_c > 1.0) throw BfInfeasibleError(to_db(comm_full));

  const Eigen::VectorXcd u1 = h_c.adjoint() / hc_norm;
  const Complex c1 = (h_st * u1)(0);
  const Eigen::VectorXcd w = h_st.adjoint() - std::conj(c1) * u1;
  const double w_norm = w.norm();

  if (w_norm <= 1e-12 * hst_norm) {
    // Sensing channel collinear with the communication channel: all power
    // on the shared direction, phase-aligned to the sensing response.
    return finish(std::polar(1.0, -std::arg(c1)) * u1, true);
  }

  const Eigen::VectorXcd u2 = w / w_norm;
  const Complex c2 = (h_st * u2)(0);
  Eigen::VectorXcd f = std::sqrt(rho_c) * std::polar(1.0, -std::arg(c1)) * u1 +
                       std::sqrt(1.0 - rho_c) *
                           std::polar(1.0, -std::arg(c2)) * u2;
  return finish(std::move(f), true);
}

}  // namespace sixdma
