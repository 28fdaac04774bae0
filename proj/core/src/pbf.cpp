// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#include "sixdma/pbf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sixdma::pbf {

namespace {

struct Channels {
  Eigen::RowVectorXcd h_c;
  Eigen::RowVectorXcd h_t;
  Eigen::VectorXcd h_r;
  Complex z;  // h_t * h_c^H
};

Channels eval_channels(const Problem& p, const Eigen::VectorXcd& v) {
  Channels ch;
  ch.h_c = p.h_bu + v.transpose() * p.u_c;
  ch.h_t = p.h_bt + v.transpose() * p.u_t;
  ch.h_r = p.hbar_tb + p.u_r * v;
  ch.z = (ch.h_t * ch.h_c.adjoint())(0);
  return ch;
}

double block_scale(double a, double b) {
  const double m = a + b;
  return m > 0.0 ? 1.0 / m : 1.0;
}

/// Rescale each affine channel block to O(1) magnitude. The optimum is
/// invariant; the objective picks up the factor (s_c * s_t * s_r)^2.
Problem rescaled(const Problem& p, double* q_factor) {
  const double s_c = block_scale(p.h_bu.norm(), p.u_c.norm());
  const double s_t = block_scale(p.h_bt.norm(), p.u_t.norm());
  const double s_r = block_scale(p.hbar_tb.norm(), p.u_r.norm());
  Problem out;
  out.u_c = s_c * p.u_c;
  out.u_r = s_r * p.u_r;
  out.u_t = s_t * p.u_t;
  out.h_bu = s_c * p.h_bu;
  out.h_bt = s_t * p.h_bt;
  out.hbar_tb = s_r * p.hbar_tb;
  *q_factor = (s_c * s_c) * (s_t * s_t) * (s_r * s_r);
  return out;
}

struct DescentOut {
  PhaseVector v;
  std::vector<double> trace;
  double value = 0.0;
};

DescentOut descend(const Problem& p, PhaseVector v, const Options& opts) {
  DescentOut out;
  double q = objective(p, v);
  out.trace.push_back(q);
  for (int iter = 0; iter < opts.max_iters; ++iter) {
    const Eigen::VectorXcd egrad = euclidean_gradient(p, v);
    const Eigen::VectorXcd rgrad = tangent_project(v, egrad);
    const double gnorm = rgrad.norm();
    if (gnorm < opts.grad_tol) break;

    // Armijo backtracking along the retracted negative gradient. The
    // directional derivative at step 0 is -2 |rgrad|^2 under the
    // conjugate-gradient convention.
    const double dir_deriv = -2.0 * gnorm * gnorm;
    double step = opts.initial_step;
    bool accepted = false;
    while (step > 1e-20) {
      const PhaseVector cand = circle_step(v, egrad, step);
      const double qc = objective(p, cand);
      if (qc <= q + opts.armijo_c * step * dir_deriv) {
        v = cand;
        q = qc;
        accepted = true;
        break;
      }
      step *= opts.backtrack;
    }
    if (!accepted) break;  // no acceptable step left; numerically stationary
    out.trace.push_back(q);
  }
  out.v = std::move(v);
  out.value = q;
  return out;
}

}  // namespace

Problem assemble(const ChannelSet& cs) {
  Problem p;
  p.u_c = std::sqrt(cs.f_cu) *
          (cs.h_ru.transpose().asDiagonal() * cs.h_br);
  p.u_r = std::sqrt(cs.f_sr) * (cs.hbar_rb * cs.hbar_tr.asDiagonal());
  p.u_t = std::sqrt(cs.f_st) *
          (cs.h_rt.transpose().asDiagonal() * cs.h_br);
  p.h_bu = cs.h_bu;
  p.h_bt = cs.h_bt;
  p.hbar_tb = cs.hbar_tb;
  return p;
}

double objective(const Problem& p, const Eigen::VectorXcd& v) {
  const Channels ch = eval_channels(p, v);
  return -ch.h_r.squaredNorm() * std::norm(ch.z);
}

double objective(const Problem& p, const PhaseVector& v) {
  return objective(p, v.vec());
}

Eigen::VectorXcd euclidean_gradient(const Problem& p, const Eigen::VectorXcd& v) {
  const Channels ch = eval_channels(p, v);
  const double a = ch.h_r.squaredNorm();
  // dQ/d(conj v) by the product rule over the three affine factors:
  //   d(|h_r|^2)      -> u_r^H h_r
  //   d(z = h_t h_c^H) -> conj(u_c) h_t^T   (via conj(h_c))
  //   d(conj z)        -> conj(u_t) h_c^T   (via conj(h_t))
  Eigen::VectorXcd g = (p.u_r.adjoint() * ch.h_r) * std::norm(ch.z);
  g.noalias() += a * std::conj(ch.z) * (p.u_c.conjugate() * ch.h_t.transpose());
  g.noalias() += a * ch.z * (p.u_t.conjugate() * ch.h_c.transpose());
  return -g;
}

Eigen::VectorXcd euclidean_gradient(const Problem& p, const PhaseVector& v) {
  return euclidean_gradient(p, v.vec());
}

Eigen::VectorXcd tangent_project(const PhaseVector& v,
                                 const Eigen::VectorXcd& egrad) {
  const Eigen::VectorXcd& x = v.vec();
  Eigen::VectorXcd out(egrad.size());
  for (Eigen::Index i = 0; i < egrad.size(); ++i) {
    out(i) = egrad(i) - std::real(egrad(i) * std::conj(x(i))) * x(i);
  }
  return out;
}

PhaseVector circle_step(const PhaseVector& v, const Eigen::VectorXcd& egrad,
                        double step) {
  const Eigen::VectorXcd rgrad = tangent_project(v, egrad);
  const Eigen::VectorXcd& x = v.vec();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXcd out(x.size());
    bool ok = true;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const Complex w = x(i) - step * rgrad(i);
      const double m = std::abs(w);
      if (m < 1e-300) {
        ok = false;
        break;
      }
      out(i) = w / m;
    }
    if (ok) return PhaseVector(std::move(out));
    step *= 0.5;
  }
  throw std::runtime_error("circle_step: retraction stayed degenerate");
}

Result optimize(const Problem& p, const PhaseVector& v0, const Options& opts,
                Rng* rng) {
  if (v0.size() != p.size()) {
    throw std::invalid_argument("pbf::optimize: phase vector size mismatch");
  }
  double q_factor = 1.0;
  const Problem scaled = rescaled(p, &q_factor);

  DescentOut best = descend(scaled, v0, opts);
  if (rng != nullptr) {
    for (int r = 0; r < opts.restarts; ++r) {
      Eigen::VectorXd theta(p.size());
      for (Eigen::Index i = 0; i < theta.size(); ++i) {
        theta(i) = rng->uniform(0.0, 2.0 * std::numbers::pi);
      }
      DescentOut run = descend(scaled, PhaseVector::from_phases(theta), opts);
      if (run.value < best.value) best = std::move(run);
    }
  }

  Result out;
  out.v = std::move(best.v);
  out.trace.reserve(best.trace.size());
  for (double q : best.trace) out.trace.push_back(q / q_factor);
  return out;
}

}  // namespace sixdma::pbf
