// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sixdma/channel.hpp"
#include "sixdma/rng.hpp"
#include "sixdma/types.hpp"

namespace sixdma::pbf {

/// Reflection-phase subproblem in affine form. With v the phase vector,
///   h_c(v) = h_bu + v^T u_c,   h_t(v) = h_bt + v^T u_t,
///   h_r(v) = hbar_tb + u_r v,
/// and the objective is Q(v) = -|h_r(v)|^2 * |h_t(v) h_c(v)^H|^2.
/// The u matrices carry their sqrt-aperture-gain factors.
struct Problem {
  Eigen::MatrixXcd u_c;  // N x n_tx
  Eigen::MatrixXcd u_r;  // n_rx x N
  Eigen::MatrixXcd u_t;  // N x n_tx
  Eigen::RowVectorXcd h_bu;
  Eigen::RowVectorXcd h_bt;
  Eigen::VectorXcd hbar_tb;

  Eigen::Index size() const { return u_c.rows(); }
};

struct Options {
  int restarts = 4;          // random restarts in addition to the warm start
  double grad_tol = 1e-6;    // Riemannian gradient norm stop (scaled problem)
  int max_iters = 500;
  double initial_step = 1.0;
  double backtrack = 0.5;
  double armijo_c = 1e-4;
};

struct Result {
  PhaseVector v;
  std::vector<double> trace;  // objective after each accepted step
};

/// Build the affine subproblem from a channel set.
Problem assemble(const ChannelSet& cs);

/// Q(v); equal to coupling_fitness on the channels the problem came from.
/// The raw overload evaluates the same expression for any complex v.
double objective(const Problem& p, const Eigen::VectorXcd& v);
double objective(const Problem& p, const PhaseVector& v);

/// Conjugate Wirtinger gradient dQ/d(conj v) of the objective.
Eigen::VectorXcd euclidean_gradient(const Problem& p, const Eigen::VectorXcd& v);
Eigen::VectorXcd euclidean_gradient(const Problem& p, const PhaseVector& v);

/// Component of a Euclidean gradient tangent to the unit-circle product
/// manifold at v: g_i - Re(g_i * conj(v_i)) * v_i.
Eigen::VectorXcd tangent_project(const PhaseVector& v,
                                 const Eigen::VectorXcd& egrad);

/// One projected-gradient move: tangent-project egrad, step along the
/// negative direction, retract each entry back to unit modulus.
PhaseVector circle_step(const PhaseVector& v, const Eigen::VectorXcd& egrad,
                        double step);

/// Riemannian gradient descent with Armijo backtracking, warm-started at v0
/// plus `restarts` random starts when an rng is supplied; best run kept.
/// The descent operates on an internally rescaled problem so tolerances are
/// meaningful regardless of the absolute channel scale; reported objective
/// values are in true units.
Result optimize(const Problem& p, const PhaseVector& v0, const Options& opts,
                Rng* rng = nullptr);

}  // namespace sixdma::pbf
