#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sixdma/metrics.hpp"
#include "sixdma/pbf.hpp"
#include "sixdma/rng.hpp"

using namespace sixdma;

namespace {

constexpr double kPi = std::numbers::pi;

Scenario small_scenario(int n_x, int n_y, int n_tx = 4, int n_rx = 3) {
  Scenario sc;
  sc.n_x = n_x;
  sc.n_y = n_y;
  sc.n_tx = n_tx;
  sc.n_rx = n_rx;
  sc.validate();
  return sc;
}

Pose6D random_pose(Rng& rng, const Scenario& sc) {
  return Pose6D({rng.uniform(sc.region.x_min, sc.region.x_max),
                 rng.uniform(sc.region.y_min, sc.region.y_max),
                 sc.region.altitude},
                {rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4),
                 rng.uniform(0.0, 2.0 * kPi)});
}

PhaseVector random_phases(Rng& rng, Eigen::Index n) {
  Eigen::VectorXd theta(n);
  for (Eigen::Index i = 0; i < n; ++i) theta(i) = rng.uniform(0.0, 2.0 * kPi);
  return PhaseVector::from_phases(theta);
}

/// Random synthetic problem with O(1) entries, independent of the channel
/// builder. Sizes: N elements, n_tx transmit, n_rx receive.
pbf::Problem random_problem(Rng& rng, int n, int n_tx, int n_rx) {
  const auto cstd = [&rng] {
    return Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  };
  pbf::Problem p;
  p.u_c.resize(n, n_tx);
  p.u_t.resize(n, n_tx);
  p.u_r.resize(n_rx, n);
  p.h_bu.resize(n_tx);
  p.h_bt.resize(n_tx);
  p.hbar_tb.resize(n_rx);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n_tx; ++j) {
      p.u_c(i, j) = cstd();
      p.u_t(i, j) = cstd();
    }
  }
  for (int i = 0; i < n_rx; ++i) {
    for (int j = 0; j < n; ++j) p.u_r(i, j) = cstd();
  }
  for (int j = 0; j < n_tx; ++j) {
    p.h_bu(j) = cstd();
    p.h_bt(j) = cstd();
  }
  for (int i = 0; i < n_rx; ++i) p.hbar_tb(i) = cstd();
  return p;
}

/// Central finite differences on the real and imaginary parts; converted to
/// the conjugate Wirtinger convention (dx + j dy) / 2.
Eigen::VectorXcd fd_gradient(const pbf::Problem& p, const Eigen::VectorXcd& v,
                             double h) {
  Eigen::VectorXcd g(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Eigen::VectorXcd vp = v, vm = v;
    vp(i) += Complex(h, 0.0);
    vm(i) -= Complex(h, 0.0);
    const double dx = (pbf::objective(p, vp) - pbf::objective(p, vm)) / (2 * h);
    vp = v;
    vm = v;
    vp(i) += Complex(0.0, h);
    vm(i) -= Complex(0.0, h);
    const double dy = (pbf::objective(p, vp) - pbf::objective(p, vm)) / (2 * h);
    g(i) = Complex(dx, dy) * 0.5;
  }
  return g;
}

}  // namespace

TEST_CASE("assemble: affine forms reproduce the channel operations") {
  const Scenario sc = small_scenario(3, 2, 5, 4);
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const ChannelSet cs = build_channels(sc, random_pose(rng, sc));
    const pbf::Problem p = pbf::assemble(cs);
    const PhaseVector v = random_phases(rng, sc.irs_elements());

    const Eigen::RowVectorXcd h_c_p = p.h_bu + v.vec().transpose() * p.u_c;
    CHECK((h_c_p - comm_channel(cs, v)).norm() < 1e-12);

    const SensingChannels s = sensing_channels(cs, v);
    const Eigen::RowVectorXcd h_t_p = p.h_bt + v.vec().transpose() * p.u_t;
    CHECK((h_t_p - s.h_st).norm() < 1e-12);
    const Eigen::VectorXcd h_r_p = p.hbar_tb + p.u_r * v.vec();
    CHECK((h_r_p - s.h_sr).norm() < 1e-12);
  }
}

TEST_CASE("assemble: zero aperture gains zero the coupling matrices") {
  const Scenario sc = small_scenario(2, 2);
  Rng rng(73);
  ChannelSet cs = build_channels(sc, random_pose(rng, sc));
  cs.f_cu = cs.f_st = cs.f_sr = 0.0;
  const pbf::Problem p = pbf::assemble(cs);
  CHECK(p.u_c.norm() == 0.0);
  CHECK(p.u_r.norm() == 0.0);
  CHECK(p.u_t.norm() == 0.0);
}

TEST_CASE("objective: equals coupling_fitness on the same channels") {
  const Scenario sc = small_scenario(4, 2);
  Rng rng(79);
  const ChannelSet cs = build_channels(sc, random_pose(rng, sc));
  const pbf::Problem p = pbf::assemble(cs);
  for (int trial = 0; trial < 100; ++trial) {
    const PhaseVector v = random_phases(rng, sc.irs_elements());
    const double q = pbf::objective(p, v);
    const double fit = coupling_fitness(cs, v);
    CHECK(q == doctest::Approx(fit).epsilon(1e-10));
    CHECK(q <= 0.0);
  }
}

TEST_CASE("objective: constant when the coupling matrices vanish") {
  Rng rng(83);
  pbf::Problem p = random_problem(rng, 4, 3, 2);
  p.u_c.setZero();
  p.u_r.setZero();
  p.u_t.setZero();
  const double a = pbf::objective(p, random_phases(rng, 4));
  const double b = pbf::objective(p, random_phases(rng, 4));
  CHECK(a == b);
  CHECK(pbf::euclidean_gradient(p, random_phases(rng, 4)).norm() == 0.0);
}

TEST_CASE("euclidean_gradient: matches central finite differences") {
  Rng rng(89);
  for (int n : {2, 4, 8, 16}) {
    for (int trial = 0; trial < 20; ++trial) {
      const pbf::Problem p = random_problem(rng, n, 4, 3);
      const PhaseVector v = random_phases(rng, n);
      const Eigen::VectorXcd analytic = pbf::euclidean_gradient(p, v);
      const Eigen::VectorXcd numeric = fd_gradient(p, v.vec(), 1e-6);
      const double rel =
          (analytic - numeric).norm() / std::max(numeric.norm(), 1e-300);
      CHECK(rel <= 1e-6);
    }
  }
}

TEST_CASE("euclidean_gradient: scales linearly with the objective") {
  Rng rng(97);
  pbf::Problem p = random_problem(rng, 6, 4, 3);
  const PhaseVector v = random_phases(rng, 6);
  const Eigen::VectorXcd g1 = pbf::euclidean_gradient(p, v);
  // scaling the receive block by s scales Q and its gradient by s^2
  const double s = 3.0;
  p.u_r *= s;
  p.hbar_tb *= s;
  const Eigen::VectorXcd g2 = pbf::euclidean_gradient(p, v);
  CHECK((g2 - s * s * g1).norm() <= 1e-12 * g2.norm());
}

TEST_CASE("circle_step: stationary input returns the same point") {
  Rng rng(101);
  const PhaseVector v = random_phases(rng, 5);
  const PhaseVector moved =
      pbf::circle_step(v, Eigen::VectorXcd::Zero(5), 0.7);
  CHECK((moved.vec() - v.vec()).norm() < 1e-15);
}

TEST_CASE("circle_step: output is unit modulus, projection is tangent") {
  Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const PhaseVector v = random_phases(rng, 8);
    Eigen::VectorXcd egrad(8);
    for (int i = 0; i < 8; ++i) {
      egrad(i) = Complex(rng.uniform(-2, 2), rng.uniform(-2, 2));
    }
    const Eigen::VectorXcd rgrad = pbf::tangent_project(v, egrad);
    for (int i = 0; i < 8; ++i) {
      CHECK(std::abs(std::real(rgrad(i) * std::conj(v.vec()(i)))) < 1e-12);
    }
    const PhaseVector moved = pbf::circle_step(v, egrad, rng.uniform(0.0, 2.0));
    for (int i = 0; i < 8; ++i) {
      CHECK(std::abs(std::abs(moved.vec()(i)) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("optimize: monotone trace and manifold iterates") {
  Rng rng(107);
  const pbf::Problem p = random_problem(rng, 8, 4, 3);
  pbf::Options opts;
  opts.restarts = 0;
  const pbf::Result res = pbf::optimize(p, PhaseVector::ones(8), opts);
  REQUIRE(res.trace.size() >= 2);
  for (std::size_t i = 1; i < res.trace.size(); ++i) {
    CHECK(res.trace[i] <= res.trace[i - 1]);
  }
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(std::abs(res.v.vec()(i)) - 1.0) < 1e-9);
  }
}

TEST_CASE("optimize: reaches the exhaustive grid optimum for N = 2") {
  Rng rng(109);
  const int levels = 64;
  pbf::Options opts;
  opts.restarts = 8;
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const pbf::Problem p = random_problem(rng, 2, 3, 2);

    // 64-level exhaustive phase grid oracle
    double grid_best = 0.0;
    for (int i = 0; i < levels; ++i) {
      for (int j = 0; j < levels; ++j) {
        Eigen::VectorXd theta(2);
        theta << 2.0 * kPi * i / levels, 2.0 * kPi * j / levels;
        grid_best = std::min(
            grid_best, pbf::objective(p, PhaseVector::from_phases(theta)));
      }
    }

    Rng solver_rng(1000 + trial);
    const pbf::Result res =
        pbf::optimize(p, PhaseVector::ones(2), opts, &solver_rng);
    const double got = pbf::objective(p, res.v);
    // within 0.2 dB of the grid optimum (both are negative; compare gains)
    CHECK(-got >= -grid_best * std::pow(10.0, -0.02));
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("optimize: starting at the optimum cannot get worse") {
  Rng rng(113);
  const pbf::Problem p = random_problem(rng, 4, 3, 2);
  pbf::Options opts;
  opts.restarts = 2;
  Rng r1(5);
  const pbf::Result first = pbf::optimize(p, PhaseVector::ones(4), opts, &r1);
  const double q_first = pbf::objective(p, first.v);
  Rng r2(6);
  const pbf::Result again = pbf::optimize(p, first.v, opts, &r2);
  CHECK(pbf::objective(p, again.v) <= q_first + 1e-15 * std::abs(q_first));
}

TEST_CASE("optimize: invariant under a common channel rescaling") {
  // the solver normalizes internally, so scaling every block by one
  // constant must reproduce the same iterates with a rescaled objective
  const Scenario sc = small_scenario(3, 3, 6, 5);
  Rng rng(127);
  const pbf::Problem p = pbf::assemble(build_channels(sc, random_pose(rng, sc)));
  pbf::Options opts;
  opts.restarts = 0;

  const double s = 0x1p-50;  // power of two keeps the scaling exact
  pbf::Problem scaled = p;
  scaled.u_c *= s;
  scaled.u_r *= s;
  scaled.u_t *= s;
  scaled.h_bu *= s;
  scaled.h_bt *= s;
  scaled.hbar_tb *= s;

  const pbf::Result a = pbf::optimize(p, PhaseVector::ones(9), opts);
  const pbf::Result b = pbf::optimize(scaled, PhaseVector::ones(9), opts);
  CHECK(a.trace.size() > 3);
  CHECK(a.trace.back() < a.trace.front());
  REQUIRE(a.trace.size() == b.trace.size());
  CHECK((a.v.vec() - b.v.vec()).norm() == 0.0);
  const double s6 = s * s * s * s * s * s;  // |h_r|^2 |h_t h_c^H|^2 scaling
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(b.trace[i] == doctest::Approx(a.trace[i] * s6).epsilon(1e-12));
  }
}
