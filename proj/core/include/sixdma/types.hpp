// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace sixdma {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Complex = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

/// Unit-modulus reflection coefficients of the surface, one per element.
class PhaseVector {
 public:
  PhaseVector() = default;

  explicit PhaseVector(Eigen::VectorXcd v) : v_(std::move(v)) {
    for (Eigen::Index i = 0; i < v_.size(); ++i) {
      if (std::abs(std::abs(v_(i)) - 1.0) > 1e-9) {
        throw std::invalid_argument("PhaseVector: entry " + std::to_string(i) +
                                    " is not unit-modulus");
      }
    }
  }

  static PhaseVector ones(Eigen::Index n) {
    return PhaseVector(Eigen::VectorXcd::Ones(n));
  }

  static PhaseVector from_phases(const Eigen::VectorXd& theta) {
    Eigen::VectorXcd v(theta.size());
    for (Eigen::Index i = 0; i < theta.size(); ++i) {
      v(i) = std::polar(1.0, theta(i));
    }
    return PhaseVector(std::move(v));
  }

  const Eigen::VectorXcd& vec() const { return v_; }
  Eigen::Index size() const { return v_.size(); }

 private:
  Eigen::VectorXcd v_;
};

/// Transmit beamformer, power-normalized to at most unit norm.
class Beamformer {
 public:
  Beamformer() = default;

  explicit Beamformer(Eigen::VectorXcd f) : f_(std::move(f)) {
    if (f_.norm() > 1.0 + 1e-9) {
      throw std::invalid_argument("Beamformer: norm exceeds unit power budget");
    }
  }

  const Eigen::VectorXcd& vec() const { return f_; }
  Eigen::Index size() const { return f_.size(); }

 private:
  Eigen::VectorXcd f_;
};

}  // namespace sixdma
