// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#include "sixdma/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sixdma {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void Region::validate() const {
  if (x_min > x_max || y_min > y_max) {
    throw std::invalid_argument("Region: min bound exceeds max bound");
  }
  if (!(altitude > 0.0)) {
    throw std::invalid_argument("Region: altitude must be positive");
  }
}

double wrap_angle(double a) {
  double x = std::fmod(a, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  if (x >= kTwoPi) x = 0.0;
  return x;
}

Mat3 rotation_matrix(const Vec3& euler) {
  return (Eigen::AngleAxisd(euler.z(), Vec3::UnitZ()) *
          Eigen::AngleAxisd(euler.y(), Vec3::UnitY()) *
          Eigen::AngleAxisd(euler.x(), Vec3::UnitX()))
      .toRotationMatrix();
}

Vec3 to_local(const Vec3& p, const Pose6D& pose) {
  return rotation_matrix(pose.euler).transpose() * (p - pose.position);
}

Vec3 to_global(const Vec3& local, const Pose6D& pose) {
  return rotation_matrix(pose.euler) * local + pose.position;
}

UpaAngles upa_angles(const Pose6D& pose, const Vec3& from, const Vec3& to) {
  const Vec3 diff = to - from;
  const double dist = diff.norm();
  if (dist <= 0.0) {
    throw std::invalid_argument("upa_angles: coincident endpoints");
  }
  const Vec3 local = rotation_matrix(pose.euler).transpose() * diff;
  const double cos_elev = std::clamp(local.z() / dist, -1.0, 1.0);
  return {std::acos(cos_elev), std::atan2(local.y(), local.x())};
}

Vec3 normal_vector(const Pose6D& pose) {
  return rotation_matrix(pose.euler) * Vec3(0.0, 0.0, -1.0);
}

bool halfspace_feasible(const Pose6D& pose, std::span<const Vec3> nodes) {
  if (nodes.empty()) {
    throw std::invalid_argument("halfspace_feasible: no nodes given");
  }
  const Vec3 n = normal_vector(pose);
  for (const Vec3& p : nodes) {
    if (n.dot(p - pose.position) < 0.0) return false;
  }
  return true;
}

double halfspace_violation(const Pose6D& pose, const Vec3& node) {
  const Vec3 diff = node - pose.position;
  const double dist = diff.norm();
  if (dist <= 0.0) {
    throw std::invalid_argument("halfspace_violation: node coincides with surface");
  }
  return std::max(0.0, -normal_vector(pose).dot(diff) / dist);
}

}  // namespace sixdma
