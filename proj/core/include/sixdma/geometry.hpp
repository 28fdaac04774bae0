// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "sixdma/types.hpp"

namespace sixdma {

/// Axis-aligned horizontal deployment region at a fixed altitude.
struct Region {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  double altitude = 0.0;  // meters

  Vec3 center() const {
    return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max), altitude};
  }

  bool contains_xy(double x, double y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }

  void validate() const;
};

/// Wrap an angle into [0, 2*pi).
double wrap_angle(double a);

/// Surface pose: global location of the reference element plus Z-Y-X Euler
/// orientation. Angles are wrapped into [0, 2*pi) on construction.
struct Pose6D {
  Vec3 position{0.0, 0.0, 0.0};  // meters
  Vec3 euler{0.0, 0.0, 0.0};     // radians: rotation about x', y', z'

  Pose6D() = default;
  Pose6D(const Vec3& p, const Vec3& angles)
      : position(p),
        euler(wrap_angle(angles.x()), wrap_angle(angles.y()),
              wrap_angle(angles.z())) {}
};

/// Intrinsic Z-Y-X rotation: Q = Rz(gz) * Ry(gy) * Rx(gx), det(Q) = +1.
Mat3 rotation_matrix(const Vec3& euler);

/// Global point expressed in the surface-local frame: Q^T * (p - position).
Vec3 to_local(const Vec3& p, const Pose6D& pose);

/// Inverse of to_local: Q * local + position.
Vec3 to_global(const Vec3& local, const Pose6D& pose);

struct UpaAngles {
  double elevation = 0.0;  // [0, pi], measured from the local +z axis
  double azimuth = 0.0;    // (-pi, pi], four-quadrant, in the local x-y plane
};

/// Elevation/azimuth of the `from`->`to` direction in the pose's local frame.
/// One endpoint is expected to be the surface reference element.
UpaAngles upa_angles(const Pose6D& pose, const Vec3& from, const Vec3& to);

/// Outward normal of the reflecting face in the global frame (unit norm).
/// The face points along local -z, so this is Q * [0, 0, -1]^T.
Vec3 normal_vector(const Pose6D& pose);

/// True iff every node lies in the reflection half-space, i.e.
/// n^T (p_node - position) >= 0 for the outward normal n.
bool halfspace_feasible(const Pose6D& pose, std::span<const Vec3> nodes);

/// max(0, -n^T u) with u the unit direction from the surface to the node;
/// zero exactly when the node is in the reflection half-space.
double halfspace_violation(const Pose6D& pose, const Vec3& node);

}  // namespace sixdma
