//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_GEOM3D_GEOMETRY_H_
#define CONFMOTIF_GEOM3D_GEOMETRY_H_

#include <span>
#include <vector>

#include "confmotif/vec3.h"

namespace confmotif {

// x -> rotation * x + translation
struct RigidTransform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3 &x) const { return rotation * x + translation; }
  PointSet apply(std::span<const Vec3> points) const;

  // (this * other)(x) = this(other(x))
  RigidTransform operator*(const RigidTransform &other) const;
  RigidTransform inverse() const;

  static RigidTransform identity() { return {}; }
};

bool is_proper_rotation(const Mat3 &r, double tol = 1e-9);

struct KabschResult {
  RigidTransform transform;  // maps P onto Q
  double rmsd;
};

// Least-squares proper rigid superposition of P onto Q.
// Throws GeometryError on size mismatch, fewer than 3 points, or collinear
// input.
KabschResult kabsch(std::span<const Vec3> p, std::span<const Vec3> q);

// Same as kabsch() but without the 3-point / non-collinear requirement;
// degenerate sets still yield some optimal transform.
KabschResult superpose(std::span<const Vec3> p, std::span<const Vec3> q);

// Throws GeometryError on size mismatch or empty input.
double rmsd(std::span<const Vec3> p, std::span<const Vec3> q, bool superpose);

Vec3 centroid(std::span<const Vec3> points);

// Signed torsion p1-p2-p3-p4 in (-pi, pi]; positive when, looking along
// p2->p3, p4 is rotated clockwise from p1. Throws GeometryError on
// degenerate input.
double dihedral(const Vec3 &p1, const Vec3 &p2, const Vec3 &p3,
                const Vec3 &p4);

// Maps any angle to (-pi, pi].
double wrap_angle(double radians);

// Rotation by `angle` about the axis through `origin` along `axis`
// (right-hand rule).
RigidTransform axis_rotation(const Vec3 &origin, const Vec3 &axis,
                             double angle);

// Rotates coords[moving] about the line coords[a] -> coords[b]. A positive
// angle increases dihedral(x, a, b, m) for moving atoms m on the b side.
// Throws GeometryError when a == b, the axis is degenerate, or an axis atom
// is in the moving set.
PointSet rotate_about_bond(std::span<const Vec3> coords,
                           std::span<const int> moving, int a, int b,
                           double angle);

}  // namespace confmotif

#endif  // CONFMOTIF_GEOM3D_GEOMETRY_H_
