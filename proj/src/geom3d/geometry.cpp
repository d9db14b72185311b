//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/geom3d/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "confmotif/error.h"

namespace confmotif {
namespace {

void check_sizes(std::span<const Vec3> p, std::span<const Vec3> q) {
  if (p.size() != q.size())
    throw GeometryError(fmt::format("point set sizes differ ({} vs {})",
                                    p.size(), q.size()));
  if (p.empty())
    throw GeometryError("point sets are empty");
}

// Largest perpendicular distance of any point from the line through the two
// most distant points.
double collinearity_spread(std::span<const Vec3> p) {
  std::size_t i0 = 0, j0 = 0;
  double best = -1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (const double d = (p[i] - p[j]).squaredNorm(); d > best) {
        best = d;
        i0 = i;
        j0 = j;
      }
  if (best <= 0)
    return 0;
  const Vec3 axis = (p[j0] - p[i0]).normalized();
  double spread = 0;
  for (const Vec3 &x: p) {
    const Vec3 d = x - p[i0];
    spread = std::max(spread, (d - d.dot(axis) * axis).norm());
  }
  return spread;
}

}  // namespace

PointSet RigidTransform::apply(std::span<const Vec3> points) const {
  PointSet out;
  out.reserve(points.size());
  for (const Vec3 &x: points)
    out.push_back(apply(x));
  return out;
}

RigidTransform RigidTransform::operator*(const RigidTransform &other) const {
  return { rotation * other.rotation, rotation * other.translation + translation };
}

RigidTransform RigidTransform::inverse() const {
  const Mat3 rt = rotation.transpose();
  return { rt, -(rt * translation) };
}

bool is_proper_rotation(const Mat3 &r, double tol) {
  return (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol
         && std::abs(r.determinant() - 1.0) <= tol;
}

Vec3 centroid(std::span<const Vec3> points) {
  Vec3 sum = Vec3::Zero();
  for (const Vec3 &x: points)
    sum += x;
  return points.empty() ? sum : Vec3(sum / static_cast<double>(points.size()));
}

KabschResult superpose(std::span<const Vec3> p, std::span<const Vec3> q) {
  check_sizes(p, q);
  const Vec3 cp = centroid(p), cq = centroid(q);

  Mat3 h = Mat3::Zero();
  for (std::size_t i = 0; i < p.size(); ++i)
    h += (p[i] - cp) * (q[i] - cq).transpose();

  Eigen::JacobiSVD<Mat3> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Mat3 u = svd.matrixU(), v = svd.matrixV();
  Mat3 d = Mat3::Identity();
  if ((v * u.transpose()).determinant() < 0)
    d(2, 2) = -1;

  RigidTransform t;
  t.rotation = v * d * u.transpose();
  t.translation = cq - t.rotation * cp;

  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    sum += (t.apply(p[i]) - q[i]).squaredNorm();
  return { t, std::sqrt(sum / static_cast<double>(p.size())) };
}

KabschResult kabsch(std::span<const Vec3> p, std::span<const Vec3> q) {
  check_sizes(p, q);
  if (p.size() < 3)
    throw GeometryError(
        fmt::format("kabsch needs at least 3 points, got {}", p.size()));
  if (collinearity_spread(p) < 1e-8 || collinearity_spread(q) < 1e-8)
    throw GeometryError("kabsch input points are collinear");
  return superpose(p, q);
}

double rmsd(std::span<const Vec3> p, std::span<const Vec3> q, bool superpose_first) {
  check_sizes(p, q);
  if (superpose_first)
    return superpose(p, q).rmsd;
  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    sum += (p[i] - q[i]).squaredNorm();
  return std::sqrt(sum / static_cast<double>(p.size()));
}

double wrap_angle(double radians) {
  constexpr double kTwoPi = 2 * std::numbers::pi;
  double a = std::fmod(radians, kTwoPi);
  if (a <= -std::numbers::pi)
    a += kTwoPi;
  else if (a > std::numbers::pi)
    a -= kTwoPi;
  return a;
}

double dihedral(const Vec3 &p1, const Vec3 &p2, const Vec3 &p3,
                const Vec3 &p4) {
  const Vec3 b1 = p2 - p1, b2 = p3 - p2, b3 = p4 - p3;
  const double axis = b2.norm();
  if (axis < 1e-10)
    throw GeometryError("dihedral axis atoms coincide");
  const Vec3 n1 = b1.cross(b2), n2 = b2.cross(b3);
  if (n1.norm() < 1e-10 * axis || n2.norm() < 1e-10 * axis)
    throw GeometryError("dihedral flank is collinear with its axis");

  const double y = axis * b1.dot(n2);
  const double x = n1.dot(n2);
  return wrap_angle(std::atan2(y, x));
}

RigidTransform axis_rotation(const Vec3 &origin, const Vec3 &axis,
                             double angle) {
  RigidTransform t;
  t.rotation = Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
  t.translation = origin - t.rotation * origin;
  return t;
}

PointSet rotate_about_bond(std::span<const Vec3> coords,
                           std::span<const int> moving, int a, int b,
                           double angle) {
  if (a == b)
    throw GeometryError("rotation axis needs two distinct atoms");
  const int n = static_cast<int>(coords.size());
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw GeometryError("rotation axis atom index out of range");
  const Vec3 axis = coords[b] - coords[a];
  if (axis.norm() < 1e-10)
    throw GeometryError("rotation axis atoms coincide");

  PointSet out(coords.begin(), coords.end());
  const RigidTransform t = axis_rotation(coords[a], axis, angle);
  for (int m: moving) {
    if (m == a || m == b)
      throw GeometryError("rotation axis atom is in the moving set");
    if (m < 0 || m >= n)
      throw GeometryError("moving atom index out of range");
    out[m] = t.apply(coords[m]);
  }
  return out;
}

}  // namespace confmotif
