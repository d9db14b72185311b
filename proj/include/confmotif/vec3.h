//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_VEC3_H_
#define CONFMOTIF_VEC3_H_

#include <vector>

#include <Eigen/Dense>

namespace confmotif {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Ordered list of 3D points in Angstrom.
using PointSet = std::vector<Vec3>;

}  // namespace confmotif

#endif  // CONFMOTIF_VEC3_H_
