//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_TESTS_ORACLES_H_
#define CONFMOTIF_TESTS_ORACLES_H_

#include <span>
#include <vector>

#include "confmotif/molgraph/canonical.h"
#include "confmotif/molgraph/molecule.h"

// Slow, independent reference implementations used only by tests.
namespace confmotif::oracle {

// Backtracking (VF2-style) label-preserving isomorphism test.
bool isomorphic(const LabeledGraph &g1, const LabeledGraph &g2);
bool isomorphic(const Molecule &a, const Molecule &b);

// Rotatable bonds by literally deleting each single bond, counting
// components, and testing the off-axis predicate on both sides.
std::vector<int> rotatable_bonds(const Molecule &mol);

// Bridges by deleting each bond and counting components.
std::vector<int> bridges(const Molecule &mol);

// Every simple cycle, as a sorted bond list.
std::vector<std::vector<int>> simple_cycles(const Molecule &mol);

// Sizes of a minimum cycle basis, chosen greedily from simple_cycles().
std::vector<int> minimum_cycle_basis_sizes(const Molecule &mol);

// Optimal superposition RMSD from the largest eigenvalue of Horn's 4x4
// quaternion matrix.
double horn_rmsd(std::span<const Vec3> p, std::span<const Vec3> q);

// Torsion from the angle between plane normals, signed by the triple
// product.
double torsion(const Vec3 &p1, const Vec3 &p2, const Vec3 &p3, const Vec3 &p4);

}  // namespace confmotif::oracle

#endif  // CONFMOTIF_TESTS_ORACLES_H_
