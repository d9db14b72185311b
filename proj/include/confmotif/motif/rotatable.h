//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_MOTIF_ROTATABLE_H_
#define CONFMOTIF_MOTIF_ROTATABLE_H_

#include <optional>
#include <span>
#include <vector>

#include "confmotif/molgraph/molecule.h"

namespace confmotif {

// Perpendicular distance from the bond line above which a point counts as
// off-axis.
inline constexpr double kOffAxisTolerance = 0.1;

bool is_off_axis(const Vec3 &point, const Vec3 &a, const Vec3 &b);

// Atoms reachable from `start` without crossing `bond` (includes start).
// Sorted ascending.
std::vector<int> side_atoms(const Molecule &mol, int bond, int start);

// A single, non-ring bond whose two sides each hold an atom off the bond
// line.
bool is_freely_rotatable(const Molecule &mol, int bond);

std::vector<int> find_rotatable_bonds(const Molecule &mol);

// Torsion reference on the `a` side of bond a-b: the lowest-index neighbor
// of `a` (other than b) that is off-axis, else the lowest-index off-axis atom
// on that side. nullopt when the whole side lies on the axis.
std::optional<int> torsion_reference(const Molecule &mol, int a, int b);

}  // namespace confmotif

#endif  // CONFMOTIF_MOTIF_ROTATABLE_H_
