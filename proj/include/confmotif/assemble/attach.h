//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_ASSEMBLE_ATTACH_H_
#define CONFMOTIF_ASSEMBLE_ATTACH_H_

#include <optional>
#include <utility>
#include <vector>

#include "confmotif/assemble/state.h"

namespace confmotif {

// Single-bond length used for a new bond between two elements, A.
double new_bond_length(int z1, int z2);

// Overrides for the default anchor frame. Used to re-create a known
// geometry exactly (fragment round trips); generation leaves them empty.
struct AttachHints {
  std::optional<double> bond_length;
  // Unit direction from the fragment atom toward the new neighbor (ligand
  // frame) and from the motif atom toward the fragment atom (motif frame).
  std::optional<Vec3> fragment_direction;
  std::optional<Vec3> motif_direction;
  // Torsion reference points (ligand frame / motif frame). When both are
  // set the torsion is always applied relative to them.
  std::optional<Vec3> fragment_ref_point;
  std::optional<Vec3> motif_ref_point;
  // Bond-bond: where the motif ring centroid should land (ligand frame).
  std::optional<Vec3> centroid_target;
  // Bond-bond: further (motif atom, ligand atom) identifications.
  std::vector<std::pair<int, int>> extra_merges;
};

struct AttachOptions {
  double clash_distance = kDefaultClashDistance;
  const AttachHints *hints = nullptr;
};

// Connects `motif` to the partial ligand.
//
// Atom-atom: forms a single bond between the two site atoms (a consumed
// motif dummy stands in for the fragment atom). The motif is moved so the
// bond runs along the fragment's open direction with the tabulated length,
// then turned about the bond to `torsion` when the bond is freely rotatable.
// Open slots and leftover dummies count as placeholder atoms for that test.
//
// Bond-bond: the motif's directed bond (i, j) is fused onto the fragment's
// (m, n): the motif is Kabsch-aligned so its ring lies across the shared
// bond, in the fragment ring's plane, and i, j are merged into m, n.
//
// Throws AttachError (kind mismatch, invalid site, valence, merge conflict,
// clash). Pre-existing ligand coordinates are never changed.
AssemblyState attach(const AssemblyState &state,
                     const ConnectionSite &fragment_site, const Motif &motif,
                     const ConnectionSite &motif_site, double torsion,
                     const AttachOptions &options = {});

// Torsion across the would-be atom-atom bond measured with attach's default
// reference choice, assuming ligand and motif coordinates already share a
// frame (e.g. both taken from one source molecule). nullopt when the bond
// would not be rotatable.
std::optional<double> measure_attach_torsion(const PartialLigand &ligand,
                                             const ConnectionSite &fragment_site,
                                             const Motif &motif,
                                             const ConnectionSite &motif_site);

}  // namespace confmotif

#endif  // CONFMOTIF_ASSEMBLE_ATTACH_H_
