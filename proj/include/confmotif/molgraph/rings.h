//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_MOLGRAPH_RINGS_H_
#define CONFMOTIF_MOLGRAPH_RINGS_H_

#include <vector>

#include "confmotif/molgraph/molecule.h"

namespace confmotif {

struct RingInfo {
  // SSSR basis; each ring lists atoms in cycle order starting from its
  // lowest atom index.
  std::vector<std::vector<int>> rings;
  // Bond indices of each ring, sorted.
  std::vector<std::vector<int>> ring_bond_sets;
  // Sorted indices of all bonds lying on some ring.
  std::vector<int> ring_bonds;
  // Rings grouped by the "shares a bond" relation, as ring indices.
  std::vector<std::vector<int>> fused_systems;
  // Atoms of each fused system, sorted; parallel to fused_systems.
  std::vector<std::vector<int>> fused_components;

  bool empty() const { return rings.empty(); }
  bool is_ring_bond(int bond) const;
  bool is_ring_atom(int atom) const;
};

// Smallest set of smallest rings (Horton candidates reduced by GF(2)
// elimination). Works per connected component; the ring count equals
// bonds - atoms + components.
RingInfo perceive_rings(const Molecule &mol);

// Bonds whose removal disconnects their component (Tarjan lowlink).
std::vector<int> find_bridges(const Molecule &mol);

}  // namespace confmotif

#endif  // CONFMOTIF_MOLGRAPH_RINGS_H_
