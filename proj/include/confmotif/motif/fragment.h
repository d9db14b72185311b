//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_MOTIF_FRAGMENT_H_
#define CONFMOTIF_MOTIF_FRAGMENT_H_

#include <span>
#include <vector>

#include "confmotif/molgraph/molecule.h"
#include "confmotif/molgraph/rings.h"
#include "confmotif/motif/motif.h"

namespace confmotif {

struct Fragment {
  Motif motif;  // coordinates in the source frame
  // source_atoms[i] is the source atom behind motif atom i; for a dummy it
  // is the severed neighbor it stands for.
  std::vector<int> source_atoms;
};

struct SeveredBond {
  int bond;     // index in the source molecule
  int a, b;     // endpoints, a < b
  int ref_a;    // torsion reference atom on the a side
  int ref_b;    // torsion reference atom on the b side
  double torsion;  // dihedral(ref_a, a, b, ref_b), radians
  double length;   // |a - b| in the source, A
};

struct FragmentationResult {
  int source_atoms = 0;
  std::vector<Fragment> fragments;
  std::vector<SeveredBond> severed_bonds;
};

// Severs every freely rotatable bond, then classifies the pieces: a single
// fused ring system is split per SSSR ring, acyclic pieces get dummy atoms
// for their severed neighbors, anything else stays whole as a ring motif.
FragmentationResult fragment(const Molecule &mol);

struct LocalMotif {
  Motif motif;
  std::vector<int> atoms;  // indices into the fragment molecule
};

// One ring motif per SSSR ring. Atoms shared between rings are copied into
// every ring containing them; acyclic substituents go with the lowest-index
// ring holding their attachment atom. Throws InvalidMoleculeError unless the
// rings of `piece` form one fused system of two or more rings.
std::vector<LocalMotif> decompose_fused(const Molecule &piece,
                                        const RingInfo &rings);

// Chain motif from the acyclic atom set `atoms` of `source`: every outside
// neighbor becomes a dummy at its source position. Atoms (dummies included)
// are ordered by source index; `source_map` receives that order.
Motif augment_chain(const Molecule &source, std::span<const int> atoms,
                    std::vector<int> *source_map = nullptr);

}  // namespace confmotif

#endif  // CONFMOTIF_MOTIF_FRAGMENT_H_
