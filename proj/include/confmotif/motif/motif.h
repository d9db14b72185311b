//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_MOTIF_MOTIF_H_
#define CONFMOTIF_MOTIF_MOTIF_H_

#include <string_view>

#include "confmotif/molgraph/canonical.h"
#include "confmotif/molgraph/molecule.h"

namespace confmotif {

enum class MotifKind {
  kRing,   // ring-like, never carries dummy atoms
  kChain,  // acyclic, dummy atoms mark severed neighbors
};

std::string_view to_string(MotifKind kind);
// "ring" or "chain"; throws ParseError(…, 0) otherwise.
MotifKind parse_motif_kind(std::string_view text);

// A vocabulary element: labeled graph plus one stored conformation.
struct Motif {
  Molecule graph;
  MotifKind kind = MotifKind::kRing;
  CanonicalKey key;
  long frequency = 1;

  int num_heavy_atoms() const;
};

// Builds a motif and its canonical key.
Motif make_motif(Molecule graph, MotifKind kind, long frequency = 1);

// Throws InvalidMoleculeError when a structural motif invariant fails:
// dummies in ring motifs, dummies with other than one non-dummy neighbor,
// bond lengths outside [0.9, 2.0] A, or a valence violation.
void validate_motif(const Motif &motif);

}  // namespace confmotif

#endif  // CONFMOTIF_MOTIF_MOTIF_H_
