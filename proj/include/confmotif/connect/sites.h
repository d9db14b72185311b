//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_CONNECT_SITES_H_
#define CONFMOTIF_CONNECT_SITES_H_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "confmotif/molgraph/molecule.h"
#include "confmotif/motif/motif.h"

namespace confmotif {

enum class SiteKind { kAtom, kBond };
enum class SiteHost { kFragment, kMotif };

struct ConnectionSite {
  SiteKind kind = SiteKind::kAtom;
  SiteHost host = SiteHost::kFragment;
  int atom = -1;   // the site atom; first atom of a directed bond
  int atom2 = -1;  // second atom of a directed bond, -1 for atom sites
  // Fragment sites backed by an open slot carry the slot index; the atom is
  // then the slot's owner. Motif dummy sites use `atom` for the dummy.
  int slot = -1;

  friend bool operator==(const ConnectionSite &,
                         const ConnectionSite &) = default;
  friend auto operator<=>(const ConnectionSite &,
                          const ConnectionSite &) = default;
};

std::string describe(const ConnectionSite &site);

// A position where a severed neighbor used to sit and may be re-filled.
struct OpenSlot {
  int atom;      // owner atom in the partial ligand
  Vec3 position;
};

// The partial ligand G^(t): heavy-atom graph plus open-slot bookkeeping.
struct PartialLigand {
  Molecule mol;
  std::vector<OpenSlot> slots;
};

// Open slots, then ring atoms with free valence >= 1, then directed ring
// bonds whose endpoints both qualify. No reduction is applied.
std::vector<ConnectionSite> enumerate_ccs_fragment(const PartialLigand &ligand);

// Dummy atoms for chain motifs; ring atoms with free valence >= 1 and the
// directed ring bonds between them for ring motifs.
std::vector<ConnectionSite> enumerate_ccs_motif(const Motif &motif);

struct EquivalenceClasses {
  // Indices into the site list; classes ordered by their representative.
  std::vector<std::vector<int>> atom_classes;
  std::vector<std::vector<int>> bond_classes;
  std::vector<int> atom_representatives;
  std::vector<int> bond_representatives;
  // Class id per site; bond classes are numbered after atom classes.
  std::vector<int> class_of;

  std::vector<int> representatives() const;
  int num_classes() const {
    return static_cast<int>(atom_classes.size() + bond_classes.size());
  }
};

// Groups sites whose marked motif graphs are isomorphic: one distinguished
// label on the site atom, or two ordered labels on a directed bond. The
// representative of a class is the member with the lowest canonical rank.
EquivalenceClasses equivalence_classes(const Motif &motif,
                                       std::span<const ConnectionSite> sites);

// Canonical key of the motif graph with the site marked.
CanonicalKey marked_key(const Molecule &graph, const ConnectionSite &site);

}  // namespace confmotif

#endif  // CONFMOTIF_CONNECT_SITES_H_
