//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_MOTIF_RECONSTRUCT_H_
#define CONFMOTIF_MOTIF_RECONSTRUCT_H_

#include <vector>

#include "confmotif/assemble/attach.h"
#include "confmotif/assemble/state.h"
#include "confmotif/molgraph/molecule.h"
#include "confmotif/motif/fragment.h"

namespace confmotif {

// Motif tree of a fragmentation: fragments joined by severed bonds or by
// shared ring atoms. Neighbor lists are sorted.
struct MotifTree {
  struct Link {
    int fragment;
    int severed = -1;  // index into severed_bonds, -1 for a ring fusion
  };
  std::vector<std::vector<Link>> links;
  // owner[source atom] = lowest fragment holding it as a real atom.
  std::vector<int> owner;
};

MotifTree build_motif_tree(const FragmentationResult &result);

// Breadth-first fragment order from `root`; links visited in fragment order.
// parent[k] is the link that discovered order[k] (fragment -1 for the root).
struct BfsOrder {
  std::vector<int> order;
  std::vector<MotifTree::Link> parent;
};
BfsOrder bfs_order(const MotifTree &tree, int root);

// Re-assembles the source molecule from its fragments by re-attaching them
// with attach(), using the recorded bond lengths and torsions. Atoms come
// back in source order. Throws Error on inconsistent input.
// Reassembles the fragments one BFS step at a time through attach(), using
// the recorded bond lengths, directions and torsions. The partial state is
// in the source frame at every step.
class Replay {
public:
  struct Step {
    int fragment = -1;
    ConnectionSite fragment_site;
    ConnectionSite motif_site;
    AttachHints hints;
    double torsion = 0;
  };

  // `result` must outlive the replay.
  Replay(const FragmentationResult &result, int root);

  int size() const { return static_cast<int>(bfs_.order.size()); }
  int placed() const { return placed_; }
  bool done() const { return placed_ == size(); }
  const BfsOrder &bfs() const { return bfs_; }

  // Valid after the first advance().
  const AssemblyState &state() const { return state_; }

  // Connection of the next fragment; requires 0 < placed() < size().
  Step next_step() const;
  void advance();

  // Finished molecule with atoms in source order; requires done().
  Molecule molecule() const;

private:
  void record_new_atoms(const Fragment &f);

  const FragmentationResult &result_;
  std::vector<Vec3> pos_;
  BfsOrder bfs_;
  AssemblyState state_;
  int placed_ = 0;
  std::vector<int> lig_src_, slot_src_, src_to_lig_;
};

Molecule reconstruct(const FragmentationResult &result);

}  // namespace confmotif

#endif  // CONFMOTIF_MOTIF_RECONSTRUCT_H_
