//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_ASSEMBLE_COMPLEX_GRAPH_H_
#define CONFMOTIF_ASSEMBLE_COMPLEX_GRAPH_H_

#include <vector>

#include "confmotif/assemble/state.h"
#include "confmotif/molgraph/molecule.h"
#include "confmotif/molgraph/pdb.h"

namespace confmotif {

struct ComplexCutoffs {
  double ligand_ligand = 5.0;
  double ligand_pocket = 10.0;
  double pocket_pocket = 15.0;
};

struct HeteroEdge {
  int src;
  int dst;
  double distance;
  bool covalent = false;

  friend bool operator==(const HeteroEdge &, const HeteroEdge &) = default;
};

// Directed typed edges; src/dst index the ligand or pocket atom lists as the
// edge type says. Undirected relations appear in both directions, and
// ligand_pocket mirrors pocket_ligand. Cutoffs are inclusive. Each list is
// sorted by (src, dst).
struct HeteroGraph {
  int num_ligand = 0;
  int num_pocket = 0;
  std::vector<HeteroEdge> ligand_ligand;
  std::vector<HeteroEdge> ligand_pocket;
  std::vector<HeteroEdge> pocket_ligand;
  std::vector<HeteroEdge> pocket_pocket;

  std::size_t num_edges() const {
    return ligand_ligand.size() + ligand_pocket.size() + pocket_ligand.size()
           + pocket_pocket.size();
  }
};

// Covalent ligand bonds are always ligand_ligand edges regardless of length.
// Throws ContractError on an empty ligand or pocket.
HeteroGraph build_complex_graph(const Molecule &ligand, const Pocket &pocket,
                                const ComplexCutoffs &cutoffs = {});

HeteroGraph build_complex_graph(const AssemblyState &state,
                                const ComplexCutoffs &cutoffs = {});

}  // namespace confmotif

#endif  // CONFMOTIF_ASSEMBLE_COMPLEX_GRAPH_H_
