//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_MOLGRAPH_PDB_H_
#define CONFMOTIF_MOLGRAPH_PDB_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "confmotif/vec3.h"

namespace confmotif {

struct PocketAtom {
  int atomic_number;
  Vec3 coord;
  std::string atom_name;
  std::string residue_name;
  int residue_seq;
  char chain_id;
  bool is_backbone;  // N, CA, C, O
};

// Protein binding-site heavy atoms.
struct Pocket {
  std::vector<PocketAtom> atoms;

  PointSet coordinates() const;
  Vec3 centroid() const;
};

// Reads ATOM/HETATM records (fixed columns). Hydrogens and waters (HOH, WAT,
// DOD) are skipped. Throws ParseError when no heavy atom record remains.
Pocket parse_pocket_pdb(std::string_view text);

Pocket read_pocket_file(const std::filesystem::path &path);

}  // namespace confmotif

#endif  // CONFMOTIF_MOLGRAPH_PDB_H_
