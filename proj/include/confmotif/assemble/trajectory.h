//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_ASSEMBLE_TRAJECTORY_H_
#define CONFMOTIF_ASSEMBLE_TRAJECTORY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "confmotif/assemble/state.h"
#include "confmotif/connect/sites.h"
#include "confmotif/molgraph/pdb.h"

namespace confmotif {

struct TrainingTarget {
  CanonicalKey motif_key;
  int fragment = -1;  // index into the ligand's fragmentation
  // Both empty when the target is the first motif.
  std::optional<ConnectionSite> fragment_site;
  std::optional<ConnectionSite> motif_site;  // indexes the fragment's motif
  std::optional<double> torsion;  // radians, atom-atom rotatable links only
};

struct TrainingStep {
  double mask_ratio = 0;
  int num_motifs = 0;
  int num_masked = 0;         // K
  std::vector<int> bfs_order; // fragment indices
  PartialLigand context;      // kept motifs, source coordinates
  std::optional<TrainingTarget> target;  // empty when nothing is masked
};

// One sample per entry: BFS over the motif tree from the fragment nearest
// the pocket centroid, u ~ U[0,1], K = round(u * n), and the last K motifs
// masked. The target is the first masked motif.
std::vector<TrainingStep> build_trajectories(const Molecule &ligand,
                                             const Pocket &pocket,
                                             std::uint64_t seed,
                                             int samples = 1);

// `TRAJ v1 <count>` followed by one JSON object per line.
std::string write_trajectories(std::span<const TrainingStep> steps,
                               const std::string &ligand_name = "");

}  // namespace confmotif

#endif  // CONFMOTIF_ASSEMBLE_TRAJECTORY_H_
