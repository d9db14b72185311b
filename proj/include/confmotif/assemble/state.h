//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_ASSEMBLE_STATE_H_
#define CONFMOTIF_ASSEMBLE_STATE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "confmotif/connect/sites.h"
#include "confmotif/geom3d/geometry.h"
#include "confmotif/molgraph/pdb.h"
#include "confmotif/motif/motif.h"

namespace confmotif {

inline constexpr double kDefaultClashDistance = 1.2;

// Rigid pose of a motif about its own centroid:
// x -> rotation * (x - centroid) + centroid + translation.
struct Pose {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();
};

struct HistoryEntry {
  CanonicalKey motif_key;
  std::optional<ConnectionSite> fragment_site;  // empty for the first motif
  std::optional<ConnectionSite> motif_site;
  double torsion = 0;      // radians in (-pi, pi]
  bool rotatable = false;  // whether the torsion was a free coordinate
  RigidTransform transform;  // maps stored motif coordinates to placed ones
};

struct AssemblyState {
  std::shared_ptr<const Pocket> pocket;  // may be null (no pocket context)
  PartialLigand ligand;
  std::vector<HistoryEntry> history;

  int step() const { return static_cast<int>(history.size()); }
  std::vector<ConnectionSite> open_sites() const {
    return enumerate_ccs_fragment(ligand);
  }
};

// Heavy-atom centroid (dummies excluded).
Vec3 motif_centroid(const Motif &motif);

RigidTransform pose_transform(const Pose &pose, const Vec3 &centroid);

// First step: the motif's real atoms become the ligand, its dummies become
// open slots. Throws PlacementError when a ligand atom comes closer than
// clash_distance to a pocket atom.
AssemblyState place_first_motif(std::shared_ptr<const Pocket> pocket,
                                const Motif &motif, const Pose &pose,
                                double clash_distance = kDefaultClashDistance);

// Uniformly random proper rotation (seeded), centroid moved to the pocket
// centroid, then stepped back along the clash push direction until no
// pocket atom is within clash_distance. Throws PlacementError when the
// retry budget runs out.
Pose heuristic_first_pose(const Pocket &pocket, const Motif &motif,
                          std::uint64_t seed,
                          double clash_distance = kDefaultClashDistance);

// Closest ligand-pocket heavy-atom distance (infinity if either is empty).
double min_pocket_distance(const Pocket &pocket, std::span<const Vec3> points);

}  // namespace confmotif

#endif  // CONFMOTIF_ASSEMBLE_STATE_H_
