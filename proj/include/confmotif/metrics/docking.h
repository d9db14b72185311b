//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_METRICS_DOCKING_H_
#define CONFMOTIF_METRICS_DOCKING_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "confmotif/metrics/conformer.h"

namespace confmotif {

inline constexpr const char *kDockingSdfName = "matched.sdf";
inline constexpr const char *kDockingManifestName = "manifest.tsv";

// Tab-separated: index, name, torsions, baseline_rmsd, conformer_rmsd.
std::string docking_manifest(std::span<const ConformerMatch> matches);

// Conformer-matches every generated molecule and writes the matched
// conformers (in the generated frame) plus the manifest into `out_dir`.
std::vector<ConformerMatch> prepare_docking_inputs(std::span<const Molecule> generated,
                                                   std::span<const Molecule> ff_optimized,
                                                   const std::filesystem::path &out_dir,
                                                   const DeOptions &options = {},
                                                   int threads = 0);

}  // namespace confmotif

#endif  // CONFMOTIF_METRICS_DOCKING_H_
