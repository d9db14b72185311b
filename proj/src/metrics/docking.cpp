//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/metrics/docking.h"

#include <fstream>

#include <fmt/format.h>

#include "confmotif/error.h"
#include "confmotif/molgraph/sdf.h"

namespace confmotif {
namespace {

void write_file(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out)
    throw Error(fmt::format("cannot write '{}'", path.string()));
}

}  // namespace

std::string docking_manifest(std::span<const ConformerMatch> matches) {
  std::string out = "index\tname\ttorsions\tbaseline_rmsd\tconformer_rmsd\n";
  for (std::size_t k = 0; k < matches.size(); ++k) {
    const ConformerMatch &m = matches[k];
    out += fmt::format("{}\t{}\t{}\t{:.6f}\t{:.6f}\n", k + 1, m.reference.name(),
                       m.rotatable_bonds.size(), m.baseline_rmsd, m.conformer_rmsd);
  }
  return out;
}

std::vector<ConformerMatch> prepare_docking_inputs(std::span<const Molecule> generated,
                                                   std::span<const Molecule> ff_optimized,
                                                   const std::filesystem::path &out_dir,
                                                   const DeOptions &options, int threads) {
  std::vector<ConformerMatch> matches =
      conformer_match_all(generated, ff_optimized, options, threads);
  std::vector<Molecule> matched;
  for (const ConformerMatch &m: matches) {
    matched.push_back(m.matched);
    matched.back().set_name(m.reference.name());
  }
  std::filesystem::create_directories(out_dir);
  write_file(out_dir / kDockingSdfName, write_sdf(matched));
  write_file(out_dir / kDockingManifestName, docking_manifest(matches));
  return matches;
}

}  // namespace confmotif
