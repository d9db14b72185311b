//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_METRICS_CONFORMER_H_
#define CONFMOTIF_METRICS_CONFORMER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "confmotif/molgraph/molecule.h"

namespace confmotif {

// Differential evolution, rand/1/bin over torsion offsets in [-pi, pi).
struct DeOptions {
  int population_factor = 15;  // population = factor * number of torsions
  double mutation = 0.8;
  double crossover = 0.9;
  int max_generations = 200;
  double plateau_tolerance = 1e-4;  // Å
  int plateau_generations = 20;
  std::uint64_t seed = 20260;
};

struct ConformerMatch {
  Molecule reference;  // C
  Molecule optimized;  // C_ff
  Molecule matched;    // C_ff with adjusted torsions, superposed onto C
  double conformer_rmsd = 0;
  double baseline_rmsd = 0;  // rigid superposition of C_ff onto C
  std::vector<int> rotatable_bonds;
  // Per rotatable bond: the offset applied to C_ff and the resulting dihedral
  // over the torsion reference atoms, radians.
  std::vector<double> torsion_offsets;
  std::vector<double> torsions;
  int generations = 0;
};

// Same atom count, elements, charges, and bonds (with orders) index by index.
bool same_graph(const Molecule &a, const Molecule &b);

// C_ff with each rotatable bond rotated by offsets[k]. The moving side of
// bond k is the side of its second atom.
PointSet apply_torsion_offsets(const Molecule &mol, std::span<const int> bonds,
                               std::span<const double> offsets);

// Throws MetricError when the graphs differ.
ConformerMatch conformer_match(const Molecule &c, const Molecule &c_ff,
                               const DeOptions &options = {});

// Pairwise matches run in parallel; results depend only on the inputs and
// the seed (molecule k uses seed + k). threads <= 0 picks the hardware count.
std::vector<ConformerMatch> conformer_match_all(std::span<const Molecule> c,
                                                std::span<const Molecule> c_ff,
                                                const DeOptions &options = {},
                                                int threads = 0);

}  // namespace confmotif

#endif  // CONFMOTIF_METRICS_CONFORMER_H_
