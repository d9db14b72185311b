//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_TESTS_CHECKS_H_
#define CONFMOTIF_TESTS_CHECKS_H_

#include <cstdint>
#include <string>

#include "confmotif/molgraph/molecule.h"

// Whole-corpus property checks shared by the unit tests and the acceptance
// binary. Each returns a verdict plus a one-line summary.
namespace confmotif::check {

struct Result {
  bool pass = false;
  std::string detail;
};

Result fragmentation_round_trip();
Result rotatable_oracle();
Result rccs_soundness();
Result geometry_kernel();
Result jsd_examples();
Result conformer_matching();
Result mw_protocol();
Result end_to_end_generation();
Result complex_graph_brute_force();
Result metric_self_consistency();

// Fixtures shared with the unit tests.
Molecule random_chain(std::uint64_t seed, int max_atoms);
Molecule alkane(int carbons, double torsion_rad);

}  // namespace confmotif::check

#endif  // CONFMOTIF_TESTS_CHECKS_H_
