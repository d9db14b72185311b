//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_TESTS_SUPPORT_H_
#define CONFMOTIF_TESTS_SUPPORT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "confmotif/molgraph/molecule.h"
#include "confmotif/molgraph/pdb.h"

namespace confmotif::test {

std::filesystem::path data_path(const std::string &name);

// Fixture corpora, parsed once per process.
const std::vector<Molecule> &corpus();
const Pocket &fixture_pocket();

// Molecules built from internal coordinates (exact geometry).
Molecule benzene(double bond = 1.39);
Molecule pyridine();
// Zigzag n-butane with the given C1-C2-C3-C4 torsion.
Molecule butane(double torsion_rad);
Molecule propane();
Molecule ethane();
Molecule named(const std::string &name);  // corpus molecule by name

// Places atom d given a, b, c with |cd| = bond, angle bcd, torsion abcd.
Vec3 place_atom(const Vec3 &a, const Vec3 &b, const Vec3 &c, double bond,
                double angle_rad, double torsion_rad);

// Scratch directory unique to the calling test; removed on process exit.
std::filesystem::path scratch_dir(const std::string &tag);

}  // namespace confmotif::test

#endif  // CONFMOTIF_TESTS_SUPPORT_H_
