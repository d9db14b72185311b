//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "support.h"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include <unistd.h>

#include "confmotif/molgraph/sdf.h"

namespace confmotif::test {

std::filesystem::path data_path(const std::string &name) {
  return std::filesystem::path(CONFMOTIF_TEST_DATA) / name;
}

const std::vector<Molecule> &corpus() {
  static const std::vector<Molecule> mols =
      read_sdf_file(data_path("corpus.sdf"));
  return mols;
}

const Pocket &fixture_pocket() {
  static const Pocket pocket = read_pocket_file(data_path("pocket.pdb"));
  return pocket;
}

Molecule named(const std::string &name) {
  for (const Molecule &m: corpus())
    if (m.name() == name)
      return m;
  throw std::runtime_error("no corpus molecule named " + name);
}

Vec3 place_atom(const Vec3 &a, const Vec3 &b, const Vec3 &c, double bond,
                double angle, double torsion) {
  const Vec3 bc = (c - b).normalized();
  const Vec3 n = (b - a).cross(bc).normalized();
  const Vec3 m = n.cross(bc);
  const Vec3 local(-bond * std::cos(angle), bond * std::sin(angle) * std::cos(torsion),
                   bond * std::sin(angle) * std::sin(torsion));
  return c + local.x() * bc + local.y() * m + local.z() * n;
}

Molecule benzene(double bond) {
  Molecule mol("benzene");
  for (int k = 0; k < 6; ++k) {
    const double t = k * std::numbers::pi / 3;
    mol.add_atom(kCarbon, Vec3(bond * std::cos(t), bond * std::sin(t), 0));
  }
  for (int k = 0; k < 6; ++k)
    mol.add_bond(k, (k + 1) % 6, BondOrder::kAromatic);
  return mol;
}

Molecule pyridine() {
  Molecule mol = benzene();
  mol.atom(0).atomic_number = kNitrogen;
  mol.set_name("pyridine");
  return mol;
}

Molecule butane(double torsion) {
  constexpr double kBond = 1.53;
  const double angle = 109.5 * std::numbers::pi / 180;
  Molecule mol("butane");
  const Vec3 c1(0, 0, 0), c2(kBond, 0, 0);
  const Vec3 c3 = c2 + kBond * Vec3(-std::cos(angle), std::sin(angle), 0);
  const Vec3 c4 = place_atom(c1, c2, c3, kBond, angle, torsion);
  for (const Vec3 &x: { c1, c2, c3, c4 })
    mol.add_atom(kCarbon, x);
  for (int k = 0; k < 3; ++k)
    mol.add_bond(k, k + 1, BondOrder::kSingle);
  return mol;
}

Molecule propane() {
  Molecule mol = butane(std::numbers::pi);
  Molecule out("propane");
  for (int k = 0; k < 3; ++k)
    out.add_atom(mol.atom(k));
  out.add_bond(0, 1, BondOrder::kSingle);
  out.add_bond(1, 2, BondOrder::kSingle);
  return out;
}

Molecule ethane() {
  Molecule mol("ethane");
  mol.add_atom(kCarbon, Vec3(0, 0, 0));
  mol.add_atom(kCarbon, Vec3(1.53, 0, 0));
  mol.add_bond(0, 1, BondOrder::kSingle);
  return mol;
}

std::filesystem::path scratch_dir(const std::string &tag) {
  const auto dir = std::filesystem::temp_directory_path()
                   / ("confmotif-" + std::to_string(::getpid()) + "-" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace confmotif::test
