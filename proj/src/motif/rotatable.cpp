//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/motif/rotatable.h"

#include <algorithm>
#include <vector>

#include "confmotif/molgraph/rings.h"

namespace confmotif {
namespace {

bool side_has_off_axis(const Molecule &mol, std::span<const int> side, int a,
                       int b) {
  const Vec3 &pa = mol.atom(a).coord, &pb = mol.atom(b).coord;
  return std::any_of(side.begin(), side.end(), [&](int v) {
    return v != a && v != b && is_off_axis(mol.atom(v).coord, pa, pb);
  });
}

bool rotatable_given_bridges(const Molecule &mol, int bond,
                             const std::vector<int> &bridges) {
  const Bond &bd = mol.bond(bond);
  if (bd.order != BondOrder::kSingle)
    return false;
  if (!std::binary_search(bridges.begin(), bridges.end(), bond))
    return false;
  return side_has_off_axis(mol, side_atoms(mol, bond, bd.a), bd.a, bd.b)
         && side_has_off_axis(mol, side_atoms(mol, bond, bd.b), bd.a, bd.b);
}

}  // namespace

bool is_off_axis(const Vec3 &point, const Vec3 &a, const Vec3 &b) {
  const Vec3 axis = b - a;
  const double len = axis.norm();
  const Vec3 d = point - a;
  if (len < 1e-12)
    return d.norm() > kOffAxisTolerance;
  return d.cross(axis).norm() / len > kOffAxisTolerance;
}

std::vector<int> side_atoms(const Molecule &mol, int bond, int start) {
  std::vector<bool> seen(mol.num_atoms(), false);
  std::vector<int> stack { start }, out;
  seen[start] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (const Neighbor &nb: mol.neighbors(u)) {
      if (nb.bond == bond || seen[nb.atom])
        continue;
      seen[nb.atom] = true;
      stack.push_back(nb.atom);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_freely_rotatable(const Molecule &mol, int bond) {
  return rotatable_given_bridges(mol, bond, find_bridges(mol));
}

std::vector<int> find_rotatable_bonds(const Molecule &mol) {
  const std::vector<int> bridges = find_bridges(mol);
  std::vector<int> out;
  for (int b: bridges)
    if (rotatable_given_bridges(mol, b, bridges))
      out.push_back(b);
  return out;
}

std::optional<int> torsion_reference(const Molecule &mol, int a, int b) {
  const Vec3 &pa = mol.atom(a).coord, &pb = mol.atom(b).coord;
  std::optional<int> best;
  for (const Neighbor &nb: mol.neighbors(a)) {
    if (nb.atom == b || !is_off_axis(mol.atom(nb.atom).coord, pa, pb))
      continue;
    if (!best || nb.atom < *best)
      best = nb.atom;
  }
  if (best)
    return best;

  const auto bond = mol.find_bond(a, b);
  std::vector<int> side;
  if (bond) {
    side = side_atoms(mol, *bond, a);
  } else {
    for (int i = 0; i < mol.num_atoms(); ++i)
      side.push_back(i);
  }
  for (int v: side)
    if (v != a && v != b && is_off_axis(mol.atom(v).coord, pa, pb))
      return v;
  return std::nullopt;
}

}  // namespace confmotif
