//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/molgraph/molecule.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "confmotif/error.h"

namespace confmotif {

double bond_order_value(BondOrder order) {
  switch (order) {
  case BondOrder::kSingle:
    return 1.0;
  case BondOrder::kDouble:
    return 2.0;
  case BondOrder::kTriple:
    return 3.0;
  case BondOrder::kAromatic:
    return 1.5;
  }
  return 0.0;
}

int Molecule::add_atom(const Atom &atom) {
  atoms_.push_back(atom);
  adj_.emplace_back();
  return num_atoms() - 1;
}

int Molecule::add_atom(int atomic_number, const Vec3 &coord,
                       int formal_charge) {
  return add_atom(Atom { atomic_number, formal_charge, coord });
}

int Molecule::add_bond(int a, int b, BondOrder order) {
  if (a < 0 || b < 0 || a >= num_atoms() || b >= num_atoms())
    throw InvalidMoleculeError(
        fmt::format("bond {}-{} references a missing atom", a + 1, b + 1));
  if (a == b)
    throw InvalidMoleculeError(fmt::format("self bond on atom {}", a + 1));
  if (find_bond(a, b))
    throw InvalidMoleculeError(
        fmt::format("duplicate bond {}-{}", a + 1, b + 1));

  const int id = num_bonds();
  bonds_.push_back({ a, b, order });
  adj_[a].push_back({ b, id });
  adj_[b].push_back({ a, id });
  return id;
}

std::optional<int> Molecule::find_bond(int a, int b) const {
  if (a < 0 || a >= num_atoms())
    return std::nullopt;
  for (const Neighbor &nb: adj_[a])
    if (nb.atom == b)
      return nb.bond;
  return std::nullopt;
}

PointSet Molecule::coordinates() const {
  PointSet coords;
  coords.reserve(atoms_.size());
  for (const Atom &atom: atoms_)
    coords.push_back(atom.coord);
  return coords;
}

void Molecule::set_coordinates(std::span<const Vec3> coords) {
  if (coords.size() != atoms_.size())
    throw InvalidMoleculeError(
        fmt::format("coordinate count {} does not match atom count {}",
                    coords.size(), atoms_.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    atoms_[i].coord = coords[i];
}

double bond_order_sum(const Molecule &mol, int atom) {
  double sum = 0;
  for (const Neighbor &nb: mol.neighbors(atom))
    sum += bond_order_value(mol.bond(nb.bond).order);
  return sum;
}

int free_valence(const Molecule &mol, int atom) {
  const Atom &a = mol.atom(atom);
  const double slack =
      max_valence(a.atomic_number, a.formal_charge) - bond_order_sum(mol, atom);
  return slack <= 0 ? 0 : static_cast<int>(std::floor(slack + 1e-9));
}

bool valence_ok(const Molecule &mol, int atom) {
  const Atom &a = mol.atom(atom);
  return bond_order_sum(mol, atom)
         <= max_valence(a.atomic_number, a.formal_charge) + 0.5 + 1e-9;
}

std::vector<std::vector<int>>
connected_components(const Molecule &mol, const std::vector<bool> &removed) {
  std::vector<int> comp(mol.num_atoms(), -1);
  std::vector<std::vector<int>> result;
  std::vector<int> stack;

  for (int seed = 0; seed < mol.num_atoms(); ++seed) {
    if (comp[seed] >= 0)
      continue;

    const int id = static_cast<int>(result.size());
    result.emplace_back();
    comp[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      result[id].push_back(u);
      for (const Neighbor &nb: mol.neighbors(u)) {
        if ((!removed.empty() && removed[nb.bond]) || comp[nb.atom] >= 0)
          continue;
        comp[nb.atom] = id;
        stack.push_back(nb.atom);
      }
    }
    std::sort(result[id].begin(), result[id].end());
  }
  return result;
}

std::vector<std::vector<int>> connected_components(const Molecule &mol) {
  return connected_components(mol, {});
}

bool is_connected(const Molecule &mol) {
  return mol.num_atoms() > 0 && connected_components(mol).size() == 1;
}

void validate_molecule(const Molecule &mol) {
  if (mol.empty())
    throw InvalidMoleculeError("molecule has no atoms");

  for (int i = 0; i < mol.num_atoms(); ++i) {
    const Atom &a = mol.atom(i);
    if (!a.coord.allFinite())
      throw InvalidMoleculeError(
          fmt::format("atom {} ({}) has non-finite coordinates", i + 1,
                      element_symbol(a.atomic_number)));
    if (find_element(a.atomic_number) == nullptr)
      throw InvalidMoleculeError(fmt::format(
          "atom {} has unsupported atomic number {}", i + 1, a.atomic_number));
    if (!valence_ok(mol, i))
      throw InvalidMoleculeError(fmt::format(
          "atom {} ({}{:+}) exceeds its maximum valence {} (bond order sum {})",
          i + 1, element_symbol(a.atomic_number), a.formal_charge,
          max_valence(a.atomic_number, a.formal_charge),
          bond_order_sum(mol, i)));
  }

  if (!is_connected(mol))
    throw InvalidMoleculeError("molecule graph is disconnected");
}

Molecule induced_submolecule(const Molecule &mol, std::span<const int> atoms) {
  Molecule sub(mol.name());
  std::vector<int> index(mol.num_atoms(), -1);
  for (int atom: atoms) {
    index[atom] = sub.add_atom(mol.atom(atom));
  }
  for (const Bond &b: mol.bonds()) {
    if (index[b.a] >= 0 && index[b.b] >= 0)
      sub.add_bond(index[b.a], index[b.b], b.order);
  }
  return sub;
}

Molecule permute_atoms(const Molecule &mol, std::span<const int> order) {
  return induced_submolecule(mol, order);
}

double molecular_weight(const Molecule &mol) {
  double weight = 0;
  for (int i = 0; i < mol.num_atoms(); ++i) {
    const Atom &a = mol.atom(i);
    if (a.is_dummy())
      continue;
    weight += atomic_weight(a.atomic_number)
              + free_valence(mol, i) * atomic_weight(kHydrogen);
  }
  return weight;
}

}  // namespace confmotif
