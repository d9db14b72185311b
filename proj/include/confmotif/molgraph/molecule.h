//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_MOLGRAPH_MOLECULE_H_
#define CONFMOTIF_MOLGRAPH_MOLECULE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "confmotif/molgraph/element.h"
#include "confmotif/vec3.h"

namespace confmotif {

enum class BondOrder : std::uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
  kAromatic = 4,
};

// Valence contribution; aromatic bonds count 1.5.
double bond_order_value(BondOrder order);

struct Atom {
  int atomic_number = kCarbon;
  int formal_charge = 0;
  Vec3 coord = Vec3::Zero();

  bool is_dummy() const { return atomic_number == kDummyAtomicNumber; }
};

struct Bond {
  int a;
  int b;
  BondOrder order;

  int other(int atom) const { return atom == a ? b : a; }
  bool has(int atom) const { return atom == a || atom == b; }
};

struct Neighbor {
  int atom;
  int bond;
};

// Heavy-atom molecular graph with a single conformation. Hydrogens are
// implicit; atoms with atomic number 0 are dummy placeholders.
//
// The class only guards graph well-formedness (indices, duplicate bonds).
// Chemical invariants are checked by validate_molecule().
class Molecule {
public:
  Molecule() = default;
  explicit Molecule(std::string name): name_(std::move(name)) { }

  int add_atom(const Atom &atom);
  int add_atom(int atomic_number, const Vec3 &coord, int formal_charge = 0);

  // Throws InvalidMoleculeError on self loops, bad indices, or duplicates.
  int add_bond(int a, int b, BondOrder order);

  void set_bond_order(int bond, BondOrder order) { bonds_[bond].order = order; }

  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }
  bool empty() const { return atoms_.empty(); }

  const Atom &atom(int i) const { return atoms_[i]; }
  Atom &atom(int i) { return atoms_[i]; }
  const Bond &bond(int i) const { return bonds_[i]; }

  std::span<const Atom> atoms() const { return atoms_; }
  std::span<const Bond> bonds() const { return bonds_; }
  std::span<const Neighbor> neighbors(int atom) const { return adj_[atom]; }
  int degree(int atom) const { return static_cast<int>(adj_[atom].size()); }

  std::optional<int> find_bond(int a, int b) const;

  const std::string &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  PointSet coordinates() const;
  void set_coordinates(std::span<const Vec3> coords);

private:
  std::string name_;
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adj_;
};

// Sum of bond-order values (aromatic = 1.5) over all bonds of an atom.
double bond_order_sum(const Molecule &mol, int atom);

// max_valence - bond order sum, floored to an integer and clamped at 0.
// For hydrogen-stripped input this is also the implicit hydrogen count.
int free_valence(const Molecule &mol, int atom);

// True when the atom's bond-order sum fits its maximum valence. Aromatic
// half orders may exceed it by 0.5 (fused ring junctions, 3 x 1.5 = 4.5).
bool valence_ok(const Molecule &mol, int atom);

std::vector<std::vector<int>> connected_components(const Molecule &mol);

// Components after removing the bonds flagged in `removed` (by bond index).
std::vector<std::vector<int>>
connected_components(const Molecule &mol, const std::vector<bool> &removed);

bool is_connected(const Molecule &mol);

// Throws InvalidMoleculeError naming the first offending atom or bond:
// empty or disconnected graph, non-finite coordinates, valence overflow.
void validate_molecule(const Molecule &mol);

// Subgraph induced by `atoms`, in the given order.
Molecule induced_submolecule(const Molecule &mol, std::span<const int> atoms);

// Same molecule with atom i moved to position order[i]^-1, i.e. the result's
// atom k is the input's atom order[k].
Molecule permute_atoms(const Molecule &mol, std::span<const int> order);

// Heavy atoms plus implicit hydrogens (one per unit of free valence).
// Dummy atoms weigh nothing.
double molecular_weight(const Molecule &mol);

}  // namespace confmotif

#endif  // CONFMOTIF_MOLGRAPH_MOLECULE_H_
