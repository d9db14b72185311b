//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/motif/fragment.h"

#include <algorithm>
#include <vector>

#include "confmotif/error.h"
#include "confmotif/geom3d/geometry.h"
#include "confmotif/motif/rotatable.h"

namespace confmotif {
namespace {

std::vector<int> map_atoms(std::span<const int> local,
                           std::span<const int> to_source) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v: local)
    out.push_back(to_source[v]);
  return out;
}

}  // namespace

std::vector<LocalMotif> decompose_fused(const Molecule &piece,
                                        const RingInfo &rings) {
  if (rings.fused_systems.size() != 1 || rings.fused_systems[0].size() < 2)
    throw InvalidMoleculeError(
        "decompose_fused needs a single fused ring system");

  const int n = piece.num_atoms();
  std::vector<int> owner_ring(n, -1);
  for (int r = static_cast<int>(rings.rings.size()) - 1; r >= 0; --r)
    for (int v: rings.rings[r])
      owner_ring[v] = r;

  // Each acyclic substituent hangs from exactly one ring atom; flood from
  // ring atoms through non-ring atoms to assign it.
  std::vector<int> tree_ring(n, -1);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    if (owner_ring[v] < 0)
      continue;
    for (const Neighbor &nb: piece.neighbors(v)) {
      if (owner_ring[nb.atom] >= 0 || tree_ring[nb.atom] >= 0)
        continue;
      tree_ring[nb.atom] = owner_ring[v];
      stack.push_back(nb.atom);
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const Neighbor &next: piece.neighbors(u)) {
          if (owner_ring[next.atom] >= 0 || tree_ring[next.atom] >= 0)
            continue;
          tree_ring[next.atom] = owner_ring[v];
          stack.push_back(next.atom);
        }
      }
    }
  }

  std::vector<LocalMotif> out;
  for (int r = 0; r < static_cast<int>(rings.rings.size()); ++r) {
    std::vector<int> atoms = rings.rings[r];
    for (int v = 0; v < n; ++v)
      if (tree_ring[v] == r)
        atoms.push_back(v);
    std::sort(atoms.begin(), atoms.end());

    Molecule sub = induced_submolecule(piece, atoms);
    // Keep only the ring's own cycle bonds between ring atoms; bonds that
    // belong to sibling rings are dropped so each motif is one ring.
    Molecule motif_graph(piece.name());
    for (int v: atoms)
      motif_graph.add_atom(piece.atom(v));
    const std::vector<int> &own = rings.ring_bond_sets[r];
    for (const Bond &b: sub.bonds()) {
      const int sa = atoms[b.a], sb = atoms[b.b];
      const bool both_ring = owner_ring[sa] >= 0 && owner_ring[sb] >= 0;
      if (both_ring) {
        const auto id = piece.find_bond(sa, sb);
        if (!std::binary_search(own.begin(), own.end(), *id))
          continue;
      }
      motif_graph.add_bond(b.a, b.b, b.order);
    }
    out.push_back({ make_motif(std::move(motif_graph), MotifKind::kRing),
                    std::move(atoms) });
  }
  return out;
}

Motif augment_chain(const Molecule &source, std::span<const int> atoms,
                    std::vector<int> *source_map) {
  std::vector<bool> inside(source.num_atoms(), false);
  for (int v: atoms)
    inside[v] = true;

  std::vector<int> all(atoms.begin(), atoms.end());
  std::vector<bool> dummy(source.num_atoms(), false);
  for (int v: atoms) {
    for (const Neighbor &nb: source.neighbors(v)) {
      if (inside[nb.atom] || dummy[nb.atom])
        continue;
      dummy[nb.atom] = true;
      all.push_back(nb.atom);
    }
  }
  std::sort(all.begin(), all.end());

  std::vector<int> index(source.num_atoms(), -1);
  Molecule graph(source.name());
  for (int v: all) {
    Atom atom = source.atom(v);
    if (dummy[v]) {
      atom.atomic_number = kDummyAtomicNumber;
      atom.formal_charge = 0;
    }
    index[v] = graph.add_atom(atom);
  }
  for (const Bond &b: source.bonds()) {
    if (index[b.a] < 0 || index[b.b] < 0)
      continue;
    if (dummy[b.a] && dummy[b.b])
      continue;
    graph.add_bond(index[b.a], index[b.b], b.order);
  }

  if (source_map != nullptr)
    *source_map = all;
  return make_motif(std::move(graph), MotifKind::kChain);
}

FragmentationResult fragment(const Molecule &mol) {
  FragmentationResult result;
  result.source_atoms = mol.num_atoms();

  const std::vector<int> rotatable = find_rotatable_bonds(mol);
  std::vector<bool> removed(mol.num_bonds(), false);
  for (int b: rotatable) {
    removed[b] = true;
    const Bond &bond = mol.bond(b);
    const int a = std::min(bond.a, bond.b), c = std::max(bond.a, bond.b);
    const int ref_a = *torsion_reference(mol, a, c);
    const int ref_c = *torsion_reference(mol, c, a);
    result.severed_bonds.push_back({
        b, a, c, ref_a, ref_c,
        dihedral(mol.atom(ref_a).coord, mol.atom(a).coord, mol.atom(c).coord,
                 mol.atom(ref_c).coord),
        (mol.atom(a).coord - mol.atom(c).coord).norm(),
    });
  }

  for (const std::vector<int> &comp: connected_components(mol, removed)) {
    Molecule piece = induced_submolecule(mol, comp);
    const RingInfo rings = perceive_rings(piece);

    if (rings.empty()) {
      Fragment f;
      f.motif = augment_chain(mol, comp, &f.source_atoms);
      result.fragments.push_back(std::move(f));
    } else if (rings.fused_systems.size() == 1
               && rings.fused_systems[0].size() >= 2) {
      for (LocalMotif &lm: decompose_fused(piece, rings))
        result.fragments.push_back(
            { std::move(lm.motif), map_atoms(lm.atoms, comp) });
    } else {
      result.fragments.push_back(
          { make_motif(std::move(piece), MotifKind::kRing), comp });
    }
  }
  return result;
}

}  // namespace confmotif
