//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/molgraph/rings.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

namespace confmotif {
namespace {

class BitRow {
public:
  explicit BitRow(int n): words_((n + 63) / 64, 0) { }

  void flip(int i) { words_[i / 64] ^= std::uint64_t(1) << (i % 64); }
  bool test(int i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  void xor_with(const BitRow &other) {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] ^= other.words_[k];
  }

  int lowest() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0)
        return static_cast<int>(k * 64) + __builtin_ctzll(words_[k]);
    return -1;
  }

private:
  std::vector<std::uint64_t> words_;
};

struct Candidate {
  std::vector<int> bonds;  // sorted
  std::vector<int> atoms;  // cycle order
};

// Orders the atoms of a simple cycle given its bonds.
std::vector<int> walk_cycle(const Molecule &mol, const std::vector<int> &bonds) {
  std::vector<bool> in_cycle(mol.num_bonds(), false);
  int start = mol.num_atoms();
  for (int b: bonds) {
    in_cycle[b] = true;
    start = std::min({ start, mol.bond(b).a, mol.bond(b).b });
  }

  std::vector<int> atoms { start };
  int prev_bond = -1;
  int cur = start;
  while (true) {
    // Pick the cycle neighbor; from the start atom take the lower one first.
    int next_bond = -1, next_atom = -1;
    for (const Neighbor &nb: mol.neighbors(cur)) {
      if (!in_cycle[nb.bond] || nb.bond == prev_bond)
        continue;
      if (next_atom < 0 || nb.atom < next_atom) {
        next_atom = nb.atom;
        next_bond = nb.bond;
      }
      if (prev_bond >= 0)
        break;
    }
    if (next_atom == start || next_atom < 0)
      break;
    atoms.push_back(next_atom);
    prev_bond = next_bond;
    cur = next_atom;
  }
  return atoms;
}

std::vector<Candidate> horton_candidates(const Molecule &mol) {
  const int n = mol.num_atoms();
  std::vector<Candidate> candidates;

  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), parent_bond(n, -1);
    std::queue<int> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (const Neighbor &nb: mol.neighbors(u)) {
        if (dist[nb.atom] >= 0)
          continue;
        dist[nb.atom] = dist[u] + 1;
        parent_bond[nb.atom] = nb.bond;
        queue.push(nb.atom);
      }
    }

    auto path_to_root = [&](int v) {
      std::vector<int> bonds;
      while (v != root) {
        bonds.push_back(parent_bond[v]);
        v = mol.bond(parent_bond[v]).other(v);
      }
      return bonds;
    };
    auto path_atoms = [&](int v) {
      std::vector<int> atoms;
      while (v != root) {
        atoms.push_back(v);
        v = mol.bond(parent_bond[v]).other(v);
      }
      return atoms;
    };

    for (int b = 0; b < mol.num_bonds(); ++b) {
      const Bond &bond = mol.bond(b);
      if (dist[bond.a] < 0 || dist[bond.b] < 0)
        continue;
      if (parent_bond[bond.a] == b || parent_bond[bond.b] == b)
        continue;

      // Paths root->a and root->b must only meet at the root.
      std::vector<int> pa = path_atoms(bond.a), pb = path_atoms(bond.b);
      std::sort(pa.begin(), pa.end());
      std::sort(pb.begin(), pb.end());
      std::vector<int> common;
      std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                            std::back_inserter(common));
      if (!common.empty())
        continue;

      Candidate c;
      c.bonds = path_to_root(bond.a);
      const std::vector<int> other = path_to_root(bond.b);
      c.bonds.insert(c.bonds.end(), other.begin(), other.end());
      c.bonds.push_back(b);
      std::sort(c.bonds.begin(), c.bonds.end());
      candidates.push_back(std::move(c));
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &x, const Candidate &y) {
              if (x.bonds.size() != y.bonds.size())
                return x.bonds.size() < y.bonds.size();
              return x.bonds < y.bonds;
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const Candidate &x, const Candidate &y) {
                                 return x.bonds == y.bonds;
                               }),
                   candidates.end());
  return candidates;
}

int find_root(std::vector<int> &parent, int x) {
  while (parent[x] != x)
    x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool RingInfo::is_ring_bond(int bond) const {
  return std::binary_search(ring_bonds.begin(), ring_bonds.end(), bond);
}

bool RingInfo::is_ring_atom(int atom) const {
  for (const auto &comp: fused_components)
    if (std::binary_search(comp.begin(), comp.end(), atom))
      return true;
  return false;
}

RingInfo perceive_rings(const Molecule &mol) {
  RingInfo info;
  const int expected = mol.num_bonds() - mol.num_atoms()
                       + static_cast<int>(connected_components(mol).size());
  if (expected <= 0)
    return info;

  // Gaussian elimination keeps the shortest independent cycles.
  std::vector<BitRow> basis;
  std::vector<int> pivots;
  for (Candidate &c: horton_candidates(mol)) {
    BitRow row(mol.num_bonds());
    for (int b: c.bonds)
      row.flip(b);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (row.test(pivots[k]))
        row.xor_with(basis[k]);
    const int pivot = row.lowest();
    if (pivot < 0)
      continue;

    basis.push_back(row);
    pivots.push_back(pivot);
    c.atoms = walk_cycle(mol, c.bonds);
    info.rings.push_back(std::move(c.atoms));
    info.ring_bond_sets.push_back(std::move(c.bonds));
    if (static_cast<int>(info.rings.size()) == expected)
      break;
  }

  std::vector<bool> on_ring(mol.num_bonds(), false);
  for (const auto &bonds: info.ring_bond_sets)
    for (int b: bonds)
      on_ring[b] = true;
  for (int b = 0; b < mol.num_bonds(); ++b)
    if (on_ring[b])
      info.ring_bonds.push_back(b);

  const int nr = static_cast<int>(info.rings.size());
  std::vector<int> parent(nr);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < nr; ++i) {
    for (int j = i + 1; j < nr; ++j) {
      const auto &x = info.ring_bond_sets[i], &y = info.ring_bond_sets[j];
      std::vector<int> shared;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(shared));
      if (!shared.empty())
        parent[find_root(parent, i)] = find_root(parent, j);
    }
  }

  std::vector<int> group_of(nr, -1);
  for (int i = 0; i < nr; ++i) {
    const int r = find_root(parent, i);
    if (group_of[r] < 0) {
      group_of[r] = static_cast<int>(info.fused_systems.size());
      info.fused_systems.emplace_back();
    }
    info.fused_systems[group_of[r]].push_back(i);
  }
  for (const auto &system: info.fused_systems) {
    std::vector<int> atoms;
    for (int r: system)
      atoms.insert(atoms.end(), info.rings[r].begin(), info.rings[r].end());
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    info.fused_components.push_back(std::move(atoms));
  }
  return info;
}

std::vector<int> find_bridges(const Molecule &mol) {
  const int n = mol.num_atoms();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> bridges;
  int timer = 0;

  // Iterative DFS: (atom, parent bond, next neighbor position).
  struct Frame {
    int atom, parent_bond;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0)
      continue;
    disc[root] = low[root] = timer++;
    stack.push_back({ root, -1, 0 });
    while (!stack.empty()) {
      Frame &f = stack.back();
      const auto nbs = mol.neighbors(f.atom);
      if (f.next < nbs.size()) {
        const Neighbor nb = nbs[f.next++];
        if (nb.bond == f.parent_bond)
          continue;
        if (disc[nb.atom] >= 0) {
          low[f.atom] = std::min(low[f.atom], disc[nb.atom]);
        } else {
          disc[nb.atom] = low[nb.atom] = timer++;
          stack.push_back({ nb.atom, nb.bond, 0 });
        }
        continue;
      }

      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const int up = stack.back().atom;
        low[up] = std::min(low[up], low[done.atom]);
        if (low[done.atom] > disc[up])
          bridges.push_back(done.parent_bond);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace confmotif
