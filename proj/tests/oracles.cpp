//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Eigenvalues>

namespace confmotif::oracle {
namespace {

struct Matcher {
  const LabeledGraph &g1, &g2;
  int n;
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj1, adj2;
  std::vector<int> map12, map21;

  Matcher(const LabeledGraph &a, const LabeledGraph &b)
      : g1(a), g2(b), n(a.size()), adj1(n), adj2(n), map12(n, -1),
        map21(n, -1) {
    for (const auto &e: a.edges) {
      adj1[e.a].push_back({ e.b, e.label });
      adj1[e.b].push_back({ e.a, e.label });
    }
    for (const auto &e: b.edges) {
      adj2[e.a].push_back({ e.b, e.label });
      adj2[e.b].push_back({ e.a, e.label });
    }
  }

  static std::int64_t edge_label(
      const std::vector<std::pair<int, std::int64_t>> &adj, int to) {
    for (const auto &[v, label]: adj)
      if (v == to)
        return label;
    return -1;
  }

  bool feasible(int u, int v) const {
    if (g1.labels[u] != g2.labels[v] || adj1[u].size() != adj2[v].size())
      return false;
    // Every mapped neighbor relation must agree in both directions.
    for (int w = 0; w < n; ++w) {
      if (map12[w] < 0)
        continue;
      if (edge_label(adj1[u], w) != edge_label(adj2[v], map12[w]))
        return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == n)
      return true;
    // Prefer a vertex adjacent to the mapped core (VF2 ordering).
    int u = -1;
    for (int w = 0; w < n && u < 0; ++w)
      if (map12[w] < 0)
        for (const auto &[x, l]: adj1[w])
          if (map12[x] >= 0) {
            u = w;
            break;
          }
    if (u < 0)
      for (int w = 0; w < n; ++w)
        if (map12[w] < 0) {
          u = w;
          break;
        }
    for (int v = 0; v < n; ++v) {
      if (map21[v] >= 0 || !feasible(u, v))
        continue;
      map12[u] = v;
      map21[v] = u;
      if (extend(depth + 1))
        return true;
      map12[u] = -1;
      map21[v] = -1;
    }
    return false;
  }
};

int count_components(const Molecule &mol, int skip_bond) {
  std::vector<bool> removed(mol.num_bonds(), false);
  if (skip_bond >= 0)
    removed[skip_bond] = true;
  return static_cast<int>(connected_components(mol, removed).size());
}

void cycles_from(const Molecule &mol, int start, int u, std::vector<bool> &on_path,
                 std::vector<int> &bonds, std::set<std::vector<int>> &out) {
  for (const Neighbor &nb: mol.neighbors(u)) {
    if (!bonds.empty() && nb.bond == bonds.back())
      continue;
    if (nb.atom == start && bonds.size() >= 2) {
      std::vector<int> cycle = bonds;
      cycle.push_back(nb.bond);
      std::sort(cycle.begin(), cycle.end());
      out.insert(cycle);
      continue;
    }
    // Only walk through atoms above the start to list each cycle once-ish.
    if (nb.atom < start || on_path[nb.atom])
      continue;
    on_path[nb.atom] = true;
    bonds.push_back(nb.bond);
    cycles_from(mol, start, nb.atom, on_path, bonds, out);
    bonds.pop_back();
    on_path[nb.atom] = false;
  }
}

}  // namespace

bool isomorphic(const LabeledGraph &g1, const LabeledGraph &g2) {
  if (g1.size() != g2.size() || g1.edges.size() != g2.edges.size())
    return false;
  std::vector<std::int64_t> l1 = g1.labels, l2 = g2.labels;
  std::sort(l1.begin(), l1.end());
  std::sort(l2.begin(), l2.end());
  if (l1 != l2)
    return false;
  Matcher m(g1, g2);
  return m.extend(0);
}

bool isomorphic(const Molecule &a, const Molecule &b) {
  return isomorphic(labeled_graph(a), labeled_graph(b));
}

std::vector<int> bridges(const Molecule &mol) {
  const int base = count_components(mol, -1);
  std::vector<int> out;
  for (int b = 0; b < mol.num_bonds(); ++b)
    if (count_components(mol, b) > base)
      out.push_back(b);
  return out;
}

std::vector<int> rotatable_bonds(const Molecule &mol) {
  std::vector<int> out;
  for (int b = 0; b < mol.num_bonds(); ++b) {
    const Bond &bd = mol.bond(b);
    if (bd.order != BondOrder::kSingle)
      continue;
    std::vector<bool> removed(mol.num_bonds(), false);
    removed[b] = true;
    const auto comps = connected_components(mol, removed);
    if (comps.size() != 2)
      continue;

    const Vec3 &pa = mol.atom(bd.a).coord, &pb = mol.atom(bd.b).coord;
    const Vec3 axis = (pb - pa).normalized();
    auto off_axis = [&](const std::vector<int> &side) {
      for (int v: side) {
        const Vec3 d = mol.atom(v).coord - pa;
        if ((d - d.dot(axis) * axis).norm() > 0.1)
          return true;
      }
      return false;
    };
    if (off_axis(comps[0]) && off_axis(comps[1]))
      out.push_back(b);
  }
  return out;
}

std::vector<std::vector<int>> simple_cycles(const Molecule &mol) {
  std::set<std::vector<int>> found;
  for (int start = 0; start < mol.num_atoms(); ++start) {
    std::vector<bool> on_path(mol.num_atoms(), false);
    std::vector<int> bonds;
    on_path[start] = true;
    cycles_from(mol, start, start, on_path, bonds, found);
  }
  return { found.begin(), found.end() };
}

std::vector<int> minimum_cycle_basis_sizes(const Molecule &mol) {
  std::vector<std::vector<int>> cycles = simple_cycles(mol);
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto &a, const auto &b) { return a.size() < b.size(); });

  // Greedy over GF(2), basis kept in reduced echelon form.
  std::vector<std::vector<bool>> basis;
  std::vector<int> pivots, sizes;
  for (const auto &cycle: cycles) {
    std::vector<bool> row(mol.num_bonds(), false);
    for (int b: cycle)
      row[b] = true;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (row[pivots[k]])
        for (int c = 0; c < mol.num_bonds(); ++c)
          row[c] = row[c] != basis[k][c];
    const auto it = std::find(row.begin(), row.end(), true);
    if (it == row.end())
      continue;
    const int pivot = static_cast<int>(it - row.begin());
    for (auto &base: basis)
      if (base[pivot])
        for (int c = 0; c < mol.num_bonds(); ++c)
          base[c] = base[c] != row[c];
    basis.push_back(row);
    pivots.push_back(pivot);
    sizes.push_back(static_cast<int>(cycle.size()));
  }
  return sizes;
}

double horn_rmsd(std::span<const Vec3> p, std::span<const Vec3> q) {
  const std::size_t n = p.size();
  Vec3 cp = Vec3::Zero(), cq = Vec3::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    cp += p[i];
    cq += q[i];
  }
  cp /= static_cast<double>(n);
  cq /= static_cast<double>(n);

  Mat3 s = Mat3::Zero();
  double e0 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 a = p[i] - cp, b = q[i] - cq;
    s += a * b.transpose();
    e0 += a.squaredNorm() + b.squaredNorm();
  }
  Eigen::Matrix4d k;
  k << s(0, 0) + s(1, 1) + s(2, 2), s(1, 2) - s(2, 1), s(2, 0) - s(0, 2),
      s(0, 1) - s(1, 0),
      s(1, 2) - s(2, 1), s(0, 0) - s(1, 1) - s(2, 2), s(0, 1) + s(1, 0),
      s(2, 0) + s(0, 2),
      s(2, 0) - s(0, 2), s(0, 1) + s(1, 0), -s(0, 0) + s(1, 1) - s(2, 2),
      s(1, 2) + s(2, 1),
      s(0, 1) - s(1, 0), s(2, 0) + s(0, 2), s(1, 2) + s(2, 1),
      -s(0, 0) - s(1, 1) + s(2, 2);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(k);
  const double lambda = eig.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, (e0 - 2 * lambda) / static_cast<double>(n)));
}

double torsion(const Vec3 &p1, const Vec3 &p2, const Vec3 &p3, const Vec3 &p4) {
  const Vec3 n1 = (p2 - p1).cross(p3 - p2).normalized();
  const Vec3 n2 = (p3 - p2).cross(p4 - p3).normalized();
  const double angle = std::acos(std::clamp(n1.dot(n2), -1.0, 1.0));
  return n1.cross(n2).dot(p3 - p2) < 0 ? -angle : angle;
}

}  // namespace confmotif::oracle
