//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/assemble/complex_graph.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <tuple>

#include "confmotif/error.h"

namespace confmotif {
namespace {

using Cell = std::array<long, 3>;

// Uniform hash grid with cell edge equal to the search radius, so every
// neighbor within the radius lies in the 27 surrounding cells.
class Grid {
public:
  Grid(std::span<const Vec3> points, double radius)
      : points_(points), radius_(radius) {
    for (int i = 0; i < static_cast<int>(points.size()); ++i)
      cells_[cell_of(points[i])].push_back(i);
  }

  template <class F>
  void for_each_near(const Vec3 &x, F &&f) const {
    const Cell c = cell_of(x);
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy)
        for (long dz = -1; dz <= 1; ++dz) {
          auto it = cells_.find({ c[0] + dx, c[1] + dy, c[2] + dz });
          if (it == cells_.end())
            continue;
          for (int j: it->second) {
            const double d = (points_[j] - x).norm();
            if (d <= radius_)
              f(j, d);
          }
        }
  }

private:
  Cell cell_of(const Vec3 &x) const {
    return { static_cast<long>(std::floor(x.x() / radius_)),
             static_cast<long>(std::floor(x.y() / radius_)),
             static_cast<long>(std::floor(x.z() / radius_)) };
  }

  std::span<const Vec3> points_;
  double radius_;
  std::map<Cell, std::vector<int>> cells_;
};

void sort_edges(std::vector<HeteroEdge> &edges) {
  std::sort(edges.begin(), edges.end(), [](const HeteroEdge &a, const HeteroEdge &b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
}

}  // namespace

HeteroGraph build_complex_graph(const Molecule &ligand, const Pocket &pocket,
                                const ComplexCutoffs &cutoffs) {
  if (ligand.empty() || pocket.atoms.empty())
    throw ContractError("complex graph needs a nonempty ligand and pocket");
  if (cutoffs.ligand_ligand <= 0 || cutoffs.ligand_pocket <= 0
      || cutoffs.pocket_pocket <= 0)
    throw ContractError("complex graph cutoffs must be positive");

  const PointSet lig = ligand.coordinates();
  const PointSet poc = pocket.coordinates();
  HeteroGraph g;
  g.num_ligand = static_cast<int>(lig.size());
  g.num_pocket = static_cast<int>(poc.size());

  const Grid lig_grid(lig, cutoffs.ligand_ligand);
  for (int i = 0; i < g.num_ligand; ++i) {
    std::vector<int> seen;
    lig_grid.for_each_near(lig[i], [&](int j, double d) {
      if (j == i)
        return;
      g.ligand_ligand.push_back({ i, j, d, ligand.find_bond(i, j).has_value() });
      seen.push_back(j);
    });
    for (const Neighbor &nb: ligand.neighbors(i))
      if (std::find(seen.begin(), seen.end(), nb.atom) == seen.end())
        g.ligand_ligand.push_back({ i, nb.atom, (lig[nb.atom] - lig[i]).norm(), true });
  }

  const Grid poc_cross(poc, cutoffs.ligand_pocket);
  for (int i = 0; i < g.num_ligand; ++i)
    poc_cross.for_each_near(lig[i], [&](int j, double d) {
      g.ligand_pocket.push_back({ i, j, d, false });
      g.pocket_ligand.push_back({ j, i, d, false });
    });

  const Grid poc_grid(poc, cutoffs.pocket_pocket);
  for (int i = 0; i < g.num_pocket; ++i)
    poc_grid.for_each_near(poc[i], [&](int j, double d) {
      if (j != i)
        g.pocket_pocket.push_back({ i, j, d, false });
    });

  sort_edges(g.ligand_ligand);
  sort_edges(g.ligand_pocket);
  sort_edges(g.pocket_ligand);
  sort_edges(g.pocket_pocket);
  return g;
}

HeteroGraph build_complex_graph(const AssemblyState &state,
                                const ComplexCutoffs &cutoffs) {
  if (!state.pocket)
    throw ContractError("assembly state has no pocket");
  return build_complex_graph(state.ligand.mol, *state.pocket, cutoffs);
}

}  // namespace confmotif
