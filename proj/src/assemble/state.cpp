//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/assemble/state.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "confmotif/error.h"

namespace confmotif {
namespace {

// Shoemake's uniform random unit quaternion.
Mat3 random_rotation(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double u1 = u(rng), u2 = u(rng), u3 = u(rng);
  const double a = std::sqrt(1 - u1), b = std::sqrt(u1);
  const double t2 = 2 * std::numbers::pi * u2, t3 = 2 * std::numbers::pi * u3;
  Eigen::Quaterniond q(b * std::cos(t3), a * std::sin(t2), a * std::cos(t2),
                       b * std::sin(t3));
  return q.normalized().toRotationMatrix();
}

PointSet heavy_coords(const Motif &motif) {
  PointSet out;
  for (const Atom &a: motif.graph.atoms())
    if (!a.is_dummy())
      out.push_back(a.coord);
  return out;
}

}  // namespace

Vec3 motif_centroid(const Motif &motif) {
  return centroid(heavy_coords(motif));
}

RigidTransform pose_transform(const Pose &pose, const Vec3 &c) {
  return { pose.rotation, c - pose.rotation * c + pose.translation };
}

double min_pocket_distance(const Pocket &pocket, std::span<const Vec3> points) {
  double best = std::numeric_limits<double>::infinity();
  for (const PocketAtom &p: pocket.atoms)
    for (const Vec3 &x: points)
      best = std::min(best, (p.coord - x).squaredNorm());
  return std::sqrt(best);
}

AssemblyState place_first_motif(std::shared_ptr<const Pocket> pocket,
                                const Motif &motif, const Pose &pose,
                                double clash_distance) {
  if (!is_proper_rotation(pose.rotation, 1e-6))
    throw PlacementError("pose rotation is not a proper rotation");

  const RigidTransform t = pose_transform(pose, motif_centroid(motif));
  AssemblyState state;
  state.pocket = std::move(pocket);

  const Molecule &g = motif.graph;
  std::vector<int> index(g.num_atoms(), -1);
  Molecule &mol = state.ligand.mol;
  for (int v = 0; v < g.num_atoms(); ++v) {
    if (g.atom(v).is_dummy())
      continue;
    Atom atom = g.atom(v);
    atom.coord = t.apply(atom.coord);
    index[v] = mol.add_atom(atom);
  }
  for (const Bond &b: g.bonds())
    if (index[b.a] >= 0 && index[b.b] >= 0)
      mol.add_bond(index[b.a], index[b.b], b.order);
  for (int v = 0; v < g.num_atoms(); ++v) {
    if (!g.atom(v).is_dummy())
      continue;
    const int owner = g.neighbors(v)[0].atom;
    state.ligand.slots.push_back({ index[owner], t.apply(g.atom(v).coord) });
  }

  if (state.pocket) {
    const double d = min_pocket_distance(*state.pocket, mol.coordinates());
    if (d < clash_distance)
      throw PlacementError(fmt::format(
          "first motif clashes with the pocket ({:.3f} A < {:.3f} A)", d,
          clash_distance));
  }

  HistoryEntry entry;
  entry.motif_key = motif.key;
  entry.transform = t;
  state.history.push_back(std::move(entry));
  return state;
}

Pose heuristic_first_pose(const Pocket &pocket, const Motif &motif,
                          std::uint64_t seed, double clash_distance) {
  if (pocket.atoms.empty())
    throw PlacementError("pocket has no atoms");

  constexpr int kRotationTries = 24;
  constexpr int kRetreatSteps = 40;
  constexpr double kStep = 0.1;

  std::mt19937_64 rng(seed);
  const PointSet heavy = heavy_coords(motif);
  const Vec3 c = centroid(heavy);
  const Vec3 target = pocket.centroid();

  for (int attempt = 0; attempt < kRotationTries; ++attempt) {
    Pose pose;
    pose.rotation = random_rotation(rng);
    pose.translation = target - c;

    for (int s = 0; s <= kRetreatSteps; ++s) {
      const PointSet placed = pose_transform(pose, c).apply(heavy);
      Vec3 push = Vec3::Zero();
      bool clash = false;
      for (const PocketAtom &p: pocket.atoms) {
        for (const Vec3 &x: placed) {
          const Vec3 d = x - p.coord;
          const double dist = d.norm();
          if (dist >= clash_distance)
            continue;
          clash = true;
          // Coincident atoms push along an arbitrary fixed axis.
          push += dist > 1e-9 ? Vec3(d / dist * (clash_distance - dist))
                              : Vec3(Vec3::UnitX() * clash_distance);
        }
      }
      if (!clash)
        return pose;
      if (push.norm() < 1e-12)
        break;
      pose.translation += kStep * push.normalized();
    }
  }
  throw PlacementError(fmt::format(
      "no clash-free first pose after {} rotations", kRotationTries));
}

}  // namespace confmotif
