//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/metrics/conformer.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numbers>
#include <random>
#include <thread>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "confmotif/error.h"
#include "confmotif/geom3d/geometry.h"
#include "confmotif/motif/rotatable.h"

namespace confmotif {
namespace {

constexpr double kPi = std::numbers::pi;

struct Torsion {
  int a, b;
  std::vector<int> moving;
};

std::vector<Torsion> torsion_axes(const Molecule &mol, std::span<const int> bonds) {
  std::vector<Torsion> out;
  for (int k: bonds) {
    const Bond &bond = mol.bond(k);
    Torsion t { bond.a, bond.b, side_atoms(mol, k, bond.b) };
    std::erase(t.moving, bond.b);
    out.push_back(std::move(t));
  }
  return out;
}

PointSet apply_offsets(PointSet coords, const std::vector<Torsion> &axes,
                       std::span<const double> offsets) {
  for (std::size_t k = 0; k < axes.size(); ++k)
    if (offsets[k] != 0)
      coords = rotate_about_bond(coords, axes[k].moving, axes[k].a, axes[k].b, offsets[k]);
  return coords;
}

double wrap(double x) {
  x = std::fmod(x + kPi, 2 * kPi);
  if (x < 0)
    x += 2 * kPi;
  return x - kPi;
}

}  // namespace

bool same_graph(const Molecule &a, const Molecule &b) {
  if (a.num_atoms() != b.num_atoms() || a.num_bonds() != b.num_bonds())
    return false;
  for (int i = 0; i < a.num_atoms(); ++i)
    if (a.atom(i).atomic_number != b.atom(i).atomic_number
        || a.atom(i).formal_charge != b.atom(i).formal_charge)
      return false;
  for (const Bond &bond: a.bonds()) {
    const auto k = b.find_bond(bond.a, bond.b);
    if (!k || b.bond(*k).order != bond.order)
      return false;
  }
  return true;
}

PointSet apply_torsion_offsets(const Molecule &mol, std::span<const int> bonds,
                               std::span<const double> offsets) {
  if (bonds.size() != offsets.size())
    throw ContractError("one offset per rotatable bond is required");
  return apply_offsets(mol.coordinates(), torsion_axes(mol, bonds), offsets);
}

ConformerMatch conformer_match(const Molecule &c, const Molecule &c_ff,
                               const DeOptions &options) {
  if (!same_graph(c, c_ff))
    throw MetricError(fmt::format("conformer '{}' does not match the graph of '{}'",
                                  c_ff.name(), c.name()));
  if (c.num_atoms() < 3)
    throw MetricError(fmt::format("'{}' has fewer than three atoms", c.name()));

  ConformerMatch out;
  out.reference = c;
  out.optimized = c_ff;
  out.rotatable_bonds = find_rotatable_bonds(c_ff);
  const int d = static_cast<int>(out.rotatable_bonds.size());
  const std::vector<Torsion> axes = torsion_axes(c_ff, out.rotatable_bonds);
  const PointSet target = c.coordinates(), start = c_ff.coordinates();

  auto cost = [&](std::span<const double> x) {
    return rmsd(apply_offsets(start, axes, x), target, true);
  };
  out.baseline_rmsd = rmsd(start, target, true);

  std::vector<double> best(d, 0.0);
  double best_cost = out.baseline_rmsd;
  if (d > 0) {
    const int np = std::max(4, options.population_factor * d);
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> angle(-kPi, kPi), unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, np - 1), dim(0, d - 1);

    std::vector<std::vector<double>> pop(np, std::vector<double>(d));
    std::vector<double> fit(np);
    for (int i = 0; i < np; ++i) {
      // Member 0 is the unchanged conformer.
      for (int j = 0; j < d; ++j)
        pop[i][j] = i == 0 ? 0.0 : angle(rng);
      fit[i] = cost(pop[i]);
    }

    std::vector<double> history;
    std::vector<double> trial(d);
    for (int gen = 0; gen < options.max_generations; ++gen) {
      for (int i = 0; i < np; ++i) {
        int r1, r2, r3;
        do r1 = pick(rng);
        while (r1 == i);
        do r2 = pick(rng);
        while (r2 == i || r2 == r1);
        do r3 = pick(rng);
        while (r3 == i || r3 == r1 || r3 == r2);
        const int forced = dim(rng);
        for (int j = 0; j < d; ++j) {
          if (j == forced || unit(rng) < options.crossover)
            trial[j] = wrap(pop[r1][j]
                            + options.mutation * wrap(pop[r2][j] - pop[r3][j]));
          else
            trial[j] = pop[i][j];
        }
        const double f = cost(trial);
        if (f <= fit[i]) {
          pop[i] = trial;
          fit[i] = f;
        }
      }
      const double gen_best = *std::min_element(fit.begin(), fit.end());
      history.push_back(gen_best);
      out.generations = gen + 1;
      const int w = options.plateau_generations;
      if (w > 0 && static_cast<int>(history.size()) > w
          && history[history.size() - 1 - w] - gen_best < options.plateau_tolerance)
        break;
    }
    const int arg = static_cast<int>(std::min_element(fit.begin(), fit.end()) - fit.begin());
    if (fit[arg] < best_cost) {
      best = pop[arg];
      best_cost = fit[arg];
    }
  }

  const PointSet moved = apply_offsets(start, axes, best);
  const KabschResult fit = kabsch(moved, target);
  out.matched = c_ff;
  out.matched.set_coordinates(fit.transform.apply(moved));
  out.conformer_rmsd = best_cost;
  out.torsion_offsets = best;
  for (int k: out.rotatable_bonds) {
    const Bond &bond = c_ff.bond(k);
    const auto ra = torsion_reference(out.matched, bond.a, bond.b);
    const auto rb = torsion_reference(out.matched, bond.b, bond.a);
    const Molecule &m = out.matched;
    out.torsions.push_back(ra && rb ? dihedral(m.atom(*ra).coord, m.atom(bond.a).coord,
                                               m.atom(bond.b).coord, m.atom(*rb).coord)
                                    : 0.0);
  }
  return out;
}

std::vector<ConformerMatch> conformer_match_all(std::span<const Molecule> c,
                                                std::span<const Molecule> c_ff,
                                                const DeOptions &options, int threads) {
  if (c.size() != c_ff.size())
    throw MetricError(fmt::format("{} molecules but {} optimized conformers", c.size(),
                                  c_ff.size()));
  std::vector<std::string> offenders;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!same_graph(c[k], c_ff[k]))
      offenders.push_back(fmt::format("{} ({})", k + 1, c[k].name()));
  if (!offenders.empty())
    throw MetricError(fmt::format("optimized conformers do not match records: {}",
                                  fmt::join(offenders, ", ")));

  const int n = static_cast<int>(c.size());
  std::vector<ConformerMatch> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<int> next { 0 };
  auto work = [&] {
    for (int k = next++; k < n; k = next++) {
      try {
        DeOptions local = options;
        local.seed = options.seed + static_cast<std::uint64_t>(k);
        out[k] = conformer_match(c[k], c_ff[k], local);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  int count = threads > 0 ? threads
                          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  count = std::clamp(count, 1, std::max(1, n));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < count; ++t)
      pool.emplace_back(work);
    work();
  }
  for (const auto &e: errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

}  // namespace confmotif
