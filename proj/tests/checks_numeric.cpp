//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <numeric>
#include <numbers>
#include <random>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "checks.h"
#include "confmotif/assemble/complex_graph.h"
#include "confmotif/assemble/generate.h"
#include "confmotif/assemble/policy.h"
#include "confmotif/error.h"
#include "confmotif/geom3d/geometry.h"
#include "confmotif/metrics/conformer.h"
#include "confmotif/metrics/histogram.h"
#include "confmotif/metrics/mw.h"
#include "confmotif/metrics/report.h"
#include "confmotif/molgraph/sdf.h"
#include "confmotif/motif/rotatable.h"
#include "confmotif/motif/vocabulary.h"
#include "oracles.h"
#include "support.h"

namespace confmotif::check {
namespace {

constexpr double kPi = std::numbers::pi;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Mat3 random_rotation(std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  Eigen::Quaterniond q(g(rng), g(rng), g(rng), g(rng));
  return q.normalized().toRotationMatrix();
}

Vec3 random_point(std::mt19937_64 &rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return { u(rng), u(rng), u(rng) };
}

// Direct-formula JSD on probability vectors, via entropies.
double entropy_jsd(const std::vector<double> &p, const std::vector<double> &q) {
  auto h = [](const std::vector<double> &v) {
    double s = 0;
    for (double x: v)
      if (x > 0)
        s -= x * std::log(x);
    return s;
  };
  std::vector<double> m(p.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    m[k] = 0.5 * (p[k] + q[k]);
  return h(m) - 0.5 * (h(p) + h(q));
}

Histogram from_probs(const std::vector<double> &p) {
  Histogram h = make_histogram(0.0, static_cast<double>(p.size()), 1.0);
  h.counts = p;
  return h;
}

}  // namespace

Molecule random_chain(std::uint64_t seed, int max_atoms) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, max_atoms), el(0, 3);
  constexpr int kElements[] = { kCarbon, kNitrogen, kOxygen, kSulfur };
  Molecule m(fmt::format("chain{}", seed));
  const int n = len(rng);
  for (int k = 0; k < n; ++k) {
    m.add_atom(kElements[el(rng)], Vec3(1.5 * k, (k % 2) * 0.8, 0));
    if (k > 0)
      m.add_bond(k - 1, k, BondOrder::kSingle);
  }
  return m;
}

Molecule alkane(int carbons, double torsion) {
  const double angle = 109.5 * kPi / 180;
  Molecule m(fmt::format("C{}", carbons));
  m.add_atom(kCarbon, Vec3(0, 0, 0));
  if (carbons > 1)
    m.add_atom(kCarbon, Vec3(1.53, 0, 0));
  if (carbons > 2)
    m.add_atom(kCarbon, Vec3(1.53, 0, 0) + 1.53 * Vec3(-std::cos(angle), std::sin(angle), 0));
  for (int k = 3; k < carbons; ++k)
    m.add_atom(kCarbon, test::place_atom(m.atom(k - 3).coord, m.atom(k - 2).coord,
                                         m.atom(k - 1).coord, 1.53, angle, torsion));
  for (int k = 1; k < carbons; ++k)
    m.add_bond(k - 1, k, BondOrder::kSingle);
  return m;
}

Result geometry_kernel() {
  std::mt19937_64 rng(4);
  double worst_rot = 0, worst_rmsd = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + trial % 20;
    PointSet p;
    for (int k = 0; k < n; ++k)
      p.push_back(random_point(rng, 5));
    const Mat3 r = random_rotation(rng);
    const Vec3 t = random_point(rng, 20);
    PointSet q;
    for (const Vec3 &x: p)
      q.push_back(r * x + t);
    const KabschResult k = kabsch(p, q);
    worst_rot = std::max(worst_rot, (k.transform.rotation - r).cwiseAbs().maxCoeff());
    worst_rmsd = std::max(worst_rmsd, k.rmsd);
  }

  double worst_dist = 0, worst_dihedral = 0;
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int trial = 0; trial < 1000; ++trial) {
    // Atoms 0-1 are the axis, 2 stays fixed, 3.. move.
    PointSet x;
    for (int k = 0; k < 8; ++k)
      x.push_back(random_point(rng, 3));
    const std::vector<int> moving { 3, 4, 5, 6, 7 };
    const double theta = ang(rng);
    PointSet y;
    try {
      y = rotate_about_bond(x, moving, 0, 1, theta);
    } catch (const GeometryError &) {
      continue;
    }
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b) {
        const bool ma = a >= 3, mb = b >= 3;
        if (ma != mb && a > 1)
          continue;
        worst_dist = std::max(worst_dist,
                              std::abs((y[a] - y[b]).norm() - (x[a] - x[b]).norm()));
      }
    for (int m: moving) {
      const double before = oracle::torsion(x[2], x[0], x[1], x[m]);
      const double after = oracle::torsion(y[2], y[0], y[1], y[m]);
      worst_dihedral = std::max(worst_dihedral,
                                std::abs(wrap_angle(after - before - theta)));
    }
  }
  const bool pass = worst_rot <= 1e-9 && worst_rmsd <= 1e-9 && worst_dist <= 1e-9
                    && worst_dihedral <= 1e-9;
  return { pass, fmt::format("max rotation error {:.2e}, rmsd {:.2e}, distance drift "
                             "{:.2e}, dihedral error {:.2e}",
                             worst_rot, worst_rmsd, worst_dist, worst_dihedral) };
}

Result jsd_examples() {
  const Histogram p = from_probs({ 0.1, 0.4, 0.5, 0.0 });
  const double same = jsd(p, p);
  const double disjoint = jsd(from_probs({ 1, 1, 0, 0 }), from_probs({ 0, 0, 2, 3 }));
  const double half = jsd(from_probs({ 1, 0 }), from_probs({ 0.5, 0.5 }));
  const double oracle = entropy_jsd({ 1, 0 }, { 0.5, 0.5 });
  const bool pass = same == 0 && std::abs(disjoint - std::numbers::ln2) <= 1e-12
                    && std::abs(half - 0.21576) <= 1e-5 && std::abs(half - oracle) <= 1e-12;
  return { pass, fmt::format("jsd(P,P) = {:.3g}, disjoint = {:.15f}, [1,0] vs [.5,.5] = "
                             "{:.6f} (oracle {:.6f})",
                             same, disjoint, half, oracle) };
}

Result conformer_matching() {
  const Molecule anti = test::butane(kPi), gauche = test::butane(kPi / 3);
  const ConformerMatch m = conformer_match(anti, gauche);
  const double recovered = std::abs(m.torsions.at(0)) * 180 / kPi;
  const ConformerMatch same = conformer_match(anti, anti);

  const auto generated = read_sdf_file(test::data_path("generated.sdf"));
  const auto ff = read_sdf_file(test::data_path("ff.sdf"));
  double worst_excess = -1e9, slowest = 0;
  int timed = 0;
  for (std::size_t k = 0; k < generated.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    const ConformerMatch c = conformer_match(generated[k], ff[k]);
    const double t = seconds_since(start);
    worst_excess = std::max(worst_excess, c.conformer_rmsd - c.baseline_rmsd);
    if (c.rotatable_bonds.size() <= 10) {
      slowest = std::max(slowest, t);
      ++timed;
    }
  }
  // Ten torsions, worst case for the time budget.
  const Molecule ten_a = alkane(13, kPi), ten_b = alkane(13, kPi / 3);
  const auto start = std::chrono::steady_clock::now();
  const ConformerMatch ten = conformer_match(ten_a, ten_b);
  const double ten_time = seconds_since(start);
  slowest = std::max(slowest, ten_time);

  const bool pass = m.conformer_rmsd <= 0.05 && std::abs(recovered - 180) <= 2
                    && same.conformer_rmsd <= 1e-6 && worst_excess <= 1e-9
                    && ten.rotatable_bonds.size() == 10 && slowest < 2.0;
  return { pass,
           fmt::format("butane rmsd {:.4f} A, torsion {:.2f} deg; identical {:.1e} A; DE minus "
                       "baseline <= {:.1e} over {} pairs; slowest {:.3f} s ({} torsions max)",
                       m.conformer_rmsd, recovered, same.conformer_rmsd, worst_excess,
                       generated.size(), slowest, ten.rotatable_bonds.size()) };
}

Result mw_protocol() {
  std::vector<double> w;
  for (int k = 1; k <= 10; ++k)
    w.push_back(100.0 * k);
  const MwRange r = mw_range(w, "fixture");
  // Independent arithmetic: survivors 300..800.
  const double mu = (300 + 400 + 500 + 600 + 700 + 800) / 6.0;
  double ss = 0;
  for (int v = 300; v <= 800; v += 100)
    ss += (v - mu) * (v - mu);
  const double sigma = std::sqrt(ss / 6);
  const bool arith = r.survivors == 6 && std::abs(r.mean - 550) <= 1e-9
                     && std::abs(r.mean - mu) <= 1e-9 && std::abs(r.sigma - sigma) <= 1e-9
                     && std::abs(r.sigma - 170.78) <= 0.01 && std::abs(r.lower - 379.2) <= 0.1
                     && std::abs(r.upper - 720.8) <= 0.1;

  std::vector<Molecule> mols;
  for (std::uint64_t s = 0; s < 1000; ++s)
    mols.push_back(random_chain(s, 30));
  std::vector<double> weights;
  for (const Molecule &m: mols)
    weights.push_back(molecular_weight(m));
  const MwRange wr = mw_range(weights, "random");
  const std::vector<Molecule> kept = mw_filter(mols, wr);
  std::vector<std::string> expect, got;
  for (std::size_t k = 0; k < mols.size(); ++k)
    if (!(weights[k] < wr.lower) && !(weights[k] > wr.upper))
      expect.push_back(mols[k].name());
  for (const Molecule &m: kept)
    got.push_back(m.name());
  const bool filter = expect == got;
  return { arith && filter,
           fmt::format("mu {:.3f}, sigma {:.3f}, range [{:.2f}, {:.2f}]; filter kept {} of "
                       "1000, brute force {}",
                       r.mean, r.sigma, r.lower, r.upper, got.size(), expect.size()) };
}

Result end_to_end_generation() {
  const auto pocket = std::make_shared<const Pocket>(test::fixture_pocket());
  const Vocabulary vocab = extract_vocabulary(test::corpus());
  RunLimits limits;
  auto batch = [&](int count) {
    std::vector<Molecule> out;
    for (int seed = 0; seed < count; ++seed) {
      RandomPolicy policy(static_cast<std::uint64_t>(seed));
      out.push_back(run(pocket, vocab, policy, limits).molecule);
    }
    return write_sdf(out);
  };
  const auto start = std::chrono::steady_clock::now();
  const std::string first = batch(100);
  const double elapsed = seconds_since(start);
  const std::string second = batch(100);

  int valid = 0;
  std::vector<Molecule> parsed;
  try {
    parsed = parse_sdf(first);
  } catch (const Error &) {
  }
  for (const Molecule &m: parsed) {
    try {
      validate_molecule(m);
    } catch (const Error &) {
      continue;
    }
    if (min_pocket_distance(*pocket, m.coordinates()) >= limits.clash_distance - 1e-4
        && molecular_weight(m) <= limits.mw_cap)
      ++valid;
  }
  const bool pass = parsed.size() == 100 && valid == 100 && first == second && elapsed < 60;
  return { pass, fmt::format("{} records parsed, {} valid and clash-free under {} Da, "
                             "reproducible {}, {:.2f} s",
                             parsed.size(), valid, limits.mw_cap, first == second, elapsed) };
}

Result complex_graph_brute_force() {
  std::mt19937_64 rng(9);
  Molecule lig = test::named("ibuprofen");
  while (lig.num_atoms() > 10) {
    // Drop the highest-index atom; keep the graph connected when possible.
    std::vector<int> keep(lig.num_atoms() - 1);
    std::iota(keep.begin(), keep.end(), 0);
    lig = induced_submolecule(lig, keep);
  }
  const Pocket &full = test::fixture_pocket();
  const Vec3 shift = full.centroid() - centroid(lig.coordinates());
  for (int i = 0; i < lig.num_atoms(); ++i)
    lig.atom(i).coord += shift;
  Pocket pocket = full;
  std::shuffle(pocket.atoms.begin(), pocket.atoms.end(), rng);
  std::stable_sort(pocket.atoms.begin(), pocket.atoms.end(),
                   [&](const PocketAtom &a, const PocketAtom &b) {
                     return (a.coord - full.centroid()).norm() < (b.coord - full.centroid()).norm();
                   });
  pocket.atoms.resize(100);

  using EdgeSet = std::set<std::tuple<int, int, bool>>;
  auto brute = [](const PointSet &a, const PointSet &b, double cutoff, bool same,
                  const Molecule *bonds) {
    EdgeSet out;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
      for (int j = 0; j < static_cast<int>(b.size()); ++j) {
        if (same && i == j)
          continue;
        const bool cov = bonds && bonds->find_bond(i, j).has_value();
        if ((a[i] - b[j]).norm() <= cutoff || cov)
          out.insert({ i, j, cov });
      }
    return out;
  };
  auto as_set = [](const std::vector<HeteroEdge> &edges, bool swap) {
    EdgeSet out;
    for (const HeteroEdge &e: edges)
      out.insert(swap ? std::tuple { e.dst, e.src, e.covalent }
                      : std::tuple { e.src, e.dst, e.covalent });
    return std::pair { out, out.size() == edges.size() };
  };

  const HeteroGraph g = build_complex_graph(lig, pocket);
  const PointSet l = lig.coordinates(), p = pocket.coordinates();
  const auto ll = as_set(g.ligand_ligand, false), lp = as_set(g.ligand_pocket, false),
             pl = as_set(g.pocket_ligand, true), pp = as_set(g.pocket_pocket, false);
  const EdgeSet bll = brute(l, l, 5, true, &lig), blp = brute(l, p, 10, false, nullptr),
                bpp = brute(p, p, 15, true, nullptr);
  const bool pass = ll.second && lp.second && pl.second && pp.second && ll.first == bll
                    && lp.first == blp && pl.first == blp && pp.first == bpp
                    && lig.num_atoms() == 10 && pocket.atoms.size() == 100;
  return { pass, fmt::format("{} ligand and {} pocket atoms; edges L-L {}, L-P {}, P-L {}, "
                             "P-P {} (brute force {}, {}, {}, {})",
                             lig.num_atoms(), pocket.atoms.size(), g.ligand_ligand.size(),
                             g.ligand_pocket.size(), g.pocket_ligand.size(),
                             g.pocket_pocket.size(), bll.size(), blp.size(), blp.size(),
                             bpp.size()) };
}

Result metric_self_consistency() {
  const auto gen = read_sdf_file(test::data_path("generated.sdf"));
  const MetricReport r = evaluate(gen, gen, &gen);
  bool zero = r.distance_all_atom == 0.0 && r.distance_carbon_carbon == 0.0;
  int rows = 2;
  for (const AngleRow &row: r.angles) {
    zero = zero && row.vs_reference == 0.0;
    ++rows;
  }
  const double worst = r.conformer_rmsd ? r.conformer_rmsd->max : 1e9;
  const bool pass = zero && worst <= 1e-6 && r.conformer_rmsds.size() == gen.size();
  return { pass, fmt::format("{} reference-row JSDs all zero: {}; max conformer RMSD {:.2e} A "
                             "over {} molecules",
                             rows, zero, worst, r.conformer_rmsds.size()) };
}

}  // namespace confmotif::check
