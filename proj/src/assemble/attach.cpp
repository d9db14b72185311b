//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/assemble/attach.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "confmotif/error.h"
#include "confmotif/molgraph/rings.h"
#include "confmotif/motif/rotatable.h"

namespace confmotif {
namespace {

using Reason = AttachError::Reason;

[[noreturn]] void fail(Reason reason, const std::string &what) {
  throw AttachError(reason, what);
}

Vec3 outward_direction(const Vec3 &center, std::span<const Vec3> neighbors) {
  Vec3 sum = Vec3::Zero();
  for (const Vec3 &p: neighbors) {
    const Vec3 d = p - center;
    if (d.norm() > 1e-9)
      sum -= d.normalized();
  }
  if (sum.norm() > 1e-6)
    return sum.normalized();
  // Linear or bare centers: any direction perpendicular to the first bond.
  if (!neighbors.empty() && (neighbors[0] - center).norm() > 1e-9)
    return (neighbors[0] - center).unitOrthogonal();
  return Vec3::UnitX();
}

int slots_owned(const PartialLigand &lig, int atom) {
  return static_cast<int>(std::count_if(
      lig.slots.begin(), lig.slots.end(),
      [&](const OpenSlot &s) { return s.atom == atom; }));
}

// Fragment end of an atom-atom connection.
struct FragmentEnd {
  int atom = -1;
  int slot = -1;  // consumed slot
  Vec3 direction = Vec3::Zero();
};

// Motif end of an atom-atom connection.
struct MotifEnd {
  int atom = -1;   // anchor atom that receives the new bond
  int dummy = -1;  // consumed dummy
  Vec3 direction = Vec3::Zero();  // from the anchor toward the fragment atom
};

FragmentEnd resolve_fragment_end(const PartialLigand &lig,
                                 const ConnectionSite &site) {
  const Molecule &mol = lig.mol;
  if (site.atom < 0 || site.atom >= mol.num_atoms())
    fail(Reason::kInvalidSite,
         fmt::format("fragment site atom {} is out of range", site.atom + 1));
  FragmentEnd end;
  end.atom = site.atom;
  const Vec3 &x = mol.atom(site.atom).coord;

  if (site.slot >= 0) {
    if (site.slot >= static_cast<int>(lig.slots.size())
        || lig.slots[site.slot].atom != site.atom)
      fail(Reason::kInvalidSite,
           fmt::format("{} is not an open slot", describe(site)));
    end.slot = site.slot;
    const Vec3 d = lig.slots[site.slot].position - x;
    if (d.norm() < 1e-9)
      fail(Reason::kInvalidSite, "open slot coincides with its owner atom");
    end.direction = d.normalized();
    return end;
  }

  if (free_valence(mol, site.atom) - slots_owned(lig, site.atom) < 1)
    fail(Reason::kValence,
         fmt::format("fragment atom {} has no free valence", site.atom + 1));
  std::vector<Vec3> around;
  for (const Neighbor &nb: mol.neighbors(site.atom))
    around.push_back(mol.atom(nb.atom).coord);
  for (const OpenSlot &s: lig.slots)
    if (s.atom == site.atom)
      around.push_back(s.position);
  end.direction = outward_direction(x, around);
  return end;
}

MotifEnd resolve_motif_end(const Motif &motif, const ConnectionSite &site) {
  const Molecule &g = motif.graph;
  if (site.atom < 0 || site.atom >= g.num_atoms())
    fail(Reason::kInvalidSite,
         fmt::format("motif site atom {} is out of range", site.atom + 1));

  if (g.atom(site.atom).is_dummy()) {
    if (g.degree(site.atom) != 1)
      fail(Reason::kInvalidSite, "motif dummy atom must have one neighbor");
    MotifEnd end;
    end.atom = g.neighbors(site.atom)[0].atom;
    end.dummy = site.atom;
    const Vec3 d = g.atom(site.atom).coord - g.atom(end.atom).coord;
    if (d.norm() < 1e-9)
      fail(Reason::kInvalidSite, "motif dummy coincides with its neighbor");
    end.direction = d.normalized();
    return end;
  }

  if (free_valence(g, site.atom) < 1)
    fail(Reason::kValence,
         fmt::format("motif atom {} has no free valence", site.atom + 1));
  MotifEnd end;
  end.atom = site.atom;
  std::vector<Vec3> around;
  for (const Neighbor &nb: g.neighbors(site.atom))
    around.push_back(g.atom(nb.atom).coord);
  end.direction = outward_direction(g.atom(site.atom).coord, around);
  return end;
}

bool off_line(const Vec3 &p, const Vec3 &origin, const Vec3 &dir) {
  return is_off_axis(p, origin, origin + dir);
}

// Fragment-side torsion reference: neighbors of the site atom, its other
// slots, then any ligand atom, then any slot.
std::optional<Vec3> fragment_reference(const PartialLigand &lig,
                                       const FragmentEnd &end,
                                       const Vec3 &axis) {
  const Molecule &mol = lig.mol;
  const Vec3 &x = mol.atom(end.atom).coord;
  std::vector<int> nbs;
  for (const Neighbor &nb: mol.neighbors(end.atom))
    nbs.push_back(nb.atom);
  std::sort(nbs.begin(), nbs.end());
  for (int v: nbs)
    if (off_line(mol.atom(v).coord, x, axis))
      return mol.atom(v).coord;
  for (int s = 0; s < static_cast<int>(lig.slots.size()); ++s)
    if (s != end.slot && lig.slots[s].atom == end.atom
        && off_line(lig.slots[s].position, x, axis))
      return lig.slots[s].position;
  for (int v = 0; v < mol.num_atoms(); ++v)
    if (v != end.atom && off_line(mol.atom(v).coord, x, axis))
      return mol.atom(v).coord;
  for (int s = 0; s < static_cast<int>(lig.slots.size()); ++s)
    if (s != end.slot && off_line(lig.slots[s].position, x, axis))
      return lig.slots[s].position;
  return std::nullopt;
}

// Motif-side reference (motif frame): real neighbors of the anchor, dummy
// neighbors, any real atom, any dummy; the consumed dummy is skipped.
std::optional<Vec3> motif_reference(const Motif &motif, const MotifEnd &end,
                                    const Vec3 &axis) {
  const Molecule &g = motif.graph;
  const Vec3 &x = g.atom(end.atom).coord;
  std::vector<int> nbs;
  for (const Neighbor &nb: g.neighbors(end.atom))
    if (nb.atom != end.dummy)
      nbs.push_back(nb.atom);
  std::sort(nbs.begin(), nbs.end());

  for (bool dummies: { false, true })
    for (int v: nbs)
      if (g.atom(v).is_dummy() == dummies && off_line(g.atom(v).coord, x, axis))
        return g.atom(v).coord;
  for (bool dummies: { false, true })
    for (int v = 0; v < g.num_atoms(); ++v)
      if (v != end.atom && v != end.dummy && g.atom(v).is_dummy() == dummies
          && off_line(g.atom(v).coord, x, axis))
        return g.atom(v).coord;
  return std::nullopt;
}

// Smallest ring containing the bond, by atoms; empty if none.
std::vector<int> smallest_ring_with_bond(const Molecule &mol, int bond) {
  const RingInfo rings = perceive_rings(mol);
  int best = -1;
  for (int r = 0; r < static_cast<int>(rings.rings.size()); ++r) {
    const auto &bonds = rings.ring_bond_sets[r];
    if (!std::binary_search(bonds.begin(), bonds.end(), bond))
      continue;
    if (best < 0 || rings.rings[r].size() < rings.rings[best].size())
      best = r;
  }
  return best < 0 ? std::vector<int> {} : rings.rings[best];
}

Vec3 ring_centroid(const Molecule &mol, std::span<const int> ring) {
  Vec3 sum = Vec3::Zero();
  for (int v: ring)
    sum += mol.atom(v).coord;
  return sum / static_cast<double>(ring.size());
}

void check_clashes(const AssemblyState &state, const Molecule &product,
                   int first_new, double clash_distance) {
  if (clash_distance <= 0)
    return;
  const int n = product.num_atoms();
  for (int v = first_new; v < n; ++v) {
    const Vec3 &x = product.atom(v).coord;
    if (state.pocket) {
      for (const PocketAtom &p: state.pocket->atoms) {
        const double d = (p.coord - x).norm();
        if (d < clash_distance)
          fail(Reason::kClash,
               fmt::format("new atom {} is {:.3f} A from pocket atom {} {}{}",
                           v + 1, d, p.atom_name, p.residue_name,
                           p.residue_seq));
      }
    }
    for (int u = 0; u < first_new; ++u) {
      if (product.find_bond(u, v))
        continue;
      const double d = (product.atom(u).coord - x).norm();
      if (d < clash_distance)
        fail(Reason::kClash,
             fmt::format("new atom {} is {:.3f} A from ligand atom {}", v + 1,
                         d, u + 1));
    }
  }
}

void validate_product(const Molecule &product) {
  try {
    validate_molecule(product);
  } catch (const InvalidMoleculeError &e) {
    fail(Reason::kValence, e.what());
  }
}

AssemblyState attach_atoms(const AssemblyState &state,
                           const ConnectionSite &fragment_site,
                           const Motif &motif, const ConnectionSite &motif_site,
                           double torsion, const AttachOptions &options) {
  const AttachHints *hints = options.hints;
  const PartialLigand &lig = state.ligand;
  const Molecule &g = motif.graph;

  FragmentEnd fend = resolve_fragment_end(lig, fragment_site);
  MotifEnd mend = resolve_motif_end(motif, motif_site);
  if (hints && hints->fragment_direction)
    fend.direction = hints->fragment_direction->normalized();
  if (hints && hints->motif_direction)
    mend.direction = hints->motif_direction->normalized();

  const Vec3 &xf = lig.mol.atom(fend.atom).coord;
  const Vec3 &xr = g.atom(mend.atom).coord;
  const double length =
      hints && hints->bond_length
          ? *hints->bond_length
          : new_bond_length(lig.mol.atom(fend.atom).atomic_number,
                            g.atom(mend.atom).atomic_number);

  // Anchor frame: motif bond direction onto the reversed fragment direction,
  // anchor atom at the tabulated distance.
  RigidTransform t;
  t.rotation = Eigen::Quaterniond::FromTwoVectors(mend.direction,
                                                  -fend.direction)
                   .toRotationMatrix();
  t.translation = xf + length * fend.direction - t.rotation * xr;
  const Vec3 anchor = t.apply(xr);

  std::optional<Vec3> fref, mref;
  if (hints && hints->fragment_ref_point && hints->motif_ref_point) {
    fref = hints->fragment_ref_point;
    mref = hints->motif_ref_point;
  } else {
    fref = fragment_reference(lig, fend, fend.direction);
    mref = motif_reference(motif, mend, mend.direction);
  }

  const bool rotatable = fref.has_value() && mref.has_value();
  double recorded = 0;
  if (rotatable) {
    const double current = dihedral(*fref, xf, anchor, t.apply(*mref));
    t = axis_rotation(xf, anchor - xf, wrap_angle(torsion) - current) * t;
    recorded = wrap_angle(torsion);
  }

  AssemblyState next = state;
  Molecule &mol = next.ligand.mol;
  const int first_new = mol.num_atoms();
  std::vector<int> index(g.num_atoms(), -1);
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
  mol.add_bond(fend.atom, index[mend.atom], BondOrder::kSingle);

  if (fend.slot >= 0)
    next.ligand.slots.erase(next.ligand.slots.begin() + fend.slot);
  for (int v = 0; v < g.num_atoms(); ++v) {
    if (!g.atom(v).is_dummy() || v == mend.dummy)
      continue;
    next.ligand.slots.push_back(
        { index[g.neighbors(v)[0].atom], t.apply(g.atom(v).coord) });
  }

  check_clashes(state, mol, first_new, options.clash_distance);
  validate_product(mol);

  HistoryEntry entry;
  entry.motif_key = motif.key;
  entry.fragment_site = fragment_site;
  entry.motif_site = motif_site;
  entry.torsion = recorded;
  entry.rotatable = rotatable;
  entry.transform = t;
  next.history.push_back(std::move(entry));
  return next;
}

AssemblyState attach_bonds(const AssemblyState &state,
                           const ConnectionSite &fragment_site,
                           const Motif &motif, const ConnectionSite &motif_site,
                           const AttachOptions &options) {
  const AttachHints *hints = options.hints;
  const Molecule &lig = state.ligand.mol;
  const Molecule &g = motif.graph;
  const int m = fragment_site.atom, n = fragment_site.atom2;
  const int i = motif_site.atom, j = motif_site.atom2;

  auto in_range = [](int v, const Molecule &mol) {
    return v >= 0 && v < mol.num_atoms();
  };
  if (!in_range(m, lig) || !in_range(n, lig) || !in_range(i, g)
      || !in_range(j, g))
    fail(Reason::kInvalidSite, "bond site atom is out of range");
  const auto lig_bond = lig.find_bond(m, n);
  const auto motif_bond = g.find_bond(i, j);
  if (!lig_bond)
    fail(Reason::kInvalidSite,
         fmt::format("{} is not a ligand bond", describe(fragment_site)));
  if (!motif_bond)
    fail(Reason::kInvalidSite,
         fmt::format("{} is not a motif bond", describe(motif_site)));
  for (int v: { m, n })
    if (free_valence(lig, v) < 1)
      fail(Reason::kValence,
           fmt::format("fragment atom {} has no free valence", v + 1));
  for (int v: { i, j })
    if (free_valence(g, v) < 1)
      fail(Reason::kValence,
           fmt::format("motif atom {} has no free valence", v + 1));
  if (lig.bond(*lig_bond).order != g.bond(*motif_bond).order)
    fail(Reason::kMergeConflict, "fused bond orders differ");

  const std::vector<int> fring = smallest_ring_with_bond(lig, *lig_bond);
  const std::vector<int> mring = smallest_ring_with_bond(g, *motif_bond);
  if (fring.empty() || mring.empty())
    fail(Reason::kInvalidSite, "bond-bond sites must lie on rings");

  const Vec3 &xm = lig.atom(m).coord, &xn = lig.atom(n).coord;
  const Vec3 &xi = g.atom(i).coord, &xj = g.atom(j).coord;
  const Vec3 cm = ring_centroid(g, mring);

  Vec3 target;
  if (hints && hints->centroid_target) {
    target = *hints->centroid_target;
  } else {
    // Mirror the motif ring's offset from its bond to the far side of the
    // fragment bond, within the fragment ring's plane.
    const Vec3 mid_f = 0.5 * (xm + xn), e_f = (xn - xm).normalized();
    Vec3 p = ring_centroid(lig, fring) - mid_f;
    p -= p.dot(e_f) * e_f;
    const Vec3 mid_m = 0.5 * (xi + xj), e_m = (xj - xi).normalized();
    Vec3 q = cm - mid_m;
    const double along = q.dot(e_m);
    q -= along * e_m;
    if (p.norm() < 1e-9 || q.norm() < 1e-9)
      fail(Reason::kInvalidSite, "ring centroid lies on the fused bond");
    target = mid_f - q.norm() * p.normalized() + along * e_f;
  }

  RigidTransform t;
  try {
    const PointSet from { xi, xj, cm }, to { xm, xn, target };
    t = kabsch(from, to).transform;
  } catch (const GeometryError &e) {
    fail(Reason::kInvalidSite, e.what());
  }

  std::vector<int> index(g.num_atoms(), -1);
  std::vector<bool> merged_target(lig.num_atoms(), false);
  auto merge = [&](int motif_atom, int lig_atom) {
    if (!in_range(motif_atom, g) || !in_range(lig_atom, lig)
        || g.atom(motif_atom).is_dummy() || index[motif_atom] >= 0
        || merged_target[lig_atom])
      fail(Reason::kInvalidSite, "invalid merge pair");
    if (g.atom(motif_atom).atomic_number != lig.atom(lig_atom).atomic_number
        || g.atom(motif_atom).formal_charge != lig.atom(lig_atom).formal_charge)
      fail(Reason::kMergeConflict,
           fmt::format("merged atoms {} and {} differ in element or charge",
                       motif_atom + 1, lig_atom + 1));
    index[motif_atom] = lig_atom;
    merged_target[lig_atom] = true;
  };
  merge(i, m);
  merge(j, n);
  if (hints)
    for (const auto &[mv, lv]: hints->extra_merges)
      merge(mv, lv);

  AssemblyState next = state;
  Molecule &mol = next.ligand.mol;
  const int first_new = mol.num_atoms();
  for (int v = 0; v < g.num_atoms(); ++v) {
    if (index[v] >= 0 || g.atom(v).is_dummy())
      continue;
    Atom atom = g.atom(v);
    atom.coord = t.apply(atom.coord);
    index[v] = mol.add_atom(atom);
  }
  for (const Bond &b: g.bonds()) {
    if (g.atom(b.a).is_dummy() || g.atom(b.b).is_dummy())
      continue;
    const int u = index[b.a], v = index[b.b];
    if (const auto existing = mol.find_bond(u, v)) {
      if (mol.bond(*existing).order != b.order)
        fail(Reason::kMergeConflict,
             fmt::format("merged bond {}-{} has conflicting orders", u + 1,
                         v + 1));
      continue;
    }
    mol.add_bond(u, v, b.order);
  }
  for (int v = 0; v < g.num_atoms(); ++v)
    if (g.atom(v).is_dummy())
      next.ligand.slots.push_back(
          { index[g.neighbors(v)[0].atom], t.apply(g.atom(v).coord) });

  check_clashes(state, mol, first_new, options.clash_distance);
  validate_product(mol);

  HistoryEntry entry;
  entry.motif_key = motif.key;
  entry.fragment_site = fragment_site;
  entry.motif_site = motif_site;
  entry.transform = t;
  next.history.push_back(std::move(entry));
  return next;
}

}  // namespace

double new_bond_length(int z1, int z2) {
  const int a = std::min(z1, z2), b = std::max(z1, z2);
  if (a == kCarbon && b == kCarbon)
    return 1.51;
  if (a == kCarbon && b == kNitrogen)
    return 1.47;
  if (a == kCarbon && b == kOxygen)
    return 1.43;
  if (a == kCarbon && b == kSulfur)
    return 1.81;
  if (a == kNitrogen && b == kNitrogen)
    return 1.45;
  return 1.50;
}

AssemblyState attach(const AssemblyState &state,
                     const ConnectionSite &fragment_site, const Motif &motif,
                     const ConnectionSite &motif_site, double torsion,
                     const AttachOptions &options) {
  if (fragment_site.kind != motif_site.kind)
    fail(Reason::kKindMismatch,
         fmt::format("cannot connect {} to {}", describe(fragment_site),
                     describe(motif_site)));
  if (!std::isfinite(torsion))
    fail(Reason::kInvalidSite, "torsion must be finite");
  if (fragment_site.kind == SiteKind::kAtom)
    return attach_atoms(state, fragment_site, motif, motif_site, torsion,
                        options);
  return attach_bonds(state, fragment_site, motif, motif_site, options);
}

std::optional<double> measure_attach_torsion(const PartialLigand &ligand,
                                             const ConnectionSite &fragment_site,
                                             const Motif &motif,
                                             const ConnectionSite &motif_site) {
  if (fragment_site.kind != SiteKind::kAtom || motif_site.kind != SiteKind::kAtom)
    return std::nullopt;
  const FragmentEnd fend = resolve_fragment_end(ligand, fragment_site);
  const MotifEnd mend = resolve_motif_end(motif, motif_site);
  const Vec3 &xf = ligand.mol.atom(fend.atom).coord;
  const Vec3 &xr = motif.graph.atom(mend.atom).coord;
  const Vec3 axis = xr - xf;
  if (axis.norm() < 1e-9)
    return std::nullopt;

  const auto fref = fragment_reference(ligand, fend, axis);
  const auto mref = motif_reference(motif, mend, -axis);
  if (!fref || !mref)
    return std::nullopt;
  return dihedral(*fref, xf, xr, *mref);
}

}  // namespace confmotif
