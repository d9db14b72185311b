//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/motif/reconstruct.h"

#include <algorithm>
#include <queue>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "confmotif/assemble/attach.h"
#include "confmotif/error.h"
#include "confmotif/molgraph/rings.h"

namespace confmotif {
namespace {

std::vector<int> real_sources(const Fragment &f) {
  std::vector<int> out;
  for (int v = 0; v < f.motif.graph.num_atoms(); ++v)
    if (!f.motif.graph.atom(v).is_dummy())
      out.push_back(f.source_atoms[v]);
  std::sort(out.begin(), out.end());
  return out;
}

int motif_index_of(const Fragment &f, int source, bool dummy) {
  for (int v = 0; v < f.motif.graph.num_atoms(); ++v)
    if (f.source_atoms[v] == source && f.motif.graph.atom(v).is_dummy() == dummy)
      return v;
  return -1;
}

Vec3 smallest_ring_centroid(const Molecule &g, int bond) {
  const RingInfo rings = perceive_rings(g);
  int best = -1;
  for (int r = 0; r < static_cast<int>(rings.rings.size()); ++r) {
    const auto &bonds = rings.ring_bond_sets[r];
    if (std::binary_search(bonds.begin(), bonds.end(), bond)
        && (best < 0 || rings.rings[r].size() < rings.rings[best].size()))
      best = r;
  }
  if (best < 0)
    throw Error("fused fragments do not share a ring bond");
  Vec3 sum = Vec3::Zero();
  for (int v: rings.rings[best])
    sum += g.atom(v).coord;
  return sum / static_cast<double>(rings.rings[best].size());
}

}  // namespace

MotifTree build_motif_tree(const FragmentationResult &result) {
  const int nf = static_cast<int>(result.fragments.size());
  MotifTree tree;
  tree.links.resize(nf);
  tree.owner.assign(result.source_atoms, -1);

  std::vector<std::vector<int>> real(nf);
  for (int f = 0; f < nf; ++f) {
    real[f] = real_sources(result.fragments[f]);
    for (int s: real[f]) {
      if (s < 0 || s >= result.source_atoms)
        throw Error("fragment refers to a missing source atom");
      if (tree.owner[s] < 0)
        tree.owner[s] = f;
    }
  }

  for (int k = 0; k < static_cast<int>(result.severed_bonds.size()); ++k) {
    const SeveredBond &sb = result.severed_bonds[k];
    const int fa = tree.owner[sb.a], fb = tree.owner[sb.b];
    if (fa < 0 || fb < 0 || fa == fb)
      throw Error(fmt::format("severed bond {}-{} does not join two fragments",
                              sb.a + 1, sb.b + 1));
    tree.links[fa].push_back({ fb, k });
    tree.links[fb].push_back({ fa, k });
  }
  for (int p = 0; p < nf; ++p) {
    for (int q = p + 1; q < nf; ++q) {
      std::vector<int> shared;
      std::set_intersection(real[p].begin(), real[p].end(), real[q].begin(),
                            real[q].end(), std::back_inserter(shared));
      if (shared.size() >= 2) {
        tree.links[p].push_back({ q, -1 });
        tree.links[q].push_back({ p, -1 });
      }
    }
  }
  for (auto &links: tree.links)
    std::sort(links.begin(), links.end(),
              [](const MotifTree::Link &x, const MotifTree::Link &y) {
                return std::tie(x.fragment, x.severed)
                       < std::tie(y.fragment, y.severed);
              });
  return tree;
}

BfsOrder bfs_order(const MotifTree &tree, int root) {
  BfsOrder out;
  std::vector<bool> seen(tree.links.size(), false);
  std::queue<int> queue;
  seen[root] = true;
  queue.push(root);
  out.order.push_back(root);
  out.parent.push_back({ -1, -1 });
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (const MotifTree::Link &link: tree.links[u]) {
      if (seen[link.fragment])
        continue;
      seen[link.fragment] = true;
      queue.push(link.fragment);
      out.order.push_back(link.fragment);
      out.parent.push_back({ u, link.severed });
    }
  }
  return out;
}

Replay::Replay(const FragmentationResult &result, int root)
    : result_(result) {
  if (result.fragments.empty())
    throw Error("nothing to reconstruct: no fragments");
  const int n = result.source_atoms;
  pos_.assign(n, Vec3::Zero());
  std::vector<bool> known(n, false);
  for (const Fragment &f: result.fragments) {
    if (f.source_atoms.size() != static_cast<std::size_t>(f.motif.graph.num_atoms()))
      throw Error("fragment atom map does not match its motif");
    for (int v = 0; v < f.motif.graph.num_atoms(); ++v) {
      if (f.source_atoms[v] < 0 || f.source_atoms[v] >= n)
        throw Error("fragment refers to a missing source atom");
      if (f.motif.graph.atom(v).is_dummy())
        continue;
      pos_[f.source_atoms[v]] = f.motif.graph.atom(v).coord;
      known[f.source_atoms[v]] = true;
    }
  }
  for (const SeveredBond &sb: result.severed_bonds)
    for (int v: { sb.a, sb.b, sb.ref_a, sb.ref_b })
      if (v < 0 || v >= n || !known[v])
        throw Error("severed bond refers to an unplaced atom");

  if (root < 0 || root >= static_cast<int>(result.fragments.size()))
    throw Error("root fragment out of range");
  bfs_ = bfs_order(build_motif_tree(result), root);
  if (bfs_.order.size() != result.fragments.size())
    throw Error("fragments do not form a connected motif tree");
  src_to_lig_.assign(n, -1);
}

void Replay::record_new_atoms(const Fragment &f) {
  for (int v = 0; v < f.motif.graph.num_atoms(); ++v) {
    const int s = f.source_atoms[v];
    if (f.motif.graph.atom(v).is_dummy() || src_to_lig_[s] >= 0)
      continue;
    src_to_lig_[s] = static_cast<int>(lig_src_.size());
    lig_src_.push_back(s);
  }
}

Replay::Step Replay::next_step() const {
  if (placed_ == 0 || done())
    throw Error("no pending connection");
  Step step;
  step.fragment = bfs_.order[placed_];
  const Fragment &unit = result_.fragments[step.fragment];
  const int severed = bfs_.parent[placed_].severed;

  if (severed >= 0) {
    const SeveredBond &sb = result_.severed_bonds[severed];
    const bool a_placed = src_to_lig_[sb.a] >= 0;
    const int p = a_placed ? sb.a : sb.b, q = a_placed ? sb.b : sb.a;
    const int ref_p = a_placed ? sb.ref_a : sb.ref_b;
    const int ref_q = a_placed ? sb.ref_b : sb.ref_a;
    if (src_to_lig_[p] < 0 || src_to_lig_[q] >= 0)
      throw Error("severed bond endpoints are inconsistent");

    step.fragment_site = { SiteKind::kAtom, SiteHost::kFragment, src_to_lig_[p],
                           -1, -1 };
    for (int s = 0; s < static_cast<int>(slot_src_.size()); ++s)
      if (slot_src_[s] == q && state_.ligand.slots[s].atom == step.fragment_site.atom)
        step.fragment_site.slot = s;
    const int motif_atom = unit.motif.kind == MotifKind::kChain
                               ? motif_index_of(unit, p, true)
                               : motif_index_of(unit, q, false);
    if (motif_atom < 0)
      throw Error("fragment lacks the atom of its severed bond");
    step.motif_site = { SiteKind::kAtom, SiteHost::kMotif, motif_atom, -1, -1 };

    step.hints.bond_length = sb.length;
    step.hints.fragment_direction = (pos_[q] - pos_[p]).normalized();
    step.hints.motif_direction = (pos_[p] - pos_[q]).normalized();
    step.hints.fragment_ref_point = pos_[ref_p];
    step.hints.motif_ref_point = pos_[ref_q];
    // dihedral(ref_a, a, b, ref_b) reads the same in either direction.
    step.torsion = sb.torsion;
    return step;
  }

  // Ring fusion: identify one shared bond, merge the other shared atoms.
  const Molecule &g = unit.motif.graph;
  int bond = -1;
  for (int b = 0; b < g.num_bonds() && bond < 0; ++b) {
    const int s1 = unit.source_atoms[g.bond(b).a];
    const int s2 = unit.source_atoms[g.bond(b).b];
    if (src_to_lig_[s1] >= 0 && src_to_lig_[s2] >= 0
        && state_.ligand.mol.find_bond(src_to_lig_[s1], src_to_lig_[s2]))
      bond = b;
  }
  if (bond < 0)
    throw Error("fused fragment shares no bond with the placed atoms");
  const int i = g.bond(bond).a, j = g.bond(bond).b;
  step.fragment_site = { SiteKind::kBond, SiteHost::kFragment,
                         src_to_lig_[unit.source_atoms[i]],
                         src_to_lig_[unit.source_atoms[j]], -1 };
  step.motif_site = { SiteKind::kBond, SiteHost::kMotif, i, j, -1 };
  for (int v = 0; v < g.num_atoms(); ++v) {
    const int s = unit.source_atoms[v];
    if (v != i && v != j && !g.atom(v).is_dummy() && src_to_lig_[s] >= 0)
      step.hints.extra_merges.push_back({ v, src_to_lig_[s] });
  }
  step.hints.centroid_target = smallest_ring_centroid(g, bond);
  return step;
}

void Replay::advance() {
  if (done())
    throw Error("replay is already complete");

  if (placed_ == 0) {
    const Fragment &root = result_.fragments[bfs_.order[0]];
    state_ = place_first_motif(nullptr, root.motif, Pose {}, 0.0);
    record_new_atoms(root);
    for (int v = 0; v < root.motif.graph.num_atoms(); ++v)
      if (root.motif.graph.atom(v).is_dummy())
        slot_src_.push_back(root.source_atoms[v]);
    ++placed_;
    return;
  }

  const Step step = next_step();
  const Fragment &unit = result_.fragments[step.fragment];
  AttachOptions options;
  options.clash_distance = 0;
  options.hints = &step.hints;
  state_ = attach(state_, step.fragment_site, unit.motif, step.motif_site,
                  step.torsion, options);

  if (step.fragment_site.slot >= 0)
    slot_src_.erase(slot_src_.begin() + step.fragment_site.slot);
  record_new_atoms(unit);
  const int consumed = step.fragment_site.kind == SiteKind::kAtom
                           ? step.motif_site.atom
                           : -1;
  for (int v = 0; v < unit.motif.graph.num_atoms(); ++v)
    if (unit.motif.graph.atom(v).is_dummy() && v != consumed)
      slot_src_.push_back(unit.source_atoms[v]);
  ++placed_;
}

Molecule Replay::molecule() const {
  if (!done())
    throw Error("replay is not complete");
  const int n = result_.source_atoms;
  std::vector<int> order(n);
  for (int s = 0; s < n; ++s) {
    if (src_to_lig_[s] < 0)
      throw Error(fmt::format("source atom {} was never placed", s + 1));
    order[s] = src_to_lig_[s];
  }
  Molecule out = permute_atoms(state_.ligand.mol, order);
  out.set_name(result_.fragments[bfs_.order[0]].motif.graph.name());
  return out;
}

Molecule reconstruct(const FragmentationResult &result) {
  Replay replay(result, 0);
  while (!replay.done())
    replay.advance();
  return replay.molecule();
}

}  // namespace confmotif
