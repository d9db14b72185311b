//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/connect/sites.h"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "confmotif/error.h"
#include "confmotif/molgraph/rings.h"

namespace confmotif {
namespace {

void append_ring_sites(const Molecule &mol, SiteHost host,
                       std::vector<ConnectionSite> &out) {
  const RingInfo rings = perceive_rings(mol);
  std::vector<bool> qualifies(mol.num_atoms(), false);
  for (int v = 0; v < mol.num_atoms(); ++v) {
    if (mol.atom(v).is_dummy() || !rings.is_ring_atom(v)
        || free_valence(mol, v) < 1)
      continue;
    qualifies[v] = true;
    out.push_back({ SiteKind::kAtom, host, v, -1, -1 });
  }

  std::vector<ConnectionSite> bonds;
  for (int b: rings.ring_bonds) {
    const Bond &bd = mol.bond(b);
    if (!qualifies[bd.a] || !qualifies[bd.b])
      continue;
    bonds.push_back({ SiteKind::kBond, host, bd.a, bd.b, -1 });
    bonds.push_back({ SiteKind::kBond, host, bd.b, bd.a, -1 });
  }
  std::sort(bonds.begin(), bonds.end());
  out.insert(out.end(), bonds.begin(), bonds.end());
}

constexpr int kFirstMark = 1;
constexpr int kSecondMark = 2;

}  // namespace

std::string describe(const ConnectionSite &site) {
  const char *host = site.host == SiteHost::kFragment ? "fragment" : "motif";
  if (site.kind == SiteKind::kBond)
    return fmt::format("{} bond {}->{}", host, site.atom + 1, site.atom2 + 1);
  if (site.slot >= 0)
    return fmt::format("{} slot {} on atom {}", host, site.slot, site.atom + 1);
  return fmt::format("{} atom {}", host, site.atom + 1);
}

std::vector<ConnectionSite> enumerate_ccs_fragment(const PartialLigand &ligand) {
  std::vector<ConnectionSite> out;
  for (int s = 0; s < static_cast<int>(ligand.slots.size()); ++s)
    out.push_back({ SiteKind::kAtom, SiteHost::kFragment, ligand.slots[s].atom,
                    -1, s });
  append_ring_sites(ligand.mol, SiteHost::kFragment, out);
  return out;
}

std::vector<ConnectionSite> enumerate_ccs_motif(const Motif &motif) {
  std::vector<ConnectionSite> out;
  if (motif.kind == MotifKind::kChain) {
    for (int v = 0; v < motif.graph.num_atoms(); ++v)
      if (motif.graph.atom(v).is_dummy())
        out.push_back({ SiteKind::kAtom, SiteHost::kMotif, v, -1, -1 });
    return out;
  }
  append_ring_sites(motif.graph, SiteHost::kMotif, out);
  return out;
}

CanonicalKey marked_key(const Molecule &graph, const ConnectionSite &site) {
  LabeledGraph g = labeled_graph(graph);
  g.labels[site.atom] = atom_label(graph.atom(site.atom), kFirstMark);
  if (site.kind == SiteKind::kBond)
    g.labels[site.atom2] = atom_label(graph.atom(site.atom2), kSecondMark);
  return canonical_key(g);
}

std::vector<int> EquivalenceClasses::representatives() const {
  std::vector<int> out = atom_representatives;
  out.insert(out.end(), bond_representatives.begin(),
             bond_representatives.end());
  return out;
}

EquivalenceClasses equivalence_classes(const Motif &motif,
                                       std::span<const ConnectionSite> sites) {
  const std::vector<int> rank = canonical_form(labeled_graph(motif.graph)).rank;
  auto site_rank = [&](const ConnectionSite &s) {
    return std::make_pair(rank[s.atom], s.atom2 < 0 ? -1 : rank[s.atom2]);
  };

  EquivalenceClasses out;
  out.class_of.assign(sites.size(), -1);

  for (SiteKind kind: { SiteKind::kAtom, SiteKind::kBond }) {
    std::map<CanonicalKey, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(sites.size()); ++i) {
      if (sites[i].kind != kind)
        continue;
      if (sites[i].atom < 0 || sites[i].atom >= motif.graph.num_atoms()
          || (kind == SiteKind::kBond
              && (sites[i].atom2 < 0
                  || sites[i].atom2 >= motif.graph.num_atoms())))
        throw ContractError(
            fmt::format("site {} is outside the motif", describe(sites[i])));
      groups[marked_key(motif.graph, sites[i])].push_back(i);
    }

    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> ordered;
    for (auto &[key, members]: groups) {
      const int rep = *std::min_element(
          members.begin(), members.end(), [&](int x, int y) {
            return site_rank(sites[x]) < site_rank(sites[y]);
          });
      // Representative first; members otherwise in site order.
      std::stable_partition(members.begin(), members.end(),
                            [&](int m) { return m == rep; });
      ordered.push_back({ site_rank(sites[rep]), std::move(members) });
    }
    std::sort(ordered.begin(), ordered.end());

    auto &classes = kind == SiteKind::kAtom ? out.atom_classes : out.bond_classes;
    auto &reps = kind == SiteKind::kAtom ? out.atom_representatives
                                         : out.bond_representatives;
    for (auto &[r, members]: ordered) {
      reps.push_back(members.front());
      classes.push_back(std::move(members));
    }
  }

  const int offset = static_cast<int>(out.atom_classes.size());
  for (int c = 0; c < static_cast<int>(out.atom_classes.size()); ++c)
    for (int i: out.atom_classes[c])
      out.class_of[i] = c;
  for (int c = 0; c < static_cast<int>(out.bond_classes.size()); ++c)
    for (int i: out.bond_classes[c])
      out.class_of[i] = offset + c;
  return out;
}

}  // namespace confmotif
