//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "checks.h"
#include "confmotif/assemble/state.h"
#include "confmotif/connect/sites.h"
#include "confmotif/error.h"
#include "confmotif/motif/fragment.h"
#include "confmotif/motif/vocabulary.h"
#include "support.h"

namespace confmotif {
namespace {

int count_kind(const std::vector<ConnectionSite> &sites, SiteKind kind) {
  return static_cast<int>(std::count_if(
      sites.begin(), sites.end(), [&](const ConnectionSite &s) { return s.kind == kind; }));
}

Motif ethyl_chain() {
  // *-CH2-CH3
  Molecule g("ethyl");
  g.add_atom(kDummyAtomicNumber, Vec3(0, 0, 0));
  g.add_atom(kCarbon, Vec3(1.5, 0, 0));
  g.add_atom(kCarbon, Vec3(2.0, 1.43, 0));
  g.add_bond(0, 1, BondOrder::kSingle);
  g.add_bond(1, 2, BondOrder::kSingle);
  return make_motif(g, MotifKind::kChain);
}

TEST(FragmentSites, Benzene) {
  const PartialLigand lig { test::benzene(), {} };
  const auto sites = enumerate_ccs_fragment(lig);
  EXPECT_EQ(count_kind(sites, SiteKind::kAtom), 6);
  EXPECT_EQ(count_kind(sites, SiteKind::kBond), 12);
  std::set<std::pair<int, int>> directed;
  for (const auto &s: sites)
    if (s.kind == SiteKind::kBond)
      directed.insert({ s.atom, s.atom2 });
  EXPECT_EQ(directed.size(), 12u);
  EXPECT_TRUE(directed.count({ 0, 1 }) && directed.count({ 1, 0 }));
}

TEST(FragmentSites, FullySubstitutedRingIsEmpty) {
  Molecule m = test::benzene();
  for (int k = 0; k < 6; ++k) {
    const double t = k * std::numbers::pi / 3;
    const int c = m.add_atom(kCarbon, Vec3(2.9 * std::cos(t), 2.9 * std::sin(t), 0));
    m.add_bond(k, c, BondOrder::kSingle);
  }
  EXPECT_TRUE(enumerate_ccs_fragment(PartialLigand { m, {} }).empty());
}

TEST(FragmentSites, ChainExposesOnlyItsSlot) {
  const AssemblyState s = place_first_motif(nullptr, ethyl_chain(), Pose {}, 0.0);
  const auto sites = s.open_sites();
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].slot, 0);
  EXPECT_EQ(sites[0].atom, 0);
  EXPECT_EQ(s.ligand.mol.num_atoms(), 2);
}

TEST(MotifSites, Examples) {
  const auto chain = enumerate_ccs_motif(ethyl_chain());
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain[0].atom, 0);

  const auto benz = enumerate_ccs_motif(make_motif(test::benzene(), MotifKind::kRing));
  EXPECT_EQ(count_kind(benz, SiteKind::kAtom), 6);
  EXPECT_EQ(count_kind(benz, SiteKind::kBond), 12);

  const auto pyr = enumerate_ccs_motif(make_motif(test::pyridine(), MotifKind::kRing));
  EXPECT_EQ(count_kind(pyr, SiteKind::kAtom), 5);
  for (const auto &s: pyr)
    EXPECT_NE(s.atom, 0);
  // N has no free valence, so bonds touching it do not qualify.
  EXPECT_EQ(count_kind(pyr, SiteKind::kBond), 8);
}

TEST(Equivalence, ClassCounts) {
  const auto benz = make_entry(make_motif(test::benzene(), MotifKind::kRing));
  ASSERT_EQ(benz.classes.atom_classes.size(), 1u);
  ASSERT_EQ(benz.classes.bond_classes.size(), 1u);
  EXPECT_EQ(benz.classes.atom_classes[0].size(), 6u);
  EXPECT_EQ(benz.classes.bond_classes[0].size(), 12u);

  const auto pyr = make_entry(make_motif(test::pyridine(), MotifKind::kRing));
  ASSERT_EQ(pyr.classes.atom_classes.size(), 3u);
  std::multiset<std::size_t> sizes;
  for (const auto &c: pyr.classes.atom_classes)
    sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t> { 1, 2, 2 }));
  // Directed bonds C2->C3, C3->C2, C3->C4, C4->C3 are pairwise distinct.
  EXPECT_EQ(pyr.classes.bond_classes.size(), 4u);

  const auto ethyl = make_entry(ethyl_chain());
  EXPECT_EQ(ethyl.classes.num_classes(), 1);
}

TEST(Equivalence, ClassOfIsConsistent) {
  const Vocabulary v = extract_vocabulary(test::corpus());
  for (const auto &e: v.entries) {
    ASSERT_EQ(e.classes.class_of.size(), e.sites.size());
    std::vector<int> seen(e.classes.num_classes(), 0);
    for (int c: e.classes.class_of) {
      ASSERT_GE(c, 0);
      ++seen[c];
    }
    for (int c = 0; c < e.classes.num_classes(); ++c)
      EXPECT_GT(seen[c], 0);
    for (int r: e.classes.representatives())
      EXPECT_LT(r, static_cast<int>(e.sites.size()));
  }
}

TEST(Equivalence, RepresentativesStableUnderRenumbering) {
  std::mt19937_64 rng(8);
  for (const char *name: { "quinoline", "acetophenone", "nicotine", "indole" }) {
    for (const Fragment &f: fragment(test::named(name)).fragments) {
      const Motif &m = f.motif;
      const auto e = make_entry(m);
      std::vector<int> order(m.graph.num_atoms());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<int> inverse(order.size());
      for (std::size_t k = 0; k < order.size(); ++k)
        inverse[order[k]] = static_cast<int>(k);
      const auto p = make_entry(make_motif(permute_atoms(m.graph, order), m.kind));

      ASSERT_EQ(p.classes.num_classes(), e.classes.num_classes()) << name;
      // Representatives map to sites in the same orbit with equal marked keys.
      const auto er = e.classes.representatives(), pr = p.classes.representatives();
      for (std::size_t c = 0; c < er.size(); ++c)
        EXPECT_EQ(marked_key(m.graph, e.sites[er[c]]),
                  marked_key(p.motif.graph, p.sites[pr[c]]))
            << name;
    }
  }
}

TEST(Equivalence, RejectsForeignSites) {
  const Motif benz = make_motif(test::benzene(), MotifKind::kRing);
  const std::vector<ConnectionSite> bad { { SiteKind::kAtom, SiteHost::kMotif, 17, -1, -1 } };
  EXPECT_THROW(equivalence_classes(benz, bad), ContractError);
}

TEST(Equivalence, ReductionIsSound) {
  const check::Result r = check::rccs_soundness();
  EXPECT_TRUE(r.pass) << r.detail;
  RecordProperty("summary", r.detail);
}

}  // namespace
}  // namespace confmotif
