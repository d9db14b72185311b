//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "confmotif/error.h"
#include "confmotif/molgraph/canonical.h"
#include "confmotif/molgraph/molecule.h"
#include "confmotif/molgraph/pdb.h"
#include "confmotif/molgraph/rings.h"
#include "confmotif/molgraph/sdf.h"
#include "oracles.h"
#include "support.h"

namespace confmotif {
namespace {

const char *const kBenzeneMol = R"(benzene
  test

  6  6  0  0  0  0  0  0  0  0999 V2000
    1.3900    0.0000    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
    0.6950    1.2038    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
   -0.6950    1.2038    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
   -1.3900    0.0000    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
   -0.6950   -1.2038    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
    0.6950   -1.2038    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
  1  2  4  0
  2  3  4  0
  3  4  4  0
  4  5  4  0
  5  6  4  0
  6  1  4  0
M  END
)";

// Sodium acetate drawn as two ions in one record.
const char *const kSaltMol = R"(salt
  test

  5  3  0  0  0  0  0  0  0  0999 V2000
    0.0000    0.0000    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
    1.5000    0.0000    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0
    2.2000    1.0000    0.0000 O   0  0  0  0  0  0  0  0  0  0  0  0
    2.2000   -1.0000    0.0000 O   0  5  0  0  0  0  0  0  0  0  0  0
    5.0000    0.0000    0.0000 Na  0  3  0  0  0  0  0  0  0  0  0  0
  1  2  1  0
  2  3  2  0
  2  4  1  0
M  CHG  2   4  -1   5   1
M  END
$$$$
)";

std::string butane_with_hydrogens() {
  std::string text = "butane\n  test\n\n 14 13  0  0  0  0  0  0  0  0999 V2000\n";
  auto atom = [&](double x, double y, double z, const char *sym) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "%10.4f%10.4f%10.4f %-3s 0  0  0  0  0  0  0  0  0  0  0  0\n",
                  x, y, z, sym);
    text += buf;
  };
  atom(0, 0, 0, "C");
  atom(1.53, 0, 0, "C");
  atom(2.04, 1.44, 0, "C");
  atom(3.57, 1.44, 0, "C");
  // Ten hydrogens: 3 + 2 + 2 + 3.
  const int owner[] = { 1, 1, 1, 2, 2, 3, 3, 4, 4, 4 };
  for (int k = 0; k < 10; ++k)
    atom(k * 0.3, -1.0, 0.5 * k, "H");
  auto bond = [&](int a, int b) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%3d%3d  1  0\n", a, b);
    text += buf;
  };
  bond(1, 2);
  bond(2, 3);
  bond(3, 4);
  for (int k = 0; k < 10; ++k)
    bond(owner[k], 5 + k);
  text += "M  END\n$$$$\n";
  return text;
}

TEST(Sdf, ParsesBenzeneBlock) {
  const auto mols = parse_sdf(kBenzeneMol);
  ASSERT_EQ(mols.size(), 1u);
  EXPECT_EQ(mols[0].num_atoms(), 6);
  EXPECT_EQ(mols[0].num_bonds(), 6);
  EXPECT_EQ(mols[0].name(), "benzene");
}

TEST(Sdf, SplitsSaltIntoComponents) {
  const auto records = parse_sdf_records(kSaltMol);
  ASSERT_EQ(records.size(), 1u);
  ASSERT_EQ(records[0].size(), 2u);
  EXPECT_EQ(records[0][0].num_atoms(), 4);
  EXPECT_EQ(records[0][1].num_atoms(), 1);
  EXPECT_EQ(records[0][0].atom(3).formal_charge, -1);
  EXPECT_EQ(records[0][1].atom(0).formal_charge, 1);
}

TEST(Sdf, StripsHydrogensIntoFreeValence) {
  const auto mols = parse_sdf(butane_with_hydrogens());
  ASSERT_EQ(mols.size(), 1u);
  const Molecule &m = mols[0];
  EXPECT_EQ(m.num_atoms(), 4);
  EXPECT_EQ(free_valence(m, 0), 3);
  EXPECT_EQ(free_valence(m, 3), 3);
  EXPECT_EQ(free_valence(m, 1), 2);
}

void expect_parse_error_at(const std::string &text, std::size_t line) {
  try {
    parse_sdf(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), line) << e.what();
  }
}

TEST(Sdf, ReportsLineNumbers) {
  std::string bad_counts = kBenzeneMol;
  bad_counts.replace(bad_counts.find("  6  6"), 6, "  x  y");
  expect_parse_error_at(bad_counts, 4);

  std::string bad_bond = kBenzeneMol;
  bad_bond.replace(bad_bond.find("  6  1  4"), 9, "  6  9  4");
  expect_parse_error_at(bad_bond, 16);

  std::string bad_element = kBenzeneMol;
  bad_element.replace(bad_element.find(" C "), 3, " Xx");
  expect_parse_error_at(bad_element, 5);
}

TEST(Sdf, RejectsValenceOverflowNamingTheAtom) {
  std::string text = kBenzeneMol;
  // Oxygen with two aromatic bonds carries 3 > 2 + 0.5.
  const auto second = text.find(" C ", text.find(" C ") + 1);
  text.replace(second, 3, " O ");
  try {
    parse_sdf(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("atom 2"), std::string::npos)
        << e.what();
  }
}

TEST(Sdf, WriterFormat) {
  EXPECT_EQ(write_sdf({}), "");
  const auto mols = parse_sdf(kBenzeneMol);
  const std::string out = write_sdf(mols);
  EXPECT_EQ(out.substr(out.find('\n', out.find('\n', out.find('\n') + 1) + 1) + 1, 6),
            "  6  6");
  EXPECT_NE(out.find("    1.3900    0.0000    0.0000 C "), std::string::npos);
}

TEST(Sdf, RejectsOversizedMolecules) {
  Molecule big("big");
  for (int i = 0; i < 1000; ++i)
    big.add_atom(kCarbon, Vec3(i * 1.5, 0, 0));
  for (int i = 0; i + 1 < 1000; ++i)
    big.add_bond(i, i + 1, BondOrder::kSingle);
  const std::vector<Molecule> one { big };
  EXPECT_THROW(write_sdf(one), SerializationError);
}

TEST(Sdf, CorpusRoundTripIsExact) {
  const auto &mols = test::corpus();
  ASSERT_EQ(mols.size(), 50u);
  const auto back = parse_sdf(write_sdf(mols));
  ASSERT_EQ(back.size(), mols.size());
  for (std::size_t k = 0; k < mols.size(); ++k) {
    ASSERT_EQ(back[k].num_atoms(), mols[k].num_atoms());
    EXPECT_TRUE(oracle::isomorphic(back[k], mols[k])) << mols[k].name();
    for (int i = 0; i < mols[k].num_atoms(); ++i) {
      EXPECT_LE((back[k].atom(i).coord - mols[k].atom(i).coord).cwiseAbs().maxCoeff(),
                1e-4 + 1e-12);
      EXPECT_EQ(back[k].atom(i).formal_charge, mols[k].atom(i).formal_charge);
    }
    for (int b = 0; b < mols[k].num_bonds(); ++b) {
      EXPECT_EQ(back[k].bond(b).a, mols[k].bond(b).a);
      EXPECT_EQ(back[k].bond(b).order, mols[k].bond(b).order);
    }
  }
}

TEST(Pdb, SingleBackboneAtom) {
  const Pocket p = parse_pocket_pdb(
      "ATOM      2  CA  ALA A   1      11.104   6.134  -6.504  1.00  0.00           C\n");
  ASSERT_EQ(p.atoms.size(), 1u);
  EXPECT_TRUE(p.atoms[0].is_backbone);
  EXPECT_EQ(p.atoms[0].atomic_number, kCarbon);
  EXPECT_EQ(p.atoms[0].residue_name, "ALA");
  EXPECT_EQ(p.atoms[0].residue_seq, 1);
  EXPECT_EQ(p.atoms[0].chain_id, 'A');
  EXPECT_NEAR(p.atoms[0].coord.z(), -6.504, 1e-12);
}

TEST(Pdb, ExcludesWatersAndHydrogens) {
  const Pocket p = parse_pocket_pdb(
      "ATOM      1  CB  SER A   5       1.000   2.000   3.000  1.00  0.00           C\n"
      "ATOM      2  HB2 SER A   5       1.500   2.000   3.000  1.00  0.00           H\n"
      "HETATM    3  O   HOH A 101       9.000   9.000   9.000  1.00  0.00           O\n");
  ASSERT_EQ(p.atoms.size(), 1u);
  EXPECT_FALSE(p.atoms[0].is_backbone);
  EXPECT_THROW(parse_pocket_pdb("REMARK nothing here\n"), ParseError);
}

TEST(Pdb, FixtureCountMatchesLineCount) {
  std::ifstream in(test::data_path("pocket.pdb"));
  std::size_t expected = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("ATOM", 0) != 0)
      continue;
    std::string element = line.size() >= 78 ? line.substr(76, 2) : "";
    element.erase(std::remove(element.begin(), element.end(), ' '), element.end());
    expected += element != "H";
  }
  EXPECT_GT(expected, 0u);
  EXPECT_EQ(test::fixture_pocket().atoms.size(), expected);
}

TEST(Rings, SmallCases) {
  EXPECT_TRUE(perceive_rings(test::butane(1.0)).empty());

  const RingInfo benz = perceive_rings(test::benzene());
  ASSERT_EQ(benz.rings.size(), 1u);
  EXPECT_EQ(benz.rings[0].size(), 6u);
  EXPECT_EQ(benz.fused_components.size(), 1u);

  const Molecule naph = test::named("naphthalene");
  const RingInfo ri = perceive_rings(naph);
  ASSERT_EQ(ri.rings.size(), 2u);
  EXPECT_EQ(ri.rings[0].size(), 6u);
  EXPECT_EQ(ri.rings[1].size(), 6u);
  std::vector<int> shared;
  std::set_intersection(ri.ring_bond_sets[0].begin(), ri.ring_bond_sets[0].end(),
                        ri.ring_bond_sets[1].begin(), ri.ring_bond_sets[1].end(),
                        std::back_inserter(shared));
  EXPECT_EQ(shared.size(), 1u);
  EXPECT_EQ(ri.fused_components.size(), 1u);
  EXPECT_EQ(ri.fused_components[0].size(), 10u);
  // Exhaustive enumeration: two hexagons and the 10-membered perimeter.
  EXPECT_EQ(oracle::simple_cycles(naph).size(), 3u);
  EXPECT_EQ(oracle::minimum_cycle_basis_sizes(naph), (std::vector<int> { 6, 6 }));
}

TEST(Rings, CorpusMatchesOracles) {
  for (const Molecule &m: test::corpus()) {
    const RingInfo ri = perceive_rings(m);
    EXPECT_EQ(static_cast<int>(ri.rings.size()), m.num_bonds() - m.num_atoms() + 1)
        << m.name();

    std::vector<int> sizes;
    for (const auto &ring: ri.rings) {
      sizes.push_back(static_cast<int>(ring.size()));
      // Simple cycle: distinct atoms, consecutive atoms bonded.
      std::vector<int> sorted = ring;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_TRUE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
      for (std::size_t k = 0; k < ring.size(); ++k)
        EXPECT_TRUE(m.find_bond(ring[k], ring[(k + 1) % ring.size()]).has_value())
            << m.name();
    }
    EXPECT_EQ(sizes, oracle::minimum_cycle_basis_sizes(m)) << m.name();
    EXPECT_EQ(find_bridges(m), oracle::bridges(m)) << m.name();

    // Ring bonds are exactly the non-bridges.
    std::vector<int> non_bridges;
    const auto br = find_bridges(m);
    for (int b = 0; b < m.num_bonds(); ++b)
      if (!std::binary_search(br.begin(), br.end(), b))
        non_bridges.push_back(b);
    EXPECT_EQ(ri.ring_bonds, non_bridges) << m.name();
  }
}

TEST(Valence, FreeValenceExamples) {
  EXPECT_EQ(free_valence(test::benzene(), 0), 1);
  EXPECT_EQ(free_valence(test::pyridine(), 0), 0);
  Molecule methane;
  methane.add_atom(kCarbon, Vec3::Zero());
  EXPECT_EQ(free_valence(methane, 0), 4);
  for (const Molecule &m: test::corpus())
    for (int i = 0; i < m.num_atoms(); ++i)
      EXPECT_GE(free_valence(m, i), 0);
}

TEST(Valence, MolecularWeightExamples) {
  EXPECT_NEAR(molecular_weight(test::benzene()), 6 * 12.011 + 6 * 1.008, 1e-9);
  EXPECT_NEAR(molecular_weight(test::benzene()), 78.11, 0.01);
  Molecule methane;
  methane.add_atom(kCarbon, Vec3::Zero());
  EXPECT_NEAR(molecular_weight(methane), 16.04, 0.01);
  Molecule ammonia;
  ammonia.add_atom(kNitrogen, Vec3::Zero());
  EXPECT_NEAR(molecular_weight(ammonia), 17.03, 0.01);
}

TEST(Valence, ValidateNamesOffendingAtom) {
  Molecule m = test::butane(1.0);
  m.set_bond_order(1, BondOrder::kTriple);
  m.set_bond_order(0, BondOrder::kDouble);
  try {
    validate_molecule(m);
    FAIL();
  } catch (const InvalidMoleculeError &e) {
    EXPECT_NE(std::string(e.what()).find("atom 2"), std::string::npos) << e.what();
  }
}

Molecule shuffled(const Molecule &m, std::mt19937_64 &rng) {
  std::vector<int> order(m.num_atoms());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return permute_atoms(m, order);
}

TEST(Canonical, BasicExamples) {
  const Molecule benz = test::benzene();
  std::mt19937_64 rng(5);
  EXPECT_EQ(canonical_key(benz), canonical_key(shuffled(benz, rng)));
  EXPECT_NE(canonical_key(benz), canonical_key(test::pyridine()));

  const CanonicalKey key = canonical_key(test::pyridine());
  EXPECT_EQ(CanonicalKey::from_hex(key.hex()), key);
  EXPECT_THROW(CanonicalKey::from_hex("abc"), ParseError);
  EXPECT_THROW(CanonicalKey::from_hex("zz"), ParseError);
}

TEST(Canonical, InvariantUnderPermutation) {
  std::mt19937_64 rng(11);
  const auto &mols = test::corpus();
  for (const Molecule &m: mols) {
    const CanonicalKey key = canonical_key(m);
    const int trials = m.name() == "adamantane" || m.name() == "naphthalene" ? 1000 : 20;
    for (int t = 0; t < trials; ++t)
      ASSERT_EQ(canonical_key(shuffled(m, rng)), key) << m.name();
  }
}

TEST(Canonical, CorpusKeysAgreeWithIsomorphismOracle) {
  const auto &mols = test::corpus();
  std::vector<CanonicalKey> keys;
  for (const Molecule &m: mols)
    keys.push_back(canonical_key(m));
  for (std::size_t i = 0; i < mols.size(); ++i)
    for (std::size_t j = i + 1; j < mols.size(); ++j)
      EXPECT_EQ(keys[i] == keys[j], oracle::isomorphic(mols[i], mols[j]))
          << mols[i].name() << " vs " << mols[j].name();
}

// Every connected graph on 1-4 vertices with C/N vertex labels.
std::vector<LabeledGraph> small_graphs() {
  std::vector<LabeledGraph> out;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        pairs.push_back({ a, b });
    for (int mask = 0; mask < (1 << pairs.size()); ++mask) {
      for (int labels = 0; labels < (1 << n); ++labels) {
        LabeledGraph g;
        for (int v = 0; v < n; ++v)
          g.labels.push_back((labels >> v) & 1 ? kNitrogen : kCarbon);
        for (std::size_t e = 0; e < pairs.size(); ++e)
          if (mask >> e & 1)
            g.edges.push_back({ pairs[e].first, pairs[e].second, 1 });
        // Connectivity by union-find.
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
          return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (const auto &e: g.edges)
          parent[find(e.a)] = find(e.b);
        int roots = 0;
        for (int v = 0; v < n; ++v)
          roots += find(v) == v;
        if (roots == 1)
          out.push_back(std::move(g));
      }
    }
  }
  return out;
}

TEST(Canonical, SmallGraphsMatchBruteForceClasses) {
  const std::vector<LabeledGraph> graphs = small_graphs();
  // Isomorphism classes by pairwise oracle comparison.
  std::vector<int> cls(graphs.size(), -1);
  int num_classes = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (cls[i] >= 0)
      continue;
    cls[i] = num_classes++;
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      if (cls[j] < 0 && oracle::isomorphic(graphs[i], graphs[j]))
        cls[j] = cls[i];
  }
  EXPECT_EQ(num_classes, 65);

  std::vector<CanonicalKey> keys;
  for (const auto &g: graphs)
    keys.push_back(canonical_key(g));
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      ASSERT_EQ(keys[i] == keys[j], cls[i] == cls[j]) << i << " " << j;
}

TEST(Canonical, RanksFormAPermutation) {
  const CanonicalForm form = canonical_form(labeled_graph(test::named("indole")));
  std::vector<int> sorted = form.rank;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < static_cast<int>(sorted.size()); ++k)
    EXPECT_EQ(sorted[k], k);
}

}  // namespace
}  // namespace confmotif
