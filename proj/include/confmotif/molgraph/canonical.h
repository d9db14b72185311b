//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_MOLGRAPH_CANONICAL_H_
#define CONFMOTIF_MOLGRAPH_CANONICAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "confmotif/molgraph/molecule.h"

namespace confmotif {

// Undirected graph with integer vertex and edge labels.
struct LabeledGraph {
  struct Edge {
    int a, b;
    std::int64_t label;
  };

  std::vector<std::int64_t> labels;
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(labels.size()); }
};

class CanonicalKey {
public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes): bytes_(std::move(bytes)) { }

  const std::string &bytes() const { return bytes_; }
  bool empty() const { return bytes_.empty(); }

  std::string hex() const;
  // Throws ParseError(…, 0) on odd length or non-hex digits.
  static CanonicalKey from_hex(std::string_view hex);

  friend bool operator==(const CanonicalKey &,
                         const CanonicalKey &) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey &a,
                                          const CanonicalKey &b) {
    return a.bytes_.compare(b.bytes_) <=> 0;
  }

private:
  std::string bytes_;
};

struct CanonicalForm {
  CanonicalKey key;
  // rank[v] = position of vertex v in the canonical order.
  std::vector<int> rank;
};

// Color refinement with individualization backtracking; the canonical order
// is the one giving the lexicographically smallest certificate. Automorphisms
// found along the way prune equivalent branches.
CanonicalForm canonical_form(const LabeledGraph &graph);

inline CanonicalKey canonical_key(const LabeledGraph &graph) {
  return canonical_form(graph).key;
}

// Atom label from (atomic number, charge); dummies all share one label.
// `mark` distinguishes marked atoms (0 = unmarked).
std::int64_t atom_label(const Atom &atom, int mark = 0);

// Labeled graph of a molecule: atom_label per atom, bond order per edge.
LabeledGraph labeled_graph(const Molecule &mol);

CanonicalKey canonical_key(const Molecule &mol);

}  // namespace confmotif

#endif  // CONFMOTIF_MOLGRAPH_CANONICAL_H_
