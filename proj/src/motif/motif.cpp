//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/motif/motif.h"

#include <fmt/format.h>

#include "confmotif/error.h"

namespace confmotif {

std::string_view to_string(MotifKind kind) {
  return kind == MotifKind::kRing ? "ring" : "chain";
}

MotifKind parse_motif_kind(std::string_view text) {
  if (text == "ring")
    return MotifKind::kRing;
  if (text == "chain")
    return MotifKind::kChain;
  throw ParseError(fmt::format("unknown motif kind '{}'", text), 0);
}

int Motif::num_heavy_atoms() const {
  int n = 0;
  for (const Atom &a: graph.atoms())
    n += a.is_dummy() ? 0 : 1;
  return n;
}

Motif make_motif(Molecule graph, MotifKind kind, long frequency) {
  Motif motif;
  motif.key = canonical_key(graph);
  motif.graph = std::move(graph);
  motif.kind = kind;
  motif.frequency = frequency;
  return motif;
}

void validate_motif(const Motif &motif) {
  const Molecule &g = motif.graph;
  if (g.empty())
    throw InvalidMoleculeError("motif has no atoms");

  for (int i = 0; i < g.num_atoms(); ++i) {
    if (!g.atom(i).is_dummy())
      continue;
    if (motif.kind == MotifKind::kRing)
      throw InvalidMoleculeError(
          fmt::format("ring motif carries dummy atom {}", i + 1));
    if (g.degree(i) != 1 || g.atom(g.neighbors(i)[0].atom).is_dummy())
      throw InvalidMoleculeError(fmt::format(
          "dummy atom {} must have exactly one non-dummy neighbor", i + 1));
  }

  for (const Bond &b: g.bonds()) {
    const double len = (g.atom(b.a).coord - g.atom(b.b).coord).norm();
    if (len < 0.9 || len > 2.0)
      throw InvalidMoleculeError(fmt::format(
          "motif bond {}-{} has length {:.3f} A outside [0.9, 2.0]", b.a + 1,
          b.b + 1, len));
  }

  for (int i = 0; i < g.num_atoms(); ++i)
    if (!valence_ok(g, i))
      throw InvalidMoleculeError(
          fmt::format("motif atom {} exceeds its maximum valence", i + 1));
}

}  // namespace confmotif
