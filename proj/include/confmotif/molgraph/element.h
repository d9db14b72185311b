//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_MOLGRAPH_ELEMENT_H_
#define CONFMOTIF_MOLGRAPH_ELEMENT_H_

#include <optional>
#include <string_view>

namespace confmotif {

// Atomic number 0 is reserved for the dummy placeholder atom ('*').
inline constexpr int kDummyAtomicNumber = 0;
inline constexpr int kHydrogen = 1;
inline constexpr int kCarbon = 6;
inline constexpr int kNitrogen = 7;
inline constexpr int kOxygen = 8;
inline constexpr int kSulfur = 16;

struct ElementData {
  int atomic_number;
  std::string_view symbol;
  double weight;        // standard atomic weight, Da
  int nominal_valence;  // neutral maximum valence used for validity checks
};

const ElementData *find_element(int atomic_number);

// Case-sensitive symbol lookup ("Cl", not "CL"); "*" maps to the dummy atom.
const ElementData *find_element(std::string_view symbol);

// Case-insensitive lookup used by the PDB reader, which stores "CL" for Cl.
const ElementData *find_element_relaxed(std::string_view symbol);

std::string_view element_symbol(int atomic_number);

double atomic_weight(int atomic_number);

// Maximum number of bond-order units an atom may carry, charge adjusted.
//
//   C: 4 - |q|; N: 3 + q; O: 2 + q (O- = 1); S, Se: 6; P: 5; B: 3 - q;
//   halogens: 1 + q (clamped at 0); metals: group valence - q; dummy: 1.
int max_valence(int atomic_number, int formal_charge);

}  // namespace confmotif

#endif  // CONFMOTIF_MOLGRAPH_ELEMENT_H_
