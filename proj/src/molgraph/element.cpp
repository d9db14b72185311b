//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/molgraph/element.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <string>

namespace confmotif {
namespace {

// clang-format off
constexpr std::array kElements {
  ElementData { 0, "*",  0.0,      1 },
  ElementData { 1, "H",  1.008,    1 },
  ElementData { 2, "He", 4.0026,   0 },
  ElementData { 3, "Li", 6.94,     1 },
  ElementData { 4, "Be", 9.0122,   2 },
  ElementData { 5, "B",  10.81,    3 },
  ElementData { 6, "C",  12.011,   4 },
  ElementData { 7, "N",  14.007,   3 },
  ElementData { 8, "O",  15.999,   2 },
  ElementData { 9, "F",  18.998,   1 },
  ElementData { 10, "Ne", 20.180,  0 },
  ElementData { 11, "Na", 22.990,  1 },
  ElementData { 12, "Mg", 24.305,  2 },
  ElementData { 13, "Al", 26.982,  3 },
  ElementData { 14, "Si", 28.085,  4 },
  ElementData { 15, "P",  30.974,  5 },
  ElementData { 16, "S",  32.06,   6 },
  ElementData { 17, "Cl", 35.45,   1 },
  ElementData { 18, "Ar", 39.948,  0 },
  ElementData { 19, "K",  39.098,  1 },
  ElementData { 20, "Ca", 40.078,  2 },
  ElementData { 25, "Mn", 54.938,  2 },
  ElementData { 26, "Fe", 55.845,  3 },
  ElementData { 27, "Co", 58.933,  3 },
  ElementData { 28, "Ni", 58.693,  2 },
  ElementData { 29, "Cu", 63.546,  2 },
  ElementData { 30, "Zn", 65.38,   2 },
  ElementData { 33, "As", 74.922,  5 },
  ElementData { 34, "Se", 78.971,  6 },
  ElementData { 35, "Br", 79.904,  1 },
  ElementData { 53, "I",  126.90,  1 },
};
// clang-format on

bool is_halogen(int z) {
  return z == 9 || z == 17 || z == 35 || z == 53;
}

bool is_metal(int z) {
  return z == 3 || z == 4 || z == 11 || z == 12 || z == 13 || z == 19
         || z == 20 || (z >= 25 && z <= 30);
}

}  // namespace

const ElementData *find_element(int atomic_number) {
  auto it = std::find_if(kElements.begin(), kElements.end(),
                         [&](const ElementData &e) {
                           return e.atomic_number == atomic_number;
                         });
  return it == kElements.end() ? nullptr : &*it;
}

const ElementData *find_element(std::string_view symbol) {
  auto it = std::find_if(kElements.begin(), kElements.end(),
                         [&](const ElementData &e) {
                           return e.symbol == symbol;
                         });
  return it == kElements.end() ? nullptr : &*it;
}

const ElementData *find_element_relaxed(std::string_view symbol) {
  if (symbol.empty())
    return nullptr;

  std::string normalized(symbol);
  normalized[0] = static_cast<char>(std::toupper(normalized[0]));
  for (std::size_t i = 1; i < normalized.size(); ++i)
    normalized[i] = static_cast<char>(std::tolower(normalized[i]));
  return find_element(std::string_view(normalized));
}

std::string_view element_symbol(int atomic_number) {
  const ElementData *e = find_element(atomic_number);
  return e == nullptr ? std::string_view("?") : e->symbol;
}

double atomic_weight(int atomic_number) {
  const ElementData *e = find_element(atomic_number);
  return e == nullptr ? 0.0 : e->weight;
}

int max_valence(int atomic_number, int formal_charge) {
  const ElementData *e = find_element(atomic_number);
  if (e == nullptr)
    return 0;

  const int z = atomic_number;
  int valence = e->nominal_valence;
  if (z == kDummyAtomicNumber) {
    valence = 1;
  } else if (z == kCarbon || z == 14) {
    valence = 4 - std::abs(formal_charge);
  } else if (z == kNitrogen || z == kOxygen) {
    valence += formal_charge;
  } else if (z == 5) {
    valence -= formal_charge;
  } else if (is_halogen(z) || is_metal(z)) {
    valence = is_halogen(z) ? valence + formal_charge
                            : valence - std::abs(formal_charge);
  }
  return std::max(valence, 0);
}

}  // namespace confmotif
