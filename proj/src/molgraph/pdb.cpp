//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/molgraph/pdb.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "confmotif/error.h"
#include "confmotif/molgraph/element.h"
#include "confmotif/molgraph/sdf.h"

namespace confmotif {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view column(std::string_view line, std::size_t begin,
                        std::size_t end) {
  if (begin >= line.size())
    return {};
  return line.substr(begin, std::min(end, line.size()) - begin);
}

bool parse_double(std::string_view text, double &value) {
  text = trim(text);
  if (text.empty())
    return false;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

// Element from columns 77-78, falling back to the atom name's leading letters.
int pdb_element(std::string_view line, std::string_view atom_name) {
  std::string_view symbol = trim(column(line, 76, 78));
  if (!symbol.empty()) {
    if (const ElementData *e = find_element_relaxed(symbol))
      return e->atomic_number;
  }

  std::string letters;
  for (char c: atom_name) {
    if (std::isalpha(static_cast<unsigned char>(c)))
      letters += c;
    else if (!letters.empty())
      break;
  }
  if (letters.empty())
    return -1;
  // Atom names start with the element; two-letter elements are rare in
  // proteins, so only the first letter is used unless it is unknown.
  if (const ElementData *e = find_element_relaxed(letters.substr(0, 1)))
    return e->atomic_number;
  if (const ElementData *e = find_element_relaxed(letters.substr(0, 2)))
    return e->atomic_number;
  return -1;
}

bool is_water(std::string_view resname) {
  return resname == "HOH" || resname == "WAT" || resname == "DOD"
         || resname == "H2O";
}

}  // namespace

PointSet Pocket::coordinates() const {
  PointSet coords;
  coords.reserve(atoms.size());
  for (const PocketAtom &a: atoms)
    coords.push_back(a.coord);
  return coords;
}

Vec3 Pocket::centroid() const {
  Vec3 sum = Vec3::Zero();
  for (const PocketAtom &a: atoms)
    sum += a.coord;
  return atoms.empty() ? sum : Vec3(sum / static_cast<double>(atoms.size()));
}

Pocket parse_pocket_pdb(std::string_view text) {
  Pocket pocket;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (line.rfind("ATOM", 0) != 0 && line.rfind("HETATM", 0) != 0)
      continue;

    const std::string_view resname = trim(column(line, 17, 20));
    if (is_water(resname))
      continue;

    const std::string_view name = trim(column(line, 12, 16));
    double x, y, z;
    if (!parse_double(column(line, 30, 38), x)
        || !parse_double(column(line, 38, 46), y)
        || !parse_double(column(line, 46, 54), z))
      throw ParseError("malformed coordinates in ATOM/HETATM record", line_no);
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
      throw ParseError("non-finite coordinate", line_no);

    const int z_number = pdb_element(line, name);
    if (z_number < 0)
      throw ParseError(fmt::format("cannot determine element of atom '{}'",
                                   name),
                       line_no);
    if (z_number == kHydrogen)
      continue;

    int seq = 0;
    const std::string_view seq_text = trim(column(line, 22, 26));
    std::from_chars(seq_text.data(), seq_text.data() + seq_text.size(), seq);
    const std::string_view chain = column(line, 21, 22);

    pocket.atoms.push_back({
        z_number,
        Vec3(x, y, z),
        std::string(name),
        std::string(resname),
        seq,
        chain.empty() ? ' ' : chain.front(),
        name == "N" || name == "CA" || name == "C" || name == "O",
    });
  }

  if (pocket.atoms.empty())
    throw ParseError("no parsable ATOM/HETATM heavy-atom records", 0);
  return pocket;
}

Pocket read_pocket_file(const std::filesystem::path &path) {
  return parse_pocket_pdb(read_text_file(path));
}

}  // namespace confmotif
