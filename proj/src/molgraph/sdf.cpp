//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/molgraph/sdf.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "confmotif/error.h"

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
                        std::size_t width) {
  if (begin >= line.size())
    return {};
  return line.substr(begin, std::min(width, line.size() - begin));
}

template <class T>
bool parse_number(std::string_view text, T &value) {
  text = trim(text);
  if (text.empty())
    return false;
  if (text.front() == '+')
    text.remove_prefix(1);
  const auto *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

class LineReader {
public:
  explicit LineReader(std::string_view text): text_(text) { }

  bool next(std::string_view &line) {
    if (pos_ >= text_.size())
      return false;
    auto end = text_.find('\n', pos_);
    if (end == std::string_view::npos)
      end = text_.size();
    line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    pos_ = end + 1;
    ++line_no_;
    return true;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t line_no() const { return line_no_; }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

struct RawAtom {
  int atomic_number;
  int charge;
  Vec3 coord;
  std::size_t line;
};

int charge_from_code(int code) {
  switch (code) {
  case 1:
    return 3;
  case 2:
    return 2;
  case 3:
    return 1;
  case 5:
    return -1;
  case 6:
    return -2;
  case 7:
    return -3;
  default:
    return 0;
  }
}

int code_from_charge(int charge) {
  switch (charge) {
  case 3:
    return 1;
  case 2:
    return 2;
  case 1:
    return 3;
  case -1:
    return 5;
  case -2:
    return 6;
  case -3:
    return 7;
  default:
    return 0;
  }
}

int atomic_number_for(std::string_view symbol, std::size_t line) {
  if (symbol == "D" || symbol == "T")
    return kHydrogen;
  const ElementData *e = find_element(symbol);
  if (e == nullptr)
    throw ParseError(fmt::format("unknown element symbol '{}'", symbol), line);
  return e->atomic_number;
}

void read_counts(std::string_view line, std::size_t line_no, int &natoms,
                 int &nbonds) {
  if (line.find("V3000") != std::string_view::npos)
    throw ParseError("V3000 records are not supported", line_no);

  bool ok = parse_number(column(line, 0, 3), natoms)
            && parse_number(column(line, 3, 3), nbonds);
  if (!ok) {
    std::istringstream in { std::string(line) };
    ok = static_cast<bool>(in >> natoms >> nbonds);
  }
  if (!ok || natoms < 0 || nbonds < 0)
    throw ParseError("malformed counts line", line_no);
}

RawAtom read_atom(std::string_view line, std::size_t line_no) {
  RawAtom atom { 0, 0, Vec3::Zero(), line_no };
  double x, y, z;
  std::string_view symbol = trim(column(line, 31, 3));
  if (!parse_number(column(line, 0, 10), x)
      || !parse_number(column(line, 10, 10), y)
      || !parse_number(column(line, 20, 10), z) || symbol.empty())
    throw ParseError("malformed atom line", line_no);
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
    throw ParseError("non-finite coordinate", line_no);

  atom.coord = Vec3(x, y, z);
  atom.atomic_number = atomic_number_for(symbol, line_no);
  int code = 0;
  if (parse_number(column(line, 36, 3), code))
    atom.charge = charge_from_code(code);
  return atom;
}

std::vector<Molecule> read_record(LineReader &reader, std::string_view name) {
  std::string_view line;
  for (int i = 0; i < 2; ++i)
    if (!reader.next(line))
      throw ParseError("truncated header block", reader.line_no());

  if (!reader.next(line))
    throw ParseError("missing counts line", reader.line_no());
  int natoms = 0, nbonds = 0;
  read_counts(line, reader.line_no(), natoms, nbonds);

  std::vector<RawAtom> raw;
  raw.reserve(natoms);
  for (int i = 0; i < natoms; ++i) {
    if (!reader.next(line))
      throw ParseError("truncated atom block", reader.line_no());
    raw.push_back(read_atom(line, reader.line_no()));
  }

  struct RawBond {
    int a, b;
    BondOrder order;
    std::size_t line;
  };
  std::vector<RawBond> raw_bonds;
  for (int i = 0; i < nbonds; ++i) {
    if (!reader.next(line))
      throw ParseError("truncated bond block", reader.line_no());
    int a = 0, b = 0, type = 0;
    if (!parse_number(column(line, 0, 3), a)
        || !parse_number(column(line, 3, 3), b)
        || !parse_number(column(line, 6, 3), type))
      throw ParseError("malformed bond line", reader.line_no());
    if (a < 1 || b < 1 || a > natoms || b > natoms)
      throw ParseError(
          fmt::format("bond atom index out of range ({} {})", a, b),
          reader.line_no());
    if (type < 1 || type > 4)
      throw ParseError(fmt::format("unsupported bond type {}", type),
                       reader.line_no());
    raw_bonds.push_back(
        { a - 1, b - 1, static_cast<BondOrder>(type), reader.line_no() });
  }

  bool charges_reset = false;
  bool ended = false;
  while (reader.next(line)) {
    if (line.rfind("$$$$", 0) == 0)
      throw ParseError("record ended before M  END", reader.line_no());
    if (line.rfind("M  END", 0) == 0) {
      ended = true;
      break;
    }
    if (line.rfind("M  CHG", 0) == 0) {
      if (!charges_reset) {
        for (RawAtom &a: raw)
          a.charge = 0;
        charges_reset = true;
      }
      std::istringstream in { std::string(line.substr(6)) };
      int count = 0;
      in >> count;
      for (int k = 0; k < count; ++k) {
        int idx = 0, charge = 0;
        if (!(in >> idx >> charge) || idx < 1 || idx > natoms)
          throw ParseError("malformed M  CHG line", reader.line_no());
        raw[idx - 1].charge = charge;
      }
    }
  }
  if (!ended)
    throw ParseError("missing M  END", reader.line_no());

  // Data items up to the record separator are skipped.
  while (reader.next(line))
    if (line.rfind("$$$$", 0) == 0)
      break;

  Molecule heavy { std::string(name) };
  std::vector<int> index(raw.size(), -1);
  std::vector<std::size_t> atom_lines;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].atomic_number == kHydrogen)
      continue;
    index[i] = heavy.add_atom(raw[i].atomic_number, raw[i].coord, raw[i].charge);
    atom_lines.push_back(raw[i].line);
  }
  for (const RawBond &b: raw_bonds) {
    if (index[b.a] < 0 || index[b.b] < 0)
      continue;
    try {
      heavy.add_bond(index[b.a], index[b.b], b.order);
    } catch (const InvalidMoleculeError &e) {
      throw ParseError(e.what(), b.line);
    }
  }

  for (int i = 0; i < heavy.num_atoms(); ++i) {
    if (!valence_ok(heavy, i)) {
      const Atom &a = heavy.atom(i);
      throw ParseError(
          fmt::format("atom {} ({}) exceeds maximum valence {} in record '{}'",
                      i + 1, element_symbol(a.atomic_number),
                      max_valence(a.atomic_number, a.formal_charge), name),
          atom_lines[i]);
    }
  }

  std::vector<Molecule> result;
  for (const auto &component: connected_components(heavy))
    result.push_back(induced_submolecule(heavy, component));
  return result;
}

}  // namespace

std::vector<std::vector<Molecule>> parse_sdf_records(std::string_view text) {
  std::vector<std::vector<Molecule>> records;
  LineReader reader(text);
  std::string_view line;
  while (reader.next(line)) {
    // Blank trailing lines after the last record are tolerated.
    if (trim(line).empty() && reader.at_end())
      break;
    records.push_back(read_record(reader, trim(line)));
  }
  return records;
}

std::vector<Molecule> parse_sdf(std::string_view text) {
  std::vector<Molecule> result;
  for (auto &record: parse_sdf_records(text))
    for (auto &mol: record)
      result.push_back(std::move(mol));
  return result;
}

std::string write_sdf(std::span<const Molecule> molecules) {
  std::string out;
  for (const Molecule &mol: molecules) {
    if (mol.num_atoms() > 999 || mol.num_bonds() > 999)
      throw SerializationError(fmt::format(
          "molecule '{}' has {} atoms and {} bonds; V2000 allows 999",
          mol.name(), mol.num_atoms(), mol.num_bonds()));

    out += mol.name();
    out += "\n  confmotf          3D\n\n";
    out += fmt::format("{:3d}{:3d}  0  0  0  0  0  0  0  0999 V2000\n",
                       mol.num_atoms(), mol.num_bonds());
    for (const Atom &a: mol.atoms()) {
      out += fmt::format(
          "{:10.4f}{:10.4f}{:10.4f} {:<3} 0{:3d}  0  0  0  0  0  0  0  0  0  0\n",
          a.coord.x(), a.coord.y(), a.coord.z(),
          element_symbol(a.atomic_number), code_from_charge(a.formal_charge));
    }
    for (const Bond &b: mol.bonds())
      out += fmt::format("{:3d}{:3d}{:3d}  0\n", b.a + 1, b.b + 1,
                         static_cast<int>(b.order));

    std::vector<int> charged;
    for (int i = 0; i < mol.num_atoms(); ++i)
      if (mol.atom(i).formal_charge != 0)
        charged.push_back(i);
    for (std::size_t k = 0; k < charged.size(); k += 8) {
      const std::size_t n = std::min<std::size_t>(8, charged.size() - k);
      out += fmt::format("M  CHG{:3d}", n);
      for (std::size_t j = k; j < k + n; ++j)
        out += fmt::format(" {:3d} {:3d}", charged[j] + 1,
                           mol.atom(charged[j]).formal_charge);
      out += '\n';
    }
    out += "M  END\n$$$$\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(fmt::format("cannot open '{}' for reading", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(fmt::format("cannot open '{}' for writing", path.string()));
  out << text;
  if (!out)
    throw Error(fmt::format("failed writing '{}'", path.string()));
}

std::vector<Molecule> read_sdf_file(const std::filesystem::path &path) {
  return parse_sdf(read_text_file(path));
}

void write_sdf_file(const std::filesystem::path &path,
                    std::span<const Molecule> molecules) {
  write_text_file(path, write_sdf(molecules));
}

}  // namespace confmotif
