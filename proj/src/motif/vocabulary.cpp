//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/motif/vocabulary.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "confmotif/error.h"
#include "confmotif/molgraph/sdf.h"
#include "confmotif/motif/fragment.h"

namespace confmotif {
namespace {

std::string_view kind_token(SiteKind kind) {
  return kind == SiteKind::kAtom ? "atom" : "bond";
}

class TokenReader {
public:
  explicit TokenReader(std::string_view text): text_(text) { }

  // Next non-blank line split into whitespace tokens; false at the end.
  bool next(std::vector<std::string> &tokens) {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos)
        end = text_.size();
      std::istringstream in { std::string(text_.substr(pos_, end - pos_)) };
      pos_ = end + 1;
      ++line_;
      tokens.clear();
      for (std::string tok; in >> tok;)
        tokens.push_back(tok);
      if (!tokens.empty())
        return true;
    }
    return false;
  }

  void expect(std::vector<std::string> &tokens, std::string_view tag,
              std::size_t count) {
    if (!next(tokens))
      throw ParseError(fmt::format("unexpected end of file, wanted {}", tag),
                       line_);
    if (tokens[0] != tag || tokens.size() != count)
      throw ParseError(fmt::format("expected a {} line with {} fields", tag,
                                   count),
                       line_);
  }

  std::size_t line() const { return line_; }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

template <class T>
T to_number(const std::string &tok, std::size_t line) {
  try {
    std::size_t used = 0;
    T value;
    if constexpr (std::is_same_v<T, double>)
      value = std::stod(tok, &used);
    else
      value = static_cast<T>(std::stol(tok, &used));
    if (used != tok.size())
      throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception &) {
    throw ParseError(fmt::format("invalid number '{}'", tok), line);
  }
}

}  // namespace

VocabularyEntry make_entry(Motif motif) {
  VocabularyEntry entry;
  entry.sites = enumerate_ccs_motif(motif);
  entry.classes = equivalence_classes(motif, entry.sites);
  entry.motif = std::move(motif);
  return entry;
}

std::optional<std::size_t> Vocabulary::find(const CanonicalKey &key) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].motif.key == key)
      return i;
  return std::nullopt;
}

Vocabulary extract_vocabulary(std::span<const Molecule> corpus,
                              long min_frequency) {
  if (corpus.empty())
    throw Error("cannot extract a vocabulary from an empty corpus");

  std::map<CanonicalKey, Motif> merged;
  for (const Molecule &mol: corpus) {
    for (Fragment &f: fragment(mol).fragments) {
      auto [it, inserted] = merged.try_emplace(f.motif.key);
      if (inserted) {
        it->second = std::move(f.motif);
        it->second.frequency = 1;
      } else {
        ++it->second.frequency;
      }
    }
  }

  std::vector<Motif> motifs;
  for (auto &[key, motif]: merged)
    if (motif.frequency >= min_frequency)
      motifs.push_back(std::move(motif));
  std::stable_sort(motifs.begin(), motifs.end(),
                   [](const Motif &a, const Motif &b) {
                     return a.frequency > b.frequency;
                   });

  Vocabulary vocab;
  vocab.min_frequency = min_frequency;
  for (Motif &m: motifs) {
    m.graph.set_name(m.key.hex());
    vocab.entries.push_back(make_entry(std::move(m)));
  }
  return vocab;
}

std::string write_vocabulary(const Vocabulary &vocab) {
  std::string out = fmt::format("MOTIFVOCAB v1 {}\nMINFREQ {}\n",
                                vocab.entries.size(), vocab.min_frequency);
  for (const VocabularyEntry &e: vocab.entries) {
    const Molecule &g = e.motif.graph;
    out += fmt::format("MOTIF {} {} {} {} {} {}\n", e.motif.key.hex(),
                       to_string(e.motif.kind), e.motif.frequency,
                       g.num_atoms(), g.num_bonds(), e.sites.size());
    for (const Atom &a: g.atoms())
      out += fmt::format("ATOM {} {} {:.6f} {:.6f} {:.6f}\n",
                         element_symbol(a.atomic_number), a.formal_charge,
                         a.coord.x(), a.coord.y(), a.coord.z());
    for (const Bond &b: g.bonds())
      out += fmt::format("BOND {} {} {}\n", b.a + 1, b.b + 1,
                         static_cast<int>(b.order));
    for (std::size_t i = 0; i < e.sites.size(); ++i) {
      const ConnectionSite &s = e.sites[i];
      out += fmt::format("SITE {} {} {} {}\n", kind_token(s.kind), s.atom + 1,
                         s.atom2 + 1, e.classes.class_of[i]);
    }
    out += "END\n";
  }
  return out;
}

Vocabulary parse_vocabulary(std::string_view text) {
  TokenReader reader(text);
  std::vector<std::string> tok;
  if (!reader.next(tok) || tok.size() != 3 || tok[0] != "MOTIFVOCAB")
    throw ParseError("missing MOTIFVOCAB header", reader.line());
  if (tok[1] != "v1")
    throw ParseError(fmt::format("unsupported vocabulary version '{}'", tok[1]),
                     reader.line());
  const long count = to_number<long>(tok[2], reader.line());
  if (count < 0)
    throw ParseError("negative motif count", reader.line());

  Vocabulary vocab;
  reader.expect(tok, "MINFREQ", 2);
  vocab.min_frequency = to_number<long>(tok[1], reader.line());

  for (long m = 0; m < count; ++m) {
    reader.expect(tok, "MOTIF", 7);
    const std::size_t motif_line = reader.line();
    const CanonicalKey stored = CanonicalKey::from_hex(tok[1]);
    const MotifKind kind = parse_motif_kind(tok[2]);
    const long freq = to_number<long>(tok[3], motif_line);
    const int natoms = to_number<int>(tok[4], motif_line);
    const int nbonds = to_number<int>(tok[5], motif_line);
    const int nsites = to_number<int>(tok[6], motif_line);
    if (natoms <= 0 || nbonds < 0 || nsites < 0)
      throw ParseError("invalid motif counts", motif_line);

    Molecule graph(tok[1]);
    for (int i = 0; i < natoms; ++i) {
      reader.expect(tok, "ATOM", 6);
      const ElementData *e = find_element(tok[1]);
      if (e == nullptr)
        throw ParseError(fmt::format("unknown element '{}'", tok[1]),
                         reader.line());
      graph.add_atom(e->atomic_number,
                     Vec3(to_number<double>(tok[3], reader.line()),
                          to_number<double>(tok[4], reader.line()),
                          to_number<double>(tok[5], reader.line())),
                     to_number<int>(tok[2], reader.line()));
    }
    for (int i = 0; i < nbonds; ++i) {
      reader.expect(tok, "BOND", 4);
      const int a = to_number<int>(tok[1], reader.line()) - 1;
      const int b = to_number<int>(tok[2], reader.line()) - 1;
      const int order = to_number<int>(tok[3], reader.line());
      if (order < 1 || order > 4)
        throw ParseError("invalid bond order", reader.line());
      try {
        graph.add_bond(a, b, static_cast<BondOrder>(order));
      } catch (const InvalidMoleculeError &err) {
        throw ParseError(err.what(), reader.line());
      }
    }

    VocabularyEntry entry = make_entry(make_motif(std::move(graph), kind, freq));
    if (entry.motif.key != stored)
      throw ParseError("motif key does not match its graph", motif_line);
    try {
      validate_motif(entry.motif);
    } catch (const InvalidMoleculeError &err) {
      throw ParseError(err.what(), motif_line);
    }

    if (static_cast<std::size_t>(nsites) != entry.sites.size())
      throw ParseError("site table does not match the motif", motif_line);
    for (int i = 0; i < nsites; ++i) {
      reader.expect(tok, "SITE", 5);
      const ConnectionSite &s = entry.sites[i];
      if (tok[1] != kind_token(s.kind)
          || to_number<int>(tok[2], reader.line()) != s.atom + 1
          || to_number<int>(tok[3], reader.line()) != s.atom2 + 1
          || to_number<int>(tok[4], reader.line()) != entry.classes.class_of[i])
        throw ParseError("site table does not match the motif", reader.line());
    }
    reader.expect(tok, "END", 1);
    vocab.entries.push_back(std::move(entry));
  }
  if (reader.next(tok))
    throw ParseError("trailing content after the last motif", reader.line());
  return vocab;
}

void write_vocabulary_file(const std::filesystem::path &path,
                           const Vocabulary &vocab) {
  write_text_file(path, write_vocabulary(vocab));
}

Vocabulary read_vocabulary_file(const std::filesystem::path &path) {
  return parse_vocabulary(read_text_file(path));
}

}  // namespace confmotif
