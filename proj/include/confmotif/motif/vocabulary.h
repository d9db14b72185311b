//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_MOTIF_VOCABULARY_H_
#define CONFMOTIF_MOTIF_VOCABULARY_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "confmotif/connect/sites.h"
#include "confmotif/motif/motif.h"

namespace confmotif {

// A motif with its connection sites and their equivalence classes.
struct VocabularyEntry {
  Motif motif;
  std::vector<ConnectionSite> sites;
  EquivalenceClasses classes;
};

VocabularyEntry make_entry(Motif motif);

struct Vocabulary {
  std::vector<VocabularyEntry> entries;  // descending frequency, then key
  long min_frequency = 1;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  std::optional<std::size_t> find(const CanonicalKey &key) const;
};

// Fragments every molecule and merges motifs by canonical key. The stored
// conformation is the first occurrence; motifs seen fewer than
// min_frequency times are dropped. Throws Error on an empty corpus.
Vocabulary extract_vocabulary(std::span<const Molecule> corpus,
                              long min_frequency = 1);

// MOTIFVOCAB v1 text format.
std::string write_vocabulary(const Vocabulary &vocab);
Vocabulary parse_vocabulary(std::string_view text);

void write_vocabulary_file(const std::filesystem::path &path,
                           const Vocabulary &vocab);
Vocabulary read_vocabulary_file(const std::filesystem::path &path);

}  // namespace confmotif

#endif  // CONFMOTIF_MOTIF_VOCABULARY_H_
