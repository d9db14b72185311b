//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_MOLGRAPH_SDF_H_
#define CONFMOTIF_MOLGRAPH_SDF_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "confmotif/molgraph/molecule.h"

namespace confmotif {

// Parses V2000 SDF/MOL text. Hydrogens are dropped and every record is split
// into one Molecule per connected heavy-atom component. Each molecule is
// validated; failures are reported as ParseError with the record's line.
std::vector<Molecule> parse_sdf(std::string_view text);

// Like parse_sdf, but keeps the record boundaries: one entry per record,
// holding that record's components.
std::vector<std::vector<Molecule>> parse_sdf_records(std::string_view text);

// V2000 output, coordinates fixed at 4 decimals. Throws SerializationError
// for molecules with more than 999 atoms or bonds.
std::string write_sdf(std::span<const Molecule> molecules);

std::vector<Molecule> read_sdf_file(const std::filesystem::path &path);
void write_sdf_file(const std::filesystem::path &path,
                    std::span<const Molecule> molecules);

// Reads a whole file; throws Error naming the path when it cannot be opened.
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

}  // namespace confmotif

#endif  // CONFMOTIF_MOLGRAPH_SDF_H_
