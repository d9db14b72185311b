//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_CLI_COMMANDS_H_
#define CONFMOTIF_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "confmotif/metrics/histogram.h"
#include "confmotif/metrics/mw.h"
#include "confmotif/metrics/report.h"

namespace confmotif::cli {

enum ExitCode { kSuccess = 0, kUsage = 1, kInputError = 2, kRuntimeError = 3 };

inline constexpr std::uint64_t kDefaultSeed = 20260;

// Flag values of one invocation, kept in sorted order so the fingerprint
// does not depend on argument order.
struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> values;

  // 16 hex digits, FNV-1a over "subcommand\nkey=value\n...".
  std::string fingerprint() const;
};

using Path = std::filesystem::path;

struct ExtractVocabOptions {
  Path sdf_in;
  Path vocab_out;
  long min_freq = 1;
};
int cmd_extract_vocab(const ExtractVocabOptions &o, std::ostream &out, std::ostream &err);

// One row per fragment; written to `tsv_out` or, when empty, to `out`.
struct FragmentOptions {
  Path sdf_in;
  Path tsv_out;
  Path motifs_sdf_out;  // optional: every fragment as an SDF record
};
int cmd_fragment(const FragmentOptions &o, std::ostream &out, std::ostream &err);

struct AssembleOptions {
  Path pocket_pdb;  // optional: generation without a pocket when empty
  Path vocab;
  std::string policy = "random";  // random | greedy-clash-free
  std::uint64_t seed = kDefaultSeed;
  int max_steps = 12;
  double mw_cap = 500;
  Path sdf_out;
  int n_samples = 1;
  Path log_out;  // optional: one line per attachment
};
int cmd_assemble(const AssembleOptions &o, std::ostream &out, std::ostream &err);

struct EvalCommandOptions {
  Path gen_sdf;
  Path ref_sdf;
  Path ff_sdf;      // optional
  Path scores_tsv;  // optional: header of score names, one row per molecule
  Path report_out;  // TSV; the JSON report goes next to it with ".json"
  double bins_distance = kDistanceBinWidth;
  double bins_angle = kAngleBinWidth;
  std::vector<std::string> patterns = kDefaultAnglePatterns;
  std::uint64_t seed = kDefaultSeed;
  bool mw_constrain = false;  // derive a range from the generated set and filter
  SigmaConvention sigma = SigmaConvention::kPopulation;
  int threads = 0;
  std::string fingerprint;
};
int cmd_eval(const EvalCommandOptions &o, std::ostream &out, std::ostream &err);

struct MwFilterOptions {
  Path per_pocket_dir;  // one SDF per pocket; the file stem is the pocket id
  Path out_dir;
  SigmaConvention sigma = SigmaConvention::kPopulation;
  std::string fingerprint;
};
inline constexpr const char *kRangesTableName = "ranges.tsv";
int cmd_mw_filter(const MwFilterOptions &o, std::ostream &out, std::ostream &err);

struct DockPrepOptions {
  Path gen_sdf;
  Path ff_sdf;
  Path out_dir;
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;
};
int cmd_dock_prep(const DockPrepOptions &o, std::ostream &out, std::ostream &err);

struct TrajectoryOptions {
  Path ligands_sdf;
  Path pocket_pdb;
  std::uint64_t seed = kDefaultSeed;
  int samples = 1;
  Path out;
};
int cmd_trajectories(const TrajectoryOptions &o, std::ostream &out, std::ostream &err);

// Ranges table as written by cmd_mw_filter.
std::string ranges_table(const std::map<std::string, MwRange> &ranges,
                         const std::map<std::string, int> &kept,
                         const std::string &fingerprint);

}  // namespace confmotif::cli

#endif  // CONFMOTIF_CLI_COMMANDS_H_
