//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_METRICS_REPORT_H_
#define CONFMOTIF_METRICS_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "confmotif/metrics/conformer.h"
#include "confmotif/metrics/histogram.h"
#include "confmotif/metrics/mw.h"
#include "confmotif/molgraph/molecule.h"

namespace confmotif {

inline const std::vector<std::string> kDefaultAnglePatterns { "CCC", "CCO", "CNC", "NCC",
                                                              "CC=O" };

struct EvalOptions {
  double distance_bin = kDistanceBinWidth;
  double angle_bin = kAngleBinWidth;
  std::vector<std::string> patterns = kDefaultAnglePatterns;
  DeOptions de;
  int threads = 0;
  // When set, generated molecules (and their optimized partners) outside the
  // range are dropped before any metric is computed.
  std::optional<MwRange> mw_range;
  std::string fingerprint;  // copied into the report header
};

struct AngleRow {
  std::string pattern;
  int generated_angles = 0;
  int reference_angles = 0;
  int ff_angles = 0;
  // nullopt when exactly one side has no angles.
  std::optional<double> vs_reference;
  std::optional<double> vs_ff;
};

struct Summary {
  int count = 0;
  double mean = 0;
  double min = 0;
  double q1 = 0;
  double median = 0;
  double q3 = 0;
  double max = 0;
};

// Quartiles by linear interpolation between order statistics.
// Throws MetricError on empty input.
Summary summarize(std::span<const double> values);

struct ExternalScore {
  std::string name;
  Summary summary;
};

struct MetricReport {
  EvalOptions options;
  int generated_total = 0;
  int generated_kept = 0;
  int reference_count = 0;
  bool has_ff = false;
  std::optional<double> distance_all_atom;
  std::optional<double> distance_carbon_carbon;
  std::vector<AngleRow> angles;
  std::vector<double> conformer_rmsds;
  std::optional<Summary> conformer_rmsd;
  std::vector<ExternalScore> external;
};

// JSD of two raw histograms; 0 when both are empty, nullopt when one is.
std::optional<double> jsd_or_na(const Histogram &p, const Histogram &q);

// Throws MetricError for empty inputs or optimized conformers that do not
// match the generated graphs one to one.
MetricReport evaluate(std::span<const Molecule> generated,
                      std::span<const Molecule> reference,
                      const std::vector<Molecule> *ff_optimized,
                      const EvalOptions &options = {});

// Aggregates externally computed per-molecule scores (docking, QED, ...).
void add_external_scores(MetricReport &report, std::string name,
                         std::span<const double> values);

std::string write_report_tsv(const MetricReport &report);
std::string write_report_json(const MetricReport &report);

}  // namespace confmotif

#endif  // CONFMOTIF_METRICS_REPORT_H_
