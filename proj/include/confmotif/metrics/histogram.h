//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_METRICS_HISTOGRAM_H_
#define CONFMOTIF_METRICS_HISTOGRAM_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "confmotif/molgraph/molecule.h"

namespace confmotif {

inline constexpr double kDistanceCutoff = 12.0;
inline constexpr double kDistanceBinWidth = 0.25;
inline constexpr double kAngleBinWidth = 2.5;

// Uniform bins; the last bin is closed on the right so the upper edge itself
// is counted.
struct Histogram {
  std::vector<double> edges;
  std::vector<double> counts;
  bool normalized = false;

  int num_bins() const { return static_cast<int>(counts.size()); }
  double total() const;

  // Values outside [edges.front(), edges.back()] are ignored.
  void add(double value);

  // Counts scaled to sum to 1. Throws MetricError when empty.
  Histogram normalized_copy() const;
};

// Throws MetricError unless lo < hi and width > 0. The bin count is
// round((hi - lo) / width).
Histogram make_histogram(double lo, double hi, double width);

enum class DistanceMode { kAllAtom, kCarbonCarbon };

// Pooled intra-molecular heavy-atom pair distances up to 12 Å.
Histogram distance_hist(std::span<const Molecule> molecules, DistanceMode mode,
                        double bin_width = kDistanceBinWidth);

// Three element symbols with optional bond symbols between them: '-' single,
// '=' double, '#' triple, ':' aromatic; a missing symbol matches any order.
// Examples: "CCC", "CC=O", "C:N:C".
struct AnglePattern {
  int end1 = 0;
  int center = 0;
  int end2 = 0;
  std::optional<BondOrder> bond1;
  std::optional<BondOrder> bond2;
  std::string text;
};

// Throws MetricError on malformed patterns or unknown elements.
AnglePattern parse_angle_pattern(std::string_view text);

// Angles (degrees) at the center atom, counted once per unordered neighbor
// pair matching the pattern in either direction.
std::vector<double> pattern_angles(const Molecule &mol, const AnglePattern &pattern);

Histogram angle_hist(std::span<const Molecule> molecules, const AnglePattern &pattern,
                     double bin_width = kAngleBinWidth);

// Jensen-Shannon divergence in nats. Throws MetricError on mismatched edges
// or an empty histogram.
double jsd(const Histogram &p, const Histogram &q);

}  // namespace confmotif

#endif  // CONFMOTIF_METRICS_HISTOGRAM_H_
