//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_METRICS_MW_H_
#define CONFMOTIF_METRICS_MW_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "confmotif/molgraph/molecule.h"

namespace confmotif {

enum class SigmaConvention { kPopulation, kSample };

std::string_view to_string(SigmaConvention sigma);

// [mean - sigma, mean + sigma] of the weights left after trimming 20% from
// each end.
struct MwRange {
  double mean = 0;
  double sigma = 0;
  double lower = 0;
  double upper = 0;
  int total = 0;
  int survivors = 0;
  SigmaConvention convention = SigmaConvention::kPopulation;
};

inline constexpr int kMinMoleculesPerPocket = 5;
inline constexpr double kTrimFraction = 0.2;

// Throws MetricError naming `pocket` for fewer than 5 weights or a
// degenerate (zero-width) range.
MwRange mw_range(std::span<const double> weights, std::string_view pocket,
                 SigmaConvention sigma = SigmaConvention::kPopulation);

std::map<std::string, MwRange>
mw_ranges(const std::map<std::string, std::vector<double>> &per_pocket,
          SigmaConvention sigma = SigmaConvention::kPopulation);

bool in_range(double weight, const MwRange &range);

// Molecules whose weight lies in the closed range, in input order.
std::vector<Molecule> mw_filter(std::span<const Molecule> molecules, const MwRange &range);

}  // namespace confmotif

#endif  // CONFMOTIF_METRICS_MW_H_
