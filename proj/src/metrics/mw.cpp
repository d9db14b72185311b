//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/metrics/mw.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "confmotif/error.h"

namespace confmotif {

std::string_view to_string(SigmaConvention sigma) {
  return sigma == SigmaConvention::kPopulation ? "population" : "sample";
}

MwRange mw_range(std::span<const double> weights, std::string_view pocket,
                 SigmaConvention sigma) {
  const int n = static_cast<int>(weights.size());
  if (n < kMinMoleculesPerPocket)
    throw MetricError(fmt::format("pocket '{}' has {} molecules, need at least {}", pocket,
                                  n, kMinMoleculesPerPocket));
  std::vector<double> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  const int drop = static_cast<int>(std::floor(kTrimFraction * n));
  const std::span<const double> kept(sorted.data() + drop, n - 2 * drop);

  MwRange r;
  r.total = n;
  r.survivors = static_cast<int>(kept.size());
  r.convention = sigma;
  double sum = 0;
  for (double w: kept)
    sum += w;
  r.mean = sum / r.survivors;
  double ss = 0;
  for (double w: kept)
    ss += (w - r.mean) * (w - r.mean);
  const int dof = sigma == SigmaConvention::kPopulation ? r.survivors : r.survivors - 1;
  r.sigma = std::sqrt(ss / dof);
  r.lower = r.mean - r.sigma;
  r.upper = r.mean + r.sigma;
  if (!(r.lower < r.upper))
    throw MetricError(fmt::format("pocket '{}' has a degenerate weight range [{}, {}]",
                                  pocket, r.lower, r.upper));
  return r;
}

std::map<std::string, MwRange>
mw_ranges(const std::map<std::string, std::vector<double>> &per_pocket,
          SigmaConvention sigma) {
  std::map<std::string, MwRange> out;
  for (const auto &[pocket, weights]: per_pocket)
    out.emplace(pocket, mw_range(weights, pocket, sigma));
  return out;
}

bool in_range(double weight, const MwRange &range) {
  return weight >= range.lower && weight <= range.upper;
}

std::vector<Molecule> mw_filter(std::span<const Molecule> molecules, const MwRange &range) {
  std::vector<Molecule> out;
  for (const Molecule &m: molecules)
    if (in_range(molecular_weight(m), range))
      out.push_back(m);
  return out;
}

}  // namespace confmotif
