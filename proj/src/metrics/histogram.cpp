//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/metrics/histogram.h"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "confmotif/error.h"
#include "confmotif/molgraph/element.h"

namespace confmotif {

double Histogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0.0);
}

void Histogram::add(double value) {
  const double lo = edges.front(), hi = edges.back();
  if (!(value >= lo && value <= hi))
    return;
  const double width = (hi - lo) / num_bins();
  int bin = static_cast<int>(std::floor((value - lo) / width));
  bin = std::min(bin, num_bins() - 1);
  // Guard against the floor landing one bin off at an exact edge.
  while (bin > 0 && value < edges[bin])
    --bin;
  while (bin + 1 < num_bins() && value >= edges[bin + 1])
    ++bin;
  counts[bin] += 1;
}

Histogram Histogram::normalized_copy() const {
  const double sum = total();
  if (!(sum > 0))
    throw MetricError("cannot normalize an empty histogram");
  Histogram out = *this;
  for (double &c: out.counts)
    c /= sum;
  out.normalized = true;
  return out;
}

Histogram make_histogram(double lo, double hi, double width) {
  if (!(hi > lo) || !(width > 0))
    throw MetricError(fmt::format("invalid binning [{}, {}] width {}", lo, hi, width));
  const int n = std::max(1, static_cast<int>(std::lround((hi - lo) / width)));
  Histogram h;
  h.edges.resize(n + 1);
  for (int k = 0; k <= n; ++k)
    h.edges[k] = lo + (hi - lo) * k / n;
  h.counts.assign(n, 0.0);
  return h;
}

Histogram distance_hist(std::span<const Molecule> molecules, DistanceMode mode,
                        double bin_width) {
  Histogram h = make_histogram(0.0, kDistanceCutoff, bin_width);
  for (const Molecule &m: molecules) {
    for (int i = 0; i < m.num_atoms(); ++i) {
      const Atom &a = m.atom(i);
      if (a.is_dummy() || (mode == DistanceMode::kCarbonCarbon && a.atomic_number != kCarbon))
        continue;
      for (int j = i + 1; j < m.num_atoms(); ++j) {
        const Atom &b = m.atom(j);
        if (b.is_dummy()
            || (mode == DistanceMode::kCarbonCarbon && b.atomic_number != kCarbon))
          continue;
        h.add((a.coord - b.coord).norm());
      }
    }
  }
  return h;
}

AnglePattern parse_angle_pattern(std::string_view text) {
  AnglePattern p;
  p.text = std::string(text);
  auto fail = [&](std::string_view why) {
    throw MetricError(fmt::format("bad angle pattern '{}': {}", text, why));
  };

  std::vector<int> elements;
  std::vector<std::optional<BondOrder>> bonds;
  std::optional<BondOrder> pending;
  bool have_pending = false;
  std::size_t k = 0;
  while (k < text.size()) {
    const char c = text[k];
    if (c == '-' || c == '=' || c == '#' || c == ':') {
      if (elements.empty() || have_pending)
        fail("misplaced bond symbol");
      pending = c == '-'   ? BondOrder::kSingle
                : c == '=' ? BondOrder::kDouble
                : c == '#' ? BondOrder::kTriple
                           : BondOrder::kAromatic;
      have_pending = true;
      ++k;
      continue;
    }
    if (!std::isupper(static_cast<unsigned char>(c)))
      fail("expected an element symbol");
    std::size_t len = 1;
    if (k + 1 < text.size() && std::islower(static_cast<unsigned char>(text[k + 1])))
      len = 2;
    const ElementData *e = find_element(text.substr(k, len));
    if (!e && len == 2) {
      len = 1;
      e = find_element(text.substr(k, 1));
    }
    if (!e || e->atomic_number <= kHydrogen)
      fail("unknown element");
    if (!elements.empty())
      bonds.push_back(pending);
    elements.push_back(e->atomic_number);
    pending.reset();
    have_pending = false;
    k += len;
  }
  if (elements.size() != 3 || have_pending)
    fail("need exactly three atoms");
  p.end1 = elements[0];
  p.center = elements[1];
  p.end2 = elements[2];
  p.bond1 = bonds[0];
  p.bond2 = bonds[1];
  return p;
}

namespace {

bool end_matches(const Molecule &mol, const Neighbor &nb, int element,
                 const std::optional<BondOrder> &order) {
  return mol.atom(nb.atom).atomic_number == element
         && (!order || mol.bond(nb.bond).order == *order);
}

double angle_degrees(const Vec3 &a, const Vec3 &b, const Vec3 &c) {
  const Vec3 u = a - b, v = c - b;
  const double cosine = std::clamp(u.dot(v) / (u.norm() * v.norm()), -1.0, 1.0);
  return std::acos(cosine) * 180.0 / std::numbers::pi;
}

}  // namespace

std::vector<double> pattern_angles(const Molecule &mol, const AnglePattern &pattern) {
  std::vector<double> out;
  for (int b = 0; b < mol.num_atoms(); ++b) {
    if (mol.atom(b).atomic_number != pattern.center)
      continue;
    const auto nbs = mol.neighbors(b);
    for (std::size_t x = 0; x < nbs.size(); ++x) {
      for (std::size_t y = x + 1; y < nbs.size(); ++y) {
        const Neighbor &a = nbs[x], &c = nbs[y];
        const bool forward = end_matches(mol, a, pattern.end1, pattern.bond1)
                             && end_matches(mol, c, pattern.end2, pattern.bond2);
        const bool backward = end_matches(mol, c, pattern.end1, pattern.bond1)
                              && end_matches(mol, a, pattern.end2, pattern.bond2);
        if (forward || backward)
          out.push_back(angle_degrees(mol.atom(a.atom).coord, mol.atom(b).coord,
                                      mol.atom(c.atom).coord));
      }
    }
  }
  return out;
}

Histogram angle_hist(std::span<const Molecule> molecules, const AnglePattern &pattern,
                     double bin_width) {
  Histogram h = make_histogram(0.0, 180.0, bin_width);
  for (const Molecule &m: molecules)
    for (double angle: pattern_angles(m, pattern))
      h.add(angle);
  return h;
}

double jsd(const Histogram &p, const Histogram &q) {
  if (p.edges != q.edges)
    throw MetricError("histograms have different binning");
  const Histogram pn = p.normalized_copy(), qn = q.normalized_copy();
  double sum = 0;
  for (int k = 0; k < pn.num_bins(); ++k) {
    const double a = pn.counts[k], b = qn.counts[k], m = 0.5 * (a + b);
    if (a > 0)
      sum += 0.5 * a * std::log(a / m);
    if (b > 0)
      sum += 0.5 * b * std::log(b / m);
  }
  return std::clamp(sum, 0.0, std::numbers::ln2);
}

}  // namespace confmotif
