//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/metrics/report.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "confmotif/error.h"

namespace confmotif {

Summary summarize(std::span<const double> values) {
  if (values.empty())
    throw MetricError("cannot summarize an empty list");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  auto quantile = [&](double p) {
    const double pos = p * (v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - lo) * (v[hi] - v[lo]);
  };
  Summary s;
  s.count = static_cast<int>(v.size());
  double sum = 0;
  for (double x: v)
    sum += x;
  s.mean = sum / s.count;
  s.min = v.front();
  s.max = v.back();
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  return s;
}

std::optional<double> jsd_or_na(const Histogram &p, const Histogram &q) {
  const bool pe = p.total() == 0, qe = q.total() == 0;
  if (pe && qe) {
    if (p.edges != q.edges)
      throw MetricError("histograms have different binning");
    return 0.0;
  }
  if (pe || qe)
    return std::nullopt;
  return jsd(p, q);
}

MetricReport evaluate(std::span<const Molecule> generated,
                      std::span<const Molecule> reference,
                      const std::vector<Molecule> *ff_optimized, const EvalOptions &options) {
  if (generated.empty())
    throw MetricError("no generated molecules to evaluate");
  if (reference.empty())
    throw MetricError("no reference molecules to evaluate against");
  if (ff_optimized && ff_optimized->size() != generated.size())
    throw MetricError(fmt::format("{} generated molecules but {} optimized conformers",
                                  generated.size(), ff_optimized->size()));
  std::vector<AnglePattern> patterns;
  for (const std::string &p: options.patterns)
    patterns.push_back(parse_angle_pattern(p));

  MetricReport r;
  r.options = options;
  r.generated_total = static_cast<int>(generated.size());
  r.reference_count = static_cast<int>(reference.size());
  r.has_ff = ff_optimized != nullptr;

  std::vector<Molecule> gen, ff;
  for (std::size_t k = 0; k < generated.size(); ++k) {
    if (options.mw_range && !in_range(molecular_weight(generated[k]), *options.mw_range))
      continue;
    gen.push_back(generated[k]);
    if (ff_optimized)
      ff.push_back((*ff_optimized)[k]);
  }
  r.generated_kept = static_cast<int>(gen.size());

  std::vector<ConformerMatch> matches;
  if (ff_optimized)
    matches = conformer_match_all(generated, *ff_optimized, options.de, options.threads);
  if (gen.empty())
    return r;

  r.distance_all_atom = jsd_or_na(distance_hist(gen, DistanceMode::kAllAtom, options.distance_bin),
                                  distance_hist(reference, DistanceMode::kAllAtom,
                                                options.distance_bin));
  r.distance_carbon_carbon =
      jsd_or_na(distance_hist(gen, DistanceMode::kCarbonCarbon, options.distance_bin),
                distance_hist(reference, DistanceMode::kCarbonCarbon, options.distance_bin));

  for (const AnglePattern &p: patterns) {
    AngleRow row;
    row.pattern = p.text;
    const Histogram hg = angle_hist(gen, p, options.angle_bin);
    const Histogram hr = angle_hist(reference, p, options.angle_bin);
    row.generated_angles = static_cast<int>(hg.total());
    row.reference_angles = static_cast<int>(hr.total());
    row.vs_reference = jsd_or_na(hg, hr);
    if (ff_optimized) {
      const Histogram hf = angle_hist(ff, p, options.angle_bin);
      row.ff_angles = static_cast<int>(hf.total());
      row.vs_ff = jsd_or_na(hg, hf);
    }
    r.angles.push_back(std::move(row));
  }

  if (ff_optimized) {
    for (std::size_t k = 0; k < generated.size(); ++k)
      if (!options.mw_range || in_range(molecular_weight(generated[k]), *options.mw_range))
        r.conformer_rmsds.push_back(matches[k].conformer_rmsd);
    r.conformer_rmsd = summarize(r.conformer_rmsds);
  }
  return r;
}

void add_external_scores(MetricReport &report, std::string name,
                         std::span<const double> values) {
  report.external.push_back({ std::move(name), summarize(values) });
}

namespace {

std::string num(double x) {
  return fmt::format("{:.6f}", x);
}

std::string num(const std::optional<double> &x) {
  return x ? num(*x) : "NA";
}

nlohmann::json jnum(const std::optional<double> &x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

nlohmann::json jsummary(const Summary &s) {
  return { { "count", s.count }, { "mean", s.mean },     { "min", s.min }, { "q1", s.q1 },
           { "median", s.median }, { "q3", s.q3 }, { "max", s.max } };
}

void tsv_summary(std::string &out, std::string_view prefix, const Summary &s) {
  out += fmt::format("{}_count\t{}\n", prefix, s.count);
  for (const auto &[key, value]: { std::pair { "mean", s.mean }, { "min", s.min },
                                   { "q1", s.q1 }, { "median", s.median }, { "q3", s.q3 },
                                   { "max", s.max } })
    out += fmt::format("{}_{}\t{}\n", prefix, key, num(value));
}

}  // namespace

std::string write_report_tsv(const MetricReport &r) {
  std::string out;
  out += "# confmotif metric report\n";
  out += "# jsd_log\tnatural\n";
  out += fmt::format("# distance_bin\t{}\n", r.options.distance_bin);
  out += fmt::format("# distance_cutoff\t{}\n", kDistanceCutoff);
  out += fmt::format("# angle_bin\t{}\n", r.options.angle_bin);
  if (r.options.mw_range)
    out += fmt::format("# mw_range\t{}\t{}\t{}\n", num(r.options.mw_range->lower),
                       num(r.options.mw_range->upper), to_string(r.options.mw_range->convention));
  if (!r.options.fingerprint.empty())
    out += fmt::format("# fingerprint\t{}\n", r.options.fingerprint);
  out += "metric\tvalue\n";
  out += fmt::format("generated_total\t{}\n", r.generated_total);
  out += fmt::format("generated_kept\t{}\n", r.generated_kept);
  out += fmt::format("reference_count\t{}\n", r.reference_count);
  out += fmt::format("distance_jsd_all_atom\t{}\n", num(r.distance_all_atom));
  out += fmt::format("distance_jsd_carbon_carbon\t{}\n", num(r.distance_carbon_carbon));
  for (const AngleRow &row: r.angles)
    out += fmt::format("angle_jsd_ref:{}\t{}\n", row.pattern, num(row.vs_reference));
  if (r.has_ff)
    for (const AngleRow &row: r.angles)
      out += fmt::format("angle_jsd_ff:{}\t{}\n", row.pattern, num(row.vs_ff));
  if (r.conformer_rmsd)
    tsv_summary(out, "conformer_rmsd", *r.conformer_rmsd);
  for (const ExternalScore &e: r.external)
    tsv_summary(out, e.name, e.summary);
  return out;
}

std::string write_report_json(const MetricReport &r) {
  nlohmann::ordered_json j;
  j["format"] = "confmotif-report-v1";
  j["config"] = { { "jsd_log", "natural" },
                  { "distance_bin", r.options.distance_bin },
                  { "distance_cutoff", kDistanceCutoff },
                  { "angle_bin", r.options.angle_bin },
                  { "patterns", r.options.patterns },
                  { "de_seed", r.options.de.seed },
                  { "fingerprint", r.options.fingerprint } };
  if (r.options.mw_range)
    j["config"]["mw_range"] = { { "lower", r.options.mw_range->lower },
                                { "upper", r.options.mw_range->upper },
                                { "sigma", to_string(r.options.mw_range->convention) } };
  j["counts"] = { { "generated_total", r.generated_total },
                  { "generated_kept", r.generated_kept },
                  { "reference", r.reference_count } };
  j["distance_jsd"] = { { "all_atom", jnum(r.distance_all_atom) },
                        { "carbon_carbon", jnum(r.distance_carbon_carbon) } };
  nlohmann::ordered_json angles = nlohmann::ordered_json::array();
  for (const AngleRow &row: r.angles) {
    nlohmann::ordered_json a { { "pattern", row.pattern },
                               { "generated_angles", row.generated_angles },
                               { "reference_angles", row.reference_angles },
                               { "vs_reference", jnum(row.vs_reference) } };
    if (r.has_ff) {
      a["ff_angles"] = row.ff_angles;
      a["vs_ff"] = jnum(row.vs_ff);
    }
    angles.push_back(std::move(a));
  }
  j["angle_jsd"] = std::move(angles);
  if (r.conformer_rmsd) {
    j["conformer_rmsd"] = jsummary(*r.conformer_rmsd);
    j["conformer_rmsd"]["values"] = r.conformer_rmsds;
  }
  for (const ExternalScore &e: r.external)
    j["external"][e.name] = jsummary(e.summary);
  return j.dump(2) + "\n";
}

}  // namespace confmotif
