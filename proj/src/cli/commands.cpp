//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/cli/commands.h"

#include <algorithm>
#include <charconv>
#include <exception>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "confmotif/assemble/generate.h"
#include "confmotif/assemble/policy.h"
#include "confmotif/assemble/trajectory.h"
#include "confmotif/error.h"
#include "confmotif/metrics/docking.h"
#include "confmotif/molgraph/pdb.h"
#include "confmotif/molgraph/sdf.h"
#include "confmotif/motif/fragment.h"
#include "confmotif/motif/vocabulary.h"

namespace confmotif::cli {
namespace {

// Failure while reading or validating inputs (exit code 2).
class InputFailure: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

template <class F>
auto load(const Path &path, F &&reader) {
  try {
    return reader(path);
  } catch (const std::exception &e) {
    throw InputFailure(fmt::format("{}: {}", path.string(), e.what()));
  }
}

template <class F>
int guarded(std::ostream &err, F &&body) {
  try {
    return body();
  } catch (const InputFailure &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

std::vector<Molecule> read_molecules(const Path &path) {
  return load(path, [](const Path &p) { return read_sdf_file(p); });
}

Pocket read_pocket(const Path &path) {
  return load(path, [](const Path &p) { return read_pocket_file(p); });
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    out.emplace_back(line.substr(start, end - start));
    if (end == std::string_view::npos)
      return out;
    start = end + 1;
  }
}

// Header of score names, then one numeric row per molecule.
std::vector<std::pair<std::string, std::vector<double>>> read_scores(const Path &path,
                                                                     std::size_t rows) {
  const std::string text = load(path, [](const Path &p) { return read_text_file(p); });
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw InputFailure(fmt::format("{}: empty score table", path.string()));
  std::vector<std::pair<std::string, std::vector<double>>> cols;
  for (const std::string &name: split(line, '\t'))
    cols.push_back({ name, {} });
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    ++n;
    const auto fields = split(line, '\t');
    if (fields.size() != cols.size())
      throw InputFailure(fmt::format("{}: line {}: expected {} fields", path.string(), n + 1,
                                     cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      double v = 0;
      const auto [ptr, ec] =
          std::from_chars(fields[c].data(), fields[c].data() + fields[c].size(), v);
      if (ec != std::errc() || ptr != fields[c].data() + fields[c].size())
        throw InputFailure(fmt::format("{}: line {}: bad number '{}'", path.string(), n + 1,
                                       fields[c]));
      cols[c].second.push_back(v);
    }
  }
  if (n != rows)
    throw InputFailure(fmt::format("{}: {} score rows for {} molecules", path.string(), n,
                                   rows));
  return cols;
}

}  // namespace

std::string RunConfig::fingerprint() const {
  std::string text = subcommand + "\n";
  for (const auto &[k, v]: values)
    text += k + "=" + v + "\n";
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c: text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return fmt::format("{:016x}", h);
}

int cmd_extract_vocab(const ExtractVocabOptions &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    if (o.min_freq < 1)
      throw InputFailure("--min-freq must be at least 1");
    std::vector<Molecule> corpus;
    try {
      corpus = read_molecules(o.sdf_in);
    } catch (const InputFailure &) {
      // Re-read per record so the message names the failing record.
      const std::string text =
          load(o.sdf_in, [](const Path &p) { return read_text_file(p); });
      std::size_t record = 0, start = 0;
      while (start < text.size()) {
        std::size_t end = text.find("$$$$", start);
        end = end == std::string::npos ? text.size() : text.find('\n', end);
        end = end == std::string::npos ? text.size() : end + 1;
        ++record;
        try {
          parse_sdf(std::string_view(text).substr(start, end - start));
        } catch (const std::exception &e) {
          throw InputFailure(fmt::format("{}: record {}: {}", o.sdf_in.string(), record,
                                         e.what()));
        }
        start = end;
      }
      throw;
    }
    const Vocabulary vocab = extract_vocabulary(corpus, o.min_freq);
    write_vocabulary_file(o.vocab_out, vocab);
    int rings = 0;
    for (const VocabularyEntry &e: vocab.entries)
      rings += e.motif.kind == MotifKind::kRing ? 1 : 0;
    out << fmt::format("{} molecules, {} motifs ({} ring, {} chain), min frequency {}\n",
                       corpus.size(), vocab.size(), rings,
                       static_cast<int>(vocab.size()) - rings, o.min_freq);
    return kSuccess;
  });
}

int cmd_fragment(const FragmentOptions &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const std::vector<Molecule> mols = read_molecules(o.sdf_in);
    std::string table = "molecule\tfragment\tkind\theavy_atoms\tdummies\tsource_atoms\tkey\n";
    std::vector<Molecule> motifs;
    for (std::size_t m = 0; m < mols.size(); ++m) {
      const FragmentationResult r = fragment(mols[m]);
      for (std::size_t f = 0; f < r.fragments.size(); ++f) {
        const Fragment &frag = r.fragments[f];
        std::vector<int> atoms;
        for (int v = 0; v < frag.motif.graph.num_atoms(); ++v)
          if (!frag.motif.graph.atom(v).is_dummy())
            atoms.push_back(frag.source_atoms[v] + 1);
        const int heavy = frag.motif.num_heavy_atoms();
        table += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\n", mols[m].name(), f + 1,
                             to_string(frag.motif.kind), heavy,
                             frag.motif.graph.num_atoms() - heavy, fmt::join(atoms, ","),
                             frag.motif.key.hex());
        Molecule g = frag.motif.graph;
        g.set_name(fmt::format("{}_f{}", mols[m].name(), f + 1));
        motifs.push_back(std::move(g));
      }
    }
    if (o.tsv_out.empty())
      out << table;
    else
      write_text_file(o.tsv_out, table);
    if (!o.motifs_sdf_out.empty())
      write_sdf_file(o.motifs_sdf_out, motifs);
    return kSuccess;
  });
}

int cmd_assemble(const AssembleOptions &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    if (o.n_samples < 0 || o.max_steps < 1 || !(o.mw_cap > 0))
      throw InputFailure("--n-samples, --max-steps and --mw-cap must be positive");
    if (o.policy != "random" && o.policy != "greedy-clash-free")
      throw InputFailure(fmt::format("unknown policy '{}'", o.policy));
    const Vocabulary vocab =
        load(o.vocab, [](const Path &p) { return read_vocabulary_file(p); });
    if (vocab.empty())
      throw InputFailure(fmt::format("{}: vocabulary is empty", o.vocab.string()));
    std::shared_ptr<const Pocket> pocket;
    if (!o.pocket_pdb.empty())
      pocket = std::make_shared<const Pocket>(read_pocket(o.pocket_pdb));

    RunLimits limits;
    limits.max_steps = o.max_steps;
    limits.mw_cap = o.mw_cap;
    std::vector<Molecule> made;
    std::string log = "sample\tstep\tmotif\tfragment_site\tmotif_site\ttorsion_deg\n";
    int failures = 0;
    for (int k = 0; k < o.n_samples; ++k) {
      std::unique_ptr<Policy> policy;
      if (o.policy == "random")
        policy = std::make_unique<RandomPolicy>(o.seed + static_cast<std::uint64_t>(k));
      else
        policy = std::make_unique<GreedyClashFreePolicy>();
      try {
        RunResult r = run(pocket, vocab, *policy, limits);
        r.molecule.set_name(fmt::format("sample_{}", k + 1));
        for (int s = 0; s < r.state.step(); ++s) {
          const HistoryEntry &h = r.state.history[s];
          log += fmt::format("{}\t{}\t{}\t{}\t{}\t{:.4f}\n", k + 1, s + 1, h.motif_key.hex(),
                             h.fragment_site ? describe(*h.fragment_site) : "-",
                             h.motif_site ? describe(*h.motif_site) : "-",
                             h.torsion * 180 / std::numbers::pi);
        }
        made.push_back(std::move(r.molecule));
      } catch (const PlacementError &e) {
        ++failures;
        err << fmt::format("warning: sample {}: {}\n", k + 1, e.what());
      }
    }
    write_sdf_file(o.sdf_out, made);
    if (!o.log_out.empty())
      write_text_file(o.log_out, log);
    out << fmt::format("{} molecules written, {} placement failures\n", made.size(), failures);
    if (failures > 0 && made.empty())
      return kRuntimeError;
    if (failures > 0)
      err << "warning: output is partial\n";
    return kSuccess;
  });
}

int cmd_eval(const EvalCommandOptions &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const std::vector<Molecule> gen = read_molecules(o.gen_sdf);
    const std::vector<Molecule> ref = read_molecules(o.ref_sdf);
    std::optional<std::vector<Molecule>> ff;
    if (!o.ff_sdf.empty())
      ff = read_molecules(o.ff_sdf);
    std::vector<std::pair<std::string, std::vector<double>>> scores;
    if (!o.scores_tsv.empty())
      scores = read_scores(o.scores_tsv, gen.size());
    for (const std::string &p: o.patterns)
      try {
        parse_angle_pattern(p);
      } catch (const MetricError &e) {
        throw InputFailure(e.what());
      }

    EvalOptions options;
    options.distance_bin = o.bins_distance;
    options.angle_bin = o.bins_angle;
    options.patterns = o.patterns;
    options.de.seed = o.seed;
    options.threads = o.threads;
    options.fingerprint = o.fingerprint;
    if (o.mw_constrain) {
      std::vector<double> weights;
      for (const Molecule &m: gen)
        weights.push_back(molecular_weight(m));
      options.mw_range = mw_range(weights, o.gen_sdf.stem().string(), o.sigma);
    }
    MetricReport report = evaluate(gen, ref, ff ? &*ff : nullptr, options);
    for (auto &[name, values]: scores) {
      std::vector<double> kept;
      for (std::size_t k = 0; k < gen.size(); ++k)
        if (!options.mw_range || in_range(molecular_weight(gen[k]), *options.mw_range))
          kept.push_back(values[k]);
      if (!kept.empty())
        add_external_scores(report, name, kept);
    }
    const std::string tsv = write_report_tsv(report);
    write_text_file(o.report_out, tsv);
    Path json = o.report_out;
    json.replace_extension(".json");
    write_text_file(json, write_report_json(report));
    out << fmt::format("evaluated {} of {} generated molecules against {} references\n",
                       report.generated_kept, report.generated_total, report.reference_count);
    return kSuccess;
  });
}

std::string ranges_table(const std::map<std::string, MwRange> &ranges,
                         const std::map<std::string, int> &kept,
                         const std::string &fingerprint) {
  std::string out;
  if (!fingerprint.empty())
    out += fmt::format("# fingerprint\t{}\n", fingerprint);
  if (!ranges.empty())
    out += fmt::format("# sigma\t{}\n", to_string(ranges.begin()->second.convention));
  out += "pocket\tmu\tsigma\tlo\thi\tkept\ttotal\n";
  for (const auto &[pocket, r]: ranges)
    out += fmt::format("{}\t{:.4f}\t{:.4f}\t{:.4f}\t{:.4f}\t{}\t{}\n", pocket, r.mean, r.sigma,
                       r.lower, r.upper, kept.at(pocket), r.total);
  return out;
}

int cmd_mw_filter(const MwFilterOptions &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    if (!std::filesystem::is_directory(o.per_pocket_dir))
      throw InputFailure(fmt::format("{}: not a directory", o.per_pocket_dir.string()));
    std::vector<Path> files;
    for (const auto &entry: std::filesystem::directory_iterator(o.per_pocket_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".sdf")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::filesystem::create_directories(o.out_dir);
    std::map<std::string, MwRange> ranges;
    std::map<std::string, int> kept;
    for (const Path &file: files) {
      const std::string pocket = file.stem().string();
      const std::vector<Molecule> mols = read_molecules(file);
      std::vector<double> weights;
      for (const Molecule &m: mols)
        weights.push_back(molecular_weight(m));
      MwRange r;
      try {
        r = mw_range(weights, pocket, o.sigma);
      } catch (const MetricError &e) {
        err << "warning: skipped: " << e.what() << '\n';
        continue;
      }
      const std::vector<Molecule> survivors = mw_filter(mols, r);
      write_sdf_file(o.out_dir / file.filename(), survivors);
      ranges.emplace(pocket, r);
      kept.emplace(pocket, static_cast<int>(survivors.size()));
    }
    write_text_file(o.out_dir / kRangesTableName, ranges_table(ranges, kept, o.fingerprint));
    out << fmt::format("{} pockets filtered, {} skipped\n", ranges.size(),
                       files.size() - ranges.size());
    return kSuccess;
  });
}

int cmd_dock_prep(const DockPrepOptions &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const std::vector<Molecule> gen = read_molecules(o.gen_sdf);
    const std::vector<Molecule> ff = read_molecules(o.ff_sdf);
    DeOptions de;
    de.seed = o.seed;
    const auto matches = prepare_docking_inputs(gen, ff, o.out_dir, de, o.threads);
    out << fmt::format("{} conformer-matched molecules written to {}\n", matches.size(),
                       o.out_dir.string());
    return kSuccess;
  });
}

int cmd_trajectories(const TrajectoryOptions &o, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    if (o.samples < 1)
      throw InputFailure("--samples must be at least 1");
    const std::vector<Molecule> ligands = read_molecules(o.ligands_sdf);
    const Pocket pocket = o.pocket_pdb.empty() ? Pocket {} : read_pocket(o.pocket_pdb);
    std::string text;
    std::size_t steps = 0;
    for (std::size_t k = 0; k < ligands.size(); ++k) {
      const auto t = build_trajectories(ligands[k], pocket, o.seed + k, o.samples);
      steps += t.size();
      text += write_trajectories(t, ligands[k].name());
    }
    write_text_file(o.out, text);
    out << fmt::format("{} training steps from {} ligands\n", steps, ligands.size());
    return kSuccess;
  });
}

}  // namespace confmotif::cli
