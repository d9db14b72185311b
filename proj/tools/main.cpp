//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "confmotif/cli/commands.h"

namespace {

using namespace confmotif;
using namespace confmotif::cli;

RunConfig config_of(const CLI::App &sub) {
  RunConfig c;
  c.subcommand = sub.get_name();
  for (const CLI::Option *opt: sub.get_options()) {
    if (opt->get_name() == "--help" || opt->get_name() == "-h")
      continue;
    std::string value;
    for (const std::string &r: opt->results())
      value += (value.empty() ? "" : ",") + r;
    if (opt->results().empty())
      value = opt->get_default_str();
    c.values[opt->get_name()] = value;
  }
  return c;
}

const std::map<std::string, SigmaConvention> kSigma {
  { "population", SigmaConvention::kPopulation },
  { "sample", SigmaConvention::kSample },
};

}  // namespace

int main(int argc, char **argv) {
  CLI::App app { "Conformal motif extraction, assembly, and evaluation" };
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  ExtractVocabOptions vocab;
  auto *c_vocab = app.add_subcommand("extract-vocab", "Build a motif vocabulary from an SDF");
  c_vocab->add_option("sdf", vocab.sdf_in, "Input corpus")->required();
  c_vocab->add_option("-o,--out", vocab.vocab_out, "Vocabulary file")->required();
  c_vocab->add_option("--min-freq", vocab.min_freq, "Minimum motif frequency");

  FragmentOptions frag;
  auto *c_frag = app.add_subcommand("fragment", "List the motifs of each molecule");
  c_frag->add_option("sdf", frag.sdf_in, "Input molecules")->required();
  c_frag->add_option("-o,--out", frag.tsv_out, "Fragment table (default: stdout)");
  c_frag->add_option("--motifs", frag.motifs_sdf_out, "Write fragments as SDF");

  AssembleOptions as;
  auto *c_as = app.add_subcommand("assemble", "Generate molecules motif by motif");
  c_as->add_option("--pocket", as.pocket_pdb, "Pocket PDB");
  c_as->add_option("--vocab", as.vocab, "Vocabulary file")->required();
  c_as->add_option("--policy", as.policy, "Choice policy")
      ->check(CLI::IsMember({ "random", "greedy-clash-free" }));
  c_as->add_option("--seed", as.seed, "Random seed");
  c_as->add_option("--max-steps", as.max_steps, "Maximum motifs per molecule");
  c_as->add_option("--mw-cap", as.mw_cap, "Molecular weight cap, Da");
  c_as->add_option("-n,--n-samples", as.n_samples, "Number of molecules");
  c_as->add_option("-o,--out", as.sdf_out, "Output SDF")->required();
  c_as->add_option("--log", as.log_out, "Attachment log (TSV)");

  EvalCommandOptions ev;
  std::string ev_sigma = "population";
  auto *c_ev = app.add_subcommand("eval", "Structure metrics of generated molecules");
  c_ev->add_option("--gen", ev.gen_sdf, "Generated SDF")->required();
  c_ev->add_option("--ref", ev.ref_sdf, "Reference SDF")->required();
  c_ev->add_option("--ff", ev.ff_sdf, "Force-field optimized SDF, same order as --gen");
  c_ev->add_option("--scores", ev.scores_tsv, "External per-molecule scores (TSV)");
  c_ev->add_option("-o,--out", ev.report_out, "Report TSV (JSON written alongside)")
      ->required();
  c_ev->add_option("--bins-distance", ev.bins_distance, "Distance bin width, A");
  c_ev->add_option("--bins-angle", ev.bins_angle, "Angle bin width, degrees");
  c_ev->add_option("--patterns", ev.patterns, "Angle patterns")->delimiter(',');
  c_ev->add_option("--seed", ev.seed, "Differential evolution seed");
  c_ev->add_flag("--mw-constrain", ev.mw_constrain, "Filter to the generated MW range");
  c_ev->add_option("--sigma", ev_sigma, "Standard deviation convention")
      ->check(CLI::IsMember({ "population", "sample" }));
  c_ev->add_option("--threads", ev.threads, "Worker threads (0: all cores)");

  MwFilterOptions mw;
  std::string mw_sigma = "population";
  auto *c_mw = app.add_subcommand("mw-filter", "Per-pocket molecular weight filtering");
  c_mw->add_option("dir", mw.per_pocket_dir, "Directory of per-pocket SDFs")->required();
  c_mw->add_option("-o,--out", mw.out_dir, "Output directory")->required();
  c_mw->add_option("--sigma", mw_sigma, "Standard deviation convention")
      ->check(CLI::IsMember({ "population", "sample" }));

  DockPrepOptions dock;
  auto *c_dock = app.add_subcommand("dock-prep", "Conformer-matched inputs for docking");
  c_dock->add_option("--gen", dock.gen_sdf, "Generated SDF")->required();
  c_dock->add_option("--ff", dock.ff_sdf, "Force-field optimized SDF")->required();
  c_dock->add_option("-o,--out", dock.out_dir, "Output directory")->required();
  c_dock->add_option("--seed", dock.seed, "Differential evolution seed");
  c_dock->add_option("--threads", dock.threads, "Worker threads (0: all cores)");

  TrajectoryOptions traj;
  auto *c_traj = app.add_subcommand("trajectories", "Export masked assembly trajectories");
  c_traj->add_option("sdf", traj.ligands_sdf, "Ligands")->required();
  c_traj->add_option("--pocket", traj.pocket_pdb, "Pocket PDB");
  c_traj->add_option("--seed", traj.seed, "Random seed");
  c_traj->add_option("--samples", traj.samples, "Samples per ligand");
  c_traj->add_option("-o,--out", traj.out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  std::ostream &out = std::cout, &err = std::cerr;
  if (c_vocab->parsed())
    return cmd_extract_vocab(vocab, out, err);
  if (c_frag->parsed())
    return cmd_fragment(frag, out, err);
  if (c_as->parsed())
    return cmd_assemble(as, out, err);
  if (c_ev->parsed()) {
    ev.sigma = kSigma.at(ev_sigma);
    ev.fingerprint = config_of(*c_ev).fingerprint();
    return cmd_eval(ev, out, err);
  }
  if (c_mw->parsed()) {
    mw.sigma = kSigma.at(mw_sigma);
    mw.fingerprint = config_of(*c_mw).fingerprint();
    return cmd_mw_filter(mw, out, err);
  }
  if (c_dock->parsed())
    return cmd_dock_prep(dock, out, err);
  if (c_traj->parsed())
    return cmd_trajectories(traj, out, err);
  return kUsage;
}
