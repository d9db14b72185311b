//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/assemble/generate.h"

#include <algorithm>
#include <utility>

#include <fmt/format.h>

#include "confmotif/error.h"

namespace confmotif {
namespace {

std::optional<BondOrder> site_bond_order(const Molecule &mol,
                                         const ConnectionSite &site) {
  if (site.kind != SiteKind::kBond)
    return std::nullopt;
  const auto b = mol.find_bond(site.atom, site.atom2);
  if (!b)
    return std::nullopt;
  return mol.bond(*b).order;
}

struct Failed {
  ConnectionSite fragment_site;
  MotifCandidate candidate;
};

}  // namespace

std::vector<MotifCandidate> motif_candidates(const AssemblyState &state,
                                             const ConnectionSite &fragment_site,
                                             const Vocabulary &vocab) {
  const auto order = site_bond_order(state.ligand.mol, fragment_site);
  std::vector<MotifCandidate> out;
  for (std::size_t e = 0; e < vocab.size(); ++e) {
    const VocabularyEntry &entry = vocab.entries[e];
    for (int r: entry.classes.representatives()) {
      const ConnectionSite &site = entry.sites[r];
      if (site.kind != fragment_site.kind)
        continue;
      if (order && site_bond_order(entry.motif.graph, site) != order)
        continue;
      out.push_back({ e, site });
    }
  }
  return out;
}

std::variant<AssemblyState, Terminated> step(const AssemblyState &state,
                                             const Vocabulary &vocab,
                                             Policy &policy,
                                             const StepOptions &options) {
  std::vector<ConnectionSite> sites = state.open_sites();
  if (sites.empty())
    return Terminated { "no open connection sites" };

  std::vector<Failed> failed;
  std::string last_error;
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    if (sites.empty())
      break;
    const auto fs = policy.choose_fragment_fcs(state, sites);
    if (!fs)
      return Terminated { "policy declined the fragment site" };
    if (std::find(sites.begin(), sites.end(), *fs) == sites.end())
      throw ContractError(
          fmt::format("policy chose {} outside the candidates", describe(*fs)));

    std::vector<MotifCandidate> candidates = motif_candidates(state, *fs, vocab);
    std::erase_if(candidates, [&](const MotifCandidate &c) {
      return std::any_of(failed.begin(), failed.end(), [&](const Failed &f) {
        return f.fragment_site == *fs && f.candidate == c;
      });
    });
    if (candidates.empty()) {
      std::erase(sites, *fs);
      continue;
    }

    const auto choice = policy.choose_motif_fcs(state, *fs, vocab, candidates);
    if (!choice)
      return Terminated { "policy declined the motif site" };
    if (std::find(candidates.begin(), candidates.end(), *choice) == candidates.end())
      throw ContractError(fmt::format("policy chose motif {} {} outside the candidates",
                                      choice->motif, describe(choice->site)));

    const Motif &motif = vocab.entries[choice->motif].motif;
    const double torsion = policy.choose_torsion(state, *fs, motif, choice->site);
    AttachOptions attach_options;
    attach_options.clash_distance = options.clash_distance;
    try {
      return attach(state, *fs, motif, choice->site, torsion, attach_options);
    } catch (const AttachError &e) {
      failed.push_back({ *fs, *choice });
      last_error = e.what();
    }
  }
  return Terminated { last_error.empty()
                          ? "no feasible attachment"
                          : "no feasible attachment (last: " + last_error + ")" };
}

RunResult run(std::shared_ptr<const Pocket> pocket, const Vocabulary &vocab,
              Policy &policy, const RunLimits &limits) {
  if (vocab.empty())
    throw ContractError("vocabulary is empty");
  if (limits.max_steps < 1)
    throw ContractError("max_steps must be at least 1");

  const FirstChoice first = policy.choose_first(pocket.get(), vocab);
  if (first.motif >= vocab.size())
    throw ContractError("policy chose a first motif outside the vocabulary");
  RunResult out;
  out.state = place_first_motif(pocket, vocab.entries[first.motif].motif,
                                first.pose, limits.clash_distance);
  if (molecular_weight(out.state.ligand.mol) > limits.mw_cap)
    throw PlacementError(fmt::format("first motif exceeds the {:.1f} Da cap",
                                     limits.mw_cap));

  StepOptions options;
  options.clash_distance = limits.clash_distance;
  options.max_attempts = limits.max_attempts;
  out.stop_reason = "max_steps reached";
  while (out.state.step() < limits.max_steps) {
    auto next = step(out.state, vocab, policy, options);
    if (auto *t = std::get_if<Terminated>(&next)) {
      out.stop_reason = t->reason;
      break;
    }
    AssemblyState &product = std::get<AssemblyState>(next);
    if (molecular_weight(product.ligand.mol) > limits.mw_cap) {
      out.stop_reason = "molecular weight cap";
      break;
    }
    out.state = std::move(product);
  }
  out.molecule = out.state.ligand.mol;
  out.molecule.set_name(fmt::format("generated_{}", out.state.step()));
  return out;
}

}  // namespace confmotif
