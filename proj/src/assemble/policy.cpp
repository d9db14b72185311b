//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/assemble/policy.h"

#include <numbers>

#include "confmotif/error.h"

namespace confmotif {
namespace {

template <class T>
std::size_t pick(std::mt19937_64 &rng, std::span<const T> items) {
  std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
  return d(rng);
}

}  // namespace

FirstChoice RandomPolicy::choose_first(const Pocket *pocket,
                                       const Vocabulary &vocab) {
  if (vocab.empty())
    throw ContractError("vocabulary is empty");
  FirstChoice choice;
  choice.motif = pick(rng_, std::span<const VocabularyEntry>(vocab.entries));
  if (pocket != nullptr)
    choice.pose = heuristic_first_pose(*pocket, vocab.entries[choice.motif].motif,
                                       rng_(), clash_distance_);
  return choice;
}

std::optional<ConnectionSite>
RandomPolicy::choose_fragment_fcs(const AssemblyState &,
                                  std::span<const ConnectionSite> candidates) {
  if (candidates.empty())
    return std::nullopt;
  return candidates[pick(rng_, candidates)];
}

std::optional<MotifCandidate>
RandomPolicy::choose_motif_fcs(const AssemblyState &, const ConnectionSite &,
                               const Vocabulary &,
                               std::span<const MotifCandidate> candidates) {
  if (candidates.empty())
    return std::nullopt;
  return candidates[pick(rng_, candidates)];
}

double RandomPolicy::choose_torsion(const AssemblyState &, const ConnectionSite &,
                                    const Motif &, const ConnectionSite &) {
  std::uniform_real_distribution<double> d(-std::numbers::pi, std::numbers::pi);
  return wrap_angle(d(rng_));
}

FirstChoice GreedyClashFreePolicy::choose_first(const Pocket *pocket,
                                                const Vocabulary &vocab) {
  if (vocab.empty())
    throw ContractError("vocabulary is empty");
  FirstChoice choice;
  if (pocket != nullptr)
    choice.pose = heuristic_first_pose(*pocket, vocab.entries[0].motif, 0,
                                       clash_distance_);
  return choice;
}

std::optional<ConnectionSite> GreedyClashFreePolicy::choose_fragment_fcs(
    const AssemblyState &, std::span<const ConnectionSite> candidates) {
  if (candidates.empty())
    return std::nullopt;
  return candidates.front();
}

std::optional<MotifCandidate> GreedyClashFreePolicy::choose_motif_fcs(
    const AssemblyState &state, const ConnectionSite &fragment_site,
    const Vocabulary &vocab, std::span<const MotifCandidate> candidates) {
  AttachOptions options;
  options.clash_distance = clash_distance_;
  for (const MotifCandidate &c: candidates) {
    try {
      attach(state, fragment_site, vocab.entries[c.motif].motif, c.site,
             std::numbers::pi, options);
      return c;
    } catch (const AttachError &) {
    }
  }
  return std::nullopt;
}

double GreedyClashFreePolicy::choose_torsion(const AssemblyState &,
                                             const ConnectionSite &,
                                             const Motif &,
                                             const ConnectionSite &) {
  return std::numbers::pi;
}

}  // namespace confmotif
