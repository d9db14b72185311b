//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_ASSEMBLE_POLICY_H_
#define CONFMOTIF_ASSEMBLE_POLICY_H_

#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "confmotif/assemble/attach.h"
#include "confmotif/assemble/state.h"
#include "confmotif/connect/sites.h"
#include "confmotif/molgraph/pdb.h"
#include "confmotif/motif/vocabulary.h"

namespace confmotif {

struct FirstChoice {
  std::size_t motif = 0;  // vocabulary entry
  Pose pose;
};

struct MotifCandidate {
  std::size_t motif = 0;  // vocabulary entry
  ConnectionSite site;    // a class representative of that entry

  friend bool operator==(const MotifCandidate &,
                         const MotifCandidate &) = default;
};

// Decision points of one generation step. Returned sites and candidates
// must come from the offered lists; std::nullopt declines and ends the run.
class Policy {
public:
  virtual ~Policy() = default;

  // `pocket` may be null.
  virtual FirstChoice choose_first(const Pocket *pocket,
                                   const Vocabulary &vocab) = 0;

  virtual std::optional<ConnectionSite>
  choose_fragment_fcs(const AssemblyState &state,
                      std::span<const ConnectionSite> candidates) = 0;

  virtual std::optional<MotifCandidate>
  choose_motif_fcs(const AssemblyState &state,
                   const ConnectionSite &fragment_site, const Vocabulary &vocab,
                   std::span<const MotifCandidate> candidates) = 0;

  // Torsion about the new bond, radians. Ignored when the bond is not
  // rotatable.
  virtual double choose_torsion(const AssemblyState &state,
                                const ConnectionSite &fragment_site,
                                const Motif &motif,
                                const ConnectionSite &motif_site) = 0;
};

// Uniform choices from one seeded stream.
class RandomPolicy: public Policy {
public:
  explicit RandomPolicy(std::uint64_t seed,
                        double clash_distance = kDefaultClashDistance)
      : rng_(seed), clash_distance_(clash_distance) { }

  FirstChoice choose_first(const Pocket *pocket, const Vocabulary &vocab) override;
  std::optional<ConnectionSite>
  choose_fragment_fcs(const AssemblyState &state,
                      std::span<const ConnectionSite> candidates) override;
  std::optional<MotifCandidate>
  choose_motif_fcs(const AssemblyState &state,
                   const ConnectionSite &fragment_site, const Vocabulary &vocab,
                   std::span<const MotifCandidate> candidates) override;
  double choose_torsion(const AssemblyState &state,
                        const ConnectionSite &fragment_site, const Motif &motif,
                        const ConnectionSite &motif_site) override;

private:
  std::mt19937_64 rng_;
  double clash_distance_;
};

// Most frequent motif first, first fragment site, and the first motif
// candidate whose trial attachment (torsion pi) succeeds.
class GreedyClashFreePolicy: public Policy {
public:
  explicit GreedyClashFreePolicy(double clash_distance = kDefaultClashDistance)
      : clash_distance_(clash_distance) { }

  FirstChoice choose_first(const Pocket *pocket, const Vocabulary &vocab) override;
  std::optional<ConnectionSite>
  choose_fragment_fcs(const AssemblyState &state,
                      std::span<const ConnectionSite> candidates) override;
  std::optional<MotifCandidate>
  choose_motif_fcs(const AssemblyState &state,
                   const ConnectionSite &fragment_site, const Vocabulary &vocab,
                   std::span<const MotifCandidate> candidates) override;
  double choose_torsion(const AssemblyState &state,
                        const ConnectionSite &fragment_site, const Motif &motif,
                        const ConnectionSite &motif_site) override;

private:
  double clash_distance_;
};

}  // namespace confmotif

#endif  // CONFMOTIF_ASSEMBLE_POLICY_H_
