//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CONFMOTIF_ASSEMBLE_GENERATE_H_
#define CONFMOTIF_ASSEMBLE_GENERATE_H_

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "confmotif/assemble/policy.h"
#include "confmotif/assemble/state.h"
#include "confmotif/motif/vocabulary.h"

namespace confmotif {

struct Terminated {
  std::string reason;
};

struct StepOptions {
  double clash_distance = kDefaultClashDistance;
  // Failed attachments are excluded and the policy asked again, up to this
  // many times.
  int max_attempts = 32;
};

// Motif-side candidates for a fragment site: class representatives of every
// vocabulary entry with the same site kind (and, for bonds, the same bond
// order).
std::vector<MotifCandidate> motif_candidates(const AssemblyState &state,
                                             const ConnectionSite &fragment_site,
                                             const Vocabulary &vocab);

// One pass of the four-step loop. Throws ContractError when the policy
// answers outside the offered candidates.
std::variant<AssemblyState, Terminated> step(const AssemblyState &state,
                                             const Vocabulary &vocab,
                                             Policy &policy,
                                             const StepOptions &options = {});

struct RunLimits {
  int max_steps = 12;    // counts the first motif
  double mw_cap = 500;   // Da
  double clash_distance = kDefaultClashDistance;
  int max_attempts = 32;
};

struct RunResult {
  Molecule molecule;
  AssemblyState state;
  std::string stop_reason;
};

// Places a first motif and steps until termination, max_steps, or a product
// heavier than mw_cap (which is discarded). Throws PlacementError when the
// first motif cannot be placed or already exceeds mw_cap.
RunResult run(std::shared_ptr<const Pocket> pocket, const Vocabulary &vocab,
              Policy &policy, const RunLimits &limits = {});

}  // namespace confmotif

#endif  // CONFMOTIF_ASSEMBLE_GENERATE_H_
