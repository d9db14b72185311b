//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdio>
#include <exception>
#include <utility>

#include <fmt/format.h>

#include "checks.h"

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero when any
// criterion fails.
int main() {
  using namespace confmotif::check;
  const std::pair<const char *, Result (*)()> criteria[] = {
    { "fragmentation round trip", fragmentation_round_trip },
    { "rotatable-bond oracle", rotatable_oracle },
    { "RCCS soundness", rccs_soundness },
    { "geometry kernel", geometry_kernel },
    { "JSD", jsd_examples },
    { "conformer matching", conformer_matching },
    { "MW protocol", mw_protocol },
    { "end-to-end generation", end_to_end_generation },
    { "complex graph", complex_graph_brute_force },
    { "metric-suite self-consistency", metric_self_consistency },
  };
  int failed = 0;
  int index = 0;
  for (const auto &[name, check]: criteria) {
    ++index;
    Result r;
    try {
      r = check();
    } catch (const std::exception &e) {
      r = { false, fmt::format("threw: {}", e.what()) };
    }
    fmt::print("{} {:2d} {}: {}\n", r.pass ? "PASS" : "FAIL", index, name, r.detail);
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
