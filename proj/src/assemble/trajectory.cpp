//
// Project confmotif - Copyright 2026 The confmotif Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "confmotif/assemble/trajectory.h"

#include <cmath>
#include <limits>
#include <random>

#include <fmt/format.h>
#include <json.hpp>

#include "confmotif/assemble/attach.h"
#include "confmotif/error.h"
#include "confmotif/motif/fragment.h"
#include "confmotif/motif/reconstruct.h"

namespace confmotif {
namespace {

using nlohmann::json;

int nearest_fragment(const FragmentationResult &result, const Vec3 &center) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int f = 0; f < static_cast<int>(result.fragments.size()); ++f) {
    const double d = (motif_centroid(result.fragments[f].motif) - center).norm();
    if (d < best_d) {
      best_d = d;
      best = f;
    }
  }
  return best;
}

json site_json(const ConnectionSite &s) {
  json j;
  j["kind"] = s.kind == SiteKind::kAtom ? "atom" : "bond";
  j["atom"] = s.atom;
  if (s.atom2 >= 0)
    j["atom2"] = s.atom2;
  if (s.slot >= 0)
    j["slot"] = s.slot;
  return j;
}

// Coordinates rounded to 1e-6 A so the text is stable across platforms.
double rounded(double x) {
  return std::round(x * 1e6) / 1e6;
}

json vec_json(const Vec3 &x) {
  return json::array({ rounded(x.x()), rounded(x.y()), rounded(x.z()) });
}

}  // namespace

std::vector<TrainingStep> build_trajectories(const Molecule &ligand,
                                             const Pocket &pocket,
                                             std::uint64_t seed, int samples) {
  if (samples < 0)
    throw ContractError("sample count must be non-negative");
  const FragmentationResult frag = fragment(ligand);
  const int n = static_cast<int>(frag.fragments.size());
  const int root = pocket.atoms.empty()
                       ? 0
                       : nearest_fragment(frag, pocket.centroid());

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<TrainingStep> out;
  for (int s = 0; s < samples; ++s) {
    TrainingStep step;
    step.mask_ratio = unit(rng);
    step.num_motifs = n;
    step.num_masked = static_cast<int>(std::lround(step.mask_ratio * n));

    Replay replay(frag, root);
    step.bfs_order = replay.bfs().order;
    const int keep = n - step.num_masked;
    for (int k = 0; k < keep; ++k)
      replay.advance();
    if (keep > 0)
      step.context = replay.state().ligand;

    if (step.num_masked > 0) {
      TrainingTarget target;
      target.fragment = step.bfs_order[keep];
      const Motif &motif = frag.fragments[target.fragment].motif;
      target.motif_key = motif.key;
      if (keep > 0) {
        const Replay::Step next = replay.next_step();
        target.fragment_site = next.fragment_site;
        target.motif_site = next.motif_site;
        target.torsion = measure_attach_torsion(replay.state().ligand,
                                                next.fragment_site, motif,
                                                next.motif_site);
      }
      step.target = std::move(target);
    }
    out.push_back(std::move(step));
  }
  return out;
}

std::string write_trajectories(std::span<const TrainingStep> steps,
                               const std::string &ligand_name) {
  std::string out = fmt::format("TRAJ v1 {}\n", steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const TrainingStep &s = steps[i];
    json j;
    j["sample"] = i;
    j["ligand"] = ligand_name;
    j["mask_ratio"] = rounded(s.mask_ratio);
    j["num_motifs"] = s.num_motifs;
    j["num_masked"] = s.num_masked;
    j["bfs_order"] = s.bfs_order;

    json atoms = json::array(), bonds = json::array(), slots = json::array();
    for (const Atom &a: s.context.mol.atoms())
      atoms.push_back({ { "element", element_symbol(a.atomic_number) },
                        { "charge", a.formal_charge },
                        { "xyz", vec_json(a.coord) } });
    for (const Bond &b: s.context.mol.bonds())
      bonds.push_back(json::array({ b.a, b.b, static_cast<int>(b.order) }));
    for (const OpenSlot &sl: s.context.slots)
      slots.push_back({ { "atom", sl.atom }, { "xyz", vec_json(sl.position) } });
    j["context"] = { { "atoms", atoms }, { "bonds", bonds }, { "slots", slots } };

    if (s.target) {
      json t;
      t["motif_key"] = s.target->motif_key.hex();
      t["fragment"] = s.target->fragment;
      t["fragment_site"] = s.target->fragment_site ? site_json(*s.target->fragment_site)
                                                   : json(nullptr);
      t["motif_site"] = s.target->motif_site ? site_json(*s.target->motif_site)
                                             : json(nullptr);
      t["torsion"] = s.target->torsion ? json(rounded(*s.target->torsion))
                                       : json(nullptr);
      j["target"] = t;
    } else {
      j["target"] = nullptr;
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace confmotif
