// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MMC_STABILITY_HPP_
#define MMC_STABILITY_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mmc/market.hpp"
#include "mmc/matroid.hpp"

namespace mmc {

/// How an unmatched edge blocks on one endpoint. `weak` means exactly a tie
/// (or, at the hospital, a tie with some displaced edge), so "weak or
/// strong" is the non-strict blocking condition.
enum class SideBlock { none, weak, strong };

/// Overall classification of an edge, ordered by severity.
enum class EdgeBlock { none, super_weak, weak, strong };

/// Stability notion to refute.
enum class Notion { weak, strong, super };

struct HospitalSideBlock {
  SideBlock strength = SideBlock::none;
  /// f in D(e, μ(h)) certifying the strength; absent on a free slot.
  std::optional<EdgeId> witness;
};

struct EdgeBlockReport {
  EdgeId edge = 0;
  SideBlock on_doctor = SideBlock::none;
  SideBlock on_hospital = SideBlock::none;
  EdgeBlock overall = EdgeBlock::none;
  std::optional<EdgeId> witness;

  friend bool operator==(const EdgeBlockReport&,
                         const EdgeBlockReport&) = default;
};

struct StabilityClass {
  bool weakly_stable = false;
  bool strongly_stable = false;
  bool super_stable = false;

  friend bool operator==(const StabilityClass&,
                         const StabilityClass&) = default;
};

inline const char* to_string(SideBlock s) {
  switch (s) {
    case SideBlock::none: return "none";
    case SideBlock::weak: return "weak";
    case SideBlock::strong: return "strong";
  }
  return "?";
}

inline const char* to_string(EdgeBlock b) {
  switch (b) {
    case EdgeBlock::none: return "none";
    case EdgeBlock::super_weak: return "super_weak";
    case EdgeBlock::weak: return "weak";
    case EdgeBlock::strong: return "strong";
  }
  return "?";
}

inline const char* to_string(Notion n) {
  switch (n) {
    case Notion::weak: return "weak";
    case Notion::strong: return "strong";
    case Notion::super: return "super";
  }
  return "?";
}

namespace detail {

inline void require_unmatched_edge(const Instance& inst, EdgeSet mu, EdgeId e) {
  if (e >= inst.num_edges()) {
    throw PreconditionError(Violation::element_not_in_ground,
                            "edge id " + std::to_string(e) + " out of range");
  }
  if (mu.contains(e)) {
    throw PreconditionError(Violation::element_in_set,
                            "edge " + inst.edge_name(e) +
                                " belongs to the matching");
  }
}

}  // namespace detail

inline SideBlock blocks_on_doctor(const Instance& inst, EdgeSet mu, EdgeId e) {
  detail::require_unmatched_edge(inst, mu, e);
  const std::size_t d = inst.edge(e).doctor;
  const std::weak_ordering c =
      doctor_compare(inst, d, e, assigned_edge(inst, mu, d));
  if (c > 0) return SideBlock::strong;
  if (c == 0) return SideBlock::weak;
  return SideBlock::none;
}

/// A free slot (μ(h) + e independent) blocks strongly. Otherwise the
/// strength is decided by the best displaceable f in D(e, μ(h)): strong if
/// e is strictly preferred to some f, weak if only ties exist.
inline HospitalSideBlock blocks_on_hospital(const Instance& inst, EdgeSet mu,
                                            EdgeId e) {
  detail::require_unmatched_edge(inst, mu, e);
  const std::size_t h = inst.edge(e).hospital;
  const Matroid& m = inst.matroid(h);
  const EdgeSet held = assigned_set(inst, mu, h);
  if (m.independent(held.with(e))) return {SideBlock::strong, std::nullopt};

  HospitalSideBlock best;
  for (EdgeId f : d_set(m, e, held)) {
    const auto c = std::weak_order(inst.utility(e), inst.utility(f));
    const SideBlock s = c > 0    ? SideBlock::strong
                        : c == 0 ? SideBlock::weak
                                 : SideBlock::none;
    if (s > best.strength) best = {s, f};
  }
  return best;
}

inline EdgeBlock combine(SideBlock on_doctor, SideBlock on_hospital) {
  if (on_doctor == SideBlock::none || on_hospital == SideBlock::none) {
    return EdgeBlock::none;
  }
  if (on_doctor == SideBlock::strong && on_hospital == SideBlock::strong) {
    return EdgeBlock::strong;
  }
  if (on_doctor == SideBlock::strong || on_hospital == SideBlock::strong) {
    return EdgeBlock::weak;
  }
  return EdgeBlock::super_weak;
}

inline EdgeBlockReport classify_edge(const Instance& inst, EdgeSet mu,
                                     EdgeId e) {
  EdgeBlockReport r;
  r.edge = e;
  r.on_doctor = blocks_on_doctor(inst, mu, e);
  const HospitalSideBlock hs = blocks_on_hospital(inst, mu, e);
  r.on_hospital = hs.strength;
  r.witness = hs.witness;
  r.overall = combine(r.on_doctor, r.on_hospital);
  return r;
}

/// Whether an edge classification refutes the given stability notion.
inline bool refutes(EdgeBlock b, Notion n) {
  switch (n) {
    case Notion::weak: return b == EdgeBlock::strong;
    case Notion::strong: return b >= EdgeBlock::weak;
    case Notion::super: return b >= EdgeBlock::super_weak;
  }
  return false;
}

/// Classification of every unmatched edge, in edge order.
inline std::vector<EdgeBlockReport> classify_all(const Instance& inst,
                                                 EdgeSet mu) {
  require_matching(inst, mu);
  std::vector<EdgeBlockReport> out;
  for (EdgeId e : inst.all_edges() - mu) {
    out.push_back(classify_edge(inst, mu, e));
  }
  return out;
}

inline StabilityClass stability_class(const Instance& inst, EdgeSet mu) {
  EdgeBlock worst = EdgeBlock::none;
  for (const EdgeBlockReport& r : classify_all(inst, mu)) {
    if (r.overall > worst) worst = r.overall;
  }
  return {!refutes(worst, Notion::weak), !refutes(worst, Notion::strong),
          !refutes(worst, Notion::super)};
}

inline std::vector<EdgeBlockReport> find_blocking_edges(const Instance& inst,
                                                        EdgeSet mu,
                                                        Notion notion) {
  std::vector<EdgeBlockReport> out;
  for (const EdgeBlockReport& r : classify_all(inst, mu)) {
    if (refutes(r.overall, notion)) out.push_back(r);
  }
  return out;
}

}  // namespace mmc

#endif  // MMC_STABILITY_HPP_
