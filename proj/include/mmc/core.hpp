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

#ifndef MMC_CORE_HPP_
#define MMC_CORE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmc/errors.hpp"
#include "mmc/market.hpp"

namespace mmc {

inline constexpr std::size_t kDefaultEdgeBound = 12;
inline constexpr std::size_t kDefaultVertexBound = 10;

/// Non-empty set of doctors and hospitals.
struct Coalition {
  DoctorSet doctors;
  HospitalSet hospitals;

  bool empty() const { return doctors.empty() && hospitals.empty(); }
  std::size_t size() const { return doctors.size() + hospitals.size(); }

  friend bool operator==(const Coalition&, const Coalition&) = default;
};

/// Modes of coalition blocking, from strongest requirement to weakest.
/// strong: every member strictly better. weak: every member at least as
/// well off and one strictly better. super_weak: every member at least as
/// well off and one assigned differently.
enum class BlockMode { strong, weak, super_weak };

inline const char* to_string(BlockMode m) {
  switch (m) {
    case BlockMode::strong: return "strong";
    case BlockMode::weak: return "weak";
    case BlockMode::super_weak: return "super_weak";
  }
  return "?";
}

struct CoalitionBlockReport {
  Coalition coalition;
  BlockMode mode = BlockMode::strong;
  EdgeSet witness;  // σ, a matching inside E(C)

  friend bool operator==(const CoalitionBlockReport&,
                         const CoalitionBlockReport&) = default;
};

struct CoreMembership {
  bool in_weak_core = true;    // no strongly blocking coalition
  bool in_strong_core = true;  // no weakly blocking coalition
  bool in_super_core = true;   // no super-weakly blocking coalition
  /// First blocking coalition found for each mode, in coalition order.
  std::optional<CoalitionBlockReport> strong_block;
  std::optional<CoalitionBlockReport> weak_block;
  std::optional<CoalitionBlockReport> super_weak_block;
  std::size_t coalitions_scanned = 0;
};

struct CoreOptions {
  /// Skip coalitions without a hospital; such coalitions never block.
  bool prune = true;
  std::size_t max_vertices = kDefaultVertexBound;
  std::size_t max_edges = kDefaultEdgeBound;
};

/// E(C): edges with both endpoints in C.
inline EdgeSet coalition_edges(const Instance& inst, const Coalition& c) {
  EdgeSet out;
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    const Edge& x = inst.edge(e);
    if (c.doctors.contains(x.doctor) && c.hospitals.contains(x.hospital)) {
      out.insert(e);
    }
  }
  return out;
}

namespace detail {

inline void require_coalition(const Instance& inst, const Coalition& c) {
  if (c.empty()) {
    throw PreconditionError(Violation::invalid_argument,
                            "coalition must be non-empty");
  }
  if (!c.doctors.is_subset_of(DoctorSet::range(inst.num_doctors())) ||
      !c.hospitals.is_subset_of(HospitalSet::range(inst.num_hospitals()))) {
    throw PreconditionError(Violation::not_subset_of_ground,
                            "coalition names vertices outside the instance");
  }
}

/// All matchings using only edges of `allowed`, ascending by bitmask.
/// Backtracks over edges in id order; a hospital's partial assignment is
/// pruned as soon as it becomes dependent.
inline std::vector<EdgeSet> matchings_within(const Instance& inst,
                                             EdgeSet allowed) {
  const std::vector<EdgeId> order = allowed.to_vector();
  std::vector<EdgeSet> out;
  DoctorSet busy;
  EdgeSet current;
  auto go = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      out.push_back(current);
      return;
    }
    self(self, k + 1);
    const EdgeId e = order[k];
    const Edge& x = inst.edge(e);
    if (busy.contains(x.doctor)) return;
    const EdgeSet held = assigned_set(inst, current, x.hospital);
    if (!inst.matroid(x.hospital).independent(held.with(e))) return;
    busy.insert(x.doctor);
    current.insert(e);
    self(self, k + 1);
    current.erase(e);
    busy.erase(x.doctor);
  };
  go(go, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// True iff every member of C is matched only along edges of E(C).
inline bool is_consistent(const Instance& inst, EdgeSet mu,
                          const Coalition& c) {
  detail::require_coalition(inst, c);
  require_edges(inst, mu);
  const EdgeSet inside = coalition_edges(inst, c);
  for (std::size_t d : c.doctors) {
    if (!(mu & inst.doctor_edges(d)).is_subset_of(inside)) return false;
  }
  for (std::size_t h : c.hospitals) {
    if (!(mu & inst.hospital_edges(h)).is_subset_of(inside)) return false;
  }
  return true;
}

/// Every matching of the instance, ascending by bitmask.
inline std::vector<EdgeSet> enumerate_matchings(
    const Instance& inst, std::size_t max_edges = kDefaultEdgeBound) {
  detail::require_bound(inst.all_edges(), max_edges, "enumerate_matchings");
  return detail::matchings_within(inst, inst.all_edges());
}

/// The matchings σ ⊆ E(C), ascending by bitmask. Members' assignments are
/// all that coalition blocking inspects, so edges outside E(C) are never
/// needed.
inline std::vector<EdgeSet> consistent_matchings(
    const Instance& inst, const Coalition& c,
    std::size_t max_edges = kDefaultEdgeBound) {
  detail::require_coalition(inst, c);
  const EdgeSet inside = coalition_edges(inst, c);
  detail::require_bound(inside, max_edges, "consistent_matchings");
  return detail::matchings_within(inst, inside);
}

namespace detail {

struct Improvement {
  bool all_weakly_better = true;
  bool all_strictly_better = true;
  bool any_strictly_better = false;
  bool any_different = false;

  void add(std::weak_ordering c, bool different) {
    all_weakly_better = all_weakly_better && c >= 0;
    all_strictly_better = all_strictly_better && c > 0;
    any_strictly_better = any_strictly_better || c > 0;
    any_different = any_different || different;
  }

  bool blocks(BlockMode mode) const {
    switch (mode) {
      case BlockMode::strong: return all_strictly_better;
      case BlockMode::weak:
        return all_weakly_better && any_strictly_better;
      case BlockMode::super_weak: return all_weakly_better && any_different;
    }
    return false;
  }
};

}  // namespace detail

/// First σ among consistent_matchings(C) with which C blocks μ in `mode`.
/// Comparisons go through doctor_compare and hospital_compare_sets.
inline std::optional<CoalitionBlockReport> coalition_blocks(
    const Instance& inst, EdgeSet mu, const Coalition& c, BlockMode mode,
    std::size_t max_edges = kDefaultEdgeBound) {
  require_matching(inst, mu);
  for (EdgeSet sigma : consistent_matchings(inst, c, max_edges)) {
    detail::Improvement imp;
    for (std::size_t d : c.doctors) {
      const auto now = assigned_edge(inst, mu, d);
      const auto then = assigned_edge(inst, sigma, d);
      imp.add(doctor_compare(inst, d, then, now), then != now);
    }
    for (std::size_t h : c.hospitals) {
      const EdgeSet now = assigned_set(inst, mu, h);
      const EdgeSet then = assigned_set(inst, sigma, h);
      imp.add(hospital_compare_sets(inst, h, then, now), then != now);
    }
    if (imp.blocks(mode)) return CoalitionBlockReport{c, mode, sigma};
  }
  return std::nullopt;
}

/// Every matching of an instance with each vertex's valuation of it
/// precomputed, for repeated core scans over the same instance.
class MatchingTable {
 public:
  explicit MatchingTable(const Instance& inst,
                         std::size_t max_edges = kDefaultEdgeBound)
      : inst_(&inst), matchings_(enumerate_matchings(inst, max_edges)) {
    ranks_.reserve(matchings_.size() * inst.num_doctors());
    values_.reserve(matchings_.size() * inst.num_hospitals());
    for (EdgeSet m : matchings_) append_valuation(m, ranks_, values_);
  }

  const Instance& instance() const { return *inst_; }
  const std::vector<EdgeSet>& matchings() const { return matchings_; }

  /// Tier rank of σ(d) for the k-th matching (tiers count = unmatched).
  std::size_t rank(std::size_t k, std::size_t d) const {
    return ranks_[k * inst_->num_doctors() + d];
  }
  std::int64_t value(std::size_t k, std::size_t h) const {
    return values_[k * inst_->num_hospitals() + h];
  }

  void append_valuation(EdgeSet m, std::vector<std::size_t>& ranks,
                        std::vector<std::int64_t>& values) const {
    for (std::size_t d = 0; d < inst_->num_doctors(); ++d) {
      const auto e = assigned_edge(*inst_, m, d);
      ranks.push_back(e ? inst_->tier_of(*e) : inst_->tiers(d).size());
    }
    for (std::size_t h = 0; h < inst_->num_hospitals(); ++h) {
      values.push_back(hospital_value(*inst_, assigned_set(*inst_, m, h)));
    }
  }

 private:
  const Instance* inst_;
  std::vector<EdgeSet> matchings_;
  std::vector<std::size_t> ranks_;
  std::vector<std::int64_t> values_;
};

/// Membership of μ in the weak, strong and super cores, by scanning every
/// non-empty coalition (ascending vertex bitmask, doctors in the low bits)
/// against every matching inside E(C). One pass decides all three modes.
inline CoreMembership core_membership(const MatchingTable& table, EdgeSet mu,
                                      const CoreOptions& options = {}) {
  const Instance& inst = table.instance();
  require_matching(inst, mu);
  const std::size_t nd = inst.num_doctors();
  const std::size_t nh = inst.num_hospitals();
  const std::size_t nv = nd + nh;
  // Coalitions are vertex bitmasks, so 63 vertices is a hard ceiling.
  const std::size_t limit = std::min<std::size_t>(options.max_vertices, 63);
  if (nv > limit) {
    throw BoundExceeded("core_membership: vertex count", nv, limit);
  }

  std::vector<std::size_t> mu_rank;
  std::vector<std::int64_t> mu_value;
  table.append_valuation(mu, mu_rank, mu_value);

  CoreMembership out;
  const std::uint64_t doctor_mask = (std::uint64_t{1} << nd) - 1;
  const std::uint64_t all = (std::uint64_t{1} << nv) - 1;
  const auto& matchings = table.matchings();

  for (std::uint64_t v = 1; v <= all; ++v) {
    Coalition c{DoctorSet::from_bits(v & doctor_mask),
                HospitalSet::from_bits(v >> nd)};
    if (options.prune && c.hospitals.empty()) continue;
    ++out.coalitions_scanned;
    const EdgeSet inside = coalition_edges(inst, c);

    for (std::size_t k = 0; k < matchings.size(); ++k) {
      const EdgeSet sigma = matchings[k];
      if (!sigma.is_subset_of(inside)) continue;
      detail::Improvement imp;
      for (std::size_t d : c.doctors) {
        const std::size_t now = mu_rank[d];
        const std::size_t then = table.rank(k, d);
        imp.add(now <=> then,
                (sigma & inst.doctor_edges(d)) != (mu & inst.doctor_edges(d)));
      }
      for (std::size_t h : c.hospitals) {
        imp.add(table.value(k, h) <=> mu_value[h],
                (sigma & inst.hospital_edges(h)) !=
                    (mu & inst.hospital_edges(h)));
      }
      if (!out.strong_block && imp.blocks(BlockMode::strong)) {
        out.strong_block = CoalitionBlockReport{c, BlockMode::strong, sigma};
      }
      if (!out.weak_block && imp.blocks(BlockMode::weak)) {
        out.weak_block = CoalitionBlockReport{c, BlockMode::weak, sigma};
      }
      if (!out.super_weak_block && imp.blocks(BlockMode::super_weak)) {
        out.super_weak_block =
            CoalitionBlockReport{c, BlockMode::super_weak, sigma};
      }
    }
    if (out.strong_block && out.weak_block && out.super_weak_block) break;
  }
  out.in_weak_core = !out.strong_block;
  out.in_strong_core = !out.weak_block;
  out.in_super_core = !out.super_weak_block;
  return out;
}

inline CoreMembership core_membership(const Instance& inst, EdgeSet mu,
                                      const CoreOptions& options = {}) {
  if (inst.num_vertices() > options.max_vertices) {
    throw BoundExceeded("core_membership: vertex count", inst.num_vertices(),
                        options.max_vertices);
  }
  return core_membership(MatchingTable(inst, options.max_edges), mu, options);
}

}  // namespace mmc

#endif  // MMC_CORE_HPP_
