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

#ifndef MMC_MARKET_HPP_
#define MMC_MARKET_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmc/errors.hpp"
#include "mmc/matroid.hpp"
#include "mmc/small_set.hpp"

namespace mmc {

using EdgeId = Element;
using EdgeSet = ElementSet;

struct DoctorTag;
struct HospitalTag;
using DoctorSet = SmallSet<DoctorTag>;
using HospitalSet = SmallSet<HospitalTag>;

struct Edge {
  std::size_t doctor = 0;
  std::size_t hospital = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unvalidated description of a market. Edge ids are positions in `edges`;
/// doctor and hospital ids are positions in `doctors` and `hospitals`.
struct InstanceParts {
  std::vector<std::string> doctors;
  std::vector<std::string> hospitals;
  std::vector<Edge> edges;
  /// Per doctor, best tier first. Together the tiers partition E(d).
  std::vector<std::vector<EdgeSet>> doctor_tiers;
  /// Per edge, the hospital's (positive) utility for it.
  std::vector<std::int64_t> utilities;
  /// Per hospital, a matroid whose ground set is E(h).
  std::vector<Matroid> matroids;
};

/// Validated, immutable many-to-one market with tie-laden doctor
/// preferences, additive hospital preferences and one matroid per hospital.
class Instance {
 public:
  /// Throws ValidationError naming the offending field.
  explicit Instance(InstanceParts parts) : parts_(std::move(parts)) {
    validate();
  }

  std::size_t num_doctors() const { return parts_.doctors.size(); }
  std::size_t num_hospitals() const { return parts_.hospitals.size(); }
  std::size_t num_edges() const { return parts_.edges.size(); }
  std::size_t num_vertices() const { return num_doctors() + num_hospitals(); }

  const std::string& doctor_name(std::size_t d) const {
    return parts_.doctors.at(d);
  }
  const std::string& hospital_name(std::size_t h) const {
    return parts_.hospitals.at(h);
  }
  const Edge& edge(EdgeId e) const { return parts_.edges.at(e); }
  const std::vector<Edge>& edges() const { return parts_.edges; }

  EdgeSet all_edges() const { return EdgeSet::range(num_edges()); }
  EdgeSet doctor_edges(std::size_t d) const { return doctor_edges_.at(d); }
  EdgeSet hospital_edges(std::size_t h) const { return hospital_edges_.at(h); }

  const std::vector<EdgeSet>& tiers(std::size_t d) const {
    return parts_.doctor_tiers.at(d);
  }
  /// Position of e's tier in its doctor's list; 0 is the best tier.
  std::size_t tier_of(EdgeId e) const { return tier_of_.at(e); }
  std::int64_t utility(EdgeId e) const { return parts_.utilities.at(e); }
  const Matroid& matroid(std::size_t h) const { return parts_.matroids.at(h); }

  const InstanceParts& parts() const { return parts_; }

  std::optional<std::size_t> find_doctor(const std::string& name) const {
    return find_name(parts_.doctors, name);
  }
  std::optional<std::size_t> find_hospital(const std::string& name) const {
    return find_name(parts_.hospitals, name);
  }
  std::optional<EdgeId> find_edge(std::size_t d, std::size_t h) const {
    for (EdgeId e : doctor_edges(d)) {
      if (parts_.edges[e].hospital == h) return e;
    }
    return std::nullopt;
  }

  /// (d,h) as "d~h" using vertex names.
  std::string edge_name(EdgeId e) const {
    const Edge& x = edge(e);
    return doctor_name(x.doctor) + "~" + hospital_name(x.hospital);
  }
  std::string edge_set_name(EdgeSet s) const {
    std::string out = "{";
    bool first = true;
    for (EdgeId e : s) {
      if (!first) out += ", ";
      out += "(" + doctor_name(edge(e).doctor) + "," +
             hospital_name(edge(e).hospital) + ")";
      first = false;
    }
    return out + "}";
  }

 private:
  static std::optional<std::size_t> find_name(
      const std::vector<std::string>& names, const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return i;
    }
    return std::nullopt;
  }

  static void require_unique_names(const std::vector<std::string>& names,
                                   const std::string& field) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) {
        throw ValidationError(field + "[" + std::to_string(i) + "]",
                              "empty name");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (names[i] == names[j]) {
          throw ValidationError(field + "[" + std::to_string(i) + "]",
                                "duplicate name '" + names[i] + "'");
        }
      }
    }
  }

  void validate();

  InstanceParts parts_;
  std::vector<EdgeSet> doctor_edges_;
  std::vector<EdgeSet> hospital_edges_;
  std::vector<std::size_t> tier_of_;
};

inline void Instance::validate() {
  const InstanceParts& p = parts_;
  require_unique_names(p.doctors, "doctors");
  require_unique_names(p.hospitals, "hospitals");
  for (const std::string& d : p.doctors) {
    if (find_name(p.hospitals, d)) {
      throw ValidationError("hospitals", "'" + d +
                                             "' names both a doctor and a "
                                             "hospital");
    }
  }
  if (p.edges.size() > EdgeSet::kCapacity) {
    throw ValidationError("edges", "at most 64 edges are supported, got " +
                                       std::to_string(p.edges.size()));
  }

  doctor_edges_.assign(num_doctors(), EdgeSet{});
  hospital_edges_.assign(num_hospitals(), EdgeSet{});
  for (EdgeId e = 0; e < p.edges.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    const Edge& x = p.edges[e];
    if (x.doctor >= num_doctors() || x.hospital >= num_hospitals()) {
      throw ValidationError(where, "endpoint out of range");
    }
    for (EdgeId f = 0; f < e; ++f) {
      if (p.edges[f] == x) {
        throw ValidationError(where, "duplicate edge; the graph must be simple");
      }
    }
    doctor_edges_[x.doctor].insert(e);
    hospital_edges_[x.hospital].insert(e);
  }

  if (p.doctor_tiers.size() != num_doctors()) {
    throw ValidationError("doctor_prefs", "one tier list per doctor required");
  }
  tier_of_.assign(num_edges(), 0);
  for (std::size_t d = 0; d < num_doctors(); ++d) {
    const std::string where = "doctor_prefs." + p.doctors[d];
    EdgeSet seen;
    for (std::size_t t = 0; t < p.doctor_tiers[d].size(); ++t) {
      const EdgeSet tier = p.doctor_tiers[d][t];
      if (tier.empty()) {
        throw ValidationError(where + "[" + std::to_string(t) + "]",
                              "empty tier");
      }
      if (!tier.is_subset_of(doctor_edges_[d])) {
        throw ValidationError(where + "[" + std::to_string(t) + "]",
                              "tier lists a hospital without an edge to " +
                                  p.doctors[d]);
      }
      if (tier.intersects(seen)) {
        throw ValidationError(where + "[" + std::to_string(t) + "]",
                              "hospital ranked in more than one tier");
      }
      seen |= tier;
      for (EdgeId e : tier) tier_of_[e] = t;
    }
    if (seen != doctor_edges_[d]) {
      throw ValidationError(where, "every incident edge must appear in a tier");
    }
  }

  if (p.utilities.size() != num_edges()) {
    throw ValidationError("hospital_utils", "one utility per edge required");
  }
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (p.utilities[e] <= 0) {
      throw ValidationError(
          "hospital_utils." + p.hospitals[p.edges[e].hospital] + "." +
              p.doctors[p.edges[e].doctor],
          "utility must be a positive integer");
    }
  }

  if (p.matroids.size() != num_hospitals()) {
    throw ValidationError("matroids", "one matroid per hospital required");
  }
  for (std::size_t h = 0; h < num_hospitals(); ++h) {
    const std::string where = "matroids." + p.hospitals[h];
    if (p.matroids[h].ground() != hospital_edges_[h]) {
      throw ValidationError(where, "ground set must be exactly E(h)");
    }
    if (!p.matroids[h].independent(EdgeSet{})) {
      throw ValidationError(where, "the empty set must be independent");
    }
    for (EdgeId e : hospital_edges_[h]) {
      if (!p.matroids[h].independent(EdgeSet{e})) {
        throw ValidationError(where, "singleton {" + edge_name(e) +
                                         "} must be independent");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Matchings

/// μ(d), or nullopt when d is unmatched.
inline std::optional<EdgeId> assigned_edge(const Instance& inst, EdgeSet mu,
                                           std::size_t d) {
  const EdgeSet mine = mu & inst.doctor_edges(d);
  if (mine.empty()) return std::nullopt;
  return mine.front();
}

/// μ(h).
inline EdgeSet assigned_set(const Instance& inst, EdgeSet mu, std::size_t h) {
  return mu & inst.hospital_edges(h);
}

struct MatchingViolation {
  enum class Kind { doctor_overmatched, hospital_dependent };
  Kind kind;
  std::size_t vertex;  // doctor or hospital id, per kind
  std::string message;
};

inline void require_edges(const Instance& inst, EdgeSet mu) {
  if (!mu.is_subset_of(inst.all_edges())) {
    throw PreconditionError(Violation::not_subset_of_ground,
                            "edge set " + detail::set_string(mu) +
                                " contains ids that are not edges");
  }
}

/// The first violated matching condition, doctors before hospitals.
inline std::optional<MatchingViolation> matching_violation(const Instance& inst,
                                                           EdgeSet mu) {
  require_edges(inst, mu);
  for (std::size_t d = 0; d < inst.num_doctors(); ++d) {
    if ((mu & inst.doctor_edges(d)).size() > 1) {
      return MatchingViolation{
          MatchingViolation::Kind::doctor_overmatched, d,
          "|μ(" + inst.doctor_name(d) + ")| > 1: doctor holds " +
              inst.edge_set_name(mu & inst.doctor_edges(d))};
    }
  }
  for (std::size_t h = 0; h < inst.num_hospitals(); ++h) {
    const EdgeSet held = assigned_set(inst, mu, h);
    if (!inst.matroid(h).independent(held)) {
      return MatchingViolation{
          MatchingViolation::Kind::hospital_dependent, h,
          "μ(" + inst.hospital_name(h) + ") dependent: " +
              inst.edge_set_name(held) + " is not independent"};
    }
  }
  return std::nullopt;
}

inline bool is_matching(const Instance& inst, EdgeSet mu) {
  return !matching_violation(inst, mu).has_value();
}

inline void require_matching(const Instance& inst, EdgeSet mu) {
  if (auto v = matching_violation(inst, mu)) {
    throw PreconditionError(Violation::invalid_argument,
                            "not a matching: " + v->message);
  }
}

// ---------------------------------------------------------------------------
// Preferences

/// Compares two positions of doctor d, each an incident edge or nullopt
/// (unmatched). Lower tiers are better; unmatched is worse than every edge.
inline std::weak_ordering doctor_compare(const Instance& inst, std::size_t d,
                                         std::optional<EdgeId> x,
                                         std::optional<EdgeId> y) {
  const EdgeSet mine = inst.doctor_edges(d);
  auto rank = [&](std::optional<EdgeId> e) -> std::size_t {
    if (!e) return inst.tiers(d).size();
    if (!mine.contains(*e)) {
      throw PreconditionError(Violation::not_subset_of_ground,
                              "edge " + std::to_string(*e) +
                                  " is not incident to doctor " +
                                  inst.doctor_name(d));
    }
    return inst.tier_of(*e);
  };
  const std::size_t rx = rank(x);
  const std::size_t ry = rank(y);
  // Smaller rank is preferred.
  return ry <=> rx;
}

/// Additive value of an edge set at its hospital.
inline std::int64_t hospital_value(const Instance& inst, EdgeSet s) {
  std::int64_t total = 0;
  for (EdgeId e : s) total += inst.utility(e);
  return total;
}

/// Compares independent sets of E(h) by total utility. The empty set is
/// below every non-empty set since utilities are positive.
inline std::weak_ordering hospital_compare_sets(const Instance& inst,
                                                std::size_t h, EdgeSet i,
                                                EdgeSet j) {
  for (EdgeSet s : {i, j}) {
    detail::require_subset(s, inst.hospital_edges(h));
    if (!inst.matroid(h).independent(s)) {
      throw PreconditionError(Violation::set_dependent,
                              inst.edge_set_name(s) + " is dependent at " +
                                  inst.hospital_name(h));
    }
  }
  return std::weak_order(hospital_value(inst, i), hospital_value(inst, j));
}

inline std::weak_ordering hospital_compare_edges(const Instance& inst,
                                                 std::size_t h, EdgeId e,
                                                 EdgeId f) {
  return hospital_compare_sets(inst, h, EdgeSet{e}, EdgeSet{f});
}

// ---------------------------------------------------------------------------
// Responsiveness

enum class ResponsivenessFailure {
  none,
  empty_not_lowest,  // some I is not strictly above the empty set
  monotonicity,      // I is not strictly above I - e
  exchange,          // (I + e - f >= I) differs from (e >= f)
  refinement,        // strict/indifferent outcome of the swap differs
};

struct ResponsivenessReport {
  ResponsivenessFailure failure = ResponsivenessFailure::none;
  EdgeSet set;
  std::optional<EdgeId> e;
  std::optional<EdgeId> f;

  bool ok() const { return failure == ResponsivenessFailure::none; }

  std::string describe() const {
    auto id = [](std::optional<EdgeId> x) {
      return x ? std::to_string(*x) : std::string("-");
    };
    switch (failure) {
      case ResponsivenessFailure::none:
        return "responsive";
      case ResponsivenessFailure::empty_not_lowest:
        return "empty set not strictly below " + detail::set_string(set);
      case ResponsivenessFailure::monotonicity:
        return "I = " + detail::set_string(set) + " not strictly above I - " +
               id(e);
      case ResponsivenessFailure::exchange:
        return "I = " + detail::set_string(set) + ": I + " + id(e) + " - " +
               id(f) + " >= I disagrees with " + id(e) + " >= " + id(f);
      case ResponsivenessFailure::refinement:
        return "I = " + detail::set_string(set) + ": strict/indifferent swap " +
               id(e) + " for " + id(f) + " disagrees with the edge comparison";
    }
    return "unknown";
  }
};

/// Exhaustively checks that `compare` (a complete order over independent
/// sets, returning std::weak_ordering) is responsive with respect to `m`:
/// adding an edge is a strict improvement, and a feasible swap I + e - f
/// compares to I exactly as {e} compares to {f} (strict and indifferent
/// cases included).
template <IndependenceOracle M, class Compare>
ResponsivenessReport check_responsive(
    const M& m, Compare compare, std::size_t bound = kDefaultExhaustiveBound) {
  const ElementSet ground = m.ground();
  detail::require_bound(ground, bound, "check_responsive");
  const detail::IndependenceTable table(m);
  using RF = ResponsivenessFailure;

  for (std::size_t local = 1; local < table.size(); ++local) {
    if (!table.independent(local)) continue;
    const ElementSet set = table.expand(local);
    if (compare(set, ElementSet{}) != std::weak_ordering::greater) {
      return {RF::empty_not_lowest, set, std::nullopt, std::nullopt};
    }
  }
  for (std::size_t local = 0; local < table.size(); ++local) {
    if (!table.independent(local)) continue;
    const ElementSet set = table.expand(local);
    for (Element e : set) {
      if (compare(set, set.without(e)) != std::weak_ordering::greater) {
        return {RF::monotonicity, set, e, std::nullopt};
      }
    }
    for (Element e : ground - set) {
      for (Element f : set) {
        const ElementSet swapped = set.with(e).without(f);
        if (!m.independent(swapped)) continue;
        const std::weak_ordering sets = compare(swapped, set);
        const std::weak_ordering edges =
            compare(ElementSet{e}, ElementSet{f});
        if ((sets >= 0) != (edges >= 0)) return {RF::exchange, set, e, f};
        if (sets != edges) return {RF::refinement, set, e, f};
      }
    }
  }
  return {};
}

/// check_responsive for hospital h's additive preference.
inline ResponsivenessReport check_responsive(
    const Instance& inst, std::size_t h,
    std::size_t bound = kDefaultExhaustiveBound) {
  return check_responsive(
      inst.matroid(h),
      [&](EdgeSet i, EdgeSet j) {
        return std::weak_order(hospital_value(inst, i),
                               hospital_value(inst, j));
      },
      bound);
}

}  // namespace mmc

#endif  // MMC_MARKET_HPP_
