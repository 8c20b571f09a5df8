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

#ifndef MMC_HARNESS_HPP_
#define MMC_HARNESS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mmc/core.hpp"
#include "mmc/errors.hpp"
#include "mmc/market.hpp"
#include "mmc/matroid_impls.hpp"
#include "mmc/stability.hpp"

namespace mmc {

/// Seeded pseudo-random source. Draws are derived from the raw
/// std::mt19937_64 output only, so streams are identical across standard
/// library implementations (the std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return static_cast<std::size_t>(x % bound);
  }
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + below(hi - lo + 1);
  }
  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class MatroidKind { uniform, laminar, mixed };

inline const char* to_string(MatroidKind k) {
  switch (k) {
    case MatroidKind::uniform: return "uniform";
    case MatroidKind::laminar: return "laminar";
    case MatroidKind::mixed: return "mixed";
  }
  return "?";
}

struct GenConfig {
  std::size_t n_doctors = 4;
  std::size_t n_hospitals = 3;
  /// Draw |D| and |H| uniformly from [1, n] instead of using n exactly.
  bool randomize_sizes = false;
  /// Random edges are dropped until at most this many remain.
  std::size_t max_edges = 9;
  double edge_probability = 0.6;
  /// 0 gives strict preferences on both sides; 1 makes every doctor
  /// indifferent among all hospitals and every utility equal.
  double tie_intensity = 0.5;
  MatroidKind matroid_kind = MatroidKind::mixed;
  /// Lower bound for uniform capacities and laminar root caps, clamped to
  /// |E(h)|.
  std::size_t min_capacity = 1;
  std::uint64_t seed = 0;
};

inline void validate(const GenConfig& c) {
  auto fail = [](const std::string& what) {
    throw PreconditionError(Violation::invalid_argument, what);
  };
  if (c.n_doctors < 1 || c.n_hospitals < 1) {
    fail("n_doctors and n_hospitals must be positive");
  }
  if (c.n_doctors > 32 || c.n_hospitals > 32) {
    fail("at most 32 doctors and 32 hospitals are supported");
  }
  if (c.max_edges > EdgeSet::kCapacity) fail("max_edges must be at most 64");
  if (!(c.edge_probability > 0.0 && c.edge_probability <= 1.0)) {
    fail("edge_probability must lie in (0, 1]");
  }
  if (!(c.tie_intensity >= 0.0 && c.tie_intensity <= 1.0)) {
    fail("tie_intensity must lie in [0, 1]");
  }
  if (c.min_capacity < 1) fail("min_capacity must be at least 1");
}

namespace detail {

inline void split_laminar(Rng& rng, std::vector<Element> part,
                          std::vector<CappedSet>& sets) {
  if (part.size() < 2) return;
  rng.shuffle(part);
  const std::size_t cut = rng.between(1, part.size() - 1);
  std::vector<Element> left(part.begin(), part.begin() + cut);
  std::vector<Element> right(part.begin() + cut, part.end());
  for (auto* side : {&left, &right}) {
    if (rng.chance(0.5)) {
      ElementSet members;
      for (Element e : *side) members.insert(e);
      sets.push_back({members, rng.between(1, side->size())});
    }
    split_laminar(rng, *side, sets);
  }
}

inline Matroid random_matroid(Rng& rng, ElementSet ground, MatroidKind kind,
                              std::size_t min_capacity) {
  const std::size_t n = ground.size();
  if (n == 0) return make_uniform(ground, 1);
  if (kind == MatroidKind::mixed) {
    kind = rng.chance(0.5) ? MatroidKind::uniform : MatroidKind::laminar;
  }
  const std::size_t root_cap = rng.between(std::min(min_capacity, n), n);
  if (kind == MatroidKind::uniform) return make_uniform(ground, root_cap);
  // Recursive splitting yields a laminar family by construction.
  std::vector<CappedSet> sets{{ground, root_cap}};
  split_laminar(rng, ground.to_vector(), sets);
  return make_laminar(ground, std::move(sets));
}

}  // namespace detail

/// Random market; a pure function of the configuration (seed included).
inline Instance generate(const GenConfig& config) {
  validate(config);
  Rng rng(config.seed);
  const std::size_t nd = config.randomize_sizes
                             ? rng.between(1, config.n_doctors)
                             : config.n_doctors;
  const std::size_t nh = config.randomize_sizes
                             ? rng.between(1, config.n_hospitals)
                             : config.n_hospitals;

  InstanceParts p;
  for (std::size_t d = 0; d < nd; ++d) p.doctors.push_back("d" + std::to_string(d + 1));
  for (std::size_t h = 0; h < nh; ++h) p.hospitals.push_back("h" + std::to_string(h + 1));
  for (std::size_t d = 0; d < nd; ++d) {
    for (std::size_t h = 0; h < nh; ++h) {
      if (rng.chance(config.edge_probability)) p.edges.push_back({d, h});
    }
  }
  while (p.edges.size() > config.max_edges) {
    p.edges.erase(p.edges.begin() +
                  static_cast<std::ptrdiff_t>(rng.below(p.edges.size())));
  }

  p.doctor_tiers.resize(nd);
  for (std::size_t d = 0; d < nd; ++d) {
    std::vector<EdgeId> mine;
    for (EdgeId e = 0; e < p.edges.size(); ++e) {
      if (p.edges[e].doctor == d) mine.push_back(e);
    }
    rng.shuffle(mine);
    for (std::size_t i = 0; i < mine.size(); ++i) {
      if (i == 0 || !rng.chance(config.tie_intensity)) {
        p.doctor_tiers[d].emplace_back();
      }
      p.doctor_tiers[d].back().insert(mine[i]);
    }
  }

  p.utilities.assign(p.edges.size(), 1);
  for (std::size_t h = 0; h < nh; ++h) {
    std::vector<EdgeId> mine;
    for (EdgeId e = 0; e < p.edges.size(); ++e) {
      if (p.edges[e].hospital == h) mine.push_back(e);
    }
    const std::size_t n = mine.size();
    if (config.tie_intensity == 0.0) {
      std::vector<std::int64_t> values(n);
      for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<std::int64_t>(i + 1);
      rng.shuffle(values);
      for (std::size_t i = 0; i < n; ++i) p.utilities[mine[i]] = values[i];
    } else {
      // Fewer distinct values means more ties.
      const auto range = std::max<std::size_t>(
          1, static_cast<std::size_t>(
                 std::ceil((1.0 - config.tie_intensity) * static_cast<double>(n))));
      for (EdgeId e : mine) {
        p.utilities[e] = static_cast<std::int64_t>(rng.between(1, range));
      }
    }
  }

  for (std::size_t h = 0; h < nh; ++h) {
    EdgeSet ground;
    for (EdgeId e = 0; e < p.edges.size(); ++e) {
      if (p.edges[e].hospital == h) ground.insert(e);
    }
    p.matroids.push_back(detail::random_matroid(rng, ground, config.matroid_kind,
                                                config.min_capacity));
  }
  return Instance(std::move(p));
}

// ---------------------------------------------------------------------------
// Set computation and theorem checks

struct MatchingRow {
  EdgeSet matching;
  StabilityClass stability;
  CoreMembership core;
};

/// The weakly/strongly/super-stable matchings and the weak/strong/super
/// cores of an instance, each ascending by bitmask.
struct StableSets {
  std::vector<MatchingRow> rows;
  std::vector<EdgeSet> s, ss, sss;
  std::vector<EdgeSet> c, c_s, c_ss;
};

inline StableSets compute_sets(const Instance& inst,
                               const CoreOptions& options = {}) {
  if (inst.num_vertices() > options.max_vertices) {
    throw BoundExceeded("compute_sets: vertex count", inst.num_vertices(),
                        options.max_vertices);
  }
  const MatchingTable table(inst, options.max_edges);
  StableSets out;
  for (EdgeSet mu : table.matchings()) {
    MatchingRow row{mu, stability_class(inst, mu),
                    core_membership(table, mu, options)};
    if (row.stability.weakly_stable) out.s.push_back(mu);
    if (row.stability.strongly_stable) out.ss.push_back(mu);
    if (row.stability.super_stable) out.sss.push_back(mu);
    if (row.core.in_weak_core) out.c.push_back(mu);
    if (row.core.in_strong_core) out.c_s.push_back(mu);
    if (row.core.in_super_core) out.c_ss.push_back(mu);
    out.rows.push_back(std::move(row));
  }
  return out;
}

struct TheoremViolation {
  std::string claim;  // "S<=C", "SS=C_S", "SSS=C_SS", or a hierarchy claim
  EdgeSet matching;

  friend bool operator==(const TheoremViolation&,
                         const TheoremViolation&) = default;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::size_t doctors = 0;
  std::size_t hospitals = 0;
  std::size_t edges = 0;
  std::size_t matchings = 0;
  std::size_t s = 0, ss = 0, sss = 0;
  std::size_t c = 0, c_s = 0, c_ss = 0;
  /// |C \ S|: core matchings that are not weakly stable.
  std::size_t core_not_stable = 0;
  bool s_subset_c = true;
  bool ss_equals_cs = true;
  bool sss_equals_css = true;
  bool stable_hierarchy = true;  // SSS ⊆ SS ⊆ S
  bool core_hierarchy = true;    // C_SS ⊆ C_S ⊆ C
  /// False when the pruned scan disagreed with the unpruned re-check.
  bool prune_consistent = true;
  std::vector<TheoremViolation> violations;

  bool ok() const {
    return s_subset_c && ss_equals_cs && sss_equals_css && stable_hierarchy &&
           core_hierarchy && prune_consistent;
  }
};

namespace detail {

inline std::vector<EdgeSet> minus(const std::vector<EdgeSet>& a,
                                  const std::vector<EdgeSet>& b) {
  std::vector<EdgeSet> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline void collect(const StableSets& sets,
                    std::vector<TheoremViolation>& out) {
  auto add = [&](const char* claim, const std::vector<EdgeSet>& bad) {
    for (EdgeSet mu : bad) out.push_back({claim, mu});
  };
  add("S<=C", minus(sets.s, sets.c));
  add("SS=C_S", minus(sets.ss, sets.c_s));
  add("SS=C_S", minus(sets.c_s, sets.ss));
  add("SSS=C_SS", minus(sets.sss, sets.c_ss));
  add("SSS=C_SS", minus(sets.c_ss, sets.sss));
  add("SSS<=SS", minus(sets.sss, sets.ss));
  add("SS<=S", minus(sets.ss, sets.s));
  add("C_SS<=C_S", minus(sets.c_ss, sets.c_s));
  add("C_S<=C", minus(sets.c_s, sets.c));
}

inline bool same_rows(const StableSets& a, const StableSets& b) {
  return a.s == b.s && a.ss == b.ss && a.sss == b.sss && a.c == b.c &&
         a.c_s == b.c_s && a.c_ss == b.c_ss;
}

}  // namespace detail

/// Checks S ⊆ C, SS = C_S and SSS = C_SS (plus both set hierarchies) by
/// exact set comparison. Any failure is recomputed with pruning disabled;
/// only failures that survive the unpruned scan are listed as violations.
inline VerificationReport verify_theorems(const Instance& inst,
                                          const CoreOptions& options = {}) {
  StableSets sets = compute_sets(inst, options);
  std::vector<TheoremViolation> found;
  detail::collect(sets, found);

  VerificationReport r;
  if (!found.empty() && options.prune) {
    CoreOptions unpruned = options;
    unpruned.prune = false;
    StableSets recheck = compute_sets(inst, unpruned);
    r.prune_consistent = detail::same_rows(sets, recheck);
    sets = std::move(recheck);
    found.clear();
    detail::collect(sets, found);
  }

  r.doctors = inst.num_doctors();
  r.hospitals = inst.num_hospitals();
  r.edges = inst.num_edges();
  r.matchings = sets.rows.size();
  r.s = sets.s.size();
  r.ss = sets.ss.size();
  r.sss = sets.sss.size();
  r.c = sets.c.size();
  r.c_s = sets.c_s.size();
  r.c_ss = sets.c_ss.size();
  r.core_not_stable = detail::minus(sets.c, sets.s).size();
  for (const TheoremViolation& v : found) {
    if (v.claim == "S<=C") r.s_subset_c = false;
    if (v.claim == "SS=C_S") r.ss_equals_cs = false;
    if (v.claim == "SSS=C_SS") r.sss_equals_css = false;
    if (v.claim == "SSS<=SS" || v.claim == "SS<=S") r.stable_hierarchy = false;
    if (v.claim == "C_SS<=C_S" || v.claim == "C_S<=C") r.core_hierarchy = false;
  }
  r.violations = std::move(found);
  return r;
}

/// Order-insensitive aggregate over verification reports.
class VerificationSummary {
 public:
  void add(const VerificationReport& r) {
    ++instances_;
    if (!r.ok()) ++failing_;
    if (!r.s_subset_c) ++s_subset_c_failures_;
    if (!r.ss_equals_cs) ++ss_equals_cs_failures_;
    if (!r.sss_equals_css) ++sss_equals_css_failures_;
    if (!r.stable_hierarchy || !r.core_hierarchy) ++hierarchy_failures_;
    if (!r.prune_consistent) ++prune_failures_;
    if (r.s >= 1) ++nonempty_s_;
    if (r.ss == 0) ++empty_ss_;
    if (r.sss == 0) ++empty_sss_;
    if (r.core_not_stable > 0) ++core_not_stable_;
    ++hist_s_[r.s];
    ++hist_ss_[r.ss];
    ++hist_sss_[r.sss];
    ++hist_c_[r.c];
    matchings_ += r.matchings;
  }

  std::size_t instances() const { return instances_; }
  std::size_t failing() const { return failing_; }
  std::size_t nonempty_s() const { return nonempty_s_; }
  std::size_t empty_ss() const { return empty_ss_; }
  std::size_t core_not_stable() const { return core_not_stable_; }

  void write(std::ostream& os) const {
    os << "instances: " << instances_ << "\n"
       << "matchings examined: " << matchings_ << "\n"
       << "violations: S<=C " << s_subset_c_failures_ << ", SS=C_S "
       << ss_equals_cs_failures_ << ", SSS=C_SS " << sss_equals_css_failures_
       << ", hierarchy " << hierarchy_failures_ << ", prune mismatch "
       << prune_failures_ << "\n"
       << "instances with |S|>=1: " << nonempty_s_ << "\n"
       << "instances with SS empty: " << empty_ss_ << "\n"
       << "instances with SSS empty: " << empty_sss_ << "\n"
       << "instances with C\\S non-empty: " << core_not_stable_ << "\n";
    write_hist(os, "|S|", hist_s_);
    write_hist(os, "|SS|", hist_ss_);
    write_hist(os, "|SSS|", hist_sss_);
    write_hist(os, "|C|", hist_c_);
    os << (failing_ == 0 ? "result: all theorems hold\n"
                         : "result: VIOLATIONS FOUND\n");
  }

 private:
  static void write_hist(std::ostream& os, const char* name,
                         const std::map<std::size_t, std::size_t>& h) {
    os << name << " histogram:";
    for (const auto& [size, count] : h) os << " " << size << ":" << count;
    os << "\n";
  }

  std::size_t instances_ = 0, failing_ = 0, matchings_ = 0;
  std::size_t s_subset_c_failures_ = 0, ss_equals_cs_failures_ = 0,
              sss_equals_css_failures_ = 0, hierarchy_failures_ = 0,
              prune_failures_ = 0;
  std::size_t nonempty_s_ = 0, empty_ss_ = 0, empty_sss_ = 0,
              core_not_stable_ = 0;
  std::map<std::size_t, std::size_t> hist_s_, hist_ss_, hist_sss_, hist_c_;
};

// ---------------------------------------------------------------------------
// Search for a weak-core matching that is not weakly stable

struct CoreNotStableWitness {
  std::uint64_t seed;
  Instance instance;
  EdgeSet matching;
  /// An edge strongly blocking the matching, so it is not weakly stable.
  EdgeBlockReport blocking_edge;
  /// Exhaustive unpruned coalition scan showing no strong block.
  CoreMembership certificate;
};

/// Tries instances generated from seeds config.seed, config.seed + 1, ...
/// and returns the first matching found in C \ S.
inline std::optional<CoreNotStableWitness> find_core_not_stable(
    const GenConfig& config, std::size_t attempts,
    const CoreOptions& options = {}) {
  if (attempts < 1) {
    throw PreconditionError(Violation::invalid_argument,
                            "attempts must be at least 1");
  }
  validate(config);
  for (std::size_t i = 0; i < attempts; ++i) {
    GenConfig c = config;
    c.seed = config.seed + i;
    Instance inst = generate(c);
    if (inst.num_vertices() > options.max_vertices ||
        inst.num_edges() > options.max_edges) {
      continue;
    }
    const MatchingTable table(inst, options.max_edges);
    for (EdgeSet mu : table.matchings()) {
      if (stability_class(inst, mu).weakly_stable) continue;
      if (!core_membership(table, mu, options).in_weak_core) continue;
      CoreOptions unpruned = options;
      unpruned.prune = false;
      CoreMembership certificate = core_membership(table, mu, unpruned);
      if (!certificate.in_weak_core) continue;
      const auto blocks = find_blocking_edges(inst, mu, Notion::weak);
      return CoreNotStableWitness{c.seed, std::move(inst), mu, blocks.front(),
                                  std::move(certificate)};
    }
  }
  return std::nullopt;
}

}  // namespace mmc

#endif  // MMC_HARNESS_HPP_
