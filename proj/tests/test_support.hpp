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

// Shared fixtures and brute-force oracles for the test suites. The oracles
// work from the definitions directly and share no code path with the
// library algorithms they check.

#ifndef MMC_TESTS_TEST_SUPPORT_HPP_
#define MMC_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmc/core.hpp"
#include "mmc/market.hpp"
#include "mmc/matroid.hpp"
#include "mmc/matroid_impls.hpp"
#include "mmc/stability.hpp"

namespace mmc::testing {

// Named elements for small matroid examples.
inline constexpr Element a = 0, b = 1, c = 2, d = 3;

inline ElementSet set_of(std::uint64_t bits) {
  return ElementSet::from_bits(bits);
}

/// Two doctors, one hospital of capacity 1. Edge 0 = (d1,h1), edge 1 =
/// (d2,h1). Each doctor has the single hospital in its only tier.
inline Instance two_doctors_one_seat(std::int64_t u1, std::int64_t u2) {
  InstanceParts p;
  p.doctors = {"d1", "d2"};
  p.hospitals = {"h1"};
  p.edges = {{0, 0}, {1, 0}};
  p.doctor_tiers = {{EdgeSet{0}}, {EdgeSet{1}}};
  p.utilities = {u1, u2};
  p.matroids = {make_uniform(EdgeSet{0, 1}, 1)};
  return Instance(std::move(p));
}

// ---------------------------------------------------------------------------
// Oracles

/// Subsets of `ground` as raw masks, by brute force over all 64-bit masks
/// below 2^(max element + 1).
inline std::vector<std::uint64_t> all_subsets(ElementSet ground) {
  std::vector<std::uint64_t> out;
  const std::uint64_t g = ground.bits();
  const int top = g == 0 ? 0 : 64 - std::countl_zero(g);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << top); ++x) {
    if ((x & ~g) == 0) out.push_back(x);
  }
  if (top == 0) out = {0};
  return out;
}

/// Circuits as dependent sets with no dependent proper subset, comparing
/// every pair of dependent sets.
template <class M>
std::vector<ElementSet> oracle_circuits(const M& m) {
  std::vector<std::uint64_t> dependent;
  for (std::uint64_t x : all_subsets(m.ground())) {
    if (!m.independent(ElementSet::from_bits(x))) dependent.push_back(x);
  }
  std::vector<ElementSet> out;
  for (std::uint64_t x : dependent) {
    bool minimal = true;
    for (std::uint64_t y : dependent) {
      if (y != x && (y & ~x) == 0) minimal = false;
    }
    if (minimal) out.push_back(ElementSet::from_bits(x));
  }
  return out;
}

/// Every circuit contained in i + u.
template <class M>
std::vector<ElementSet> oracle_circuits_inside(const M& m, Element u,
                                               ElementSet i) {
  std::vector<ElementSet> out;
  for (ElementSet circuit : oracle_circuits(m)) {
    if (circuit.is_subset_of(i.with(u))) out.push_back(circuit);
  }
  return out;
}

template <class M>
std::size_t oracle_rank(const M& m) {
  std::size_t r = 0;
  for (std::uint64_t x : all_subsets(m.ground())) {
    const ElementSet s = ElementSet::from_bits(x);
    if (m.independent(s) && s.size() > r) r = s.size();
  }
  return r;
}

/// μ is a matching: each doctor on at most one edge, each hospital's share
/// independent. Checked from the raw edge list.
inline bool oracle_is_matching(const Instance& inst, std::uint64_t mu) {
  for (std::size_t dd = 0; dd < inst.num_doctors(); ++dd) {
    int count = 0;
    for (EdgeId e = 0; e < inst.num_edges(); ++e) {
      if (((mu >> e) & 1U) && inst.edge(e).doctor == dd) ++count;
    }
    if (count > 1) return false;
  }
  for (std::size_t h = 0; h < inst.num_hospitals(); ++h) {
    ElementSet share;
    for (EdgeId e = 0; e < inst.num_edges(); ++e) {
      if (((mu >> e) & 1U) && inst.edge(e).hospital == h) share.insert(e);
    }
    if (!inst.matroid(h).independent(share)) return false;
  }
  return true;
}

inline std::vector<EdgeSet> oracle_matchings(const Instance& inst) {
  std::vector<EdgeSet> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << inst.num_edges()); ++x) {
    if (oracle_is_matching(inst, x)) out.push_back(EdgeSet::from_bits(x));
  }
  return out;
}

/// Hospital-side blocking strength by trying every f in μ(h) whose swap for
/// e keeps μ(h) independent.
inline SideBlock oracle_blocks_on_hospital(const Instance& inst, EdgeSet mu,
                                           EdgeId e) {
  const std::size_t h = inst.edge(e).hospital;
  const Matroid& m = inst.matroid(h);
  const EdgeSet held = mu & inst.hospital_edges(h);
  if (m.independent(held.with(e))) return SideBlock::strong;
  SideBlock best = SideBlock::none;
  for (EdgeId f : held) {
    if (!m.independent(held.with(e).without(f))) continue;
    if (inst.utility(e) > inst.utility(f)) best = SideBlock::strong;
    if (inst.utility(e) == inst.utility(f) && best == SideBlock::none) {
      best = SideBlock::weak;
    }
  }
  return best;
}

struct OracleCore {
  bool weak = true, strong = true, super = true;
  bool hospital_free_blocker = false;
};

/// Core membership straight from the definitions: every non-empty vertex
/// subset C, every matching σ of the whole graph with σ(v) ⊆ E(C) for all
/// v in C, positions compared by tier and utility sum.
inline OracleCore oracle_core(const Instance& inst, EdgeSet mu) {
  const std::size_t nd = inst.num_doctors();
  const std::size_t nv = inst.num_vertices();
  const std::vector<EdgeSet> all = oracle_matchings(inst);
  auto doctor_rank = [&](EdgeSet m, std::size_t dd) -> std::size_t {
    for (EdgeId e = 0; e < inst.num_edges(); ++e) {
      if (m.contains(e) && inst.edge(e).doctor == dd) return inst.tier_of(e);
    }
    return inst.tiers(dd).size();
  };
  auto value = [&](EdgeSet m, std::size_t h) {
    std::int64_t v = 0;
    for (EdgeId e = 0; e < inst.num_edges(); ++e) {
      if (m.contains(e) && inst.edge(e).hospital == h) v += inst.utility(e);
    }
    return v;
  };
  OracleCore out;
  for (std::uint64_t cm = 1; cm < (std::uint64_t{1} << nv); ++cm) {
    auto in_c = [&](std::size_t v) { return ((cm >> v) & 1U) != 0; };
    bool has_hospital = false;
    for (std::size_t h = 0; h < inst.num_hospitals(); ++h) {
      has_hospital = has_hospital || in_c(nd + h);
    }
    for (EdgeSet sigma : all) {
      bool consistent = true;
      for (EdgeId e : sigma) {
        const Edge& x = inst.edge(e);
        const bool touches = in_c(x.doctor) || in_c(nd + x.hospital);
        if (touches && !(in_c(x.doctor) && in_c(nd + x.hospital))) {
          consistent = false;
        }
      }
      if (!consistent) continue;
      bool all_weak = true, all_strict = true, any_strict = false,
           any_diff = false;
      auto add = [&](long long diff, bool changed) {
        all_weak = all_weak && diff >= 0;
        all_strict = all_strict && diff > 0;
        any_strict = any_strict || diff > 0;
        any_diff = any_diff || changed;
      };
      for (std::size_t dd = 0; dd < nd; ++dd) {
        if (!in_c(dd)) continue;
        add(static_cast<long long>(doctor_rank(mu, dd)) -
                static_cast<long long>(doctor_rank(sigma, dd)),
            (sigma & inst.doctor_edges(dd)) != (mu & inst.doctor_edges(dd)));
      }
      for (std::size_t h = 0; h < inst.num_hospitals(); ++h) {
        if (!in_c(nd + h)) continue;
        add(value(sigma, h) - value(mu, h),
            (sigma & inst.hospital_edges(h)) != (mu & inst.hospital_edges(h)));
      }
      if (all_strict) out.weak = false;
      if (all_weak && any_strict) out.strong = false;
      if (all_weak && any_diff) {
        out.super = false;
        if (!has_hospital) out.hospital_free_blocker = true;
      }
    }
  }
  return out;
}

}  // namespace mmc::testing

#endif  // MMC_TESTS_TEST_SUPPORT_HPP_
