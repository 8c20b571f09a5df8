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

#include <gtest/gtest.h>

#include <vector>

#include "mmc/harness.hpp"
#include "mmc/matroid.hpp"
#include "mmc/matroid_impls.hpp"
#include "test_support.hpp"

namespace mmc {
namespace {

using testing::a;
using testing::b;
using testing::c;

const ElementSet kAB{a, b};
const ElementSet kABC{a, b, c};

bool laminar_with(const std::vector<CappedSet>& family, ElementSet x) {
  for (const CappedSet& p : family) {
    const ElementSet y = p.members;
    if (x.intersects(y) && !x.is_subset_of(y) && !y.is_subset_of(x)) {
      return false;
    }
  }
  return true;
}

/// Laminar family built by rejection: random subsets are kept when they
/// nest with everything kept so far.
std::vector<CappedSet> random_laminar_family(Rng& rng, ElementSet ground) {
  std::vector<CappedSet> family;
  for (int tries = 0; tries < 12; ++tries) {
    const ElementSet x = ElementSet::from_bits(rng.next() & ground.bits());
    if (x.empty() || !laminar_with(family, x)) continue;
    family.push_back({x, rng.between(1, x.size())});
  }
  return family;
}

TEST(MakeUniform, Examples) {
  EXPECT_TRUE(equivalent(make_uniform(kABC, 3), make_free(kABC)));
  EXPECT_EQ(circuits(make_uniform(kABC, 1)),
            testing::oracle_circuits(make_uniform(kABC, 1)));
  EXPECT_EQ(circuits(make_uniform(kABC, 1)).size(), 3U);
  const Matroid one = make_uniform(ElementSet{a}, 1);
  EXPECT_TRUE(circuits(one).empty());
  EXPECT_TRUE(one.independent(ElementSet{a}));
  EXPECT_THROW(make_uniform(kABC, 0), PreconditionError);
}

TEST(MakeUniform, FullCapacityCircuitIsWholeSet) {
  const Matroid m = make_uniform(ElementSet::range(5), 3);
  for_each_subset(m.ground(), [&](ElementSet i) {
    if (i.size() != 3) return;
    for (Element u : m.ground() - i) {
      EXPECT_EQ(fundamental_circuit(m, u, i), i.with(u));
    }
  });
}

TEST(MakeLaminar, Examples) {
  EXPECT_TRUE(equivalent(make_laminar(kAB, {{kAB, 2}}), make_free(kAB)));

  const Matroid m = make_laminar(kABC, {{kAB, 1}, {kABC, 2}});
  EXPECT_FALSE(m.independent(kAB));
  EXPECT_TRUE(m.independent(ElementSet{a, c}));
  EXPECT_FALSE(m.independent(kABC));
  // Cross-check against the definition, subset by subset.
  for (std::uint64_t bits : testing::all_subsets(kABC)) {
    const ElementSet s = testing::set_of(bits);
    const bool expected =
        (s & kAB).size() <= 1 && (s & kABC).size() <= 2;
    EXPECT_EQ(m.independent(s), expected) << bits;
  }
}

TEST(MakeLaminar, RejectsOverlapWithWitness) {
  try {
    make_laminar(kABC, {{kAB, 1}, {ElementSet{b, c}, 1}});
    FAIL() << "expected NotLaminar";
  } catch (const NotLaminar& e) {
    EXPECT_EQ(e.first(), 0U);
    EXPECT_EQ(e.second(), 1U);
  }
}

TEST(MakeLaminar, RejectsZeroCapAndForeignSets) {
  EXPECT_THROW(make_laminar(kABC, {{kAB, 0}}), PreconditionError);
  EXPECT_THROW(make_laminar(kAB, {{kABC, 1}}), PreconditionError);
  EXPECT_NO_THROW(make_laminar(kAB, {{ElementSet{}, 0}}));
}

TEST(MakeLaminar, SingleSetMatchesUniform) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const ElementSet g = ElementSet::range(n);
    for (std::size_t cap = 1; cap <= n; ++cap) {
      EXPECT_TRUE(equivalent(make_uniform(g, cap), make_laminar(g, {{g, cap}})))
          << n << "/" << cap;
    }
  }
}

TEST(MakeLaminar, RandomFamiliesAreMatroids) {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const ElementSet g = ElementSet::range(rng.between(1, 7));
    const Matroid m = make_laminar(g, random_laminar_family(rng, g));
    ASSERT_TRUE(check_axioms(m).ok()) << t;
    for (Element e : g) EXPECT_TRUE(m.independent(ElementSet{e}));
  }
}

TEST(MakeExplicit, Examples) {
  std::vector<ElementSet> all;
  for (std::uint64_t bits : testing::all_subsets(kAB)) {
    all.push_back(testing::set_of(bits));
  }
  EXPECT_TRUE(equivalent(make_explicit(kAB, all), make_free(kAB)));
  EXPECT_TRUE(equivalent(make_explicit(kAB, {{}, {a}, {b}}),
                         make_uniform(kAB, 1)));
  try {
    make_explicit(kAB, {{}, kAB});
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.report().violated, Axiom::downward_closure);
    EXPECT_NE(std::string(e.what()).find("(I1)"), std::string::npos);
  }
}

TEST(MakeExplicit, AugmentationFailureAndDuplicates) {
  EXPECT_THROW(make_explicit(kABC, {{}, {a}, {b}, {c}, kAB}), AxiomViolation);
  const Matroid m = make_explicit(kAB, {{a}, {}, {a}, {b}});
  EXPECT_EQ(m.target<ExplicitMatroid>()->family().size(), 3U);
  EXPECT_THROW(make_explicit(kAB, {{}, {c}}), PreconditionError);
}

TEST(MakeExplicit, CopiesOfRandomMatroidsRoundTrip) {
  Rng rng(22);
  for (int t = 0; t < 50; ++t) {
    const ElementSet g = ElementSet::range(rng.between(1, 6));
    const Matroid m = make_laminar(g, random_laminar_family(rng, g));
    std::vector<ElementSet> family;
    for (std::uint64_t bits : testing::all_subsets(g)) {
      if (m.independent(testing::set_of(bits))) {
        family.push_back(testing::set_of(bits));
      }
    }
    EXPECT_TRUE(equivalent(make_explicit(g, family), m));
  }
}

}  // namespace
}  // namespace mmc
