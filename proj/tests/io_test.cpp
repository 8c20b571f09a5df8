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

#include <string>
#include <vector>

#include "mmc/harness.hpp"
#include "mmc/io.hpp"
#include "test_support.hpp"

namespace mmc {
namespace {

const std::string kData = MMC_TEST_DATA_DIR;

const std::vector<std::string> kFixtures = {
    "strict_2x1.json", "tie_2x1.json", "laminar.json", "explicit.json",
    "edgeless.json"};

std::string location_of(const std::string& text) {
  try {
    io::parse_instance(text);
  } catch (const ValidationError& e) {
    return e.location();
  }
  return "accepted";
}

TEST(ParseInstance, FixturesLoad) {
  const Instance inst = io::load_instance(kData + "/laminar.json");
  EXPECT_EQ(inst.num_doctors(), 4U);
  EXPECT_EQ(inst.num_edges(), 5U);
  const auto c = inst.find_doctor("c");
  ASSERT_TRUE(c);
  EXPECT_EQ(inst.tiers(*c).size(), 1U);
  EXPECT_EQ(inst.tiers(*c)[0].size(), 2U);
  const Matroid& h1 = inst.matroid(0);
  EXPECT_TRUE(h1.target<LaminarMatroid>() != nullptr);
  EXPECT_FALSE(h1.independent(EdgeSet{0, 1}));
  EXPECT_TRUE(h1.independent(EdgeSet{0, 2}));

  const Instance ex = io::load_instance(kData + "/explicit.json");
  EXPECT_TRUE(equivalent(ex.matroid(0),
                         make_laminar(EdgeSet{0, 1, 2}, {{EdgeSet{0, 1}, 1},
                                                         {EdgeSet{2}, 1}})));
}

TEST(ParseInstance, RoundTripsEveryFixture) {
  for (const std::string& name : kFixtures) {
    const Instance first = io::load_instance(kData + "/" + name);
    const std::string text = io::serialize_instance(first);
    const Instance second = io::parse_instance(text);
    EXPECT_TRUE(io::same_instance(first, second)) << name;
    EXPECT_EQ(io::serialize_instance(second), text) << name;
  }
}

TEST(ParseInstance, RoundTripsGeneratedInstances) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenConfig config;
    config.seed = seed;
    config.randomize_sizes = true;
    const Instance inst = generate(config);
    const Instance back = io::parse_instance(io::serialize_instance(inst));
    EXPECT_TRUE(io::same_instance(inst, back)) << seed;
  }
}

TEST(ParseInstance, SyntaxErrorCarriesPosition) {
  const std::string loc = location_of("{\"doctors\": [\"d1\",,]}");
  EXPECT_EQ(loc.rfind("byte ", 0), 0U) << loc;
}

TEST(ParseInstance, ValidationLocations) {
  const std::string base = R"({
    "doctors": ["d1"], "hospitals": ["h1"], "edges": [["d1", "h1"]],
    "doctor_prefs": {"d1": [["h1"]]},
    "hospital_utils": {"h1": {"d1": UTIL}},
    "matroids": {"h1": MATROID}})";
  auto make = [&](const std::string& util, const std::string& matroid) {
    std::string s = base;
    s.replace(s.find("UTIL"), 4, util);
    s.replace(s.find("MATROID"), 7, matroid);
    return s;
  };
  EXPECT_EQ(location_of(make("1", R"({"type":"uniform","capacity":1})")),
            "accepted");
  EXPECT_EQ(location_of(make("0", R"({"type":"uniform","capacity":1})")),
            "hospital_utils.h1.d1");
  EXPECT_EQ(location_of(make("1", R"({"type":"uniform","capacity":0})")),
            "matroids.h1.capacity");
  EXPECT_EQ(location_of(make("1", R"({"type":"graphic"})")),
            "matroids.h1.type");
  EXPECT_EQ(location_of(R"({"doctors": []})"), "hospitals");
  EXPECT_EQ(location_of(R"({"doctors": ["d1"], "hospitals": ["h1"],
      "edges": [["d1", "h9"]]})"),
            "edges[0]");
}

TEST(ParseInstance, ExplicitAxiomFailureNamesHospital) {
  try {
    io::load_instance(kData + "/explicit_bad.json");
    FAIL() << "expected an axiom violation";
  } catch (const io::InstanceAxiomViolation& e) {
    EXPECT_EQ(e.hospital(), "h1");
    EXPECT_EQ(e.report().violated, Axiom::downward_closure);
  }
}

TEST(ParseInstance, MissingFile) {
  EXPECT_THROW(io::load_instance(kData + "/no_such_file.json"),
               ValidationError);
}

TEST(ParseMatching, ExamplesAndErrors) {
  const Instance inst = io::load_instance(kData + "/tie_2x1.json");
  EXPECT_EQ(io::parse_matching(inst, "[]"), EdgeSet{});
  EXPECT_EQ(io::load_matching(inst, kData + "/match_d2.json"), EdgeSet{1});
  EXPECT_EQ(io::load_matching(inst, kData + "/match_both.json"),
            (EdgeSet{0, 1}));
  EXPECT_THROW(io::parse_matching(inst, R"([["d1", "h2"]])"), ValidationError);
  EXPECT_THROW(io::parse_matching(inst, R"([["d1"]])"), ValidationError);
  EXPECT_THROW(io::parse_matching(inst, R"([["d1","h1"],["d1","h1"]])"),
               ValidationError);
  EXPECT_EQ(io::serialize_matching(inst, EdgeSet{0, 1}),
            "[[\"d1\",\"h1\"],[\"d2\",\"h1\"]]\n");
  EXPECT_EQ(io::parse_matching(inst, io::serialize_matching(inst, EdgeSet{1})),
            EdgeSet{1});
}

TEST(ReportJson, CarriesSetSizesAndFlags) {
  const Instance inst = io::load_instance(kData + "/tie_2x1.json");
  VerificationReport r = verify_theorems(inst);
  r.seed = 5;
  const auto j = io::to_json(inst, r);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["S"], 2);
  EXPECT_EQ(j["SS"], 0);
  EXPECT_EQ(j["C_S"], 0);
  EXPECT_EQ(j["C_minus_S"], 0);
  EXPECT_EQ(j["violations"].size(), 0U);
}

}  // namespace
}  // namespace mmc
