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

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "mmc/io.hpp"
#include "mmc/stability.hpp"

namespace mmc {
namespace {

const std::string kData = MMC_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mmc");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliCheck, SuperStableMatching) {
  const Result r = run({"check", "--instance", data("strict_2x1.json"),
                        "--matching", data("match_d1.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "super_stable: true"));
  EXPECT_TRUE(contains(r.out, "strictest: super"));
}

TEST(CliCheck, TieListsBlockingEdgeWithWitness) {
  const Result r = run({"check", "--instance", data("tie_2x1.json"),
                        "--matching", data("match_d1.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "strongly_stable: false"));
  EXPECT_TRUE(contains(r.out, "(d2,h1) overall=weak"));
  EXPECT_TRUE(contains(r.out, "witness=(d1,h1)"));
}

TEST(CliCheck, NotWeaklyStableExitsOne) {
  const Result r = run({"check", "--instance", data("strict_2x1.json"),
                        "--matching", data("match_d2.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "weakly_stable: false"));
}

TEST(CliCheck, OverfullHospitalExitsThree) {
  const Result r = run({"check", "--instance", data("tie_2x1.json"),
                        "--matching", data("match_both.json")});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.err, "μ(h1) dependent"));
}

TEST(CliCheck, ParseErrorsExitTwo) {
  EXPECT_EQ(run({"check", "--instance", data("missing.json"), "--matching",
                 data("match_d1.json")})
                .code,
            2);
  EXPECT_EQ(run({"check", "--instance", data("match_d1.json"), "--matching",
                 data("match_d1.json")})
                .code,
            2);
  EXPECT_EQ(run({"check", "--instance", data("tie_2x1.json")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliCore, Examples) {
  const Result super = run({"core", "--instance", data("strict_2x1.json"),
                            "--matching", data("match_d1.json"), "--notion",
                            "super"});
  EXPECT_EQ(super.code, 0);

  const Result strong = run({"core", "--instance", data("tie_2x1.json"),
                             "--matching", data("match_d1.json"), "--notion",
                             "strong"});
  EXPECT_EQ(strong.code, 1);
  EXPECT_TRUE(contains(strong.out, "coalition {d2, h1}"));
  EXPECT_TRUE(contains(strong.out, "sigma {(d2,h1)}"));

  const Result weak = run({"core", "--instance", data("tie_2x1.json"),
                           "--matching", data("match_d1.json")});
  EXPECT_EQ(weak.code, 0);

  EXPECT_EQ(run({"core", "--instance", data("tie_2x1.json"), "--matching",
                 data("match_d1.json"), "--notion", "bogus"})
                .code,
            2);
}

TEST(CliCore, PruneToggleAgrees) {
  for (const char* notion : {"weak", "strong", "super"}) {
    const Result pruned = run({"core", "--instance", data("laminar.json"),
                               "--matching", data("match_empty.json"),
                               "--notion", notion});
    const Result full = run({"core", "--instance", data("laminar.json"),
                             "--matching", data("match_empty.json"),
                             "--notion", notion, "--no-prune"});
    EXPECT_EQ(pruned.code, full.code) << notion;
    EXPECT_NE(pruned.code, 2) << pruned.err;
  }
}

TEST(CliCore, BoundExceededExitsFour) {
  EXPECT_EQ(run({"core", "--instance", data("laminar.json"), "--matching",
                 data("match_empty.json"), "--vertex-bound", "3"})
                .code,
            4);
  EXPECT_EQ(run({"enumerate", "--instance", data("laminar.json"), "--bound",
                 "2"})
                .code,
            4);
  EXPECT_EQ(run({"axioms", "--instance", data("laminar.json"), "--bound", "1"})
                .code,
            4);
}

TEST(CliEnumerate, Tables) {
  const Result empty = run({"enumerate", "--instance", data("edgeless.json")});
  EXPECT_EQ(empty.code, 0);
  EXPECT_TRUE(contains(empty.out, "matchings: 1"));

  const Result strict = run({"enumerate", "--instance", data("strict_2x1.json")});
  EXPECT_EQ(strict.code, 0);
  EXPECT_TRUE(contains(strict.out, "matchings: 3"));
  EXPECT_TRUE(contains(strict.out, "|SSS|=1"));

  const Result tie = run({"enumerate", "--instance", data("tie_2x1.json")});
  EXPECT_TRUE(contains(tie.out, "|SS|=0"));
  EXPECT_TRUE(contains(tie.out, "|C_S|=0"));
}

TEST(CliAxioms, Examples) {
  EXPECT_EQ(run({"axioms", "--instance", data("laminar.json")}).code, 0);
  EXPECT_EQ(run({"axioms", "--instance", data("explicit.json")}).code, 0);
  EXPECT_EQ(run({"axioms", "--instance", data("edgeless.json")}).code, 0);
  const Result bad = run({"axioms", "--instance", data("explicit_bad.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.out, "(I1)"));
  EXPECT_EQ(run({"check", "--instance", data("explicit_bad.json"),
                 "--matching", data("match_d1.json")})
                .code,
            2);
}

TEST(CliVerify, RunsAndIsDeterministic) {
  const std::vector<std::string> args{"verify", "--count", "40", "--seed",
                                      "77"};
  const Result a = run(args);
  const Result b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(contains(a.out, "# instances: 40"));
  std::istringstream lines(a.out);
  std::string line;
  std::size_t records = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("{", 0) == 0) ++records;
  }
  EXPECT_EQ(records, 40U);
  EXPECT_EQ(run({"verify", "--count", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--matroid", "graphic"}).code, 2);
  EXPECT_EQ(run({"verify", "--edge-prob", "0"}).code, 2);
}

TEST(CliSearch, WritesReverifiableWitness) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("mmc_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string inst = (dir / "w.json").string();
  const std::string mu = (dir / "m.json").string();
  const Result r = run({"search", "--write-instance", inst, "--write-matching",
                        mu});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"check", "--instance", inst, "--matching", mu}).code, 1);
  EXPECT_EQ(run({"core", "--instance", inst, "--matching", mu, "--notion",
                 "weak", "--no-prune"})
                .code,
            0);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace mmc
