/* Copyright 2026 The Exodus Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#include "exodus/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace exodus::cli {
namespace {

const std::string kData = EXODUS_DATA_DIR;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST(Cli, BuiltinDiskPipesIntoExitPres) {
  const Invocation disk = run_cli({"builtin", "disk"});
  ASSERT_EQ(disk.code, kOk);
  const Invocation pres = run_cli({"exit-pres"}, disk.out);
  ASSERT_EQ(pres.code, kOk) << pres.err;
  EXPECT_NE(pres.out.find("objects: x, 0"), std::string::npos);
  EXPECT_NE(pres.out.find("beta: x -> x (invertible)"), std::string::npos);
  EXPECT_NE(pres.out.find("a_x: 0 -> x"), std::string::npos);
  EXPECT_NE(pres.out.find("c_beta: beta o a_x => a_x"), std::string::npos);
  const Invocation json = run_cli({"exit-pres", "-", "--format", "json"}, disk.out);
  ASSERT_EQ(json.code, kOk);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["objects"].size(), 2u);
  EXPECT_EQ(j["gen1"].size(), 2u);
  EXPECT_EQ(j["gen2"].size(), 1u);
}

TEST(Cli, SectionsOfPerverseDisk) {
  const Invocation r = run_cli({"sections", data("perverse_disk_rep.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("projection to 0: equivalent to deligne(2,1): yes"), std::string::npos);
  EXPECT_NE(r.out.find("iso classes: 6"), std::string::npos);
}

TEST(Cli, BrokenAssociativityNamesTriple) {
  const Invocation r = run_cli({"check-cat", data("broken_assoc.json")});
  EXPECT_EQ(r.code, kCheckFailed);
  EXPECT_NE(r.out.find("violation: associativity: (s o s) o s != s o (s o s)"), std::string::npos);
  EXPECT_EQ(run_cli({"check-cat", data("z3.json")}).code, kOk);
}

TEST(Cli, InputErrorsWriteNothingToStdout) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check-cat", data("no_such_file.json")},
           {"check-cat", "-"},
           {"rep-check", data("disk.json")},
           {"builtin", "nowhere"},
           {"no-such-subcommand"},
           {"check-cat", data("z3.json"), "--format", "yaml"},
           {"check-cat", data("z3.json"), "--caps-objects", "0"},
       }) {
    const Invocation r = run_cli(args, "{not json");
    EXPECT_EQ(r.code, kInputError) << args.front();
    EXPECT_TRUE(r.out.empty()) << r.out;
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, CapExceededExitCode) {
  const Invocation r = run_cli({"builtin", "deligne", "--dmax", "2", "--caps-morphisms", "1000"});
  EXPECT_EQ(r.code, kCapExceeded);
  EXPECT_TRUE(r.out.empty());
  const Invocation big = run_cli(
      {"check-2cat", "-"},
      R"({"builder":"cat","objects":[{"name":"x","category":{"builder":"finset","n":2}}]})");
  EXPECT_EQ(big.code, kCapExceeded);
  EXPECT_TRUE(big.out.empty());
}

TEST(Cli, EnvironmentCapsAndFlagOverride) {
  ::setenv("EXODUS_CAPS", "reps=3", 1);
  const Invocation capped = run_cli({"enumerate", data("disk.json"), data("universe_f2_small.json")});
  ::setenv("EXODUS_CAPS", "objects=1", 1);
  const Invocation overridden = run_cli({"sections", data("perverse_disk_rep.json"), "--caps-objects", "100"});
  ::setenv("EXODUS_CAPS", "bogus", 1);
  const Invocation bad = run_cli({"check-cat", data("z3.json")});
  ::unsetenv("EXODUS_CAPS");
  EXPECT_EQ(capped.code, kCapExceeded);
  EXPECT_EQ(overridden.code, kOk) << overridden.err;
  EXPECT_EQ(bad.code, kInputError);
  const Invocation full = run_cli({"enumerate", data("disk.json"), data("universe_f2_small.json")});
  EXPECT_EQ(full.code, kOk);
  EXPECT_NE(full.out.find("classes: 7"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check-2cat", data("two_group_2_2.json"), "--samples", "50", "--seed", "9"},
           {"glue", data("z3_chain.json")},
           {"factor", data("square_subdivided.json")},
           {"builtin", "perverse-disk"},
       }) {
    const Invocation a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.code, kOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, ShippedFixturesMatchBuiltins) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"disk.json", {"builtin", "disk"}},
      {"p1.json", {"builtin", "p1"}},
      {"circle_leaf.json", {"builtin", "circle-leaf"}},
      {"perverse_disk_rep.json", {"builtin", "perverse-disk"}},
      {"deligne_2_1.json", {"builtin", "deligne"}},
      {"p1_datum.json", {"builtin", "p1-datum"}},
      {"p1_datum_twisted.json", {"builtin", "p1-datum", "--twisted"}},
      {"circle_datum.json", {"builtin", "circle-datum"}},
      {"circle_datum_twisted.json", {"builtin", "circle-datum", "--twisted"}},
      {"z3_chain.json", {"builtin", "z3-chain"}},
      {"z3_chain_broken.json", {"builtin", "z3-chain", "--broken"}},
  };
  for (const auto& [file, args] : cases) EXPECT_EQ(slurp(data(file)), run_cli(args).out) << file;
}

TEST(Cli, DescentAndGlue) {
  EXPECT_EQ(run_cli({"descent-check", data("z3_chain.json")}).code, kOk);
  const Invocation broken = run_cli({"descent-check", data("z3_chain_broken.json")});
  EXPECT_EQ(broken.code, kCheckFailed);
  EXPECT_NE(broken.out.find("tetrahedron c0 < c1 < c2 < c3"), std::string::npos);
  EXPECT_EQ(run_cli({"glue", data("z3_chain_broken.json")}).code, kCheckFailed);

  const Invocation circle = run_cli({"glue", data("circle_datum.json")});
  const Invocation twisted = run_cli({"glue", data("circle_datum_twisted.json")});
  EXPECT_NE(circle.out.find("iso classes: 2"), std::string::npos);
  EXPECT_NE(twisted.out.find("iso classes: 0"), std::string::npos);

  const Invocation p1 = run_cli({"glue", data("p1_datum_twisted.json"), "--format", "json"});
  ASSERT_EQ(p1.code, kOk) << p1.err;
  const auto j = nlohmann::json::parse(p1.out);
  EXPECT_EQ(j["glued rep"], "x -> discrete(2), inf -> discrete(2)");
  EXPECT_EQ(j["sections of glued rep agree"], "yes");
}

TEST(Cli, PathsAndSquares) {
  const Invocation paths = run_cli({"check-path", data("disk_paths.json")});
  EXPECT_EQ(paths.code, kCheckFailed);
  EXPECT_NE(paths.out.find("path 0 1 2: yes"), std::string::npos);
  EXPECT_NE(paths.out.find("path 1 0: no"), std::string::npos);
  const Invocation sq = run_cli({"factor", data("square_grid.json")});
  EXPECT_EQ(sq.code, kOk);
  EXPECT_NE(sq.out.find("moves: 12"), std::string::npos);
}

TEST(Cli, RepCheckAndHelp) {
  EXPECT_EQ(run_cli({"rep-check", data("perverse_disk_rep.json")}).code, kOk);
  const Invocation help = run_cli({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("descent-check"), std::string::npos);
}

}  // namespace
}  // namespace exodus::cli
