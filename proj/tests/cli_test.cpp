// Copyright 2026 The scg Authors
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

#include "scg/cli.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

namespace scg {
namespace {

namespace fs = std::filesystem;
using testing::source_path;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), {"--zoo-dir", source_path("data/zoo")});
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json parse(const CliRun& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, TorsionOfThePendantShift) {
  CliRun r = run({"torsion", "--graph", "example15", "--cert", "a1", "--radius", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse(r);
  EXPECT_EQ(j["torsion"], nlohmann::json::array({"b_1"}));
  EXPECT_EQ(j["cross_check_agrees"], true);
  EXPECT_EQ(j["exact"], true);
}

TEST(Cli, Foundation) {
  CliRun r = run({"foundation", "--graph", "example9", "--radius", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["foundation"], nlohmann::json::array({"v_0"}));
}

TEST(Cli, RayHasTwentyOneVertices) {
  CliRun r = run({"ray", "--graph", "grid", "--steps", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse(r);
  EXPECT_EQ(j["length"], 21);
  EXPECT_EQ(j["path_verified"], true);
  CliRun dot = run({"ray", "--graph", "grid", "--steps", "5", "--format", "dot"});
  ASSERT_EQ(dot.code, 0) << dot.err;
  EXPECT_EQ(dot.out.rfind("graph", 0), 0u);
}

TEST(Cli, VerifyCertificate) {
  CliRun ok = run({"verify-cert", "--graph", "rhomb_star", "--cert", "P", "--radius", "4"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(parse(ok)["passed"], true);
  CliRun box = run({"verify-cert", "--graph", "example9", "--cert", "shift^c", "--box", "0,8"});
  EXPECT_EQ(box.code, 0) << box.err;
}

TEST(Cli, FailingVerificationExitsOne) {
  fs::path f = fs::temp_directory_path() / "scg_cli_bad.sgc";
  // A well-formed bijection onto G - v(0) that moves the hub to a leaf.
  std::ofstream(f) << "certificate bad\nremove v(0)\nmap v(n) -> v(n + 1)\ninverse v(n) -> v(n - 1) when n >= 1\n";
  CliRun r = run({"verify-cert", "--graph", "example9", "--cert", f.string(), "--radius", "3"});
  fs::remove(f);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(parse(r)["passed"], false);
}

TEST(Cli, EmptyFileIsAParseError) {
  fs::path f = fs::temp_directory_path() / "scg_cli_empty.sgr";
  std::ofstream(f) << "";
  CliRun r = run({"validate", f.string()});
  fs::remove(f);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(f.string() + ":1:1: error:"), std::string::npos) << r.err;
  EXPECT_EQ(parse(r)["ok"], false);
}

TEST(Cli, MalformedCorpusExitsTwoWithLocations) {
  int count = 0;
  for (const auto& entry : fs::directory_iterator(source_path("tests/malformed"))) {
    std::string path = entry.path().string();
    std::vector<std::string> args{"validate", path};
    if (entry.path().extension() == ".sgc") args.insert(args.end(), {"--graph", "example9"});
    CliRun r = run(args);
    EXPECT_EQ(r.code, 2) << path;
    // `file:line:column: error: message`
    auto head = path + ":";
    ASSERT_EQ(r.err.rfind(head, 0), 0u) << r.err;
    std::istringstream rest(r.err.substr(head.size()));
    int line = 0, col = 0;
    char c1 = 0, c2 = 0;
    rest >> line >> c1 >> col >> c2;
    EXPECT_GT(line, 0) << r.err;
    EXPECT_GT(col, 0) << r.err;
    EXPECT_EQ(c1, ':');
    EXPECT_EQ(c2, ':');
    ++count;
  }
  EXPECT_GE(count, 10);
}

TEST(Cli, ValidGraphFileValidates) {
  CliRun r = run({"validate", source_path("data/zoo/grid.sgr")});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, OutputIsDeterministic) {
  for (std::vector<std::string> args : {std::vector<std::string>{"window", "--graph", "rhomb_star", "--radius", "2"},
                                        {"window", "--graph", "grid", "--format", "dot"},
                                        {"covering", "--graph", "example11a", "--class", "leaf2", "--class", "leaf3"},
                                        {"zoo", "validate", "--entry", "star"}}) {
    CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"foundation", "--graph", "no_such_graph"}).code, 2);
  EXPECT_EQ(run({"foundation", "--graph", "grid", "--frobnicate"}).code, 2);
  EXPECT_EQ(run({"window", "--graph", "grid", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"torsion", "--graph", "example15", "--cert", "nope"}).code, 2);
  EXPECT_EQ(run({"window", "--graph", "grid", "--roots", "v(-1, 0)"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, CensusRefusesWithoutBounds) {
  CliRun r = run({"census", "--graph", "example9", "--minus", "shift"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bounds"), std::string::npos);
  CliRun ok = run({"census", "--graph", "rhomb_star", "--minus", "Q,R"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(parse(ok)["counts"], nlohmann::json::array({1, 2}));
}

TEST(Cli, ProbeAndClassify) {
  CliRun p = run({"probe-c2", "--graph", "rhomb_star", "-p", "P", "-q", "S"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(parse(p)["outcome"], "HypothesisHolds+CertificateFound");
  CliRun f = run({"probe-c2", "--graph", "roller_brush", "-p", "p1", "-q", "q1"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(parse(f)["outcome"], "HypothesisFails");
  CliRun c = run({"classify", "--graph", source_path("data/extra/paths3.sgr"), "--cert",
               source_path("data/extra/paths3.drop0.sgc")});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("RemovableComponent"), std::string::npos);
}

TEST(Cli, ZooValidate) {
  CliRun r = run({"zoo", "validate"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["passed"], true);
  CliRun l = run({"zoo", "list"});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("roller_brush"), std::string::npos);
}

TEST(Cli, CorruptedZooFailsValidation) {
  fs::path dir = fs::temp_directory_path() / "scg_cli_zoo";
  fs::remove_all(dir);
  fs::copy(source_path("data/zoo"), dir, fs::copy_options::recursive);
  std::ofstream(dir / "ray.sgr") << "graph ray\nsort v(n) where n >= 0\nedge v(x) ~ v(y) when y = x + 1 and\n";
  std::ostringstream out, err;
  int code = run_cli({"--zoo-dir", dir.string(), "zoo", "validate"}, out, err);
  fs::remove_all(dir);
  EXPECT_EQ(code, 1);
  EXPECT_NE(out.str().find("ray.sgr:3:"), std::string::npos) << out.str() << err.str();
}

}  // namespace
}  // namespace scg
