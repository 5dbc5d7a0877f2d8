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

#include "scg/dsl.hpp"

#include <filesystem>

#include "support.hpp"

namespace scg {
namespace {

using testing::source_path;
using testing::slurp;
using testing::vertex;
using testing::zoo;

bool same_adjacency(const GraphOracle& a, const GraphOracle& b, Int radius) {
  FiniteWindow wa = ball(a, radius);
  FiniteWindow wb = ball(b, radius);
  return wa.vertices == wb.vertices && wa.edges == wb.edges;
}

TEST(Dsl, EveryZooGraphRoundTrips) {
  ASSERT_EQ(zoo().list().size(), 12u);
  for (const auto& name : zoo().list()) {
    const auto& g = zoo().get(name).graph;
    std::string text = emit_spec(g);
    auto again = parse_graph_spec(text);
    ASSERT_TRUE(again.ok()) << name << "\n" << text;
    EXPECT_EQ(emit_spec(*again.value), text) << name;
    EXPECT_TRUE(same_adjacency(g, *again.value, 3)) << name;
  }
}

TEST(Dsl, EveryZooCertificateRoundTrips) {
  int count = 0;
  for (const auto& name : zoo().list()) {
    const auto& e = zoo().get(name);
    for (const auto& [cname, c] : e.certificates) {
      std::string text = emit_certificate(c);
      auto again = parse_certificate_spec(text, c.host);
      ASSERT_TRUE(again.ok()) << name << "." << cname << "\n" << text;
      EXPECT_EQ(emit_certificate(*again.value), text);
      EXPECT_EQ(again.value->forward, c.forward);
      EXPECT_EQ(again.value->inverse, c.inverse);
      ++count;
    }
  }
  EXPECT_GE(count, 20);
}

TEST(Dsl, ComplementAndMinusDirectives) {
  auto r = parse_graph_spec(slurp(source_path("data/zoo/ray.sgr")) + "complement\nminus v(0)\n");
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.value->complemented());
  EXPECT_FALSE(r.value->contains(vertex("v(0)")));
  auto again = parse_graph_spec(emit_spec(*r.value));
  ASSERT_TRUE(again.ok());
  EXPECT_TRUE(again.value->same_graph(*r.value));
}

struct MalformedCase {
  const char* file;
  int line;
  int column;
  const char* message;
};

TEST(Dsl, MalformedInputsGiveLocatedDiagnostics) {
  const MalformedCase cases[] = {
      {"arity.sgr", 3, 6, "arity mismatch"},
      {"bad_bound.sgr", 3, 7, "unknown variable"},
      {"bad_root.sgr", 3, 1, "outside the domain"},
      {"bad_token.sgr", 2, 19, "unexpected character"},
      {"empty.sgr", 1, 1, "graph <name>"},
      {"incomplete_expr.sgr", 2, 21, "line ended"},
      {"nested_abs.sgr", 2, 17, "nested absolute"},
      {"no_graph.sgr", 1, 1, "graph <name>"},
      {"overflow.sgr", 2, 22, "64-bit"},
      {"shared_var.sgr", 3, 13, "both sides"},
      {"unknown_sort.sgr", 3, 13, "unknown sort"},
      {"unknown_statement.sgr", 3, 1, "unknown statement"},
      {"coverage.sgc", 2, 1, "does not cover"},
      {"missing_inverse.sgc", 6, 1, "missing inverse"},
      {"overlap.sgc", 5, 1, "overlapping guards"},
      {"unknown_sort.sgc", 3, 8, "unknown sort"},
  };
  const auto& host = zoo().get("example9").graph;
  for (const auto& c : cases) {
    std::string path = std::string("tests/malformed/") + c.file;
    std::string text = slurp(source_path(path));
    std::vector<ParseDiagnostic> diags;
    if (std::string(c.file).ends_with(".sgc")) {
      auto r = parse_certificate_spec(text, host);
      EXPECT_FALSE(r.ok()) << c.file;
      diags = r.diagnostics;
    } else {
      auto r = parse_graph_spec(text);
      EXPECT_FALSE(r.ok()) << c.file;
      diags = r.diagnostics;
    }
    ASSERT_FALSE(diags.empty()) << c.file;
    EXPECT_EQ(diags[0].severity, ParseDiagnostic::Severity::Error);
    EXPECT_EQ(diags[0].line, c.line) << c.file;
    EXPECT_EQ(diags[0].column, c.column) << c.file;
    EXPECT_NE(diags[0].message.find(c.message), std::string::npos) << c.file << ": " << diags[0].message;
  }
}

TEST(Dsl, ParseVertexForms) {
  EXPECT_EQ(vertex("b(1)"), (VertexId{"b", {1}}));
  EXPECT_EQ(vertex("b_1"), (VertexId{"b", {1}}));
  EXPECT_EQ(vertex("v(0, -3)"), (VertexId{"v", {0, -3}}));
  EXPECT_EQ(vertex("apex"), (VertexId{"apex", {}}));
  EXPECT_EQ(vertex("apex()"), (VertexId{"apex", {}}));
  EXPECT_FALSE(parse_vertex("v(1").ok());
  EXPECT_FALSE(parse_vertex("").ok());
}

TEST(Dsl, VertexSets) {
  const auto& e = zoo().get("example15");
  auto r = parse_vertex_set("a(j) when j = 1; z(3); except z(4)", e.graph.spec());
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.value->contains(vertex("a(1)")));
  EXPECT_FALSE(r.value->contains(vertex("a(2)")));
  EXPECT_TRUE(r.value->contains(vertex("z(3)")));
  EXPECT_FALSE(r.value->contains(vertex("z(4)")));
  auto bad = parse_vertex_set("q(1)", e.graph.spec());
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.diagnostics[0].column, 1);
}

TEST(Dsl, DiagnosticText) {
  ParseDiagnostic d{ParseDiagnostic::Severity::Error, 3, 7, "unknown sort 'q'"};
  EXPECT_EQ(to_string(d), "3:7: error: unknown sort 'q'");
}

}  // namespace
}  // namespace scg
