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

#include "scg/structure.hpp"

#include <set>

#include "support.hpp"

namespace scg {
namespace {

using testing::certificate;
using testing::graph;
using testing::slurp;
using testing::source_path;
using testing::vertex;
using testing::vertices;
using testing::zoo;

constexpr Int kBox = 24;

// Covered vertices by forward application of every member, from the removed
// sets inside a wide index box.
std::set<VertexId> forward_covered(const RemovableFamily& fam, int depth) {
  std::set<VertexId> out;
  std::vector<VertexId> box = box_window(fam.host, -kBox, kBox).vertices;
  for (const auto& m : fam.members) {
    std::set<VertexId> cur;
    for (const auto& v : box)
      if (m.removed.contains(v)) cur.insert(v);
    for (int i = 0; i < depth; ++i) {
      out.insert(cur.begin(), cur.end());
      std::set<VertexId> next;
      for (const auto& v : cur)
        if (auto w = m.forward.apply(v)) next.insert(*w);
      cur = std::move(next);
    }
  }
  return out;
}

// Torsion from its definition: images f(u) of uncovered u that are covered.
std::vector<VertexId> forward_torsion(const RemovableFamily& fam, const IsoCertificate& c, int depth,
                                      const FiniteWindow& w) {
  auto cov = forward_covered(fam, depth);
  std::set<VertexId> out;
  for (const auto& u : box_window(fam.host, -kBox, kBox).vertices) {
    if (cov.count(u)) continue;
    auto fu = c.forward.apply(u);
    if (fu && cov.count(*fu) && w.contains(*fu)) out.insert(*fu);
  }
  return {out.begin(), out.end()};
}

std::vector<VertexId> truth(const VertexSet& s, const FiniteWindow& w) { return members_in(s, w); }

TEST(Structure, CoveredClosureMatchesForwardApplication) {
  for (const char* name : {"example15", "rhomb_star", "grid", "roller_brush", "example11a", "star"}) {
    const auto& e = zoo().get(name);
    const auto& fam = e.family("main");
    FiniteWindow w = e.family_window("main", 4);
    int depth = e.family_depth("main", 4);
    auto cov = forward_covered(fam, depth);
    std::vector<VertexId> expect;
    for (const auto& v : w.vertices)
      if (cov.count(v)) expect.push_back(v);
    EXPECT_EQ(covered_closure(fam, depth, w), expect) << name;
  }
}

TEST(Structure, Foundations) {
  struct Case {
    const char* entry;
    const char* set;
  };
  for (auto [entry, set] : {Case{"example15", "z(j); c(j)"}, Case{"example9", "v(0)"}, Case{"example11a", "a1(j)"},
                            Case{"roller_brush", "apex()"}, Case{"rhomb_star", "v(0)"}}) {
    const auto& e = zoo().get(entry);
    FiniteWindow w = e.family_window("main", 5);
    FoundationReport r = relative_foundation(e.family("main"), e.family_depth("main", 5), w);
    EXPECT_EQ(r.foundation, truth(e.vertex_set(set), w)) << entry;
  }
  const auto& grid = zoo().get("grid");
  FoundationReport g = relative_foundation(grid.family("main"), grid.family_depth("main", 5), grid.window("", 5));
  EXPECT_TRUE(g.foundation.empty());
  EXPECT_TRUE(g.exact);
}

TEST(Structure, FoundationIsExactOnlyAtSufficientDepth) {
  const auto& e = zoo().get("example15");
  FiniteWindow w = e.window("", 4);
  EXPECT_TRUE(relative_foundation(e.family("main"), e.family_depth("main", 4), w).exact);
  auto shallow = relative_foundation(e.family("main"), 1, w);
  EXPECT_FALSE(shallow.exact);
  // Shallow depths can only overstate the foundation.
  auto deep = relative_foundation(e.family("main"), e.family_depth("main", 4), w);
  EXPECT_TRUE(std::includes(shallow.foundation.begin(), shallow.foundation.end(), deep.foundation.begin(),
                            deep.foundation.end()));
}

TEST(Structure, TorsionOfThePendantShift) {
  const auto& e = zoo().get("example15");
  const auto& fam = e.family("main");
  FiniteWindow w = e.window("", 6);
  int depth = e.family_depth("main", 6);
  TorsionReport a = torsion(fam, e.certificate("a1"), depth, w);
  EXPECT_EQ(a.torsion, vertices({"b(1)"}));
  EXPECT_TRUE(a.cross_check_agrees);
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(a.torsion, forward_torsion(fam, e.certificate("a1"), depth, w));
  TorsionReport b = torsion(fam, e.certificate("b1"), depth, w);
  EXPECT_EQ(b.torsion, vertices({"a(1)"}));
}

TEST(Structure, TorsionMatchesDefinitionAcrossTheZoo) {
  for (const char* name : {"example15", "rhomb_star", "grid", "example11a", "example9"}) {
    const auto& e = zoo().get(name);
    const auto& fam = e.family("main");
    FiniteWindow w = e.family_window("main", 4);
    int depth = e.family_depth("main", 4);
    for (const auto& m : fam.members) {
      TorsionReport r = torsion(fam, m, depth, w);
      EXPECT_EQ(r.torsion, forward_torsion(fam, m, depth, w)) << name << "." << m.name;
      EXPECT_TRUE(r.cross_check_agrees) << name << "." << m.name;
    }
  }
}

TEST(Structure, MonotonicityAndSymmetry) {
  const auto& e = zoo().get("example15");
  const auto& fam = e.family("main");
  FiniteWindow w = e.window("", 6);
  int depth = e.family_depth("main", 6);
  EXPECT_EQ(foundation_monotonicity_check(fam, e.certificate("a1"), depth, w).status, CheckStatus::Pass);
  EXPECT_TRUE(torsion_monotonicity_check(fam, e.certificate("a1"), e.certificate("a12"), depth, w).passed());
  auto sym = torsion_symmetry_check(fam, e.certificate("a1"), e.certificate("b1"), depth, w);
  EXPECT_EQ(sym.status, CheckStatus::Pass) << sym.detail;
  auto thm = torsion_foundation_theorem_check(fam, e.certificate("a1"), e.certificate("fnd_c0"), depth, w);
  EXPECT_EQ(thm.status, CheckStatus::Pass) << thm.detail;
}

TEST(Structure, CurlOfTheRollerBrush) {
  const auto& e = zoo().get("roller_brush");
  const auto& truth_case = e.curl.at(0);
  FiniteWindow w = e.window("", 4);
  auto c = curl(e.family("main"), e.certificate("p1"), e.witnesses(truth_case.witnesses), e.family_depth("main", 4), w);
  EXPECT_NE(std::find(c.begin(), c.end(), vertex("b(1, 1)")), c.end());
  for (const auto& v : c) EXPECT_FALSE(e.certificate("p1").removed.contains(v));
}

TEST(Structure, PhiClosureContainsTorsion) {
  const auto& e = zoo().get("example15");
  FiniteWindow w = e.window("", 5);
  auto phi = phi_closure(e.family("main"), {e.certificate("a1")}, e.family_depth("main", 5), w);
  EXPECT_EQ(phi, members_in(e.vertex_set("a(j); b(j)"), w));
}

TEST(Structure, CoveringsAndMonomers) {
  const auto& e = zoo().get("example11a");
  const auto& fam = e.family("main");
  FiniteWindow w = e.window("", 5);
  int depth = e.family_depth("main", 5);
  auto full = covering_check({{e.certificate("leaf2")}, {e.certificate("leaf3")}}, fam, depth, w);
  EXPECT_TRUE(full.passed);
  auto mono = monomer_check({e.certificate("leaf2")}, fam, depth, w);
  EXPECT_FALSE(mono.passed);
  ASSERT_FALSE(mono.uncovered.empty());
  EXPECT_EQ(mono.uncovered.front(), vertex("a3(1)"));
  const auto& grid = zoo().get("grid");
  EXPECT_TRUE(monomer_check({grid.certificate("row0")}, grid.family("main"), grid.family_depth("main", 5),
                            grid.window("", 5))
                  .passed);
}

TEST(Structure, Prop14) {
  const auto& e = zoo().get("example15");
  FiniteWindow w = e.window("", 5);
  auto r = prop14_check(e.family("main"), e.family_depth("main", 5), w, false);
  EXPECT_EQ(r.status, CheckStatus::HypothesisFailure) << r.detail;
  EXPECT_TRUE(r.passed());
}

TEST(Structure, Probes) {
  const auto& rh = zoo().get("rhomb_star");
  FiniteWindow w = rh.window("", 4);
  int depth = rh.family_depth("main", 4);
  auto ok = conjecture2_probe(rh.family("main"), rh.certificate("P"), rh.certificate("S"), {}, depth, w);
  EXPECT_EQ(ok.outcome, ProbeOutcome::HypothesisHoldsCertificateFound);
  ASSERT_TRUE(ok.verification.has_value());
  EXPECT_TRUE(ok.verification->passed);
  auto bad = conjecture2_probe(rh.family("main"), rh.certificate("P"), rh.certificate("Q"), {}, depth, w);
  EXPECT_EQ(bad.outcome, ProbeOutcome::HypothesisFails);
  EXPECT_FALSE(bad.hypothesis_witness.empty());

  const auto& grid = zoo().get("grid");
  auto g = conjecture2_probe(grid.family("main"), grid.certificate("row0"), grid.certificate("col0"), {},
                             grid.family_depth("main", 4), grid.window("", 4));
  EXPECT_EQ(g.outcome, ProbeOutcome::HypothesisFails);
  EXPECT_EQ(g.hypothesis_witness, vertices({"v(0, 0)"}));

  const auto& roller = zoo().get("roller_brush");
  const auto& pc = roller.probes.at(0);
  auto r = conjecture2_probe(roller.family("main"), roller.certificate("p1"), roller.certificate("q1"),
                             roller.witnesses(pc.witnesses), roller.family_depth("main", 4), roller.window("", 4));
  EXPECT_EQ(r.outcome, ProbeOutcome::HypothesisFails);
  EXPECT_NE(std::find(r.hypothesis_witness.begin(), r.hypothesis_witness.end(), vertex("b(1, 1)")),
            r.hypothesis_witness.end());
}

TEST(Structure, CensusObstruction) {
  const auto& e = zoo().get("rhomb_star");
  auto minus = [&](std::vector<const char*> names) {
    VertexSet s;
    for (auto n : names) s = s.united(e.certificate(n).removed);
    return graph_minus(e.graph, s);
  };
  FiniteWindow w1 = e.window("", 9);
  for (auto [names, c1, c2] : {std::tuple{std::vector<const char*>{"P", "Q"}, 1u, 0u},
                               std::tuple{std::vector<const char*>{"Q", "R"}, 1u, 2u}}) {
    GraphOracle other = minus(names);
    FiniteWindow w2 = ball(other, e.roots(""), 9);
    auto r = census_obstruction(e.graph, other, 1, w1, w2, {true, 1}, {true, 1});
    EXPECT_TRUE(r.distinguished);
    EXPECT_TRUE(r.confirmed);
    EXPECT_EQ(r.count1, c1);
    EXPECT_EQ(r.count2, c2);
  }
  // Removing a single rhombus leaves an isomorphic graph: same census.
  GraphOracle p = minus({"P"});
  auto same = census_obstruction(e.graph, p, 1, w1, ball(p, e.roots(""), 9), {true, 1}, {true, 1});
  EXPECT_FALSE(same.distinguished);
  EXPECT_THROW(census_obstruction(e.graph, p, 1, w1, w1, {false, 0}, {true, 1}), StructureError);
}

EvidenceVerdict classify_extra(const char* stem, const char* cert) {
  GraphOracle g = graph(slurp(source_path(std::string("data/extra/") + stem + ".sgr")));
  IsoCertificate c = certificate(slurp(source_path(std::string("data/extra/") + stem + "." + cert + ".sgc")), g);
  return classify_components_evidence(g, c, ball(g, 6));
}

TEST(Structure, ComponentEvidence) {
  EXPECT_EQ(classify_extra("paths3", "drop0").kind, Evidence::RemovableComponent);
  EXPECT_EQ(classify_extra("rays", "origins").kind, Evidence::SpanningPattern);
  EXPECT_EQ(classify_extra("ray_paths", "tail").kind, Evidence::SelfContainedComponent);
  const auto& grid = zoo().get("grid");
  EXPECT_THROW(classify_components_evidence(grid.graph, grid.certificate("row0"), grid.window("", 4)),
               StructureError);
}

TEST(Structure, TransportedFamilyLivesOnTheSmallerHost) {
  const auto& e = zoo().get("rhomb_star");
  RemovableFamily t = transported_family(e.family("main"), e.certificate("P"));
  EXPECT_TRUE(t.host.same_graph(graph_minus(e.graph, e.certificate("P").removed)));
  EXPECT_EQ(t.members.size(), e.family("main").members.size());
}

}  // namespace
}  // namespace scg
