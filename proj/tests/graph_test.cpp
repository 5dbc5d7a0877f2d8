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

#include "scg/graph.hpp"

#include <deque>
#include <map>

#include "support.hpp"

namespace scg {
namespace {

using testing::graph;
using testing::vertex;
using testing::vertices;
using testing::zoo;

// Independent BFS that only uses the adjacency predicate over an index box.
std::map<VertexId, Int> brute_distances(const GraphOracle& g, const VertexId& root, Int box, Int radius) {
  std::vector<VertexId> all = g.vertices_in_box(-box, box);
  std::map<VertexId, Int> dist{{root, 0}};
  std::deque<VertexId> q{root};
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop_front();
    if (dist[u] == radius) continue;
    for (const auto& v : all)
      if (!dist.count(v) && g.adjacent(u, v)) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

TEST(Graph, GridAdjacencyIsManhattanDistanceOne) {
  const auto& g = zoo().get("grid").graph;
  for (Int a = 0; a < 5; ++a)
    for (Int b = 0; b < 5; ++b)
      for (Int c = 0; c < 5; ++c)
        for (Int d = 0; d < 5; ++d) {
          VertexId u{"v", {a, b}}, v{"v", {c, d}};
          bool expect = std::abs(a - c) + std::abs(b - d) == 1;
          ASSERT_EQ(g.adjacent(u, v), expect);
          ASSERT_EQ(g.adjacent(v, u), expect);
        }
  EXPECT_FALSE(g.contains(VertexId{"v", {-1, 0}}));
  EXPECT_THROW(g.require_vertex(VertexId{"v", {-1, 0}}), InvalidVertex);
  EXPECT_THROW(g.require_vertex(VertexId{"w", {0, 0}}), InvalidVertex);
}

TEST(Graph, DegreesIncludeInfinite) {
  const auto& g = zoo().get("example9").graph;
  EXPECT_EQ(g.degree(vertex("v(0)")), DegreeValue::unbounded());
  EXPECT_EQ(g.degree(vertex("v(1)")), DegreeValue::finite(2));
  EXPECT_EQ(g.degree(vertex("v(2)")), DegreeValue::finite(3));
  EXPECT_FALSE(g.neighbors_all(vertex("v(0)")).has_value());
  EXPECT_EQ(*g.neighbors_all(vertex("v(2)")), vertices({"v(0)", "v(1)", "v(3)"}));
  EXPECT_EQ(g.neighbors_bounded(vertex("v(0)"), 3), vertices({"v(1)", "v(2)", "v(3)"}));
  EXPECT_EQ(to_string(DegreeValue::finite(2) + DegreeValue::unbounded()), "inf");

  const auto& grid = zoo().get("grid").graph;
  EXPECT_EQ(grid.degree(vertex("v(0, 0)")), DegreeValue::finite(2));
  EXPECT_EQ(grid.degree(vertex("v(0, 4)")), DegreeValue::finite(3));
  EXPECT_EQ(grid.degree(vertex("v(3, 4)")), DegreeValue::finite(4));
}

TEST(Graph, BallMatchesIndependentBfs) {
  for (const char* name : {"grid", "ray", "example15", "rhomb_star", "roller_brush", "star"}) {
    const auto& e = zoo().get(name);
    const auto& g = e.graph;
    for (Int r = 0; r <= 4; ++r) {
      FiniteWindow w = ball(g, r);
      if (!w.provenance.truncated.empty()) continue;
      std::vector<VertexId> expect;
      Int box = 0;
      for (const auto& root : g.spec().roots)
        for (Int c : root.index) box = std::max(box, std::abs(c));
      box = g.spec().bound.at(r, box);
      for (const auto& [v, d] : brute_distances(g, g.spec().roots.front(), box, r)) expect.push_back(v);
      ASSERT_EQ(w.vertices, expect) << name << " radius " << r;
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
          ASSERT_EQ(w.has_edge(i, j), g.adjacent(w.vertices[i], w.vertices[j]));
    }
  }
}

TEST(Graph, UnderstatedBoundThrows) {
  auto g = graph("graph jumpy\nsort v(n) where n >= 0\nedge v(x) ~ v(y) when y = x + 5\nbound 0\nroot v(0)\n");
  EXPECT_THROW(ball(g, 1), BoundExceeded);
}

TEST(Graph, InfiniteDegreeBallIsClipped) {
  const auto& g = zoo().get("example9").graph;
  FiniteWindow w = ball(g, 1);
  EXPECT_EQ(w.provenance.truncated, vertices({"v(0)"}));
  EXPECT_EQ(w.vertices.front(), vertex("v(0)"));
  EXPECT_EQ(static_cast<Int>(w.size()), w.provenance.index_bound + 1);
}

TEST(Graph, ComplementFlipsAdjacency) {
  const auto& g = zoo().get("ray").graph;
  GraphOracle c = complement(g);
  EXPECT_TRUE(c.complemented());
  for (Int a = 0; a < 8; ++a)
    for (Int b = 0; b < 8; ++b) {
      if (a == b) continue;
      VertexId u{"v", {a}}, v{"v", {b}};
      ASSERT_NE(c.adjacent(u, v), g.adjacent(u, v));
    }
  EXPECT_EQ(c.degree(vertex("v(3)")), DegreeValue::unbounded());
  EXPECT_TRUE(complement(c).same_graph(g));
}

TEST(Graph, MinusRemovesVertices) {
  const auto& e = zoo().get("example15");
  GraphOracle g = graph_minus(e.graph, e.vertex_set("a(j); b(j)"));
  EXPECT_FALSE(g.contains(vertex("a(3)")));
  EXPECT_TRUE(g.contains(vertex("z(3)")));
  EXPECT_EQ(g.degree(vertex("z(3)")), DegreeValue::finite(2));
  EXPECT_EQ(g.degree(vertex("z(-3)")), DegreeValue::finite(3));
  EXPECT_FALSE(g.same_graph(e.graph));
}

TEST(Graph, RayProductRayIsTheGrid) {
  const auto& ray = zoo().get("ray").graph;
  const auto& grid = zoo().get("grid").graph;
  GraphOracle p = cartesian_product(ray, ray);
  for (Int a = 0; a < 5; ++a)
    for (Int b = 0; b < 5; ++b)
      for (Int c = 0; c < 5; ++c)
        for (Int d = 0; d < 5; ++d)
          ASSERT_EQ(p.adjacent(VertexId{"v.v", {a, b}}, VertexId{"v.v", {c, d}}),
                    grid.adjacent(VertexId{"v", {a, b}}, VertexId{"v", {c, d}}));
  EXPECT_EQ(ball(p, 3).size(), ball(grid, 3).size());
}

TEST(Graph, DisjointUnionKeepsFactorsApart) {
  const auto& ray = zoo().get("ray").graph;
  GraphOracle u = disjoint_union({ray, ray});
  ASSERT_TRUE(is_disjoint_union(u));
  VertexId a{"u0.v", {2}}, b{"u1.v", {2}}, c{"u0.v", {3}};
  EXPECT_TRUE(u.adjacent(a, c));
  EXPECT_FALSE(u.adjacent(a, b));
  EXPECT_NE(component_key(u, a), component_key(u, b));
  EXPECT_EQ(component_key(u, a), component_key(u, c));
  EXPECT_FALSE(is_disjoint_union(ray));
}

TEST(Graph, LinkListsBoundaryEdges) {
  const auto& e = zoo().get("grid");
  FiniteWindow w = ball(e.graph, 3);
  auto l = link(e.graph, e.vertex_set("v(m, n) when m = 0"), w);
  // Row m = 0 meets row m = 1 in one edge per column of the window.
  EXPECT_EQ(l.size(), 3u);
  for (const auto& [u, v] : l) {
    EXPECT_EQ(u.index[0], 0);
    EXPECT_EQ(v.index[0], 1);
  }
}

TEST(Graph, ExportsAreDeterministic) {
  const auto& g = zoo().get("rhomb_star").graph;
  FiniteWindow a = ball(g, 2), b = ball(g, 2);
  EXPECT_EQ(window_to_json(a), window_to_json(b));
  EXPECT_EQ(window_to_dot(a), window_to_dot(b));
  EXPECT_NE(window_to_dot(a).find("graph"), std::string::npos);
  EXPECT_NE(window_to_json(a).find("\"v_0\""), std::string::npos);
}

TEST(Graph, Labels) {
  EXPECT_EQ(label(VertexId{"v", {0, 3}}), "v_0_3");
  EXPECT_EQ(label(VertexId{"apex", {}}), "apex");
  EXPECT_EQ(to_dsl(VertexId{"b", {1}}), "b(1)");
  EXPECT_EQ(to_dsl(VertexId{"c", {-2}}), "c(-2)");
}

}  // namespace
}  // namespace scg
