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

#include "scg/ray_builder.hpp"

#include <set>

#include "support.hpp"

namespace scg {
namespace {

using testing::vertex;
using testing::vertices;
using testing::zoo;

Int manhattan(const VertexId& a, const VertexId& b) {
  return std::abs(a.index[0] - b.index[0]) + std::abs(a.index[1] - b.index[1]);
}

TEST(RayBuilder, BfsFindsShortestGridPaths) {
  const auto& g = zoo().get("grid").graph;
  for (Int a = 0; a < 4; ++a)
    for (Int b = 0; b < 4; ++b) {
      VertexId u{"v", {0, 0}}, v{"v", {a, b}};
      auto p = bfs_path(g, u, v, 6);
      ASSERT_TRUE(p.has_value());
      EXPECT_EQ(static_cast<Int>(p->size()) - 1, manhattan(u, v));
      EXPECT_EQ(p->front(), u);
      EXPECT_EQ(p->back(), v);
      EXPECT_TRUE(is_path(g, *p));
    }
  EXPECT_FALSE(bfs_path(g, vertex("v(0, 0)"), vertex("v(9, 9)"), 4).has_value());
}

TEST(RayBuilder, BfsRespectsComponents) {
  const auto& g = zoo().get("example15").graph;
  auto p = bfs_path(g, vertex("a(1)"), vertex("b(1)"), 4);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (std::vector<VertexId>{vertex("a(1)"), vertex("z(1)"), vertex("b(1)")}));
}

TEST(RayBuilder, IsPath) {
  const auto& g = zoo().get("ray").graph;
  EXPECT_TRUE(is_path(g, vertices({"v(0)", "v(1)", "v(2)"})));
  EXPECT_FALSE(is_path(g, {vertex("v(0)"), vertex("v(2)")}));
  EXPECT_FALSE(is_path(g, {vertex("v(0)"), vertex("v(1)"), vertex("v(0)")}));
}

void expect_ray_invariants(const GraphOracle& g, const RayPrefix& r, std::size_t length) {
  ASSERT_GE(r.vertices.size(), length);
  EXPECT_TRUE(is_path(g, r.vertices));
  std::set<VertexId> distinct(r.vertices.begin(), r.vertices.end());
  EXPECT_EQ(distinct.size(), r.vertices.size());
  std::set<std::pair<VertexId, VertexId>> chords;
  for (std::size_t i = 0; i < r.vertices.size(); ++i)
    for (std::size_t j = i + 2; j < r.vertices.size(); ++j)
      if (g.adjacent(r.vertices[i], r.vertices[j])) chords.insert({r.vertices[i], r.vertices[j]});
  EXPECT_EQ(chords.size(), r.chords.size());
  for (const auto& step : r.steps) {
    EXPECT_TRUE(g.adjacent(step.crossing.first, step.crossing.second));
    EXPECT_GE(step.search_bound, 4);
  }
}

TEST(RayBuilder, GridRay) {
  const auto& e = zoo().get("grid");
  RayPrefix r = build_ray(e.graph, e.cover_oracle(), vertex("v(0, 0)"), 20);
  expect_ray_invariants(e.graph, r, 21);
  EXPECT_EQ(r.vertices.front(), vertex("v(0, 0)"));
  EXPECT_EQ(r.steps.size(), 20u);
}

TEST(RayBuilder, RayTimesRayRay) {
  const auto& ray = zoo().get("ray");
  GraphOracle g = cartesian_product(ray.graph, ray.graph);
  const auto& head = ray.cover_oracle();
  // The ray's cover lifted to the product, applied along the first factor.
  CoverOracle cover = [&](const VertexId& v) {
    VertexId first{"v", {v.index[0]}};
    return product_lift(head(first), ray.graph);
  };
  RayPrefix r = build_ray(g, cover, VertexId{"v.v", {0, 0}}, 20);
  expect_ray_invariants(g, r, 21);
}

TEST(RayBuilder, RayOnTheRay) {
  const auto& e = zoo().get("ray");
  RayPrefix r = build_ray(e.graph, e.cover_oracle(), vertex("v(0)"), 10);
  expect_ray_invariants(e.graph, r, 11);
  EXPECT_TRUE(r.chords.empty());
  for (std::size_t i = 0; i < r.vertices.size(); ++i) EXPECT_EQ(r.vertices[i], (VertexId{"v", {Int(i)}}));
}

TEST(RayBuilder, ConstantRowCoverPeelsSuccessiveRows) {
  const auto& e = zoo().get("grid");
  const auto& row0 = e.certificate("row0");
  // Queries are preimages under the cumulative certificate, so row 0 always
  // contains them and the transported copies are the later rows.
  CoverOracle fixed = [&](const VertexId&) { return row0; };
  RayPrefix r = build_ray(e.graph, fixed, vertex("v(0, 0)"), 5);
  expect_ray_invariants(e.graph, r, 6);
}

TEST(RayBuilder, BadCoverIsRejected) {
  const auto& e = zoo().get("grid");
  const auto& row0 = e.certificate("row0");
  CoverOracle fixed = [&](const VertexId&) { return row0; };
  EXPECT_THROW(build_ray(e.graph, fixed, vertex("v(3, 3)"), 5), RayError);
  const auto& other = zoo().get("ray").certificate("tail");
  CoverOracle foreign = [&](const VertexId&) { return other; };
  EXPECT_THROW(build_ray(e.graph, foreign, vertex("v(0, 0)"), 5), RayError);
  RayOptions tight;
  tight.bound_cap = 2;
  EXPECT_THROW(build_ray(e.graph, e.cover_oracle(), vertex("v(0, 0)"), 20, tight), RayError);
}

}  // namespace
}  // namespace scg
