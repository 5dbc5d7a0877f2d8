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

#include "scg/embedding.hpp"

#include <set>

#include "scg/finite_oracle.hpp"
#include "support.hpp"

namespace scg {
namespace {

using testing::certificate;
using testing::vertex;
using testing::vertices;
using testing::zoo;

// f^i(S) restricted to a window, by forward application of the map.
std::set<VertexId> forward_iterate(const IsoCertificate& c, const std::vector<VertexId>& s, int i) {
  std::set<VertexId> cur(s.begin(), s.end());
  for (int k = 0; k < i; ++k) {
    std::set<VertexId> next;
    for (const auto& v : cur) {
      auto w = c.forward.apply(v);
      if (w) next.insert(*w);
    }
    cur = std::move(next);
  }
  return cur;
}

TEST(Embedding, ZooCertificatesVerify) {
  int count = 0;
  for (const auto& name : zoo().list()) {
    const auto& e = zoo().get(name);
    for (const auto& cname : e.certificate_order) {
      const auto& c = e.certificate(cname);
      VerificationReport r = e.derived_kind.count(cname) && e.derived_kind.at(cname) == "complement"
                                 ? verify_on_box(c, 0, 8)
                                 : verify_certificate(c, 5, e.roots(e.certificate_host.at(cname)));
      EXPECT_TRUE(r.passed) << name << "." << cname << ": "
                            << (r.counterexample ? r.counterexample->check + " " + r.counterexample->detail : "");
      ++count;
    }
  }
  EXPECT_GE(count, 20);
}

TEST(Embedding, CorruptedCertificateFails) {
  const auto& e = zoo().get("example15");
  IsoCertificate c = e.certificate("a1");
  // Send c(0) to z(1), which is already the image of z(0).
  for (auto& b : c.forward.branches)
    if (b.source == "c" && b.target == "b") b.target = "z";
  VerificationReport r = verify_certificate(c, 4);
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_FALSE(r.counterexample->vertices.empty());

  IsoCertificate wrong_removed = e.certificate("a1");
  wrong_removed.removed = e.vertex_set("a(2)");
  EXPECT_FALSE(verify_certificate(wrong_removed, 4).passed);
}

TEST(Embedding, VerificationAgreesWithPointwiseAdjacency) {
  const auto& e = zoo().get("roller_brush");
  const auto& c = e.certificate("copy1");
  FiniteWindow w = ball(e.graph, 3);
  VerificationReport r = verify_on_window(c, w);
  ASSERT_TRUE(r.passed);
  EXPECT_EQ(r.certified_radius, 3);
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto fi = c.forward.apply(w.vertices[i]);
    ASSERT_TRUE(fi && e.graph.contains(*fi) && !c.removed.contains(*fi));
    EXPECT_EQ(c.inverse.apply(*fi), w.vertices[i]);
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      auto fj = c.forward.apply(w.vertices[j]);
      ASSERT_TRUE(fj);
      EXPECT_EQ(e.graph.adjacent(*fi, *fj), w.has_edge(i, j));
    }
  }
}

TEST(Embedding, InIterateMatchesForwardApplication) {
  for (auto [entry, cname] : {std::pair{"example15", "a1"}, {"rhomb_star", "P"}, {"grid", "row0"}}) {
    const auto& e = zoo().get(entry);
    const auto& c = e.certificate(cname);
    FiniteWindow w = box_window(e.graph, -12, 12);
    auto base = members_in(c.removed, w);
    for (int i = 0; i < 4; ++i) {
      auto expect = forward_iterate(c, base, i);
      FiniteWindow small = box_window(e.graph, -5, 5);
      for (const auto& v : small.vertices) EXPECT_EQ(in_iterate(c, c.removed, i, v), expect.count(v) > 0);
    }
    VertexSet img = image_set(c, c.removed);
    auto once = forward_iterate(c, base, 1);
    for (const auto& v : box_window(e.graph, -5, 5).vertices) EXPECT_EQ(img.contains(v), once.count(v) > 0);
  }
}

TEST(Embedding, TransportMovesTheRemovedSet) {
  const auto& e = zoo().get("rhomb_star");
  IsoCertificate t = transport(e.certificate("P"), e.certificate("Q"));
  FiniteWindow w = box_window(e.graph, 0, 20);
  EXPECT_EQ(members_in(t.removed, w), members_in(e.certificate("R").removed, w));
  GraphOracle moved = graph_minus(e.graph, e.certificate("P").removed);
  EXPECT_TRUE(t.host.same_graph(moved));
  EXPECT_TRUE(verify_certificate(t, 4, {vertex("v(0)")}).passed);
}

TEST(Embedding, ComposeRemovesTheUnion) {
  const auto& e = zoo().get("rhomb_star");
  const auto& p = e.certificate("P");
  IsoCertificate both = compose_certificates(p, transport(p, e.certificate("Q")));
  FiniteWindow w = box_window(e.graph, 0, 20);
  EXPECT_EQ(members_in(both.removed, w), vertices({"v(1)", "v(2)", "v(3)", "v(4)", "v(5)", "v(6)"}));
  EXPECT_TRUE(verify_certificate(both, 5).passed);
  EXPECT_EQ(members_in(both.removed, w), members_in(e.certificate("PR").removed, w));
}

TEST(Embedding, IterateCopiesAreDisjointAndEmbed) {
  const auto& e = zoo().get("rhomb_star");
  const auto& p = e.certificate("P");
  FiniteWindow w = box_window(e.graph, 0, 30);
  auto copies = iterate_copies(p, 6, w);
  ASSERT_EQ(copies.size(), 6u);
  std::set<VertexId> seen;
  for (const auto& s : copies)
    for (const auto& v : members_in(s, w)) EXPECT_TRUE(seen.insert(v).second) << label(v);
  for (std::size_t i = 0; i + 1 < copies.size(); ++i) {
    FiniteWindow a = induced_window(e.graph, members_in(copies[i], w));
    FiniteWindow b = induced_window(e.graph, members_in(copies[i + 1], w));
    ASSERT_EQ(a.size(), 3u);
    EXPECT_TRUE(induced_isomorphic(a, b).has_value());
  }
}

TEST(Embedding, IsoUnion) {
  const auto& e = zoo().get("rhomb_star");
  FiniteWindow w = ball(e.graph, 3);
  // S fixes the first rhombus pointwise; P shifts the second one.
  auto ok = iso_union(e.certificate("S"), e.certificate("P"), w);
  EXPECT_FALSE(iso_union(e.certificate("P"), e.certificate("S"), w).certificate.has_value());
  ASSERT_TRUE(ok.certificate.has_value());
  EXPECT_TRUE(verify_certificate(*ok.certificate, 4).passed);
  auto moved = iso_union(e.certificate("P"), e.certificate("R"), w);
  EXPECT_FALSE(moved.certificate.has_value());
  EXPECT_EQ(moved.moved, vertex("v(5)"));
  EXPECT_THROW(iso_union(e.certificate("P"), e.certificate("Q"), w), CertificateError);
}

TEST(Embedding, ComplementAndProductTransfers) {
  const auto& e = zoo().get("example9");
  const auto& shift = e.certificate("shift");
  IsoCertificate c = complement_transfer(shift);
  EXPECT_TRUE(c.host.complemented());
  EXPECT_TRUE(verify_on_box(c, 0, 10).passed);
  IsoCertificate p = product_lift(shift, zoo().get("ray").graph);
  EXPECT_TRUE(verify_certificate(p, 4).passed);
}

TEST(Embedding, ComposeMapsAgreeWithPointwiseComposition) {
  const auto& e = zoo().get("example15");
  const auto& f = e.certificate("a1").forward;
  PiecewiseMap ff = compose(f, f, &e.graph.spec());
  for (const auto& v : box_window(e.graph, -6, 6).vertices) {
    auto once = f.apply(v);
    ASSERT_TRUE(once);
    EXPECT_EQ(ff.apply(v), f.apply(*once)) << label(v);
  }
  PiecewiseMap id = identity_map(e.graph.spec());
  for (const auto& v : box_window(e.graph, -3, 3).vertices) EXPECT_EQ(id.apply(v), v);
}

TEST(Embedding, CertificateFromText) {
  const auto& g = zoo().get("ray").graph;
  IsoCertificate c = certificate(
      "certificate drop0\nremove v(0)\nmap v(n) -> v(n + 1)\ninverse v(n) -> v(n - 1) when n >= 1\n", g);
  EXPECT_TRUE(verify_certificate(c, 6).passed);
  EXPECT_EQ(c.forward.displacement_bound(), 1);
}

}  // namespace
}  // namespace scg
