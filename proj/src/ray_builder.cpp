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

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace scg {

namespace {

Int extent(const VertexId& v) {
  Int e = 0;
  for (Int x : v.index) e = std::max<Int>(e, x < 0 ? -x : x);
  return e;
}

}  // namespace

std::optional<std::vector<VertexId>> bfs_path(const GraphOracle& g, const VertexId& u, const VertexId& v,
                                              Int bound) {
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v) return std::vector<VertexId>{u};
  if (extent(u) > bound || extent(v) > bound) return std::nullopt;
  std::map<VertexId, VertexId> parent;
  std::deque<VertexId> queue{u};
  parent.emplace(u, u);
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (const auto& y : g.neighbors_bounded(x, bound)) {
      if (!parent.emplace(y, x).second) continue;
      if (y == v) {
        std::vector<VertexId> path{v};
        while (!(path.back() == u)) path.push_back(parent.at(path.back()));
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

bool is_path(const GraphOracle& g, const std::vector<VertexId>& vertices) {
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!g.contains(vertices[i]) || !seen.insert(vertices[i]).second) return false;
    if (i > 0 && !g.adjacent(vertices[i - 1], vertices[i])) return false;
  }
  return true;
}

namespace {

IsoCertificate checked_cover(const GraphOracle& g, const CoverOracle& cover, const VertexId& u) {
  IsoCertificate c = cover(u);
  if (!c.host.same_graph(g)) throw RayError("cover for " + to_dsl(u) + " is not on '" + g.id() + "'");
  if (!c.removed.contains(u)) throw RayError("cover '" + c.name + "' does not contain " + to_dsl(u));
  VerificationReport r = verify_certificate(c, 2, {u});
  if (!r.passed)
    throw RayError("cover '" + c.name + "' fails near " + to_dsl(u) + ": " + r.counterexample->detail);
  return c;
}

// Walks from `from` to `step.forward(from)` in `inside`, stopping at the
// first vertex outside `step.removed`.
RayStep walk(const GraphOracle& inside, const IsoCertificate& step, const VertexId& from, RayOptions options) {
  auto target = step.forward.apply(from);
  if (!target || !inside.contains(*target))
    throw RayError("certificate '" + step.name + "' does not map " + to_dsl(from));
  RayStep s;
  s.query = from;
  for (Int bound = std::max<Int>(options.initial_bound, std::max(extent(from), extent(*target)));;
       bound *= 2) {
    if (bound > options.bound_cap)
      throw RayError("no path from " + to_dsl(from) + " to " + to_dsl(*target) + " within index bound " +
                     std::to_string(options.bound_cap));
    auto path = bfs_path(inside, from, *target, bound);
    if (!path) continue;
    s.search_bound = bound;
    for (std::size_t j = 1; j < path->size(); ++j) {
      if (step.removed.contains((*path)[j])) continue;
      s.segment.assign(path->begin(), path->begin() + static_cast<std::ptrdiff_t>(j) + 1);
      s.crossing = {(*path)[j - 1], (*path)[j]};
      return s;
    }
    throw RayError("path from " + to_dsl(from) + " never leaves the removed set");
  }
}

}  // namespace

RayPrefix build_ray(const GraphOracle& g, const CoverOracle& cover, const VertexId& start, int steps,
                    RayOptions options) {
  g.require_vertex(start);
  if (steps < 1) throw RayError("steps must be positive");
  RayPrefix out;
  out.vertices.push_back(start);

  // First step: a cover of the start vertex, walked inside g itself.
  IsoCertificate first = checked_cover(g, cover, start);
  RayStep s = walk(g, first, start, options);
  s.cover = first.name;
  out.vertices.insert(out.vertices.end(), s.segment.begin() + 1, s.segment.end());
  out.steps.push_back(std::move(s));
  IsoCertificate total = first;
  total.name = "H1";

  for (int i = 1; i < steps; ++i) {
    const VertexId v = out.vertices.back();
    auto u = total.inverse.apply(v);
    if (!u) throw RayError("cumulative certificate has no preimage for " + to_dsl(v));
    IsoCertificate k = checked_cover(g, cover, *u);
    // The cover moved onto g minus the cumulative removed set contains v.
    IsoCertificate moved = transport(total, k);
    if (!moved.removed.contains(v)) throw RayError("transported cover misses " + to_dsl(v));
    RayStep st = walk(moved.host, moved, v, options);
    st.cover = k.name;
    st.query = *u;
    out.vertices.insert(out.vertices.end(), st.segment.begin() + 1, st.segment.end());
    out.steps.push_back(std::move(st));
    total = compose_certificates(total, moved);
    total.name = "H" + std::to_string(i + 1);
  }
  out.removed = total.removed;

  if (!is_path(g, out.vertices)) throw RayError("constructed sequence is not a path");
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    for (std::size_t j = i + 2; j < out.vertices.size(); ++j)
      if (g.adjacent_valid(out.vertices[i], out.vertices[j])) out.chords.emplace_back(out.vertices[i], out.vertices[j]);
  return out;
}

}  // namespace scg
