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

#pragma once

// Builds long paths in a connected graph whose vertices are all covered by
// removable subgraphs: each step removes a fresh copy of a covering subgraph
// from what is left and walks out of it.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scg/embedding.hpp"
#include "scg/graph.hpp"

namespace scg {

class RayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns a certificate on the graph whose removed set contains the vertex.
using CoverOracle = std::function<IsoCertificate(const VertexId&)>;

/// Shortest path from u to v using vertices with every index component in
/// [-bound, bound]; ties broken by vertex order. nullopt when none exists
/// inside the bound.
std::optional<std::vector<VertexId>> bfs_path(const GraphOracle& g, const VertexId& u, const VertexId& v,
                                              Int bound);

struct RayStep {
  std::string cover;                  // name of the cover certificate used
  VertexId query;                     // vertex handed to the cover oracle
  std::vector<VertexId> segment;      // from the step's start to the crossing vertex
  std::pair<VertexId, VertexId> crossing;  // the first link edge of the step
  Int search_bound = 0;
};

struct RayPrefix {
  std::vector<VertexId> vertices;
  std::vector<RayStep> steps;
  /// Edges of the graph between non-consecutive path vertices.
  std::vector<std::pair<VertexId, VertexId>> chords;
  /// Removed set of the final cumulative certificate.
  VertexSet removed;
};

struct RayOptions {
  Int initial_bound = 4;
  Int bound_cap = 1 << 12;
};

/// Throws RayError when the cover oracle misbehaves or a path search hits
/// the bound cap.
RayPrefix build_ray(const GraphOracle& g, const CoverOracle& cover, const VertexId& start, int steps,
                    RayOptions options = {});

/// Rechecks consecutive adjacency and distinctness against the oracle.
bool is_path(const GraphOracle& g, const std::vector<VertexId>& vertices);

}  // namespace scg
