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

// Brute-force checks on finite windows: induced isomorphism and induced
// embedding by backtracking with degree pruning, and degree censuses taken
// against the host oracle. Independent of the certificate machinery.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scg/graph.hpp"

namespace scg {

class OracleLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kIsoFreeLimit = 12;
inline constexpr std::size_t kEmbedFreeLimit = 10;

/// Source -> target pairs.
using Mapping = std::vector<std::pair<VertexId, VertexId>>;

/// True iff `m` is injective, total on `a`, lands in `b` and preserves
/// adjacency and non-adjacency.
bool is_induced_embedding(const FiniteWindow& a, const FiniteWindow& b, const Mapping& m);

/// Isomorphism a -> b extending `pinned`, or nullopt after exhaustive search.
/// Throws OracleLimit when more than kIsoFreeLimit vertices of `a` are free.
std::optional<Mapping> induced_isomorphic(const FiniteWindow& a, const FiniteWindow& b,
                                          const Mapping& pinned = {});
/// Induced embedding a -> b extending `pinned`; guard kEmbedFreeLimit.
std::optional<Mapping> embed_into(const FiniteWindow& a, const FiniteWindow& b, const Mapping& pinned = {});

struct CensusProfile {
  std::map<Int, std::size_t> finite;  // degree -> count
  std::size_t infinite = 0;
  Int k = 0;
  std::map<Int, std::vector<VertexId>> low_degree;  // degree <= k -> vertices

  std::size_t count(Int degree) const;
};

/// Degrees come from `host`, never from the window's own edges.
CensusProfile degree_census(const FiniteWindow& w, const GraphOracle& host, Int k);

}  // namespace scg
