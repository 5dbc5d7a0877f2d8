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

// Finitely presented infinite graphs.
//
// A GraphSpec declares sorts (named integer-indexed vertex families with a
// domain constraint) and symmetric adjacency rules guarded by formulas. A
// GraphOracle wraps an immutable spec with a complement flag and a stack of
// removed vertex sets; all queries are pure. FiniteWindow is an explicit
// induced subgraph extracted from an oracle.

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scg/formula.hpp"

namespace scg {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public GraphError {
 public:
  using GraphError::GraphError;
};

class BoundExceeded : public GraphError {
 public:
  using GraphError::GraphError;
};

struct VertexId {
  std::string sort;
  std::vector<Int> index;

  auto operator<=>(const VertexId&) const = default;
  bool operator==(const VertexId&) const = default;
};

/// `b_1`, `v_0_3`, `apex`.
std::string label(const VertexId& v);
/// `b(1)`, `v(0, 3)`, `apex()`.
std::string to_dsl(const VertexId& v);

struct DegreeValue {
  bool infinite = false;
  Int value = 0;

  static DegreeValue finite(Int n) { return {false, n}; }
  static DegreeValue unbounded() { return {true, 0}; }
  bool operator==(const DegreeValue&) const = default;
};

DegreeValue operator+(DegreeValue a, DegreeValue b);
std::string to_string(DegreeValue d);

struct SortDecl {
  std::string name;
  std::vector<std::string> vars;
  Formula domain;  // over variables 0..arity-1

  int arity() const { return static_cast<int>(vars.size()); }
};

/// Edge family between `left` and `right`; guard variables are the left
/// index (0..a-1) followed by the right index (a..a+b-1). Interpreted
/// symmetrically.
struct AdjacencyRule {
  std::string left;
  std::string right;
  std::vector<std::string> left_vars;
  std::vector<std::string> right_vars;
  Formula guard;
};

/// Index bound for radius-r balls: every vertex within distance r of the
/// roots has all index components of absolute value at most
/// max|root component| + scale * r + offset.
struct IndexBound {
  Int scale = 1;
  Int offset = 0;
  Int at(Int radius, Int root_extent) const { return root_extent + scale * radius + offset; }
  bool operator==(const IndexBound&) const = default;
};

struct GraphSpec {
  std::string name;
  std::vector<SortDecl> sorts;  // sorted by name
  std::vector<AdjacencyRule> rules;
  IndexBound bound;
  std::vector<VertexId> roots;
  /// Sort -> index coordinate that enumerates connected components.
  std::map<std::string, int> component_coord;
  /// Number of factors when built by disjoint_union (sorts are `u<k>.<s>`).
  int union_factors = 0;
  /// Product sort -> (left factor sort, right factor sort).
  std::map<std::string, std::pair<std::string, std::string>> product_of;

  const SortDecl* find_sort(std::string_view name) const;
};

struct SetClause {
  std::string sort;
  Formula condition;  // over the sort's index variables
  bool operator==(const SetClause&) const = default;
};

/// A (possibly infinite) set of vertices: formula clauses per sort plus an
/// explicit finite list of additions and exceptions.
class VertexSet {
 public:
  std::vector<SetClause> clauses;
  std::vector<VertexId> include;
  std::vector<VertexId> exclude;

  static VertexSet of(std::vector<VertexId> vertices);

  bool contains(const VertexId& v) const;
  /// Membership formula for vertices of `sort` over variables 0..arity-1.
  Formula membership(const std::string& sort, int arity) const;
  VertexSet united(const VertexSet& other) const;
  bool syntactically_empty() const { return clauses.empty() && include.empty(); }
  std::vector<std::string> sorts() const;

  bool operator==(const VertexSet&) const = default;
};

class GraphOracle;

/// Vertices of `g` outside `s`, as a vertex set.
VertexSet complement_in(const GraphOracle& g, const VertexSet& s);

/// Text form `a(j) when j = 1; z(3)`; variable names from the host's sorts.
std::string describe(const VertexSet& s, const GraphSpec& spec);

class GraphOracle {
 public:
  explicit GraphOracle(GraphSpec spec);

  const GraphSpec& spec() const;
  bool complemented() const { return complemented_; }
  const std::vector<VertexSet>& removed() const { return removed_; }
  const std::string& id() const { return id_; }

  /// Sort known, arity and domain satisfied, not removed.
  bool contains(const VertexId& v) const;
  void require_vertex(const VertexId& v) const;

  bool adjacent(const VertexId& u, const VertexId& v) const;
  /// Adjacency without validity checks; both vertices must be known valid.
  bool adjacent_valid(const VertexId& u, const VertexId& v) const;
  DegreeValue degree(const VertexId& v) const;
  /// Neighbors with every index component in [-bound, bound], sorted.
  std::vector<VertexId> neighbors_bounded(const VertexId& v, Int bound) const;
  /// The full neighborhood, or nullopt when the degree is infinite.
  std::optional<std::vector<VertexId>> neighbors_all(const VertexId& v) const;
  /// Valid vertices with every index component in [lo, hi], sorted.
  std::vector<VertexId> vertices_in_box(Int lo, Int hi) const;

  /// Same spec (by content), complement flag and removal stack.
  bool same_graph(const GraphOracle& other) const;

 private:
  struct Compiled;
  GraphOracle(std::shared_ptr<const Compiled> c, bool complemented, std::vector<VertexSet> removed);
  Formula neighbor_formula(const VertexId& v, const SortDecl& target) const;
  bool removed_contains(const VertexId& v) const;
  void refresh_id();

  std::shared_ptr<const Compiled> compiled_;
  bool complemented_ = false;
  std::vector<VertexSet> removed_;
  std::string id_;

  friend GraphOracle graph_minus(const GraphOracle& g, const VertexSet& s);
  friend GraphOracle complement(const GraphOracle& g);
};

struct WindowProvenance {
  std::string oracle_id;
  std::string kind;  // ball | box | induced
  std::vector<VertexId> roots;
  Int radius = -1;
  Int index_bound = 0;
  Int box_lo = 0;
  Int box_hi = 0;
  /// Infinite-degree vertices whose neighborhoods were cut at index_bound.
  /// When nonempty the window is the ball clipped to the index box.
  std::vector<VertexId> truncated;
};

struct FiniteWindow {
  std::vector<VertexId> vertices;                       // sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  WindowProvenance provenance;

  std::size_t size() const { return vertices.size(); }
  bool contains(const VertexId& v) const;
  std::optional<std::size_t> index_of(const VertexId& v) const;
  bool has_edge(std::size_t i, std::size_t j) const;
};

bool adjacent(const GraphOracle& g, const VertexId& u, const VertexId& v);
DegreeValue degree(const GraphOracle& g, const VertexId& v);
std::vector<VertexId> neighbors_bounded(const GraphOracle& g, const VertexId& v, Int bound);

/// Induced window on the distance-<=radius set around `roots`, explored
/// inside the declared index box. Throws BoundExceeded when a finite-degree
/// vertex has neighbors outside the box and no infinite-degree vertex was
/// expanded; otherwise the result is clipped to the box.
FiniteWindow ball(const GraphOracle& g, const std::vector<VertexId>& roots, Int radius);
/// Ball around the spec's declared roots.
FiniteWindow ball(const GraphOracle& g, Int radius);
FiniteWindow box_window(const GraphOracle& g, Int lo, Int hi);
FiniteWindow induced_window(const GraphOracle& g, std::vector<VertexId> vertices);
/// The vertices of `w` that are valid in `g`, induced in `g`; keeps the
/// radius and roots of `w` in the provenance.
FiniteWindow restrict_window(const GraphOracle& g, const FiniteWindow& w);

GraphOracle graph_minus(const GraphOracle& g, const VertexSet& s);
GraphOracle complement(const GraphOracle& g);
GraphOracle disjoint_union(const std::vector<GraphOracle>& gs);
GraphOracle cartesian_product(const GraphOracle& g, const GraphOracle& h);

/// Window edges with exactly one endpoint in `s`.
std::vector<std::pair<VertexId, VertexId>> link(const GraphOracle& g, const VertexSet& s,
                                                const FiniteWindow& w);

bool is_disjoint_union(const GraphOracle& g);
/// Component tag: factor index, then the declared component coordinate.
std::vector<Int> component_key(const GraphOracle& g, const VertexId& v);

/// Canonical exports; byte-identical for identical windows.
std::string window_to_json(const FiniteWindow& w);
std::string window_to_dot(const FiniteWindow& w, const std::vector<VertexId>& highlight_path = {});

}  // namespace scg
