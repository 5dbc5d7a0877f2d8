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

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "json.hpp"

namespace scg {

// ---------------------------------------------------------------------------
// Vertices and degrees

std::string label(const VertexId& v) {
  std::string s = v.sort;
  for (Int i : v.index) s += "_" + std::to_string(i);
  return s;
}

std::string to_dsl(const VertexId& v) {
  std::string s = v.sort + "(";
  for (std::size_t i = 0; i < v.index.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v.index[i]);
  }
  return s + ")";
}

DegreeValue operator+(DegreeValue a, DegreeValue b) {
  if (a.infinite || b.infinite) return DegreeValue::unbounded();
  return DegreeValue::finite(a.value + b.value);
}

std::string to_string(DegreeValue d) { return d.infinite ? "inf" : std::to_string(d.value); }

const SortDecl* GraphSpec::find_sort(std::string_view name) const {
  auto it = std::lower_bound(sorts.begin(), sorts.end(), name,
                             [](const SortDecl& s, std::string_view n) { return s.name < n; });
  if (it == sorts.end() || it->name != name) return nullptr;
  return &*it;
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet VertexSet::of(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  VertexSet s;
  s.include = std::move(vertices);
  return s;
}

bool VertexSet::contains(const VertexId& v) const {
  if (std::find(exclude.begin(), exclude.end(), v) != exclude.end()) return false;
  if (std::find(include.begin(), include.end(), v) != include.end()) return true;
  for (const auto& c : clauses) {
    if (c.sort != v.sort) continue;
    if (c.condition.max_var() >= static_cast<int>(v.index.size())) continue;
    if (c.condition.eval(v.index)) return true;
  }
  return false;
}

Formula VertexSet::membership(const std::string& sort, int arity) const {
  std::vector<Formula> parts;
  for (const auto& c : clauses)
    if (c.sort == sort) parts.push_back(c.condition);
  for (const auto& v : include)
    if (v.sort == sort && static_cast<int>(v.index.size()) == arity)
      parts.push_back(Formula::equals_point(v.index));
  Formula f = Formula::disj(std::move(parts));
  std::vector<Formula> guarded{f};
  for (const auto& v : exclude)
    if (v.sort == sort && static_cast<int>(v.index.size()) == arity)
      guarded.push_back(Formula::negation(Formula::equals_point(v.index)));
  return Formula::conj(std::move(guarded));
}

VertexSet VertexSet::united(const VertexSet& other) const {
  // Exceptions of either side must not hide members of the other.
  VertexSet out;
  auto absorb = [&out](const VertexSet& s) {
    if (s.exclude.empty()) {
      out.clauses.insert(out.clauses.end(), s.clauses.begin(), s.clauses.end());
      out.include.insert(out.include.end(), s.include.begin(), s.include.end());
      return;
    }
    for (const auto& srt : s.sorts()) {
      // Fold the exceptions into per-sort clauses; arity from any clause.
      int arity = -1;
      for (const auto& v : s.include)
        if (v.sort == srt) arity = static_cast<int>(v.index.size());
      for (const auto& v : s.exclude)
        if (v.sort == srt) arity = static_cast<int>(v.index.size());
      for (const auto& c : s.clauses)
        if (c.sort == srt) arity = std::max(arity, c.condition.max_var() + 1);
      out.clauses.push_back({srt, s.membership(srt, std::max(arity, 0))});
    }
  };
  absorb(*this);
  absorb(other);
  std::sort(out.include.begin(), out.include.end());
  out.include.erase(std::unique(out.include.begin(), out.include.end()), out.include.end());
  return out;
}

std::vector<std::string> VertexSet::sorts() const {
  std::set<std::string> s;
  for (const auto& c : clauses) s.insert(c.sort);
  for (const auto& v : include) s.insert(v.sort);
  for (const auto& v : exclude) s.insert(v.sort);
  return {s.begin(), s.end()};
}

std::string describe(const VertexSet& s, const GraphSpec& spec) {
  std::vector<std::string> items;
  for (const auto& c : s.clauses) {
    const SortDecl* d = spec.find_sort(c.sort);
    std::vector<std::string> names;
    if (d) names = d->vars;
    std::string item = c.sort + "(";
    for (std::size_t i = 0; i < names.size(); ++i) item += (i ? ", " : "") + names[i];
    item += ")";
    if (!c.condition.is_true()) item += " when " + to_text(c.condition, names);
    items.push_back(item);
  }
  for (const auto& v : s.include) items.push_back(to_dsl(v));
  for (const auto& v : s.exclude) items.push_back("except " + to_dsl(v));
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "; " : "") + items[i];
  return out;
}

// ---------------------------------------------------------------------------
// GraphOracle

struct GraphOracle::Compiled {
  GraphSpec spec;
  // (s, t) -> adjacency formula over s's index followed by t's index.
  std::map<std::pair<std::string, std::string>, Formula> adjacency;
};

namespace {

void validate_spec(const GraphSpec& spec) {
  std::set<std::string> names;
  for (const auto& s : spec.sorts) {
    if (s.name.empty()) throw GraphError("sort with empty name");
    if (!names.insert(s.name).second) throw GraphError("duplicate sort '" + s.name + "'");
    if (s.domain.max_var() >= s.arity())
      throw GraphError("domain of sort '" + s.name + "' mentions an unknown coordinate");
  }
  for (const auto& r : spec.rules) {
    const SortDecl* l = spec.find_sort(r.left);
    const SortDecl* rt = spec.find_sort(r.right);
    if (!l) throw GraphError("rule references unknown sort '" + r.left + "'");
    if (!rt) throw GraphError("rule references unknown sort '" + r.right + "'");
    if (static_cast<int>(r.left_vars.size()) != l->arity() ||
        static_cast<int>(r.right_vars.size()) != rt->arity())
      throw GraphError("rule arity mismatch for '" + r.left + "' ~ '" + r.right + "'");
    if (r.guard.max_var() >= l->arity() + rt->arity())
      throw GraphError("rule guard mentions an unknown variable");
  }
}

}  // namespace

GraphOracle::GraphOracle(GraphSpec spec) {
  std::sort(spec.sorts.begin(), spec.sorts.end(),
            [](const SortDecl& a, const SortDecl& b) { return a.name < b.name; });
  validate_spec(spec);
  auto c = std::make_shared<Compiled>();
  for (const auto& s : spec.sorts) {
    for (const auto& t : spec.sorts) {
      int a = s.arity(), b = t.arity();
      std::vector<Formula> parts;
      for (const auto& r : spec.rules) {
        if (r.left == s.name && r.right == t.name) parts.push_back(r.guard);
        if (r.left == t.name && r.right == s.name) {
          // Rule layout is [t, s]; move to [s, t].
          std::vector<LinExpr> subst;
          for (int i = 0; i < b; ++i) subst.push_back(LinExpr::variable(a + i));
          for (int j = 0; j < a; ++j) subst.push_back(LinExpr::variable(j));
          parts.push_back(r.guard.substitute(subst));
        }
      }
      c->adjacency[{s.name, t.name}] = Formula::disj(std::move(parts));
    }
  }
  c->spec = std::move(spec);
  compiled_ = std::move(c);
  refresh_id();
  for (const auto& r : compiled_->spec.roots) {
    if (!contains(r)) throw GraphError("declared root " + to_dsl(r) + " is not a vertex");
  }
}

GraphOracle::GraphOracle(std::shared_ptr<const Compiled> c, bool complemented,
                         std::vector<VertexSet> removed)
    : compiled_(std::move(c)), complemented_(complemented), removed_(std::move(removed)) {
  refresh_id();
}

const GraphSpec& GraphOracle::spec() const { return compiled_->spec; }

void GraphOracle::refresh_id() {
  id_ = compiled_->spec.name;
  if (complemented_) id_ += "^c";
  for (const auto& s : removed_) id_ += " \\ {" + describe(s, compiled_->spec) + "}";
}

bool GraphOracle::removed_contains(const VertexId& v) const {
  for (const auto& s : removed_)
    if (s.contains(v)) return true;
  return false;
}

bool GraphOracle::contains(const VertexId& v) const {
  const SortDecl* s = spec().find_sort(v.sort);
  if (!s || s->arity() != static_cast<int>(v.index.size())) return false;
  if (!s->domain.eval(v.index)) return false;
  return !removed_contains(v);
}

void GraphOracle::require_vertex(const VertexId& v) const {
  const SortDecl* s = spec().find_sort(v.sort);
  if (!s) throw InvalidVertex("unknown sort '" + v.sort + "' in " + to_dsl(v));
  if (s->arity() != static_cast<int>(v.index.size()))
    throw InvalidVertex("arity mismatch for " + to_dsl(v));
  if (!s->domain.eval(v.index)) throw InvalidVertex(to_dsl(v) + " violates the sort domain");
  if (removed_contains(v)) throw InvalidVertex(to_dsl(v) + " has been removed");
}

bool GraphOracle::adjacent(const VertexId& u, const VertexId& v) const {
  require_vertex(u);
  require_vertex(v);
  return adjacent_valid(u, v);
}

bool GraphOracle::adjacent_valid(const VertexId& u, const VertexId& v) const {
  if (u == v) return false;
  const Formula& f = compiled_->adjacency.at({u.sort, v.sort});
  std::vector<Int> values = u.index;
  values.insert(values.end(), v.index.begin(), v.index.end());
  bool base = f.eval(values);
  return complemented_ ? !base : base;
}

Formula GraphOracle::neighbor_formula(const VertexId& v, const SortDecl& target) const {
  const Formula& adj = compiled_->adjacency.at({v.sort, target.name});
  std::vector<LinExpr> subst;
  for (Int x : v.index) subst.push_back(LinExpr::constant(x));
  for (int j = 0; j < target.arity(); ++j) subst.push_back(LinExpr::variable(j));
  Formula f = adj.substitute(subst);
  if (complemented_) f = Formula::negation(std::move(f));
  return Formula::conj({target.domain, std::move(f)});
}

std::vector<VertexId> GraphOracle::neighbors_bounded(const VertexId& v, Int bound) const {
  require_vertex(v);
  std::vector<VertexId> out;
  for (const auto& t : spec().sorts) {
    Dnf dnf = neighbor_formula(v, t).to_dnf();
    std::vector<Interval> limit(static_cast<std::size_t>(t.arity()), Interval{-bound, bound});
    for (const auto& clause : dnf) {
      ClauseSolutions sol = solve_clause(clause, t.arity(), &limit);
      for (auto& p : sol.points) {
        VertexId w{t.name, std::move(p)};
        if (w != v && !removed_contains(w)) out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::vector<VertexId>> GraphOracle::neighbors_all(const VertexId& v) const {
  require_vertex(v);
  std::vector<VertexId> out;
  for (const auto& t : spec().sorts) {
    Dnf dnf = neighbor_formula(v, t).to_dnf();
    for (const auto& clause : dnf) {
      ClauseSolutions sol = solve_clause(clause, t.arity());
      if (sol.infinite) {
        if (removed_.empty()) return std::nullopt;
        // Removal may swallow all but finitely many of the family.
        std::vector<Formula> gone;
        for (const auto& s : removed_) gone.push_back(s.membership(t.name, t.arity()));
        Formula refined = Formula::conj(
            {Formula::from_dnf({clause}), Formula::negation(Formula::disj(std::move(gone)))});
        for (const auto& c2 : refined.to_dnf()) {
          ClauseSolutions s2 = solve_clause(c2, t.arity());
          if (s2.infinite) return std::nullopt;
          for (auto& p : s2.points) sol.points.push_back(std::move(p));
        }
      }
      for (auto& p : sol.points) {
        VertexId w{t.name, std::move(p)};
        if (w != v && !removed_contains(w)) out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DegreeValue GraphOracle::degree(const VertexId& v) const {
  auto n = neighbors_all(v);
  if (!n) return DegreeValue::unbounded();
  return DegreeValue::finite(static_cast<Int>(n->size()));
}

std::vector<VertexId> GraphOracle::vertices_in_box(Int lo, Int hi) const {
  std::vector<VertexId> out;
  for (const auto& t : spec().sorts) {
    std::vector<Interval> limit(static_cast<std::size_t>(t.arity()), Interval{lo, hi});
    for (const auto& clause : t.domain.to_dnf()) {
      for (auto& p : solve_clause(clause, t.arity(), &limit).points) {
        VertexId w{t.name, std::move(p)};
        if (!removed_contains(w)) out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool spec_equal(const GraphSpec& a, const GraphSpec& b) {
  if (a.name != b.name || a.sorts.size() != b.sorts.size() || a.rules.size() != b.rules.size())
    return false;
  for (std::size_t i = 0; i < a.sorts.size(); ++i) {
    if (a.sorts[i].name != b.sorts[i].name || a.sorts[i].arity() != b.sorts[i].arity() ||
        !(a.sorts[i].domain == b.sorts[i].domain))
      return false;
  }
  for (std::size_t i = 0; i < a.rules.size(); ++i) {
    if (a.rules[i].left != b.rules[i].left || a.rules[i].right != b.rules[i].right ||
        !(a.rules[i].guard == b.rules[i].guard))
      return false;
  }
  return true;
}

}  // namespace

bool GraphOracle::same_graph(const GraphOracle& other) const {
  if (complemented_ != other.complemented_ || removed_ != other.removed_) return false;
  return compiled_ == other.compiled_ || spec_equal(spec(), other.spec());
}

// ---------------------------------------------------------------------------
// Windows

bool FiniteWindow::contains(const VertexId& v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::optional<std::size_t> FiniteWindow::index_of(const VertexId& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

bool FiniteWindow::has_edge(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

bool adjacent(const GraphOracle& g, const VertexId& u, const VertexId& v) {
  return g.adjacent(u, v);
}

DegreeValue degree(const GraphOracle& g, const VertexId& v) { return g.degree(v); }

std::vector<VertexId> neighbors_bounded(const GraphOracle& g, const VertexId& v, Int bound) {
  return g.neighbors_bounded(v, bound);
}

FiniteWindow induced_window(const GraphOracle& g, std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (const auto& v : vertices) g.require_vertex(v);
  FiniteWindow w;
  w.vertices = std::move(vertices);
  for (std::size_t i = 0; i < w.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
      if (g.adjacent_valid(w.vertices[i], w.vertices[j])) w.edges.emplace_back(i, j);
  w.provenance.oracle_id = g.id();
  w.provenance.kind = "induced";
  return w;
}

FiniteWindow ball(const GraphOracle& g, const std::vector<VertexId>& roots, Int radius) {
  if (radius < 0) throw GraphError("radius must be non-negative");
  Int extent = 0;
  for (const auto& r : roots) {
    g.require_vertex(r);
    for (Int x : r.index) extent = std::max<Int>(extent, std::llabs(x));
  }
  Int bound = g.spec().bound.at(radius, extent);
  std::map<VertexId, Int> dist;
  std::deque<VertexId> queue;
  for (const auto& r : roots) {
    if (dist.emplace(r, 0).second) queue.push_back(r);
  }
  std::vector<VertexId> truncated;
  std::optional<VertexId> overflow;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    Int d = dist.at(v);
    if (d >= radius) continue;
    std::vector<VertexId> nb = g.neighbors_bounded(v, bound);
    DegreeValue deg = g.degree(v);
    if (deg.infinite) {
      truncated.push_back(v);
    } else if (static_cast<Int>(nb.size()) < deg.value && !overflow) {
      overflow = v;
    }
    for (auto& w : nb) {
      if (dist.emplace(w, d + 1).second) queue.push_back(std::move(w));
    }
  }
  // Past an infinite-degree vertex the ball is inherently clipped to the box;
  // otherwise the declared bound must contain every neighborhood.
  if (overflow && truncated.empty()) {
    throw BoundExceeded("index bound " + std::to_string(bound) + " cuts the neighborhood of " +
                        to_dsl(*overflow));
  }
  std::vector<VertexId> verts;
  for (const auto& [v, d] : dist) verts.push_back(v);
  FiniteWindow w = induced_window(g, std::move(verts));
  w.provenance.kind = "ball";
  w.provenance.roots = roots;
  w.provenance.radius = radius;
  w.provenance.index_bound = bound;
  std::sort(truncated.begin(), truncated.end());
  w.provenance.truncated = std::move(truncated);
  return w;
}

FiniteWindow ball(const GraphOracle& g, Int radius) {
  if (g.spec().roots.empty()) throw GraphError("graph '" + g.spec().name + "' declares no roots");
  std::vector<VertexId> roots;
  for (const auto& r : g.spec().roots)
    if (g.contains(r)) roots.push_back(r);
  if (roots.empty()) throw GraphError("all declared roots of '" + g.spec().name + "' are removed");
  return ball(g, roots, radius);
}

FiniteWindow restrict_window(const GraphOracle& g, const FiniteWindow& w) {
  std::vector<VertexId> keep;
  for (const auto& v : w.vertices)
    if (g.contains(v)) keep.push_back(v);
  FiniteWindow out = induced_window(g, std::move(keep));
  out.provenance.radius = w.provenance.radius;
  out.provenance.roots = w.provenance.roots;
  return out;
}

FiniteWindow box_window(const GraphOracle& g, Int lo, Int hi) {
  FiniteWindow w = induced_window(g, g.vertices_in_box(lo, hi));
  w.provenance.kind = "box";
  w.provenance.box_lo = lo;
  w.provenance.box_hi = hi;
  return w;
}

// ---------------------------------------------------------------------------
// Constructions

GraphOracle graph_minus(const GraphOracle& g, const VertexSet& s) {
  for (const auto& c : s.clauses) {
    const SortDecl* d = g.spec().find_sort(c.sort);
    if (!d) throw GraphError("removed set mentions unknown sort '" + c.sort + "'");
    if (c.condition.max_var() >= d->arity())
      throw GraphError("removed set clause on '" + c.sort + "' mentions an unknown coordinate");
  }
  for (const auto& v : s.include) {
    if (!g.contains(v)) throw GraphError("removed set is not a subset: " + to_dsl(v) + " is not a vertex");
  }
  std::vector<VertexSet> removed = g.removed_;
  removed.push_back(s);
  return GraphOracle(g.compiled_, g.complemented_, std::move(removed));
}

GraphOracle complement(const GraphOracle& g) {
  return GraphOracle(g.compiled_, !g.complemented_, g.removed_);
}

VertexSet complement_in(const GraphOracle& g, const VertexSet& s) {
  VertexSet out;
  for (const auto& t : g.spec().sorts)
    out.clauses.push_back({t.name, Formula::negation(s.membership(t.name, t.arity()))});
  return out;
}

namespace {

VertexSet rename_set(const VertexSet& s, const std::string& prefix) {
  VertexSet out = s;
  for (auto& c : out.clauses) c.sort = prefix + c.sort;
  for (auto& v : out.include) v.sort = prefix + v.sort;
  for (auto& v : out.exclude) v.sort = prefix + v.sort;
  return out;
}

std::vector<std::string> fresh_names(const std::vector<std::string>& base, std::set<std::string>& used) {
  std::vector<std::string> out;
  for (const auto& b : base) {
    std::string n = b;
    for (int k = 2; used.count(n); ++k) n = b + std::to_string(k);
    used.insert(n);
    out.push_back(n);
  }
  return out;
}

Formula coords_equal(int first_a, int first_b, int count) {
  std::vector<Formula> parts;
  for (int k = 0; k < count; ++k)
    parts.push_back(Formula::literal(Atom::compare(LinExpr::variable(first_a + k), Rel::Eq,
                                                   LinExpr::variable(first_b + k))));
  return Formula::conj(std::move(parts));
}

}  // namespace

GraphOracle disjoint_union(const std::vector<GraphOracle>& gs) {
  if (gs.empty()) throw GraphError("disjoint_union needs at least one factor");
  GraphSpec u;
  u.name = "union(";
  std::vector<VertexSet> removed;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    const GraphOracle& g = gs[k];
    if (g.complemented()) throw GraphError("disjoint_union of a complemented oracle is not supported");
    const std::string prefix = "u" + std::to_string(k) + ".";
    const GraphSpec& s = g.spec();
    u.name += (k ? "," : "") + s.name;
    for (auto d : s.sorts) {
      d.name = prefix + d.name;
      u.sorts.push_back(std::move(d));
    }
    for (auto r : s.rules) {
      r.left = prefix + r.left;
      r.right = prefix + r.right;
      u.rules.push_back(std::move(r));
    }
    for (auto r : s.roots) {
      r.sort = prefix + r.sort;
      if (g.contains(VertexId{r.sort.substr(prefix.size()), r.index})) u.roots.push_back(std::move(r));
    }
    for (const auto& [srt, coord] : s.component_coord) u.component_coord[prefix + srt] = coord;
    u.bound.scale = std::max(u.bound.scale, s.bound.scale);
    u.bound.offset = std::max(u.bound.offset, s.bound.offset);
    for (const auto& set : g.removed()) removed.push_back(rename_set(set, prefix));
  }
  u.name += ")";
  u.union_factors = static_cast<int>(gs.size());
  GraphOracle out(std::move(u));
  for (const auto& s : removed) out = graph_minus(out, s);
  return out;
}

GraphOracle cartesian_product(const GraphOracle& g, const GraphOracle& h) {
  if (g.complemented() || h.complemented())
    throw GraphError("cartesian_product of a complemented oracle is not supported");
  const GraphSpec& gs = g.spec();
  const GraphSpec& hs = h.spec();
  GraphSpec p;
  p.name = gs.name + "*" + hs.name;
  auto pname = [](const std::string& s, const std::string& t) { return s + "." + t; };
  for (const auto& s : gs.sorts) {
    for (const auto& t : hs.sorts) {
      SortDecl d;
      d.name = pname(s.name, t.name);
      std::set<std::string> used;
      d.vars = fresh_names(s.vars, used);
      auto tv = fresh_names(t.vars, used);
      d.vars.insert(d.vars.end(), tv.begin(), tv.end());
      d.domain = Formula::conj({s.domain, t.domain.substitute(shifted_vars(t.arity(), s.arity()))});
      p.product_of[d.name] = {s.name, t.name};
      p.sorts.push_back(std::move(d));
    }
  }
  // Moves in the left factor.
  for (const auto& r : gs.rules) {
    int a1 = gs.find_sort(r.left)->arity();
    int a2 = gs.find_sort(r.right)->arity();
    for (const auto& t : hs.sorts) {
      int b = t.arity();
      AdjacencyRule pr;
      pr.left = pname(r.left, t.name);
      pr.right = pname(r.right, t.name);
      std::set<std::string> used;
      pr.left_vars = fresh_names(r.left_vars, used);
      auto z = fresh_names(t.vars, used);
      pr.left_vars.insert(pr.left_vars.end(), z.begin(), z.end());
      pr.right_vars = fresh_names(r.right_vars, used);
      auto w = fresh_names(t.vars, used);
      pr.right_vars.insert(pr.right_vars.end(), w.begin(), w.end());
      std::vector<LinExpr> subst;
      for (int i = 0; i < a1; ++i) subst.push_back(LinExpr::variable(i));
      for (int j = 0; j < a2; ++j) subst.push_back(LinExpr::variable(a1 + b + j));
      pr.guard = Formula::conj({r.guard.substitute(subst), coords_equal(a1, a1 + b + a2, b)});
      p.rules.push_back(std::move(pr));
    }
  }
  // Moves in the right factor.
  for (const auto& r : hs.rules) {
    int b1 = hs.find_sort(r.left)->arity();
    int b2 = hs.find_sort(r.right)->arity();
    for (const auto& s : gs.sorts) {
      int a = s.arity();
      AdjacencyRule pr;
      pr.left = pname(s.name, r.left);
      pr.right = pname(s.name, r.right);
      std::set<std::string> used;
      pr.left_vars = fresh_names(s.vars, used);
      auto z = fresh_names(r.left_vars, used);
      pr.left_vars.insert(pr.left_vars.end(), z.begin(), z.end());
      pr.right_vars = fresh_names(s.vars, used);
      auto w = fresh_names(r.right_vars, used);
      pr.right_vars.insert(pr.right_vars.end(), w.begin(), w.end());
      std::vector<LinExpr> subst;
      for (int i = 0; i < b1; ++i) subst.push_back(LinExpr::variable(a + i));
      for (int j = 0; j < b2; ++j) subst.push_back(LinExpr::variable(a + b1 + a + j));
      pr.guard = Formula::conj({coords_equal(0, a + b1, a), r.guard.substitute(subst)});
      p.rules.push_back(std::move(pr));
    }
  }
  for (const auto& r1 : gs.roots) {
    for (const auto& r2 : hs.roots) {
      VertexId v{pname(r1.sort, r2.sort), r1.index};
      v.index.insert(v.index.end(), r2.index.begin(), r2.index.end());
      if (g.contains(r1) && h.contains(r2)) p.roots.push_back(std::move(v));
    }
  }
  p.bound.scale = std::max(gs.bound.scale, hs.bound.scale);
  p.bound.offset = std::max(gs.bound.offset, hs.bound.offset);

  std::vector<VertexSet> removed;
  for (const auto& set : g.removed()) {
    VertexSet lifted;
    for (const auto& s : gs.sorts) {
      Formula m = set.membership(s.name, s.arity());
      if (m.is_false()) continue;
      for (const auto& t : hs.sorts) lifted.clauses.push_back({pname(s.name, t.name), m});
    }
    removed.push_back(std::move(lifted));
  }
  for (const auto& set : h.removed()) {
    VertexSet lifted;
    for (const auto& t : hs.sorts) {
      Formula m = set.membership(t.name, t.arity());
      if (m.is_false()) continue;
      for (const auto& s : gs.sorts)
        lifted.clauses.push_back({pname(s.name, t.name), m.substitute(shifted_vars(t.arity(), s.arity()))});
    }
    removed.push_back(std::move(lifted));
  }
  GraphOracle out(std::move(p));
  for (const auto& s : removed) out = graph_minus(out, s);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> link(const GraphOracle& g, const VertexSet& s,
                                                const FiniteWindow& w) {
  if (w.provenance.oracle_id != g.id())
    throw GraphError("window was not extracted from graph '" + g.id() + "'");
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [i, j] : w.edges) {
    bool a = s.contains(w.vertices[i]);
    bool b = s.contains(w.vertices[j]);
    if (a != b) out.emplace_back(w.vertices[i], w.vertices[j]);
  }
  return out;
}

bool is_disjoint_union(const GraphOracle& g) {
  return g.spec().union_factors > 0 || !g.spec().component_coord.empty();
}

std::vector<Int> component_key(const GraphOracle& g, const VertexId& v) {
  if (!is_disjoint_union(g)) throw GraphError("graph '" + g.spec().name + "' is not a disjoint union");
  std::vector<Int> key;
  if (g.spec().union_factors > 0) {
    auto dot = v.sort.find('.');
    if (v.sort.size() < 2 || v.sort[0] != 'u' || dot == std::string::npos)
      throw GraphError("vertex " + to_dsl(v) + " carries no factor tag");
    key.push_back(std::stoll(v.sort.substr(1, dot - 1)));
  }
  auto it = g.spec().component_coord.find(v.sort);
  if (it != g.spec().component_coord.end()) key.push_back(v.index.at(static_cast<std::size_t>(it->second)));
  return key;
}

// ---------------------------------------------------------------------------
// Export

std::string window_to_json(const FiniteWindow& w) {
  nlohmann::ordered_json j;
  j["oracle"] = w.provenance.oracle_id;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : w.vertices) j["vertices"].push_back(label(v));
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : w.edges)
    j["edges"].push_back({label(w.vertices[a]), label(w.vertices[b])});
  return j.dump(2) + "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string window_to_dot(const FiniteWindow& w, const std::vector<VertexId>& highlight_path) {
  std::set<std::pair<VertexId, VertexId>> hot_edges;
  for (std::size_t i = 0; i + 1 < highlight_path.size(); ++i) {
    auto a = highlight_path[i], b = highlight_path[i + 1];
    if (b < a) std::swap(a, b);
    hot_edges.emplace(a, b);
  }
  std::set<VertexId> hot(highlight_path.begin(), highlight_path.end());
  std::ostringstream out;
  out << "graph " << dot_quote(w.provenance.oracle_id) << " {\n";
  for (const auto& v : w.vertices) {
    out << "  " << dot_quote(label(v));
    if (hot.count(v)) out << " [color=red]";
    out << ";\n";
  }
  for (const auto& [a, b] : w.edges) {
    out << "  " << dot_quote(label(w.vertices[a])) << " -- " << dot_quote(label(w.vertices[b]));
    if (hot_edges.count({w.vertices[a], w.vertices[b]})) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace scg
