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

#include <algorithm>
#include <cstdlib>
#include <map>

namespace scg {

// ---------------------------------------------------------------------------
// Piecewise maps

const MapBranch* PiecewiseMap::branch_for(const VertexId& v) const {
  for (const auto& b : branches) {
    if (b.source != v.sort || b.guard.max_var() >= static_cast<int>(v.index.size())) continue;
    if (b.guard.eval(v.index)) return &b;
  }
  return nullptr;
}

std::optional<VertexId> PiecewiseMap::apply(const VertexId& v) const {
  const MapBranch* b = branch_for(v);
  if (!b) return std::nullopt;
  VertexId out{b->target, {}};
  for (const auto& e : b->image) out.index.push_back(e.eval(v.index));
  return out;
}

Int PiecewiseMap::displacement_bound() const {
  Int d = 0;
  for (const auto& b : branches) {
    for (std::size_t k = 0; k < b.image.size(); ++k) {
      Int m = std::llabs(b.image[k].constant_term());
      for (const auto& [var, coef] : b.image[k].terms())
        m += std::llabs(coef - (static_cast<std::size_t>(var) == k ? 1 : 0));
      d = std::max(d, m);
    }
  }
  return d;
}

bool PiecewiseMap::operator==(const PiecewiseMap& o) const {
  if (branches.size() != o.branches.size()) return false;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const auto& a = branches[i];
    const auto& b = o.branches[i];
    if (a.source != b.source || a.target != b.target || !(a.guard == b.guard) || a.image != b.image)
      return false;
  }
  return true;
}

namespace {

/// DNF-simplified guard, or nullopt when unsatisfiable inside `domain`.
std::optional<Formula> simplify_guard(const Formula& guard, const Formula& domain, int arity) {
  try {
    Dnf d = guard.to_dnf();
    if (!satisfiable(Formula::conj({domain, Formula::from_dnf(d)}).to_dnf(), arity)) return std::nullopt;
    // Drop clauses that cannot fire inside the domain.
    Dnf kept;
    for (auto& c : d) {
      if (satisfiable(Formula::conj({domain, Formula::from_dnf({c})}).to_dnf(), arity)) kept.push_back(std::move(c));
    }
    return Formula::from_dnf(kept);
  } catch (const FormulaError&) {
    return guard;
  }
}

}  // namespace

PiecewiseMap compose(const PiecewiseMap& outer, const PiecewiseMap& inner, const GraphSpec* spec) {
  PiecewiseMap out;
  for (const auto& bi : inner.branches) {
    Formula domain = Formula::truth();
    int arity = static_cast<int>(bi.vars.size());
    if (spec) {
      if (const SortDecl* s = spec->find_sort(bi.source)) {
        domain = s->domain;
        arity = s->arity();
      }
    }
    for (const auto& bo : outer.branches) {
      if (bo.source != bi.target) continue;
      Formula guard = Formula::conj({bi.guard, bo.guard.substitute(bi.image)});
      auto g = simplify_guard(guard, domain, std::max(arity, guard.max_var() + 1));
      if (!g) continue;
      MapBranch b{bi.source, bi.vars, std::move(*g), bo.target, {}};
      for (const auto& e : bo.image) b.image.push_back(e.substitute(bi.image));
      out.branches.push_back(std::move(b));
    }
  }
  return out;
}

PiecewiseMap identity_map(const GraphSpec& spec) {
  PiecewiseMap m;
  for (const auto& s : spec.sorts) {
    MapBranch b{s.name, s.vars, Formula::truth(), s.name, {}};
    for (int k = 0; k < s.arity(); ++k) b.image.push_back(LinExpr::variable(k));
    m.branches.push_back(std::move(b));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Images of vertex sets

VertexSet image_set(const IsoCertificate& c, const VertexSet& s) {
  const GraphSpec& spec = c.host.spec();
  VertexSet out;
  for (const auto& b : c.inverse.branches) {
    const SortDecl* src = spec.find_sort(b.source);
    const SortDecl* tgt = spec.find_sort(b.target);
    if (!src || !tgt) continue;
    Formula in_s = s.membership(b.target, tgt->arity());
    if (in_s.is_false()) continue;
    Formula cond = Formula::conj({b.guard, Formula::negation(c.removed.membership(b.source, src->arity())),
                                  in_s.substitute(b.image)});
    auto g = simplify_guard(cond, src->domain, src->arity());
    if (!g) continue;
    out.clauses.push_back({b.source, std::move(*g)});
  }
  return out;
}

bool in_iterate(const IsoCertificate& c, const VertexSet& s, int i, const VertexId& w) {
  VertexId cur = w;
  for (int k = 0; k < i; ++k) {
    if (c.removed.contains(cur)) return false;
    auto prev = c.inverse.apply(cur);
    if (!prev || !c.host.contains(*prev)) return false;
    cur = std::move(*prev);
  }
  return s.contains(cur);
}

std::vector<VertexId> members_in(const VertexSet& s, const FiniteWindow& w) {
  std::vector<VertexId> out;
  for (const auto& v : w.vertices)
    if (s.contains(v)) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Verification

VerificationReport verify_on_window(const IsoCertificate& c, const FiniteWindow& w) {
  if (w.provenance.oracle_id != c.host.id())
    throw CertificateError("window of '" + w.provenance.oracle_id + "' does not belong to host '" +
                           c.host.id() + "'");
  VerificationReport r;
  r.certificate = c.name;
  r.host = c.host.id();
  r.window_kind = w.provenance.kind;
  r.radius = w.provenance.radius;
  r.box_lo = w.provenance.box_lo;
  r.box_hi = w.provenance.box_hi;
  r.certified_radius = w.provenance.radius;
  r.displacement = c.forward.displacement_bound();
  auto fail = [&r](std::string check, std::vector<VertexId> vs, std::string detail) {
    r.passed = false;
    r.counterexample = Counterexample{std::move(check), std::move(vs), std::move(detail)};
    return r;
  };

  std::vector<VertexId> image;
  image.reserve(w.size());
  std::map<VertexId, VertexId> preimage;
  for (const auto& v : w.vertices) {
    ++r.vertices_checked;
    if (c.removed.contains(v)) ++r.removed_in_window;
    auto fv = c.forward.apply(v);
    if (!fv) return fail("total", {v}, "no forward branch applies to " + to_dsl(v));
    if (!c.host.contains(*fv)) return fail("image", {v, *fv}, to_dsl(*fv) + " is not a vertex of the host");
    if (c.removed.contains(*fv)) return fail("image", {v, *fv}, "image " + to_dsl(*fv) + " lies in the removed set");
    auto [it, fresh] = preimage.emplace(*fv, v);
    if (!fresh) return fail("injective", {it->second, v, *fv}, "two vertices map to " + to_dsl(*fv));
    auto back = c.inverse.apply(*fv);
    if (!back || *back != v)
      return fail("inverse-forward", {v, *fv}, "inverse does not return " + to_dsl(*fv) + " to " + to_dsl(v));
    image.push_back(std::move(*fv));
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      ++r.pairs_checked;
      bool a = w.has_edge(i, j);
      bool b = c.host.adjacent_valid(image[i], image[j]);
      if (a != b)
        return fail("adjacency", {w.vertices[i], w.vertices[j], image[i], image[j]},
                    std::string(a ? "edge" : "non-edge") + " not preserved");
    }
  }
  for (const auto& v : w.vertices) {
    if (c.removed.contains(v)) continue;
    auto iv = c.inverse.apply(v);
    if (!iv) return fail("total", {v}, "no inverse branch applies to " + to_dsl(v));
    if (!c.host.contains(*iv)) return fail("forward-inverse", {v, *iv}, to_dsl(*iv) + " is not a vertex of the host");
    auto fiv = c.forward.apply(*iv);
    if (!fiv || *fiv != v)
      return fail("forward-inverse", {v, *iv}, "forward does not return " + to_dsl(*iv) + " to " + to_dsl(v));
  }
  r.passed = true;
  return r;
}

VerificationReport verify_certificate(const IsoCertificate& c, Int radius, const std::vector<VertexId>& roots) {
  return verify_on_window(c, ball(c.host, roots, radius));
}

VerificationReport verify_certificate(const IsoCertificate& c, Int radius) {
  return verify_on_window(c, ball(c.host, radius));
}

VerificationReport verify_on_box(const IsoCertificate& c, Int lo, Int hi) {
  return verify_on_window(c, box_window(c.host, lo, hi));
}

// ---------------------------------------------------------------------------
// Algebra

IsoCertificate compose_certificates(const IsoCertificate& cp, const IsoCertificate& cq) {
  GraphOracle expected = graph_minus(cp.host, cp.removed);
  if (!cq.host.same_graph(expected))
    throw CertificateError("host mismatch: expected a certificate on '" + expected.id() + "', got '" +
                           cq.host.id() + "'");
  const GraphSpec* spec = &cp.host.spec();
  return IsoCertificate{cp.name + "+" + cq.name, cp.host, cp.removed.united(cq.removed),
                        compose(cq.forward, cp.forward, spec), compose(cp.inverse, cq.inverse, spec)};
}

IsoCertificate transport(const IsoCertificate& c, const IsoCertificate& target) {
  if (!c.host.same_graph(target.host))
    throw CertificateError("host mismatch: '" + c.host.id() + "' vs '" + target.host.id() + "'");
  const GraphSpec* spec = &c.host.spec();
  VertexSet removed = image_set(c, target.removed);
  PiecewiseMap fwd = compose(c.forward, compose(target.forward, c.inverse, spec), spec);
  PiecewiseMap inv = compose(c.forward, compose(target.inverse, c.inverse, spec), spec);
  return IsoCertificate{target.name + "@" + c.name, graph_minus(c.host, c.removed), std::move(removed),
                        std::move(fwd), std::move(inv)};
}

std::vector<VertexSet> iterate_copies(const IsoCertificate& c, int k, const FiniteWindow& w) {
  if (k < 1) throw CertificateError("iterate_copies needs k >= 1");
  VerificationReport r = verify_on_window(c, w);
  if (!r.passed)
    throw CertificateError("certificate '" + c.name + "' fails on the window: " + r.counterexample->detail);
  std::vector<VertexSet> sets{c.removed};
  for (int i = 1; i < k; ++i) sets.push_back(image_set(c, sets.back()));
  for (const auto& v : w.vertices) {
    int hits = 0;
    for (int i = 0; i < k; ++i) hits += in_iterate(c, c.removed, i, v) ? 1 : 0;
    if (hits > 1) throw CertificateError("copies meet at " + to_dsl(v));
  }
  return sets;
}

IsoCertificate complement_transfer(const IsoCertificate& c) {
  std::string name = c.name;
  if (name.size() > 2 && name.ends_with("^c")) name.resize(name.size() - 2);
  else name += "^c";
  return IsoCertificate{name, complement(c.host), c.removed, c.forward, c.inverse};
}

namespace {

PiecewiseMap lift_map(const PiecewiseMap& m, const GraphSpec& g, const GraphSpec& h) {
  PiecewiseMap out;
  for (const auto& b : m.branches) {
    const SortDecl* src = g.find_sort(b.source);
    int a = src ? src->arity() : static_cast<int>(b.vars.size());
    for (const auto& t : h.sorts) {
      MapBranch lb{b.source + "." + t.name, {}, b.guard, b.target + "." + t.name, b.image};
      for (int k = 0; k < t.arity(); ++k) lb.image.push_back(LinExpr::variable(a + k));
      out.branches.push_back(std::move(lb));
    }
  }
  return out;
}

}  // namespace

IsoCertificate product_lift(const IsoCertificate& c, const GraphOracle& h) {
  GraphOracle host = cartesian_product(c.host, h);
  const GraphSpec& gs = c.host.spec();
  VertexSet removed;
  for (const auto& s : gs.sorts) {
    Formula m = c.removed.membership(s.name, s.arity());
    if (m.is_false()) continue;
    for (const auto& t : h.spec().sorts) removed.clauses.push_back({s.name + "." + t.name, m});
  }
  return IsoCertificate{c.name + "*" + h.spec().name, std::move(host), std::move(removed),
                        lift_map(c.forward, gs, h.spec()), lift_map(c.inverse, gs, h.spec())};
}

IsoCertificate restrict_certificate(const IsoCertificate& c, const VertexSet& p) {
  return IsoCertificate{c.name + "|" + "rest", graph_minus(c.host, p), c.removed, c.forward, c.inverse};
}

IsoUnionResult iso_union(const IsoCertificate& cp, const IsoCertificate& cq, const FiniteWindow& w) {
  if (!cp.host.same_graph(cq.host))
    throw CertificateError("host mismatch: '" + cp.host.id() + "' vs '" + cq.host.id() + "'");
  for (const auto& v : w.vertices) {
    if (cp.removed.contains(v) && cq.removed.contains(v))
      throw CertificateError("removed sets overlap at " + to_dsl(v));
  }
  IsoUnionResult out;
  for (const auto& v : w.vertices) {
    if (!cq.removed.contains(v)) continue;
    auto fv = cp.forward.apply(v);
    if (!fv || !cq.removed.contains(*fv)) {
      out.moved = v;
      return out;
    }
    auto iv = cp.inverse.apply(v);
    if (!iv || !cq.removed.contains(*iv)) {
      out.moved = iv ? *iv : v;
      return out;
    }
  }
  out.certificate = compose_certificates(cp, transport(cp, cq));
  return out;
}

}  // namespace scg
