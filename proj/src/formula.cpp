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

#include "scg/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace scg {

namespace {

using Wide = __int128;

Int clamp_wide(Wide v) {
  if (v >= kInfinity) return kInfinity;
  if (v <= -kInfinity) return -kInfinity;
  return static_cast<Int>(v);
}

bool is_pos_inf(Int v) { return v >= kInfinity; }
bool is_neg_inf(Int v) { return v <= -kInfinity; }

// Floor/ceil division that passes infinities through. d != 0.
Int floor_div(Int n, Int d) {
  if (is_pos_inf(n)) return d > 0 ? kInfinity : -kInfinity;
  if (is_neg_inf(n)) return d > 0 ? -kInfinity : kInfinity;
  Int q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

Int ceil_div(Int n, Int d) {
  if (is_pos_inf(n)) return d > 0 ? kInfinity : -kInfinity;
  if (is_neg_inf(n)) return d > 0 ? -kInfinity : kInfinity;
  Int q = n / d;
  if ((n % d != 0) && ((n < 0) == (d < 0))) ++q;
  return q;
}

Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// ---------------------------------------------------------------------------
// LinExpr

LinExpr LinExpr::constant(Int c) {
  LinExpr e;
  e.constant_ = c;
  return e;
}

LinExpr LinExpr::variable(int var, Int coef) {
  LinExpr e;
  e.add_term(var, coef);
  return e;
}

Int LinExpr::coefficient(int var) const {
  for (const auto& [v, c] : terms_)
    if (v == var) return c;
  return 0;
}

int LinExpr::max_var() const { return terms_.empty() ? -1 : terms_.back().first; }

void LinExpr::add_term(int var, Int coef) {
  if (coef == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), var,
                             [](const auto& t, int v) { return t.first < v; });
  if (it != terms_.end() && it->first == var) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {var, coef});
  }
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  constant_ += o.constant_;
  for (const auto& [v, c] : o.terms_) add_term(v, c);
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  constant_ -= o.constant_;
  for (const auto& [v, c] : o.terms_) add_term(v, -c);
  return *this;
}

LinExpr& LinExpr::operator*=(Int k) {
  if (k == 0) {
    constant_ = 0;
    terms_.clear();
    return *this;
  }
  constant_ *= k;
  for (auto& t : terms_) t.second *= k;
  return *this;
}

Int LinExpr::eval(std::span<const Int> values) const {
  Int s = constant_;
  for (const auto& [v, c] : terms_) {
    if (static_cast<std::size_t>(v) >= values.size())
      throw FormulaError("variable out of range in evaluation");
    s += c * values[static_cast<std::size_t>(v)];
  }
  return s;
}

LinExpr LinExpr::substitute(std::span<const LinExpr> subst) const {
  LinExpr out = LinExpr::constant(constant_);
  for (const auto& [v, c] : terms_) {
    if (static_cast<std::size_t>(v) >= subst.size())
      throw FormulaError("variable out of range in substitution");
    out += subst[static_cast<std::size_t>(v)] * c;
  }
  return out;
}

std::vector<LinExpr> shifted_vars(int count, int offset) {
  std::vector<LinExpr> s;
  s.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) s.push_back(LinExpr::variable(i + offset));
  return s;
}

// ---------------------------------------------------------------------------
// Expr

Int Expr::eval(std::span<const Int> values) const {
  Int s = lin.eval(values);
  for (const auto& a : abs) s += a.coef * std::llabs(a.inner.eval(values));
  return s;
}

Expr Expr::substitute(std::span<const LinExpr> subst) const {
  Expr out(lin.substitute(subst));
  for (const auto& a : abs) out.abs.push_back({a.coef, a.inner.substitute(subst)});
  out.normalize();
  return out;
}

void Expr::normalize() {
  std::vector<AbsTerm> kept;
  for (auto a : abs) {
    if (a.coef == 0) continue;
    if (a.inner.is_constant()) {
      lin += LinExpr::constant(a.coef * std::llabs(a.inner.constant_term()));
      continue;
    }
    // |L| = |-L|: make the leading coefficient positive.
    if (a.inner.terms().front().second < 0) a.inner *= -1;
    kept.push_back(std::move(a));
  }
  std::sort(kept.begin(), kept.end(),
            [](const AbsTerm& x, const AbsTerm& y) { return x.inner < y.inner; });
  abs.clear();
  for (auto& a : kept) {
    if (!abs.empty() && abs.back().inner == a.inner) {
      abs.back().coef += a.coef;
      if (abs.back().coef == 0) abs.pop_back();
    } else {
      abs.push_back(std::move(a));
    }
  }
}

int Expr::max_var() const {
  int m = lin.max_var();
  for (const auto& a : abs) m = std::max(m, a.inner.max_var());
  return m;
}

Expr& Expr::operator+=(const Expr& o) {
  lin += o.lin;
  abs.insert(abs.end(), o.abs.begin(), o.abs.end());
  normalize();
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  lin -= o.lin;
  for (auto a : o.abs) {
    a.coef = -a.coef;
    abs.push_back(std::move(a));
  }
  normalize();
  return *this;
}

Expr& Expr::operator*=(Int k) {
  lin *= k;
  for (auto& a : abs) a.coef *= k;
  normalize();
  return *this;
}

// ---------------------------------------------------------------------------
// Rel

Rel negate(Rel r) {
  switch (r) {
    case Rel::Eq: return Rel::Ne;
    case Rel::Ne: return Rel::Eq;
    case Rel::Lt: return Rel::Ge;
    case Rel::Le: return Rel::Gt;
    case Rel::Gt: return Rel::Le;
    case Rel::Ge: return Rel::Lt;
  }
  return r;
}

Rel mirror(Rel r) {
  switch (r) {
    case Rel::Lt: return Rel::Gt;
    case Rel::Le: return Rel::Ge;
    case Rel::Gt: return Rel::Lt;
    case Rel::Ge: return Rel::Le;
    default: return r;
  }
}

const char* to_string(Rel r) {
  switch (r) {
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Gt: return ">";
    case Rel::Ge: return ">=";
  }
  return "?";
}

bool holds(Int lhs, Rel r, Int rhs) {
  switch (r) {
    case Rel::Eq: return lhs == rhs;
    case Rel::Ne: return lhs != rhs;
    case Rel::Lt: return lhs < rhs;
    case Rel::Le: return lhs <= rhs;
    case Rel::Gt: return lhs > rhs;
    case Rel::Ge: return lhs >= rhs;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Atom

Atom Atom::compare(Expr lhs, Rel rel, Expr rhs) {
  Atom a;
  a.kind = Kind::Compare;
  Expr e = std::move(lhs);
  e -= rhs;
  Int c = e.lin.constant_term();
  e.lin -= LinExpr::constant(c);
  Int r = -c;
  // Canonical sign: leading coefficient positive.
  Int lead = 0;
  if (!e.lin.terms().empty())
    lead = e.lin.terms().front().second;
  else if (!e.abs.empty())
    lead = e.abs.front().coef;
  if (lead < 0) {
    e *= -1;
    r = -r;
    rel = mirror(rel);
  }
  a.lhs = std::move(e);
  a.rel = rel;
  a.rhs = r;
  return a;
}

Atom Atom::mod(Expr value, Int modulus, Rel rel, Int residue) {
  if (modulus <= 0) throw FormulaError("modulus must be positive");
  if (rel != Rel::Eq && rel != Rel::Ne) throw FormulaError("mod atoms support = and != only");
  Atom a;
  a.kind = Kind::Mod;
  value.normalize();
  Int c = value.lin.constant_term();
  value.lin -= LinExpr::constant(c);
  a.lhs = std::move(value);
  a.modulus = modulus;
  a.rel = rel;
  a.rhs = mod_floor(residue - c, modulus);
  return a;
}

Atom Atom::bit(Expr value, Expr index, bool negated) {
  Atom a;
  a.kind = Kind::Bit;
  value.normalize();
  index.normalize();
  a.lhs = std::move(value);
  a.index = std::move(index);
  a.negated = negated;
  return a;
}

Atom Atom::negation() const {
  Atom a = *this;
  switch (kind) {
    case Kind::Compare:
    case Kind::Mod: a.rel = scg::negate(rel); break;
    case Kind::Bit: a.negated = !negated; break;
  }
  return a;
}

bool Atom::eval(std::span<const Int> values) const {
  switch (kind) {
    case Kind::Compare: return holds(lhs.eval(values), rel, rhs);
    case Kind::Mod: {
      bool eq = mod_floor(lhs.eval(values), modulus) == rhs;
      return rel == Rel::Eq ? eq : !eq;
    }
    case Kind::Bit: {
      Int v = lhs.eval(values);
      Int i = index.eval(values);
      bool b = v >= 0 && i >= 0 && i <= 62 && ((v >> i) & 1) != 0;
      return negated ? !b : b;
    }
  }
  return false;
}

Atom Atom::substitute(std::span<const LinExpr> subst) const {
  switch (kind) {
    case Kind::Compare:
      return compare(lhs.substitute(subst), rel, Expr(LinExpr::constant(rhs)));
    case Kind::Mod: return mod(lhs.substitute(subst), modulus, rel, rhs);
    case Kind::Bit: return bit(lhs.substitute(subst), index.substitute(subst), negated);
  }
  return *this;
}

std::optional<bool> Atom::constant_value() const {
  switch (kind) {
    case Kind::Compare:
    case Kind::Mod:
      if (!lhs.is_constant()) return std::nullopt;
      break;
    case Kind::Bit:
      if (!lhs.is_constant() || !index.is_constant()) return std::nullopt;
      break;
  }
  return eval(std::span<const Int>{});
}

int Atom::max_var() const {
  int m = lhs.max_var();
  if (kind == Kind::Bit) m = std::max(m, index.max_var());
  return m;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::literal(Atom a) {
  if (auto c = a.constant_value()) return *c ? truth() : falsity();
  Formula f(Op::Lit);
  f.atom_ = std::move(a);
  return f;
}

Formula Formula::conj(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (auto& p : parts) {
    if (p.is_true()) continue;
    if (p.is_false()) return falsity();
    if (p.op_ == Op::And) {
      for (auto& k : p.kids_) kept.push_back(std::move(k));
    } else {
      kept.push_back(std::move(p));
    }
  }
  if (kept.empty()) return truth();
  if (kept.size() == 1) return std::move(kept.front());
  Formula f(Op::And);
  f.kids_ = std::move(kept);
  return f;
}

Formula Formula::disj(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (auto& p : parts) {
    if (p.is_false()) continue;
    if (p.is_true()) return truth();
    if (p.op_ == Op::Or) {
      for (auto& k : p.kids_) kept.push_back(std::move(k));
    } else {
      kept.push_back(std::move(p));
    }
  }
  if (kept.empty()) return falsity();
  if (kept.size() == 1) return std::move(kept.front());
  Formula f(Op::Or);
  f.kids_ = std::move(kept);
  return f;
}

Formula Formula::negation(Formula f) {
  switch (f.op_) {
    case Op::True: return falsity();
    case Op::False: return truth();
    case Op::Lit: return literal(f.atom_.negation());
    case Op::Not: return std::move(f.kids_.front());
    default: break;
  }
  Formula n(Op::Not);
  n.kids_.push_back(std::move(f));
  return n;
}

Formula Formula::from_dnf(const Dnf& dnf) {
  std::vector<Formula> clauses;
  for (const auto& c : dnf) {
    std::vector<Formula> lits;
    for (const auto& a : c) lits.push_back(literal(a));
    clauses.push_back(conj(std::move(lits)));
  }
  return disj(std::move(clauses));
}

Formula Formula::equals_point(std::span<const Int> point, int first_var) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < point.size(); ++i)
    parts.push_back(literal(Atom::compare(LinExpr::variable(first_var + static_cast<int>(i)),
                                          Rel::Eq, LinExpr::constant(point[i]))));
  return conj(std::move(parts));
}

bool Formula::eval(std::span<const Int> values) const {
  switch (op_) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Lit: return atom_.eval(values);
    case Op::And:
      for (const auto& k : kids_)
        if (!k.eval(values)) return false;
      return true;
    case Op::Or:
      for (const auto& k : kids_)
        if (k.eval(values)) return true;
      return false;
    case Op::Not: return !kids_.front().eval(values);
  }
  return false;
}

Formula Formula::substitute(std::span<const LinExpr> subst) const {
  switch (op_) {
    case Op::True:
    case Op::False: return *this;
    case Op::Lit: return literal(atom_.substitute(subst));
    case Op::Not: return negation(kids_.front().substitute(subst));
    case Op::And:
    case Op::Or: {
      std::vector<Formula> parts;
      parts.reserve(kids_.size());
      for (const auto& k : kids_) parts.push_back(k.substitute(subst));
      return op_ == Op::And ? conj(std::move(parts)) : disj(std::move(parts));
    }
  }
  return *this;
}

int Formula::max_var() const {
  if (op_ == Op::Lit) return atom_.max_var();
  int m = -1;
  for (const auto& k : kids_) m = std::max(m, k.max_var());
  return m;
}

namespace {

// Sorted, duplicate-free merge; nullopt when the clause is contradictory.
std::optional<Clause> merge_clauses(const Clause& a, const Clause& b) {
  Clause out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& atom : out) {
    if (std::binary_search(out.begin(), out.end(), atom.negation())) return std::nullopt;
  }
  // Two different equalities on the same left-hand side.
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    const Atom& x = out[i];
    if (x.kind != Atom::Kind::Compare || x.rel != Rel::Eq) continue;
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      const Atom& y = out[j];
      if (y.kind == Atom::Kind::Compare && y.rel == Rel::Eq && y.lhs == x.lhs && y.rhs != x.rhs)
        return std::nullopt;
    }
  }
  return out;
}

void tidy(Dnf& d) {
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  if (d.size() > 1500) return;
  // Absorption: drop clauses that are supersets of another clause.
  std::vector<bool> drop(d.size(), false);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].empty()) {
      d = Dnf{Clause{}};
      return;
    }
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i == j || drop[j] || d[j].size() >= d[i].size()) continue;
      if (std::includes(d[i].begin(), d[i].end(), d[j].begin(), d[j].end())) {
        drop[i] = true;
        break;
      }
    }
  }
  Dnf kept;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!drop[i]) kept.push_back(std::move(d[i]));
  d = std::move(kept);
}

Dnf dnf_of(const Formula& f, bool neg, std::size_t cap) {
  using Op = Formula::Op;
  switch (f.op()) {
    case Op::True: return neg ? Dnf{} : Dnf{Clause{}};
    case Op::False: return neg ? Dnf{Clause{}} : Dnf{};
    case Op::Lit: {
      Atom a = neg ? f.atom().negation() : f.atom();
      if (auto c = a.constant_value()) return *c ? Dnf{Clause{}} : Dnf{};
      return Dnf{Clause{std::move(a)}};
    }
    case Op::Not: return dnf_of(f.children().front(), !neg, cap);
    case Op::And:
    case Op::Or: {
      bool product = (f.op() == Op::And) != neg;
      if (!product) {
        Dnf out;
        for (const auto& k : f.children()) {
          Dnf d = dnf_of(k, neg, cap);
          out.insert(out.end(), std::make_move_iterator(d.begin()), std::make_move_iterator(d.end()));
          if (out.size() > cap) throw FormulaError("DNF clause limit exceeded");
        }
        tidy(out);
        return out;
      }
      Dnf acc{Clause{}};
      for (const auto& k : f.children()) {
        Dnf d = dnf_of(k, neg, cap);
        Dnf next;
        for (const auto& c1 : acc) {
          for (const auto& c2 : d) {
            if (auto m = merge_clauses(c1, c2)) next.push_back(std::move(*m));
            if (next.size() > cap) throw FormulaError("DNF clause limit exceeded");
          }
        }
        tidy(next);
        acc = std::move(next);
        if (acc.empty()) break;
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

Dnf Formula::to_dnf(std::size_t max_clauses) const { return dnf_of(*this, false, max_clauses); }

// ---------------------------------------------------------------------------
// Bound propagation

namespace {

Interval scale(Interval x, Int k) {
  if (k >= 0) return {clamp_wide(Wide{x.lo} * k), clamp_wide(Wide{x.hi} * k)};
  return {clamp_wide(Wide{x.hi} * k), clamp_wide(Wide{x.lo} * k)};
}

Interval add(Interval a, Interval b) {
  return {clamp_wide(Wide{a.lo} + b.lo), clamp_wide(Wide{a.hi} + b.hi)};
}

Interval abs_of(Interval x) {
  if (x.lo >= 0) return x;
  if (x.hi <= 0) return {-x.hi, -x.lo};
  return {0, std::max(-x.lo, x.hi)};
}

Interval range_of(const LinExpr& e, const std::vector<Interval>& box) {
  Interval r{e.constant_term(), e.constant_term()};
  for (const auto& [v, c] : e.terms()) r = add(r, scale(box[static_cast<std::size_t>(v)], c));
  return r;
}

struct Narrower {
  std::vector<Interval>& box;
  bool changed = false;
  bool dead = false;

  void tighten(int var, Int lo, Int hi) {
    Interval& iv = box[static_cast<std::size_t>(var)];
    if (lo > iv.lo) {
      iv.lo = lo;
      changed = true;
    }
    if (hi < iv.hi) {
      iv.hi = hi;
      changed = true;
    }
    if (iv.lo > iv.hi) dead = true;
  }

  // Residual bound for term k given the target range of a sum of terms.
  static Interval residual(const std::vector<Interval>& ranges, std::size_t k, Interval target) {
    Wide lo_others = 0, hi_others = 0;
    bool lo_inf = false, hi_inf = false;
    for (std::size_t j = 0; j < ranges.size(); ++j) {
      if (j == k) continue;
      if (is_neg_inf(ranges[j].lo)) lo_inf = true; else lo_others += ranges[j].lo;
      if (is_pos_inf(ranges[j].hi)) hi_inf = true; else hi_others += ranges[j].hi;
    }
    Interval t;
    t.lo = (hi_inf || is_neg_inf(target.lo)) ? -kInfinity : clamp_wide(Wide{target.lo} - hi_others);
    t.hi = (lo_inf || is_pos_inf(target.hi)) ? kInfinity : clamp_wide(Wide{target.hi} - lo_others);
    return t;
  }

  void narrow_var(int var, Int coef, Interval t) {
    Int lo, hi;
    if (coef > 0) {
      lo = is_neg_inf(t.lo) ? -kInfinity : ceil_div(t.lo, coef);
      hi = is_pos_inf(t.hi) ? kInfinity : floor_div(t.hi, coef);
    } else {
      lo = is_pos_inf(t.hi) ? -kInfinity : ceil_div(t.hi, coef);
      hi = is_neg_inf(t.lo) ? kInfinity : floor_div(t.lo, coef);
    }
    tighten(var, lo, hi);
  }

  void narrow_linear(const LinExpr& e, Interval target) {
    if (dead) return;
    Int c = e.constant_term();
    target = add(target, Interval{-c, -c});
    std::vector<Interval> ranges;
    for (const auto& [v, k] : e.terms()) ranges.push_back(scale(box[static_cast<std::size_t>(v)], k));
    for (std::size_t i = 0; i < ranges.size() && !dead; ++i) {
      const auto& [v, k] = e.terms()[i];
      narrow_var(v, k, residual(ranges, i, target));
    }
  }

  void narrow_abs(const LinExpr& inner, Int lower, Int upper) {
    if (!is_pos_inf(upper)) {
      if (upper < 0) {
        dead = true;
        return;
      }
      narrow_linear(inner, {-upper, upper});
    }
    if (lower > 0 && !is_pos_inf(lower)) {
      Interval r = range_of(inner, box);
      if (r.lo >= 0) narrow_linear(inner, {lower, kInfinity});
      else if (r.hi <= 0) narrow_linear(inner, {-kInfinity, -lower});
      else if (r.lo > -lower && r.hi < lower) dead = true;
    }
  }

  void narrow_expr(const Expr& e, Interval target) {
    if (dead) return;
    // Terms: constant, each linear term, each abs term.
    Int c = e.lin.constant_term();
    target = add(target, Interval{-c, -c});
    std::vector<Interval> ranges;
    for (const auto& [v, k] : e.lin.terms()) ranges.push_back(scale(box[static_cast<std::size_t>(v)], k));
    for (const auto& a : e.abs) ranges.push_back(scale(abs_of(range_of(a.inner, box)), a.coef));
    std::size_t nlin = e.lin.terms().size();
    for (std::size_t i = 0; i < ranges.size() && !dead; ++i) {
      Interval t = residual(ranges, i, target);
      if (i < nlin) {
        const auto& [v, k] = e.lin.terms()[i];
        narrow_var(v, k, t);
      } else {
        const AbsTerm& a = e.abs[i - nlin];
        Int d = a.coef;
        Int lower, upper;
        if (d > 0) {
          upper = is_pos_inf(t.hi) ? kInfinity : floor_div(t.hi, d);
          lower = is_neg_inf(t.lo) ? -kInfinity : ceil_div(t.lo, d);
        } else {
          upper = is_neg_inf(t.lo) ? kInfinity : floor_div(t.lo, d);
          lower = is_pos_inf(t.hi) ? -kInfinity : ceil_div(t.hi, d);
        }
        narrow_abs(a.inner, lower, upper);
      }
    }
  }

  void apply(const Atom& a) {
    switch (a.kind) {
      case Atom::Kind::Compare: {
        Interval t;
        switch (a.rel) {
          case Rel::Eq: t = {a.rhs, a.rhs}; break;
          case Rel::Le: t = {-kInfinity, a.rhs}; break;
          case Rel::Lt: t = {-kInfinity, a.rhs - 1}; break;
          case Rel::Ge: t = {a.rhs, kInfinity}; break;
          case Rel::Gt: t = {a.rhs + 1, kInfinity}; break;
          case Rel::Ne: return;
        }
        narrow_expr(a.lhs, t);
        break;
      }
      case Atom::Kind::Bit:
        if (!a.negated) {
          narrow_expr(a.lhs, {0, kInfinity});
          narrow_expr(a.index, {0, 62});
        }
        break;
      case Atom::Kind::Mod: break;
    }
  }
};

}  // namespace

bool propagate_bounds(const Clause& clause, std::vector<Interval>& box) {
  for (const auto& iv : box)
    if (iv.empty()) return false;
  for (int round = 0; round < 100; ++round) {
    Narrower n{box};
    for (const auto& a : clause) {
      n.apply(a);
      if (n.dead) return false;
    }
    if (!n.changed) break;
  }
  for (const auto& iv : box)
    if (iv.empty()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Clause solving

namespace {

struct Enumerator {
  const Clause& clause;
  int nvars;
  std::vector<std::vector<const Atom*>> by_depth;  // atoms checkable once var i is set
  std::vector<Int> point;
  std::vector<std::vector<Int>>* out;
  bool stop_at_first;
  bool found = false;

  Enumerator(const Clause& c, int n, std::vector<std::vector<Int>>* o, bool first)
      : clause(c), nvars(n), by_depth(static_cast<std::size_t>(std::max(n, 1))),
        point(static_cast<std::size_t>(n), 0), out(o), stop_at_first(first) {
    for (const auto& a : clause) {
      int mv = a.max_var();
      by_depth[static_cast<std::size_t>(std::max(mv, 0))].push_back(&a);
    }
  }

  void run(const std::vector<Interval>& box) {
    if (nvars == 0) {
      for (const auto& a : clause)
        if (!a.eval(point)) return;
      found = true;
      if (out) out->push_back({});
      return;
    }
    rec(box, 0);
  }

  void rec(const std::vector<Interval>& box, int depth) {
    const Interval& iv = box[static_cast<std::size_t>(depth)];
    for (Int x = iv.lo; x <= iv.hi; ++x) {
      point[static_cast<std::size_t>(depth)] = x;
      bool ok = true;
      for (const Atom* a : by_depth[static_cast<std::size_t>(depth)]) {
        if (!a->eval(std::span<const Int>(point.data(), static_cast<std::size_t>(depth) + 1))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (depth + 1 == nvars) {
        found = true;
        if (out) out->push_back(point);
        if (stop_at_first) return;
      } else {
        rec(box, depth + 1);
        if (found && stop_at_first) return;
      }
    }
  }
};

Wide volume(const std::vector<Interval>& box) {
  Wide v = 1;
  for (const auto& iv : box) {
    v *= Wide{iv.hi} - iv.lo + 1;
    if (v > Wide{1} << 62) return v;
  }
  return v;
}

Int gcd_lcm_cap(Int a, Int b, Int cap) {
  Int l = std::lcm(a, b);
  return l > cap || l <= 0 ? cap : l;
}

// Threshold past which every linear constraint's truth value is fixed along
// an unbounded coordinate, and the period of the remaining periodic atoms.
void far_parameters(const Clause& clause, const std::vector<Interval>& box, Int& threshold,
                    Int& period) {
  constexpr Int kPeriodCap = Int{1} << 14;
  Int m = 0;
  Int coef_sum = 1;
  auto see_lin = [&](const LinExpr& e) {
    m = std::max<Int>(m, std::llabs(e.constant_term()));
    Int s = 0;
    for (const auto& t : e.terms()) s += std::llabs(t.second);
    return s;
  };
  period = 1;
  for (const auto& a : clause) {
    Int s = see_lin(a.lhs.lin);
    for (const auto& t : a.lhs.abs) s += std::llabs(t.coef) * see_lin(t.inner);
    if (a.kind == Atom::Kind::Bit) {
      s += see_lin(a.index.lin);
      Int hi = 62;
      if (a.index.is_constant()) hi = a.index.lin.constant_term();
      else if (a.index.is_linear() && a.index.lin.terms().size() == 1) {
        Interval r = range_of(a.index.lin, box);
        if (r.hi < 62) hi = r.hi;
      }
      Int p = hi >= 13 ? kPeriodCap : (Int{1} << (std::max<Int>(hi, 0) + 1));
      period = gcd_lcm_cap(period, p, kPeriodCap);
    }
    if (a.kind == Atom::Kind::Mod) {
      period = gcd_lcm_cap(period, a.modulus, kPeriodCap);
      m = std::max(m, a.modulus);
    }
    m = std::max<Int>(m, std::llabs(a.rhs));
    coef_sum = std::max(coef_sum, s);
  }
  for (const auto& iv : box) {
    if (iv.lo > -kInfinity) m = std::max<Int>(m, std::llabs(iv.lo));
    if (iv.hi < kInfinity) m = std::max<Int>(m, std::llabs(iv.hi));
  }
  threshold = (coef_sum + 1) * (m + 1) + 1;
}

struct SolveOutcome {
  bool infinite = false;
  bool any = false;
  std::vector<std::vector<Int>> points;
};

SolveOutcome solve_impl(const Clause& clause, int nvars, const std::vector<Interval>* limit,
                        std::size_t max_points, bool stop_at_first) {
  SolveOutcome res;
  std::vector<Interval> box(static_cast<std::size_t>(nvars));
  if (limit) {
    if (limit->size() != box.size()) throw FormulaError("limit box has wrong dimension");
    box = *limit;
  }
  if (!propagate_bounds(clause, box)) return res;

  auto enumerate = [&](const std::vector<Interval>& b, bool first) {
    if (volume(b) > static_cast<Wide>(max_points))
      throw FormulaError("enumeration box too large");
    Enumerator en(clause, nvars, first ? nullptr : &res.points, first);
    en.run(b);
    return en.found;
  };

  bool all_bounded = std::all_of(box.begin(), box.end(), [](const Interval& i) { return i.bounded(); });
  if (all_bounded) {
    res.any = enumerate(box, stop_at_first);
    return res;
  }

  Int threshold = 0, period = 1;
  far_parameters(clause, box, threshold, period);
  Int reach = threshold + period;
  for (int u = 0; u < nvars; ++u) {
    for (int dir : {+1, -1}) {
      const Interval& iu = box[static_cast<std::size_t>(u)];
      if (dir > 0 && iu.hi < kInfinity) continue;
      if (dir < 0 && iu.lo > -kInfinity) continue;
      std::vector<Interval> far = box;
      for (int j = 0; j < nvars; ++j) {
        Interval& iv = far[static_cast<std::size_t>(j)];
        if (j == u) {
          if (dir > 0) {
            Int start = std::max(threshold, iv.lo);
            iv = {start, start + period - 1};
          } else {
            Int start = std::min(-threshold, iv.hi);
            iv = {start - period + 1, start};
          }
        } else if (!iv.bounded()) {
          iv = {std::max(iv.lo, -reach), std::min(iv.hi, reach)};
        }
      }
      if (!propagate_bounds(clause, far)) continue;
      if (volume(far) > static_cast<Wide>(max_points)) continue;
      Enumerator en(clause, nvars, nullptr, true);
      en.run(far);
      if (en.found) {
        res.infinite = true;
        res.any = true;
        return res;
      }
    }
  }
  for (auto& iv : box) {
    if (!iv.bounded()) iv = {std::max(iv.lo, -reach), std::min(iv.hi, reach)};
  }
  if (!propagate_bounds(clause, box)) return res;
  res.any = enumerate(box, stop_at_first);
  return res;
}

}  // namespace

ClauseSolutions solve_clause(const Clause& clause, int nvars, const std::vector<Interval>* limit,
                             std::size_t max_points) {
  SolveOutcome o = solve_impl(clause, nvars, limit, max_points, false);
  ClauseSolutions s;
  s.infinite = o.infinite;
  if (!o.infinite) {
    s.points = std::move(o.points);
    std::sort(s.points.begin(), s.points.end());
  }
  return s;
}

bool satisfiable(const Clause& clause, int nvars) {
  return solve_impl(clause, nvars, nullptr, 4'000'000, true).any;
}

bool satisfiable(const Dnf& dnf, int nvars) {
  return std::any_of(dnf.begin(), dnf.end(),
                     [&](const Clause& c) { return satisfiable(c, nvars); });
}

}  // namespace scg

// ---------------------------------------------------------------------------
// Printing

namespace scg {

namespace {

std::string var_name(int v, std::span<const std::string> names) {
  if (v >= 0 && static_cast<std::size_t>(v) < names.size()) return names[static_cast<std::size_t>(v)];
  return "_" + std::to_string(v);
}

void append_term(std::string& out, Int coef, const std::string& body) {
  if (out.empty()) {
    if (coef == -1) out += "-";
    else if (coef != 1) out += std::to_string(coef) + "*";
  } else {
    out += coef < 0 ? " - " : " + ";
    Int m = coef < 0 ? -coef : coef;
    if (m != 1) out += std::to_string(m) + "*";
  }
  out += body;
}

std::string lin_text(const LinExpr& e, std::span<const std::string> names, std::string out = {}) {
  for (const auto& [v, c] : e.terms()) append_term(out, c, var_name(v, names));
  return out;
}

}  // namespace

std::string to_text(const Expr& e, std::span<const std::string> names) {
  std::string out = lin_text(LinExpr(e.lin) - LinExpr::constant(e.lin.constant_term()), names);
  for (const auto& a : e.abs) append_term(out, a.coef, "|" + to_text(Expr(a.inner), names) + "|");
  Int c = e.lin.constant_term();
  if (out.empty()) return std::to_string(c);
  if (c > 0) out += " + " + std::to_string(c);
  if (c < 0) out += " - " + std::to_string(-c);
  return out;
}

std::string to_text(const Atom& a, std::span<const std::string> names) {
  switch (a.kind) {
    case Atom::Kind::Compare:
      return to_text(a.lhs, names) + " " + to_string(a.rel) + " " + std::to_string(a.rhs);
    case Atom::Kind::Mod: {
      std::string l = to_text(a.lhs, names);
      if (a.lhs.lin.terms().size() + a.lhs.abs.size() > 1) l = "(" + l + ")";
      return l + " mod " + std::to_string(a.modulus) + " " + to_string(a.rel) + " " +
             std::to_string(a.rhs);
    }
    case Atom::Kind::Bit:
      return std::string(a.negated ? "not " : "") + "bit(" + to_text(a.lhs, names) + ", " +
             to_text(a.index, names) + ")";
  }
  return {};
}

std::string to_text(const Dnf& d, std::span<const std::string> names) {
  if (d.empty()) return "false";
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += " or ";
    if (d[i].empty()) return "true";
    for (std::size_t j = 0; j < d[i].size(); ++j) {
      if (j) out += " and ";
      out += to_text(d[i][j], names);
    }
  }
  return out;
}

std::string to_text(const Formula& f, std::span<const std::string> names) {
  using Op = Formula::Op;
  switch (f.op()) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Lit: return to_text(f.atom(), names);
    case Op::Not: return "not (" + to_text(f.children().front(), names) + ")";
    case Op::And:
    case Op::Or: {
      std::string out = "(";
      const char* sep = f.op() == Op::And ? " and " : " or ";
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += sep;
        out += to_text(f.children()[i], names);
      }
      return out + ")";
    }
  }
  return {};
}

}  // namespace scg
