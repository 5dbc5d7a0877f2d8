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

// Guarded linear integer arithmetic: the constraint language behind sort
// domains, adjacency rules, vertex sets and map guards.
//
// Variables are numbered slots. A formula is evaluated against a full
// assignment, or partially substituted with affine expressions and then
// normalized to disjunctive normal form for bound analysis.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scg {

using Int = std::int64_t;

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c + sum(coef * x_var). Terms are kept sorted by variable with no zero
/// coefficients, so structural equality is semantic equality.
class LinExpr {
 public:
  LinExpr() = default;
  static LinExpr constant(Int c);
  static LinExpr variable(int var, Int coef = 1);

  Int constant_term() const { return constant_; }
  const std::vector<std::pair<int, Int>>& terms() const { return terms_; }
  bool is_constant() const { return terms_.empty(); }
  Int coefficient(int var) const;
  int max_var() const;

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(Int k);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, Int k) { return a *= k; }

  Int eval(std::span<const Int> values) const;
  /// Replaces every variable i by subst[i].
  LinExpr substitute(std::span<const LinExpr> subst) const;

  bool operator==(const LinExpr&) const = default;
  auto operator<=>(const LinExpr&) const = default;

 private:
  void add_term(int var, Int coef);
  Int constant_ = 0;
  std::vector<std::pair<int, Int>> terms_;
};

struct AbsTerm {
  Int coef = 1;
  LinExpr inner;
  bool operator==(const AbsTerm&) const = default;
  auto operator<=>(const AbsTerm&) const = default;
};

/// lin + sum(coef * |inner|). One level of absolute values only.
struct Expr {
  LinExpr lin;
  std::vector<AbsTerm> abs;

  Expr() = default;
  Expr(LinExpr l) : lin(std::move(l)) {}  // NOLINT(google-explicit-constructor)

  bool is_linear() const { return abs.empty(); }
  bool is_constant() const { return abs.empty() && lin.is_constant(); }
  Int eval(std::span<const Int> values) const;
  Expr substitute(std::span<const LinExpr> subst) const;
  /// Folds |constant| terms and merges equal abs terms.
  void normalize();
  int max_var() const;

  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(Int k);

  bool operator==(const Expr&) const = default;
  auto operator<=>(const Expr&) const = default;
};

enum class Rel { Eq, Ne, Lt, Le, Gt, Ge };

Rel negate(Rel r);
Rel mirror(Rel r);  // a rel b  <=>  -a mirror(rel) -b
const char* to_string(Rel r);
bool holds(Int lhs, Rel r, Int rhs);

/// A literal of the constraint language.
///   Compare: lhs rel rhs, lhs has no constant term.
///   Mod:     lhs mod modulus (= | !=) residue, rel is Eq or Ne.
///   Bit:     bit(lhs, index) -- binary digit `index` of `lhs` is one;
///            `negated` flips it. False for negative arguments or index > 62.
struct Atom {
  enum class Kind { Compare, Mod, Bit };
  Kind kind = Kind::Compare;
  Expr lhs;
  Rel rel = Rel::Eq;
  Int rhs = 0;
  Int modulus = 1;
  Expr index;
  bool negated = false;

  static Atom compare(Expr lhs, Rel rel, Expr rhs);
  static Atom mod(Expr value, Int modulus, Rel rel, Int residue);
  static Atom bit(Expr value, Expr index, bool negated = false);

  Atom negation() const;
  bool eval(std::span<const Int> values) const;
  Atom substitute(std::span<const LinExpr> subst) const;
  /// nullopt unless the atom mentions no variables.
  std::optional<bool> constant_value() const;
  int max_var() const;

  bool operator==(const Atom&) const = default;
  auto operator<=>(const Atom&) const = default;
};

using Clause = std::vector<Atom>;  // conjunction; empty = true
using Dnf = std::vector<Clause>;   // disjunction; empty = false

class Formula {
 public:
  enum class Op { True, False, Lit, And, Or, Not };

  Formula() : op_(Op::True) {}
  static Formula truth() { return Formula(Op::True); }
  static Formula falsity() { return Formula(Op::False); }
  static Formula literal(Atom a);
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula negation(Formula f);
  static Formula from_dnf(const Dnf& dnf);
  /// x_0 = point[0] and ... with variables offset by `first_var`.
  static Formula equals_point(std::span<const Int> point, int first_var = 0);

  Op op() const { return op_; }
  const Atom& atom() const { return atom_; }
  const std::vector<Formula>& children() const { return kids_; }
  bool is_true() const { return op_ == Op::True; }
  bool is_false() const { return op_ == Op::False; }

  bool eval(std::span<const Int> values) const;
  Formula substitute(std::span<const LinExpr> subst) const;
  int max_var() const;

  /// Negation-normal form distributed into DNF, with constant literals
  /// folded, duplicate literals and clauses removed. Throws FormulaError
  /// when the clause count exceeds `max_clauses`.
  Dnf to_dnf(std::size_t max_clauses = 20000) const;

  bool operator==(const Formula&) const = default;

 private:
  explicit Formula(Op op) : op_(op) {}
  Op op_;
  Atom atom_;
  std::vector<Formula> kids_;
};

/// Text forms in the DSL's guard syntax. Variable i prints as names[i]
/// (or `_i` when no name is given). DNF prints clauses joined by `or`.
std::string to_text(const Expr& e, std::span<const std::string> names);
std::string to_text(const Atom& a, std::span<const std::string> names);
std::string to_text(const Dnf& d, std::span<const std::string> names);
std::string to_text(const Formula& f, std::span<const std::string> names);

/// Substitution that renames variable i to i + offset for i in [0, count).
std::vector<LinExpr> shifted_vars(int count, int offset);

// ---------------------------------------------------------------------------
// Bound analysis of a single DNF clause over variables 0..n-1.

inline constexpr Int kInfinity = Int{1} << 60;

struct Interval {
  Int lo = -kInfinity;
  Int hi = kInfinity;
  bool bounded() const { return lo > -kInfinity && hi < kInfinity; }
  bool empty() const { return lo > hi; }
  bool operator==(const Interval&) const = default;
};

/// Narrows `box` (one interval per variable) to a fixpoint of the clause's
/// linear, absolute-value and bit constraints. Returns false when the clause
/// is proven unsatisfiable.
bool propagate_bounds(const Clause& clause, std::vector<Interval>& box);

struct ClauseSolutions {
  bool infinite = false;
  std::vector<std::vector<Int>> points;  // sorted; empty when infinite
};

/// Solves a clause over `nvars` variables. With `limit`, only points inside
/// the given box are considered (and the result is always finite).
/// Throws FormulaError when enumeration would exceed `max_points`.
ClauseSolutions solve_clause(const Clause& clause, int nvars,
                             const std::vector<Interval>* limit = nullptr,
                             std::size_t max_points = 4'000'000);

/// True iff some integer point satisfies the clause.
bool satisfiable(const Clause& clause, int nvars);
bool satisfiable(const Dnf& dnf, int nvars);

}  // namespace scg
