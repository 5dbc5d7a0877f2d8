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

#include <gtest/gtest.h>

#include <random>

namespace scg {
namespace {

LinExpr X(int i, Int c = 1) { return LinExpr::variable(i, c); }
LinExpr K(Int c) { return LinExpr::constant(c); }
Formula lit(Atom a) { return Formula::literal(std::move(a)); }

// Random formula over two variables with every atom kind.
Formula random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 5), small(-3, 3), modulus(2, 4), bitidx(0, 3);
  int k = depth <= 0 ? pick(rng) % 3 : pick(rng);
  switch (k) {
    case 0: {
      Rel rel = static_cast<Rel>(pick(rng));
      return lit(Atom::compare(Expr(X(0, small(rng)) + X(1, small(rng))), rel, Expr(K(small(rng)))));
    }
    case 1: {
      Int m = modulus(rng);
      return lit(Atom::mod(Expr(X(0) - X(1)), m, pick(rng) % 2 ? Rel::Eq : Rel::Ne, small(rng) < 0 ? 0 : 1));
    }
    case 2: {
      Expr e(X(0));
      e.abs.push_back({1, X(1) - K(small(rng))});
      return lit(Atom::compare(e, pick(rng) % 2 ? Rel::Le : Rel::Eq, Expr(K(3))));
    }
    case 3: return Formula::conj({random_formula(rng, depth - 1), random_formula(rng, depth - 1)});
    case 4: return Formula::disj({random_formula(rng, depth - 1), random_formula(rng, depth - 1)});
    default: return Formula::negation(random_formula(rng, depth - 1));
  }
}

TEST(Formula, DnfAgreesWithDirectEvaluation) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Formula f = random_formula(rng, 3);
    Formula g = Formula::from_dnf(f.to_dnf());
    for (Int a = -6; a <= 6; ++a)
      for (Int b = -6; b <= 6; ++b) {
        std::vector<Int> p{a, b};
        ASSERT_EQ(f.eval(p), g.eval(p)) << "trial " << trial << " at " << a << "," << b;
      }
  }
}

TEST(Formula, SolveClauseMatchesEnumerationInsideBox) {
  std::mt19937 rng(11);
  std::vector<Interval> box{{-5, 5}, {-5, 5}};
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    for (const auto& clause : random_formula(rng, 2).to_dnf()) {
      ClauseSolutions s = solve_clause(clause, 2, &box);
      std::vector<std::vector<Int>> brute;
      for (Int a = -5; a <= 5; ++a)
        for (Int b = -5; b <= 5; ++b) {
          std::vector<Int> p{a, b};
          if (std::all_of(clause.begin(), clause.end(), [&](const Atom& at) { return at.eval(p); })) brute.push_back(p);
        }
      ASSERT_FALSE(s.infinite);
      ASSERT_EQ(s.points, brute);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Formula, InfiniteDetection) {
  Clause mod_ray{Atom::compare(Expr(X(0)), Rel::Ge, Expr(K(3))), Atom::mod(Expr(X(0)), 4, Rel::Eq, 1)};
  EXPECT_TRUE(solve_clause(mod_ray, 1).infinite);

  Expr a(LinExpr{});
  a.abs.push_back({1, X(0)});
  Clause bounded{Atom::compare(a, Rel::Le, Expr(K(5)))};
  auto s = solve_clause(bounded, 1);
  EXPECT_FALSE(s.infinite);
  EXPECT_EQ(s.points.size(), 11u);

  Clause line{Atom::compare(Expr(X(0)), Rel::Eq, Expr(X(1, 2))), Atom::compare(Expr(X(1)), Rel::Ge, Expr(K(0))),
              Atom::compare(Expr(X(1)), Rel::Le, Expr(K(3)))};
  auto l = solve_clause(line, 2);
  ASSERT_FALSE(l.infinite);
  EXPECT_EQ(l.points, (std::vector<std::vector<Int>>{{0, 0}, {2, 1}, {4, 2}, {6, 3}}));

  EXPECT_TRUE(solve_clause({Atom::bit(Expr(X(0)), Expr(K(3)))}, 1).infinite);
  auto bits = solve_clause({Atom::bit(Expr(K(5)), Expr(X(0)))}, 1);
  ASSERT_FALSE(bits.infinite);
  EXPECT_EQ(bits.points, (std::vector<std::vector<Int>>{{0}, {2}}));
}

TEST(Formula, PropagateBounds) {
  Clause c{Atom::compare(Expr(X(0) + X(1)), Rel::Eq, Expr(K(10))), Atom::compare(Expr(X(0)), Rel::Ge, Expr(K(0))),
           Atom::compare(Expr(X(0)), Rel::Le, Expr(K(3)))};
  std::vector<Interval> box(2);
  ASSERT_TRUE(propagate_bounds(c, box));
  EXPECT_EQ(box[1], (Interval{7, 10}));
  Clause contradiction{Atom::compare(Expr(X(0)), Rel::Ge, Expr(K(3))), Atom::compare(Expr(X(0)), Rel::Le, Expr(K(2)))};
  std::vector<Interval> b2(1);
  EXPECT_FALSE(propagate_bounds(contradiction, b2));
  EXPECT_FALSE(satisfiable(contradiction, 1));
}

TEST(Formula, SubstituteComposesWithEvaluation) {
  std::mt19937 rng(3);
  std::vector<LinExpr> subst{X(0) + X(1), X(1, 2) - K(1)};
  for (int trial = 0; trial < 100; ++trial) {
    Formula f = random_formula(rng, 2);
    Formula g = f.substitute(subst);
    for (Int a = -3; a <= 3; ++a)
      for (Int b = -3; b <= 3; ++b) {
        std::vector<Int> p{a, b}, q{a + b, 2 * b - 1};
        ASSERT_EQ(g.eval(p), f.eval(q));
      }
  }
}

TEST(Formula, TextForms) {
  std::vector<std::string> names{"x", "y"};
  EXPECT_EQ(to_text(Atom::compare(Expr(X(0)), Rel::Eq, Expr(X(1) + K(1))), names), "x - y = 1");
  EXPECT_EQ(to_text(Atom::mod(Expr(X(0) - X(1)), 3, Rel::Eq, 1), names), "(x - y) mod 3 = 1");
  EXPECT_EQ(to_text(Atom::bit(Expr(X(0)), Expr(X(1)), true), names), "not bit(x, y)");
  EXPECT_EQ(to_text(Dnf{}, names), "false");
  EXPECT_EQ(to_text(Dnf{Clause{}}, names), "true");
}

TEST(Formula, BitSemantics) {
  for (Int y = 0; y < 64; ++y)
    for (Int x = 0; x < 7; ++x) {
      std::vector<Int> p{y, x};
      EXPECT_EQ(Atom::bit(Expr(X(0)), Expr(X(1))).eval(p), ((y >> x) & 1) == 1);
    }
  std::vector<Int> neg{-1, 0};
  EXPECT_FALSE(Atom::bit(Expr(X(0)), Expr(X(1))).eval(neg));
}

}  // namespace
}  // namespace scg
