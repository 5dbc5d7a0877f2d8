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

#include "scg/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>

namespace scg {

std::string to_string(const ParseDiagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         (d.severity == ParseDiagnostic::Severity::Error ? "error: " : "warning: ") + d.message;
}

namespace {

// ---------------------------------------------------------------------------
// Lexing, one line at a time

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int col = 1;
  Int value = 0;
};

struct Failure {
  int col;
  std::string message;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

std::vector<Token> lex(std::string_view line) {
  static const char* const kPuncts[] = {"->", "<=", ">=", "!=", "=", "<", ">", "(", ")",
                                        ",",  "~",  "+",  "-",  "*", "|", ";"};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col, 0});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      Token t{Tok::Int, std::string(line.substr(i, j - i)), col, 0};
      auto [p, ec] = std::from_chars(line.data() + i, line.data() + j, t.value);
      if (ec != std::errc()) throw Failure{col, "integer literal '" + t.text + "' exceeds the 64-bit range"};
      out.push_back(std::move(t));
      i = j;
      continue;
    }
    bool matched = false;
    for (const char* p : kPuncts) {
      std::string_view ps(p);
      if (line.substr(i, ps.size()) == ps) {
        out.push_back({Tok::Punct, std::string(ps), col, 0});
        i += ps.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw Failure{col, std::string("unexpected character '") + c + "'"};
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1, 0});
  return out;
}

// ---------------------------------------------------------------------------
// Recursive descent over one line's tokens

class LineParser {
 public:
  explicit LineParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_punct(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == Tok::Punct && peek(k).text == p;
  }
  bool is_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

  [[noreturn]] void fail(const std::string& msg) const { throw Failure{peek().col, msg}; }

  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'" + found());
    next();
  }
  void expect_word(std::string_view w) {
    if (!is_word(w)) fail("expected '" + std::string(w) + "'" + found());
    next();
  }
  std::string expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what + found());
    return next().text;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }
  std::string found() const {
    if (at_end()) return " but the line ended";
    return ", found '" + peek().text + "'";
  }

  Int signed_int() {
    bool neg = false;
    if (is_punct("-")) {
      next();
      neg = true;
    }
    if (peek().kind != Tok::Int) fail("expected an integer" + found());
    Int v = next().value;
    return neg ? -v : v;
  }

  // -- expressions ---------------------------------------------------------

  Expr expr(const std::vector<std::string>& names) {
    Expr e;
    if (is_punct("-")) {
      next();
      e = term(names);
      e *= -1;
    } else {
      e = term(names);
    }
    while (is_punct("+") || is_punct("-")) {
      bool minus = next().text == "-";
      Expr t = term(names);
      if (minus) e -= t;
      else e += t;
    }
    e.normalize();
    return e;
  }

  Expr term(const std::vector<std::string>& names) {
    Expr e = factor(names);
    while (is_punct("*")) {
      int col = peek().col;
      next();
      Expr f = factor(names);
      if (f.is_constant()) {
        e *= f.lin.constant_term();
      } else if (e.is_constant()) {
        Int k = e.lin.constant_term();
        e = f;
        e *= k;
      } else {
        throw Failure{col, "product of two non-constant expressions is not linear"};
      }
    }
    return e;
  }

  Expr factor(const std::vector<std::string>& names) {
    if (peek().kind == Tok::Int) return Expr(LinExpr::constant(next().value));
    if (is_punct("-")) {
      next();
      Expr e = factor(names);
      e *= -1;
      return e;
    }
    if (is_punct("(")) {
      next();
      Expr e = expr(names);
      expect_punct(")");
      return e;
    }
    if (is_punct("|")) {
      int col = peek().col;
      next();
      Expr inner = expr(names);
      expect_punct("|");
      return abs_of(inner, col);
    }
    if (peek().kind == Tok::Ident) {
      if (peek().text == "abs" && is_punct("(", 1)) {
        int col = peek().col;
        next();
        next();
        Expr inner = expr(names);
        expect_punct(")");
        return abs_of(inner, col);
      }
      Token t = next();
      auto it = std::find(names.begin(), names.end(), t.text);
      if (it == names.end()) throw Failure{t.col, "unknown variable '" + t.text + "'"};
      return Expr(LinExpr::variable(static_cast<int>(it - names.begin())));
    }
    fail("expected an expression" + found());
  }

  static Expr abs_of(const Expr& inner, int col) {
    if (!inner.is_linear()) throw Failure{col, "nested absolute values are not supported"};
    Expr e;
    e.abs.push_back(AbsTerm{1, inner.lin});
    e.normalize();
    return e;
  }

  // -- formulas ------------------------------------------------------------

  Formula formula(const std::vector<std::string>& names) {
    std::vector<Formula> parts{conjunction(names)};
    while (is_word("or")) {
      next();
      parts.push_back(conjunction(names));
    }
    return Formula::disj(std::move(parts));
  }

  Formula conjunction(const std::vector<std::string>& names) {
    std::vector<Formula> parts{negated(names)};
    while (is_word("and")) {
      next();
      parts.push_back(negated(names));
    }
    return Formula::conj(std::move(parts));
  }

  Formula negated(const std::vector<std::string>& names) {
    if (is_word("not")) {
      next();
      return Formula::negation(negated(names));
    }
    return primary(names);
  }

  Formula primary(const std::vector<std::string>& names) {
    if (is_punct("(")) {
      // Either a parenthesized formula or an atom whose expression starts
      // with a parenthesis; try the atom first.
      std::size_t save = pos_;
      try {
        return atom(names);
      } catch (const Failure&) {
        pos_ = save;
      }
      next();
      Formula f = formula(names);
      expect_punct(")");
      return f;
    }
    return atom(names);
  }

  static std::optional<Rel> rel_of(const Token& t) {
    if (t.kind != Tok::Punct) return std::nullopt;
    if (t.text == "=") return Rel::Eq;
    if (t.text == "!=") return Rel::Ne;
    if (t.text == "<") return Rel::Lt;
    if (t.text == "<=") return Rel::Le;
    if (t.text == ">") return Rel::Gt;
    if (t.text == ">=") return Rel::Ge;
    return std::nullopt;
  }

  Formula atom(const std::vector<std::string>& names) {
    if (is_word("true")) {
      next();
      return Formula::truth();
    }
    if (is_word("false")) {
      next();
      return Formula::falsity();
    }
    if (is_word("bit") && is_punct("(", 1)) {
      next();
      next();
      Expr value = expr(names);
      expect_punct(",");
      Expr index = expr(names);
      expect_punct(")");
      return Formula::literal(Atom::bit(std::move(value), std::move(index)));
    }
    Expr lhs = expr(names);
    if (is_word("mod")) {
      next();
      if (peek().kind != Tok::Int) fail("expected a modulus" + found());
      Token m = next();
      if (m.value <= 0) throw Failure{m.col, "modulus must be positive"};
      auto rel = rel_of(peek());
      if (!rel || (*rel != Rel::Eq && *rel != Rel::Ne)) fail("expected '=' or '!=' after the modulus" + found());
      next();
      int col = peek().col;
      Expr rhs = expr(names);
      if (!rhs.is_constant()) throw Failure{col, "residue must be a constant"};
      return Formula::literal(Atom::mod(std::move(lhs), m.value, *rel, rhs.lin.constant_term()));
    }
    auto rel = rel_of(peek());
    if (!rel) fail("expected a comparison" + found());
    next();
    Expr rhs = expr(names);
    std::vector<Formula> chain{Formula::literal(Atom::compare(lhs, *rel, rhs))};
    while (auto r2 = rel_of(peek())) {
      next();
      Expr third = expr(names);
      chain.push_back(Formula::literal(Atom::compare(rhs, *r2, third)));
      rhs = std::move(third);
    }
    return Formula::conj(std::move(chain));
  }

  /// Guard normalized to disjunctive normal form.
  Formula guard(const std::vector<std::string>& names) {
    int col = peek().col;
    Formula f = formula(names);
    try {
      return Formula::from_dnf(f.to_dnf());
    } catch (const FormulaError& e) {
      throw Failure{col, e.what()};
    }
  }

  // -- heads ---------------------------------------------------------------

  /// `name(x, y)` with distinct variable names.
  std::pair<std::string, std::vector<std::string>> head() {
    std::string name = expect_ident("a sort name");
    expect_punct("(");
    std::vector<std::string> vars;
    if (!is_punct(")")) {
      for (;;) {
        Token t = peek();
        std::string v = expect_ident("a variable name");
        if (std::find(vars.begin(), vars.end(), v) != vars.end())
          throw Failure{t.col, "variable '" + v + "' repeated"};
        vars.push_back(v);
        if (!is_punct(",")) break;
        next();
      }
    }
    expect_punct(")");
    return {name, vars};
  }

  /// `name(1, -2)`, `name()` or a label `name_1_-2`.
  VertexId vertex() {
    Token t = peek();
    std::string name = expect_ident("a vertex");
    if (!is_punct("(")) {
      auto v = from_label(name);
      if (!v) throw Failure{t.col, "malformed vertex '" + name + "'"};
      // Labels with negative indices lex as `c_` `-` `1`.
      while (!name.empty() && name.back() == '_' && is_punct("-") && peek(1).kind == Tok::Int) {
        next();
        v->index.push_back(-next().value);
        name.clear();
      }
      return *v;
    }
    next();
    VertexId v{name, {}};
    if (!is_punct(")")) {
      for (;;) {
        v.index.push_back(signed_int());
        if (!is_punct(",")) break;
        next();
      }
    }
    expect_punct(")");
    return v;
  }

  static std::optional<VertexId> from_label(const std::string& s) {
    VertexId v;
    std::size_t end = s.size();
    std::vector<Int> rev;
    bool trailing_sep = !s.empty() && s.back() == '_';
    if (trailing_sep) end -= 1;
    for (;;) {
      auto us = s.rfind('_', end == 0 ? 0 : end - 1);
      if (us == std::string::npos || us == 0) break;
      std::string_view seg(s.data() + us + 1, end - us - 1);
      Int x = 0;
      auto [p, ec] = std::from_chars(seg.data(), seg.data() + seg.size(), x);
      if (seg.empty() || ec != std::errc() || p != seg.data() + seg.size()) break;
      rev.push_back(x);
      end = us;
    }
    v.sort = s.substr(0, end);
    if (v.sort.empty()) return std::nullopt;
    v.index.assign(rev.rbegin(), rev.rend());
    if (trailing_sep && v.sort.back() == '_') return std::nullopt;
    return v;
  }

  std::size_t pos() const { return pos_; }
  std::string rest_text(std::string_view line) const {
    std::string s(line.substr(static_cast<std::size_t>(peek().col - 1)));
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

ParseDiagnostic error_at(int line, int col, std::string msg) {
  return {ParseDiagnostic::Severity::Error, line, col, std::move(msg)};
}

ParseDiagnostic warning_at(int line, int col, std::string msg) {
  return {ParseDiagnostic::Severity::Warning, line, col, std::move(msg)};
}

bool has_errors(const std::vector<ParseDiagnostic>& ds) {
  return std::any_of(ds.begin(), ds.end(),
                     [](const auto& d) { return d.severity == ParseDiagnostic::Severity::Error; });
}

// ---------------------------------------------------------------------------
// Vertex sets

/// One item: `[except] sort(args) [when guard]`.
void parse_set_item(LineParser& p, const GraphSpec& spec, VertexSet& out) {
  bool except = false;
  if (p.is_word("except")) {
    p.next();
    except = true;
  }
  Token t = p.peek();
  std::string name = p.expect_ident("a sort name");
  const SortDecl* sort = spec.find_sort(name);
  if (!sort) throw Failure{t.col, "unknown sort '" + name + "'"};
  p.expect_punct("(");
  // Either all integer literals (one vertex) or all variable names.
  bool literal = p.peek().kind == Tok::Int || p.is_punct("-") || p.is_punct(")");
  VertexId v{name, {}};
  std::vector<std::string> vars;
  if (!p.is_punct(")")) {
    for (;;) {
      if (literal) {
        v.index.push_back(p.signed_int());
      } else {
        Token vt = p.peek();
        std::string var = p.expect_ident("a variable name");
        if (std::find(vars.begin(), vars.end(), var) != vars.end())
          throw Failure{vt.col, "variable '" + var + "' repeated"};
        vars.push_back(var);
      }
      if (!p.is_punct(",")) break;
      p.next();
    }
  }
  p.expect_punct(")");
  std::size_t arity = literal ? v.index.size() : vars.size();
  if (static_cast<int>(arity) != sort->arity())
    throw Failure{t.col, "arity mismatch for sort '" + name + "': expected " +
                             std::to_string(sort->arity()) + ", got " + std::to_string(arity)};
  if (literal) {
    if (p.is_word("when")) p.fail("a single vertex takes no guard");
    (except ? out.exclude : out.include).push_back(std::move(v));
    return;
  }
  if (except) throw Failure{t.col, "'except' takes a single vertex"};
  Formula cond = Formula::truth();
  if (p.is_word("when")) {
    p.next();
    cond = p.guard(vars);
  }
  out.clauses.push_back({name, std::move(cond)});
}

VertexSet parse_set_line(LineParser& p, const GraphSpec& spec) {
  VertexSet s;
  for (;;) {
    parse_set_item(p, spec, s);
    if (!p.is_punct(";")) break;
    p.next();
  }
  p.expect_end();
  std::sort(s.include.begin(), s.include.end());
  s.include.erase(std::unique(s.include.begin(), s.include.end()), s.include.end());
  return s;
}

std::string set_text(const VertexSet& s, const GraphSpec& spec, std::string_view sep) {
  std::vector<std::string> items;
  for (const auto& c : s.clauses) {
    const SortDecl* d = spec.find_sort(c.sort);
    std::vector<std::string> names = d ? d->vars : std::vector<std::string>{};
    std::string item = c.sort + "(";
    for (std::size_t i = 0; i < names.size(); ++i) item += (i ? ", " : "") + names[i];
    item += ")";
    if (!c.condition.is_true()) item += " when " + to_text(c.condition.to_dnf(), names);
    items.push_back(item);
  }
  for (const auto& v : s.include) items.push_back(to_dsl(v));
  for (const auto& v : s.exclude) items.push_back("except " + to_dsl(v));
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

struct ParsedBranch {
  MapBranch branch;
  int line;
};

MapBranch parse_branch(LineParser& p, const GraphSpec& spec) {
  Token t = p.peek();
  auto [src, vars] = p.head();
  const SortDecl* s = spec.find_sort(src);
  if (!s) throw Failure{t.col, "unknown sort '" + src + "'"};
  if (s->arity() != static_cast<int>(vars.size()))
    throw Failure{t.col, "arity mismatch for sort '" + src + "'"};
  p.expect_punct("->");
  Token tt = p.peek();
  std::string tgt = p.expect_ident("a target sort");
  const SortDecl* d = spec.find_sort(tgt);
  if (!d) throw Failure{tt.col, "map branch targets unknown sort '" + tgt + "'"};
  p.expect_punct("(");
  std::vector<LinExpr> image;
  if (!p.is_punct(")")) {
    for (;;) {
      int col = p.peek().col;
      Expr e = p.expr(vars);
      if (!e.is_linear()) throw Failure{col, "map images must be affine"};
      image.push_back(e.lin);
      if (!p.is_punct(",")) break;
      p.next();
    }
  }
  p.expect_punct(")");
  if (static_cast<int>(image.size()) != d->arity())
    throw Failure{tt.col, "arity mismatch for target sort '" + tgt + "'"};
  Formula guard = Formula::truth();
  if (p.is_word("when")) {
    p.next();
    guard = p.guard(vars);
  }
  p.expect_end();
  return MapBranch{src, vars, std::move(guard), tgt, std::move(image)};
}

Formula host_removed(const GraphOracle& g, const SortDecl& s) {
  std::vector<Formula> parts;
  for (const auto& set : g.removed()) parts.push_back(set.membership(s.name, s.arity()));
  return Formula::disj(std::move(parts));
}

void check_branches(const std::vector<ParsedBranch>& bs, const GraphOracle& host,
                    const VertexSet* removed, const char* what, int decl_line,
                    std::vector<ParseDiagnostic>& diags) {
  for (const auto& s : host.spec().sorts) {
    std::vector<const ParsedBranch*> mine;
    for (const auto& b : bs)
      if (b.branch.source == s.name) mine.push_back(&b);
    Formula valid = Formula::conj({s.domain, Formula::negation(host_removed(host, s))});
    if (removed) valid = Formula::conj({valid, Formula::negation(removed->membership(s.name, s.arity()))});
    try {
      for (std::size_t i = 0; i < mine.size(); ++i) {
        for (std::size_t j = i + 1; j < mine.size(); ++j) {
          const MapBranch& a = mine[i]->branch;
          const MapBranch& b = mine[j]->branch;
          Formula both = Formula::conj({valid, a.guard, b.guard});
          Formula conflict = both;
          if (a.target == b.target) {
            std::vector<Formula> differ;
            for (std::size_t k = 0; k < a.image.size(); ++k) {
              if (a.image[k] == b.image[k]) continue;
              differ.push_back(Formula::literal(Atom::compare(a.image[k], Rel::Ne, b.image[k])));
            }
            conflict = Formula::conj({both, Formula::disj(std::move(differ))});
          }
          if (satisfiable(conflict.to_dnf(), s.arity())) {
            diags.push_back(error_at(mine[j]->line, 1,
                                     std::string(what) + " branches on lines " + std::to_string(mine[i]->line) +
                                         " and " + std::to_string(mine[j]->line) +
                                         " have overlapping guards with conflicting images"));
          }
        }
      }
      std::vector<Formula> guards;
      for (const auto* b : mine) guards.push_back(b->branch.guard);
      Formula uncovered = Formula::conj({valid, Formula::negation(Formula::disj(std::move(guards)))});
      if (satisfiable(uncovered.to_dnf(), s.arity())) {
        diags.push_back(error_at(decl_line, 1,
                                 std::string(what) + " does not cover every vertex of sort '" + s.name + "'"));
      }
    } catch (const FormulaError& e) {
      diags.push_back(warning_at(decl_line, 1, std::string(what) + " coverage of sort '" + s.name +
                                                   "' not checked: " + e.what()));
    }
  }
}

std::string branch_text(const MapBranch& b, const GraphSpec& spec, std::string_view keyword) {
  std::vector<std::string> names = b.vars;
  if (names.empty()) {
    if (const SortDecl* d = spec.find_sort(b.source)) names = d->vars;
  }
  std::string out(keyword);
  out += " " + b.source + "(";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  out += ") -> " + b.target + "(";
  for (std::size_t k = 0; k < b.image.size(); ++k)
    out += (k ? ", " : "") + to_text(Expr(b.image[k]), names);
  out += ")";
  if (!b.guard.is_true()) out += " when " + to_text(b.guard.to_dnf(), names);
  return out + "\n";
}

}  // namespace

// ---------------------------------------------------------------------------
// Public parsers

ParseResult<GraphOracle> parse_graph_spec(std::string_view text) {
  ParseResult<GraphOracle> result;
  auto& diags = result.diagnostics;
  GraphSpec spec;
  bool have_graph = false;
  bool complemented = false;
  std::vector<std::pair<int, std::string_view>> minus_lines;
  std::vector<std::pair<int, VertexId>> roots;
  std::map<std::string, int> sort_line;
  auto lines = split_lines(text);
  // Sort lookup during parsing works on an unsorted list.
  auto find_sort = [&spec](const std::string& n) -> const SortDecl* {
    for (const auto& s : spec.sorts)
      if (s.name == n) return &s;
    return nullptr;
  };

  for (std::size_t li = 0; li < lines.size(); ++li) {
    int ln = static_cast<int>(li) + 1;
    std::string_view line = lines[li];
    try {
      LineParser p(lex(line));
      if (p.at_end()) continue;
      Token kw = p.peek();
      if (kw.kind != Tok::Ident) p.fail("expected a statement keyword");
      p.next();
      if (!have_graph && kw.text != "graph") throw Failure{kw.col, "expected 'graph <name>' first"};
      if (kw.text == "graph") {
        if (have_graph) throw Failure{kw.col, "duplicate 'graph' declaration"};
        std::string name = p.rest_text(line);
        if (name.empty()) p.fail("expected a graph name");
        spec.name = name;
        have_graph = true;
      } else if (kw.text == "sort") {
        Token t = p.peek();
        auto [name, vars] = p.head();
        if (find_sort(name)) throw Failure{t.col, "sort '" + name + "' declared twice"};
        Formula dom = Formula::truth();
        if (p.is_word("where")) {
          p.next();
          dom = p.guard(vars);
        }
        p.expect_end();
        spec.sorts.push_back({name, vars, std::move(dom)});
        sort_line[name] = ln;
      } else if (kw.text == "edge") {
        Token lt = p.peek();
        auto [l, lv] = p.head();
        p.expect_punct("~");
        Token rt = p.peek();
        auto [r, rv] = p.head();
        const SortDecl* ls = find_sort(l);
        const SortDecl* rs = find_sort(r);
        if (!ls) throw Failure{lt.col, "unknown sort '" + l + "'"};
        if (!rs) throw Failure{rt.col, "unknown sort '" + r + "'"};
        if (ls->arity() != static_cast<int>(lv.size()))
          throw Failure{lt.col, "arity mismatch for sort '" + l + "'"};
        if (rs->arity() != static_cast<int>(rv.size()))
          throw Failure{rt.col, "arity mismatch for sort '" + r + "'"};
        std::vector<std::string> names = lv;
        for (const auto& v : rv) {
          if (std::find(names.begin(), names.end(), v) != names.end())
            throw Failure{rt.col, "variable '" + v + "' used on both sides"};
          names.push_back(v);
        }
        Formula g = Formula::truth();
        if (p.is_word("when")) {
          p.next();
          g = p.guard(names);
        }
        p.expect_end();
        spec.rules.push_back({l, r, lv, rv, std::move(g)});
      } else if (kw.text == "bound") {
        int col = p.peek().col;
        Expr e = p.expr({"r"});
        p.expect_end();
        if (!e.is_linear()) throw Failure{col, "bound must be linear in r"};
        Int scale = e.lin.coefficient(0), offset = e.lin.constant_term();
        if (scale < 0 || offset < 0) throw Failure{col, "bound coefficients must be non-negative"};
        spec.bound = {scale, offset};
      } else if (kw.text == "root") {
        VertexId v = p.vertex();
        p.expect_end();
        roots.emplace_back(ln, std::move(v));
      } else if (kw.text == "components") {
        Token t = p.peek();
        std::string s = p.expect_ident("a sort name");
        const SortDecl* d = find_sort(s);
        if (!d) throw Failure{t.col, "unknown sort '" + s + "'"};
        Token vt = p.peek();
        std::string var = p.expect_ident("a coordinate name");
        p.expect_end();
        auto it = std::find(d->vars.begin(), d->vars.end(), var);
        if (it == d->vars.end()) throw Failure{vt.col, "sort '" + s + "' has no coordinate '" + var + "'"};
        spec.component_coord[s] = static_cast<int>(it - d->vars.begin());
      } else if (kw.text == "complement") {
        p.expect_end();
        complemented = !complemented;
      } else if (kw.text == "minus") {
        std::size_t off = static_cast<std::size_t>(p.peek().col - 1);
        minus_lines.emplace_back(ln, line.substr(off));
      } else {
        throw Failure{kw.col, "unknown statement '" + kw.text + "'"};
      }
    } catch (const Failure& f) {
      diags.push_back(error_at(ln, f.col, f.message));
    }
  }
  if (!have_graph) {
    if (diags.empty()) diags.push_back(error_at(1, 1, "expected 'graph <name>' declaration"));
    return result;
  }
  if (spec.sorts.empty()) diags.push_back(error_at(1, 1, "graph declares no sorts"));
  if (has_errors(diags)) return result;

  for (const auto& s : spec.sorts) {
    try {
      if (!satisfiable(s.domain.to_dnf(), s.arity()))
        diags.push_back(warning_at(sort_line[s.name], 1, "domain of sort '" + s.name + "' is unsatisfiable"));
    } catch (const FormulaError&) {
    }
  }
  for (const auto& [ln, v] : roots) {
    const SortDecl* d = find_sort(v.sort);
    if (!d) {
      diags.push_back(error_at(ln, 1, "unknown sort '" + v.sort + "'"));
    } else if (d->arity() != static_cast<int>(v.index.size())) {
      diags.push_back(error_at(ln, 1, "arity mismatch for root " + to_dsl(v)));
    } else if (!d->domain.eval(v.index)) {
      diags.push_back(error_at(ln, 1, "root " + to_dsl(v) + " is outside the domain of sort '" + v.sort + "'"));
    } else {
      spec.roots.push_back(v);
    }
  }
  if (has_errors(diags)) return result;

  std::optional<GraphOracle> g;
  try {
    g.emplace(std::move(spec));
  } catch (const GraphError& e) {
    diags.push_back(error_at(1, 1, e.what()));
    return result;
  }
  if (complemented) g = complement(*g);
  for (const auto& [ln, body] : minus_lines) {
    auto set = parse_vertex_set(body, g->spec());
    for (auto d : set.diagnostics) {
      d.line = ln;
      d.column += static_cast<int>(lines[static_cast<std::size_t>(ln - 1)].size() - body.size());
      diags.push_back(std::move(d));
    }
    if (!set.ok()) continue;
    try {
      g = graph_minus(*g, *set.value);
    } catch (const GraphError& e) {
      diags.push_back(error_at(ln, 1, e.what()));
    }
  }
  if (has_errors(diags)) return result;
  result.value = std::move(g);
  return result;
}

ParseResult<VertexSet> parse_vertex_set(std::string_view text, const GraphSpec& spec) {
  ParseResult<VertexSet> result;
  try {
    LineParser p(lex(text));
    if (p.at_end()) p.fail("expected a vertex set");
    result.value = parse_set_line(p, spec);
  } catch (const Failure& f) {
    result.diagnostics.push_back(error_at(1, f.col, f.message));
  }
  return result;
}

ParseResult<VertexId> parse_vertex(std::string_view text) {
  ParseResult<VertexId> result;
  try {
    LineParser p(lex(text));
    VertexId v = p.vertex();
    p.expect_end();
    result.value = std::move(v);
  } catch (const Failure& f) {
    result.diagnostics.push_back(error_at(1, f.col, f.message));
  }
  return result;
}

namespace {

bool is_certificate_declaration(std::string_view line) {
  auto start = line.find_first_not_of(" \t");
  if (start == std::string_view::npos || line.substr(start, 11) != "certificate") return false;
  return start + 11 == line.size() || line[start + 11] == ' ' || line[start + 11] == '\t';
}

// Names are raw words so derived names such as `f^c` or `f*g` parse.
std::string certificate_name(std::string_view line, int keyword_col) {
  std::size_t at = static_cast<std::size_t>(keyword_col - 1) + 11;
  std::string_view rest = line.substr(std::min(at, line.size()));
  rest = rest.substr(0, rest.find('#'));
  auto first = rest.find_first_not_of(" \t");
  if (first == std::string_view::npos)
    throw Failure{static_cast<int>(line.size()) + 1, "expected a certificate name"};
  rest.remove_prefix(first);
  at += first;
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
  auto gap = rest.find_first_of(" \t");
  if (gap != std::string_view::npos)
    throw Failure{static_cast<int>(at + gap) + 1, "unexpected text after the certificate name"};
  return std::string(rest);
}

}  // namespace

ParseResult<IsoCertificate> parse_certificate_spec(std::string_view text, const GraphOracle& host) {
  ParseResult<IsoCertificate> result;
  auto& diags = result.diagnostics;
  const GraphSpec& spec = host.spec();
  std::string name;
  int decl_line = 1;
  bool have_decl = false;
  std::string removed_text;
  int removed_line = 0;
  std::vector<ParsedBranch> forward, inverse;
  auto lines = split_lines(text);
  int last_line = 1;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    int ln = static_cast<int>(li) + 1;
    std::string_view line = lines[li];
    try {
      bool decl = is_certificate_declaration(line);
      LineParser p(lex(decl ? line.substr(0, line.find("certificate") + 11) : line));
      if (p.at_end()) continue;
      last_line = ln;
      Token kw = p.peek();
      if (kw.kind != Tok::Ident) p.fail("expected a statement keyword");
      p.next();
      if (!have_decl && kw.text != "certificate") throw Failure{kw.col, "expected 'certificate <name>' first"};
      if (kw.text == "certificate") {
        if (have_decl) throw Failure{kw.col, "duplicate 'certificate' declaration"};
        name = certificate_name(line, kw.col);
        have_decl = true;
        decl_line = ln;
      } else if (kw.text == "remove") {
        std::size_t off = static_cast<std::size_t>(p.peek().col - 1);
        std::string body(line.substr(off));
        // Validate the line on its own so errors carry its location.
        auto one = parse_vertex_set(body, spec);
        for (auto d : one.diagnostics) {
          d.line = ln;
          d.column += static_cast<int>(off);
          diags.push_back(std::move(d));
        }
        auto hash = body.find('#');
        if (hash != std::string::npos) body.erase(hash);
        if (!removed_text.empty()) removed_text += "; ";
        removed_text += body;
        if (!removed_line) removed_line = ln;
      } else if (kw.text == "map" || kw.text == "inverse") {
        MapBranch b = parse_branch(p, spec);
        (kw.text == "map" ? forward : inverse).push_back({std::move(b), ln});
      } else {
        throw Failure{kw.col, "unknown statement '" + kw.text + "'"};
      }
    } catch (const Failure& f) {
      diags.push_back(error_at(ln, f.col, f.message));
    }
  }
  if (!have_decl) {
    if (diags.empty()) diags.push_back(error_at(1, 1, "expected 'certificate <name>' declaration"));
    return result;
  }
  if (removed_text.empty()) diags.push_back(error_at(decl_line, 1, "missing remove set"));
  if (forward.empty()) diags.push_back(error_at(last_line + 1, 1, "missing map"));
  if (inverse.empty()) diags.push_back(error_at(last_line + 1, 1, "missing inverse"));
  if (has_errors(diags)) return result;

  VertexSet removed = *parse_vertex_set(removed_text, spec).value;
  for (const auto& v : removed.include) {
    if (!host.contains(v)) diags.push_back(error_at(removed_line, 1, "removed vertex " + to_dsl(v) + " is not in the host"));
  }
  check_branches(forward, host, nullptr, "map", decl_line, diags);
  check_branches(inverse, host, &removed, "inverse", decl_line, diags);
  if (has_errors(diags)) return result;

  IsoCertificate c{name, host, std::move(removed), {}, {}};
  for (auto& b : forward) c.forward.branches.push_back(std::move(b.branch));
  for (auto& b : inverse) c.inverse.branches.push_back(std::move(b.branch));
  result.value = std::move(c);
  return result;
}

// ---------------------------------------------------------------------------
// Emitters

std::string emit_spec(const GraphOracle& g) {
  const GraphSpec& spec = g.spec();
  std::string out = "graph " + spec.name + "\n";
  for (const auto& s : spec.sorts) {
    out += "sort " + s.name + "(";
    for (std::size_t i = 0; i < s.vars.size(); ++i) out += (i ? ", " : "") + s.vars[i];
    out += ")";
    if (!s.domain.is_true()) out += " where " + to_text(s.domain.to_dnf(), s.vars);
    out += "\n";
  }
  for (const auto& r : spec.rules) {
    out += "edge " + r.left + "(";
    for (std::size_t i = 0; i < r.left_vars.size(); ++i) out += (i ? ", " : "") + r.left_vars[i];
    out += ") ~ " + r.right + "(";
    for (std::size_t i = 0; i < r.right_vars.size(); ++i) out += (i ? ", " : "") + r.right_vars[i];
    out += ")";
    std::vector<std::string> names = r.left_vars;
    names.insert(names.end(), r.right_vars.begin(), r.right_vars.end());
    if (!r.guard.is_true()) out += " when " + to_text(r.guard.to_dnf(), names);
    out += "\n";
  }
  out += "bound ";
  if (spec.bound.scale == 0) {
    out += std::to_string(spec.bound.offset);
  } else {
    out += spec.bound.scale == 1 ? "r" : std::to_string(spec.bound.scale) + "*r";
    if (spec.bound.offset) out += " + " + std::to_string(spec.bound.offset);
  }
  out += "\n";
  for (const auto& r : spec.roots) out += "root " + to_dsl(r) + "\n";
  for (const auto& [s, k] : spec.component_coord) {
    const SortDecl* d = spec.find_sort(s);
    out += "components " + s + " " + d->vars.at(static_cast<std::size_t>(k)) + "\n";
  }
  if (g.complemented()) out += "complement\n";
  for (const auto& set : g.removed()) out += "minus " + set_text(set, spec, "; ") + "\n";
  return out;
}

std::string emit_certificate(const IsoCertificate& c) {
  const GraphSpec& spec = c.host.spec();
  std::string out = "certificate " + c.name + "\n";
  std::string removed = set_text(c.removed, spec, "\nremove ");
  if (!removed.empty()) out += "remove " + removed + "\n";
  for (const auto& b : c.forward.branches) out += branch_text(b, spec, "map");
  for (const auto& b : c.inverse.branches) out += branch_text(b, spec, "inverse");
  return out;
}

}  // namespace scg
