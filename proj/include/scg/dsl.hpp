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

// Line-oriented text formats for graphs (.sgr) and certificates (.sgc).
//
//   graph example9
//   sort v(n) where n >= 0
//   edge v(x) ~ v(y) when x = 0 and y >= 1
//   bound r + 2
//   root v(0)
//
//   certificate shift
//   remove v(1)
//   map v(n) -> v(n + 1) when n >= 1
//   inverse v(n) -> v(n - 1) when n >= 2
//
// Parsers never throw on bad input; they return located diagnostics.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scg/embedding.hpp"
#include "scg/graph.hpp"

namespace scg {

struct ParseDiagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  int line = 1;
  int column = 1;
  std::string message;
};

/// `3:7: error: unknown sort 'q'`.
std::string to_string(const ParseDiagnostic& d);

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

/// The graph text, including trailing `complement` and `minus` directives.
ParseResult<GraphOracle> parse_graph_spec(std::string_view text);
ParseResult<IsoCertificate> parse_certificate_spec(std::string_view text, const GraphOracle& host);
/// `a(j) when j = 1; z(3); except z(4)` against the sorts of `spec`.
ParseResult<VertexSet> parse_vertex_set(std::string_view text, const GraphSpec& spec);
/// `b(1)` or `b_1`.
ParseResult<VertexId> parse_vertex(std::string_view text);

/// Canonical texts; guards print in disjunctive normal form, sorts in name
/// order, one trailing newline.
std::string emit_spec(const GraphOracle& g);
std::string emit_certificate(const IsoCertificate& c);

}  // namespace scg
