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

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "scg/dsl.hpp"
#include "scg/embedding.hpp"
#include "scg/graph.hpp"
#include "scg/zoo.hpp"

namespace scg::testing {

inline std::string source_path(const std::string& rel) { return std::string(SCG_SOURCE_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline const Zoo& zoo() {
  static const Zoo z = Zoo::load(source_path("data/zoo"));
  return z;
}

inline GraphOracle graph(std::string_view text) {
  auto r = parse_graph_spec(text);
  if (!r.ok()) {
    std::string msg;
    for (const auto& d : r.diagnostics) msg += to_string(d) + "\n";
    throw std::runtime_error("graph does not parse:\n" + msg);
  }
  return *r.value;
}

inline IsoCertificate certificate(std::string_view text, const GraphOracle& host) {
  auto r = parse_certificate_spec(text, host);
  if (!r.ok()) {
    std::string msg;
    for (const auto& d : r.diagnostics) msg += to_string(d) + "\n";
    throw std::runtime_error("certificate does not parse:\n" + msg);
  }
  return *r.value;
}

inline VertexId vertex(std::string_view text) {
  auto r = parse_vertex(text);
  if (!r.ok()) throw std::runtime_error("bad vertex " + std::string(text));
  return *r.value;
}

inline std::vector<VertexId> vertices(std::initializer_list<std::string_view> texts) {
  std::vector<VertexId> out;
  for (auto t : texts) out.push_back(vertex(t));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> labels(const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(label(v));
  return out;
}

/// Window on v(0..n-1) with the given edges, independent of any oracle.
inline FiniteWindow raw_window(int n, const std::vector<std::pair<int, int>>& edges) {
  FiniteWindow w;
  for (int i = 0; i < n; ++i) w.vertices.push_back(VertexId{"v", {i}});
  std::set<std::pair<std::size_t, std::size_t>> es;
  for (auto [a, b] : edges)
    es.insert({static_cast<std::size_t>(std::min(a, b)), static_cast<std::size_t>(std::max(a, b))});
  w.edges.assign(es.begin(), es.end());
  w.provenance.oracle_id = "raw";
  w.provenance.kind = "induced";
  return w;
}

}  // namespace scg::testing
