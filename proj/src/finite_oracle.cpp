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

#include "scg/finite_oracle.hpp"

#include <algorithm>
#include <string>

namespace scg {

namespace {

struct Dense {
  std::size_t n = 0;
  std::vector<std::vector<char>> adj;
  std::vector<std::size_t> deg;

  explicit Dense(const FiniteWindow& w) : n(w.size()), adj(n, std::vector<char>(n, 0)), deg(n, 0) {
    for (const auto& [i, j] : w.edges) {
      adj[i][j] = adj[j][i] = 1;
      ++deg[i];
      ++deg[j];
    }
  }
};

class Search {
 public:
  Search(const FiniteWindow& a, const FiniteWindow& b, bool exact)
      : wa_(a), wb_(b), a_(a), b_(b), exact_(exact), map_(a.size(), kNone), used_(b.size(), 0) {}

  bool pin(const Mapping& pinned) {
    for (const auto& [s, t] : pinned) {
      auto i = wa_.index_of(s);
      auto j = wb_.index_of(t);
      if (!i || !j) return false;
      if (map_[*i] != kNone) {
        if (map_[*i] != *j) return false;
        continue;
      }
      if (used_[*j] || !compatible(*i, *j)) return false;
      map_[*i] = *j;
      used_[*j] = 1;
    }
    return true;
  }

  std::size_t free_count() const { return static_cast<std::size_t>(std::count(map_.begin(), map_.end(), kNone)); }

  std::optional<Mapping> run() {
    // Most constrained first: high degree, then many mapped neighbors.
    for (std::size_t i = 0; i < a_.n; ++i)
      if (map_[i] == kNone) order_.push_back(i);
    std::stable_sort(order_.begin(), order_.end(),
                     [this](std::size_t x, std::size_t y) { return a_.deg[x] > a_.deg[y]; });
    if (!extend(0)) return std::nullopt;
    Mapping m;
    for (std::size_t i = 0; i < a_.n; ++i) m.emplace_back(wa_.vertices[i], wb_.vertices[map_[i]]);
    return m;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool compatible(std::size_t i, std::size_t j) const {
    if (exact_ ? a_.deg[i] != b_.deg[j] : a_.deg[i] > b_.deg[j]) return false;
    for (std::size_t k = 0; k < a_.n; ++k) {
      if (map_[k] == kNone || k == i) continue;
      if (a_.adj[i][k] != b_.adj[j][map_[k]]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    std::size_t i = order_[depth];
    for (std::size_t j = 0; j < b_.n; ++j) {
      if (used_[j] || !compatible(i, j)) continue;
      map_[i] = j;
      used_[j] = 1;
      if (extend(depth + 1)) return true;
      map_[i] = kNone;
      used_[j] = 0;
    }
    return false;
  }

  const FiniteWindow& wa_;
  const FiniteWindow& wb_;
  Dense a_;
  Dense b_;
  bool exact_;
  std::vector<std::size_t> map_;
  std::vector<char> used_;
  std::vector<std::size_t> order_;
};

std::optional<Mapping> search(const FiniteWindow& a, const FiniteWindow& b, const Mapping& pinned,
                              bool exact, std::size_t limit, const char* what) {
  if (exact && (a.size() != b.size() || a.edges.size() != b.edges.size())) return std::nullopt;
  if (a.size() > b.size()) return std::nullopt;
  Search s(a, b, exact);
  if (!s.pin(pinned)) return std::nullopt;
  if (s.free_count() > limit)
    throw OracleLimit(std::string(what) + ": " + std::to_string(s.free_count()) +
                      " free vertices exceed the guard of " + std::to_string(limit));
  return s.run();
}

}  // namespace

bool is_induced_embedding(const FiniteWindow& a, const FiniteWindow& b, const Mapping& m) {
  std::vector<std::size_t> img(a.size(), static_cast<std::size_t>(-1));
  std::vector<char> used(b.size(), 0);
  for (const auto& [s, t] : m) {
    auto i = a.index_of(s);
    auto j = b.index_of(t);
    if (!i || !j || img[*i] != static_cast<std::size_t>(-1) || used[*j]) return false;
    img[*i] = *j;
    used[*j] = 1;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (img[i] == static_cast<std::size_t>(-1)) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = i + 1; k < a.size(); ++k)
      if (a.has_edge(i, k) != b.has_edge(img[i], img[k])) return false;
  return true;
}

std::optional<Mapping> induced_isomorphic(const FiniteWindow& a, const FiniteWindow& b, const Mapping& pinned) {
  return search(a, b, pinned, true, kIsoFreeLimit, "induced_isomorphic");
}

std::optional<Mapping> embed_into(const FiniteWindow& a, const FiniteWindow& b, const Mapping& pinned) {
  return search(a, b, pinned, false, kEmbedFreeLimit, "embed_into");
}

std::size_t CensusProfile::count(Int degree) const {
  auto it = finite.find(degree);
  return it == finite.end() ? 0 : it->second;
}

CensusProfile degree_census(const FiniteWindow& w, const GraphOracle& host, Int k) {
  CensusProfile p;
  p.k = k;
  for (const auto& v : w.vertices) {
    DegreeValue d = host.degree(v);
    if (d.infinite) {
      ++p.infinite;
      continue;
    }
    ++p.finite[d.value];
    if (d.value <= k) p.low_degree[d.value].push_back(v);
  }
  return p;
}

}  // namespace scg
