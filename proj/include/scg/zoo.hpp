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

// Registry of the shipped example graphs. Each entry is a directory of
// fixtures named after the entry:
//
//   <name>.sgr            the graph
//   <name>.<cert>.sgc     certificates
//   <name>.<tmpl>.sgc.in  cover templates, `$K` replaced by an index value
//   <name>.json           families, hosts, derived certificates and ground
//                         truths, each with a provenance note
//
// Loading throws ZooError carrying `file:line:column` diagnostics.

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scg/embedding.hpp"
#include "scg/graph.hpp"
#include "scg/ray_builder.hpp"
#include "scg/structure.hpp"

namespace scg {

class ZooError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WitnessRef {
  std::string q;
  std::string inner;  // family on the subgraph induced by q
  std::string p_in_q;
};

struct FoundationTruth {
  std::string family;
  VertexSet set;
  std::string provenance;
};

struct TorsionTruth {
  std::string family;
  std::string certificate;
  VertexSet set;
  std::string provenance;
};

struct CurlTruth {
  std::string family;
  std::string certificate;
  std::vector<WitnessRef> witnesses;
  VertexSet contains;
  std::string provenance;
};

/// Nested (torsion monotonicity) or crossed (torsion symmetry) pair.
struct PairCase {
  std::string family;
  std::string p;
  std::string q;
  std::string expect;  // pass | vacuous
  std::string provenance;
};

struct FoundationTheoremCase {
  std::string family;
  std::string certificate;
  std::string foundation_certificate;
  std::string expect;
  std::string provenance;
};

struct PhiCase {
  std::string family;
  std::vector<std::string> certificates;
  VertexSet contains;
  std::string provenance;
};

struct CoveringCase {
  std::string family;
  std::vector<std::vector<std::string>> classes;
  bool expect = true;
  std::optional<VertexSet> uncovered;  // some uncovered vertex lies here
  std::string provenance;
};

struct ProbeCase {
  std::string family;
  std::string p;
  std::string q;
  std::vector<WitnessRef> witnesses;
  std::string expect;
  std::string provenance;
};

struct Prop14Case {
  std::string family;
  bool fin_foundation_finite = false;
  std::string expect;
  std::string provenance;
};

struct CensusComparisonCase {
  std::vector<std::string> minus;  // certificates whose removed sets are deleted
  Int bound = 0;
  std::size_t expect1 = 0;
  std::size_t expect2 = 0;
  std::string provenance;
};

struct CensusInfo {
  Int k = 1;
  Int bound = 0;
  Int radius = 9;
  std::vector<CensusComparisonCase> comparisons;
};

struct CoverTemplate {
  std::string name;
  std::string text;
  int coordinate = 0;
};

struct ZooEntry {
  ZooEntry(std::string entry_name, std::filesystem::path entry_dir, GraphOracle g)
      : name(std::move(entry_name)), dir(std::move(entry_dir)), graph(std::move(g)) {}

  std::string name;
  std::string provenance;
  std::filesystem::path dir;
  GraphOracle graph;
  /// Hosts by key; "" is the graph itself.
  std::map<std::string, GraphOracle> hosts;
  std::map<std::string, std::vector<VertexId>> host_roots;
  /// Shipped then derived, in sidecar order.
  std::vector<std::string> certificate_order;
  std::map<std::string, IsoCertificate> certificates;
  std::map<std::string, std::string> certificate_host;
  std::map<std::string, std::string> derived_kind;  // complement | product | stack
  std::vector<std::string> family_order;
  std::map<std::string, RemovableFamily> families;
  std::map<std::string, std::string> family_host;

  std::vector<FoundationTruth> foundation;
  std::vector<TorsionTruth> torsion;
  std::vector<CurlTruth> curl;
  std::vector<PairCase> nested;
  std::vector<PairCase> symmetry;
  std::vector<FoundationTheoremCase> torsion_foundation;
  std::vector<PhiCase> phi;
  std::vector<CoveringCase> coverings;
  std::vector<CoveringCase> monomers;
  std::vector<ProbeCase> probes;
  std::optional<Prop14Case> prop14;
  std::optional<CensusInfo> census;
  std::optional<CoverTemplate> cover;
  std::optional<VertexId> ray_start;

  const IsoCertificate& certificate(const std::string& name) const;
  const RemovableFamily& family(const std::string& name) const;
  const GraphOracle& host(const std::string& key) const;
  const std::vector<VertexId>& roots(const std::string& host_key) const;
  /// Ball of the given host around its roots.
  FiniteWindow window(const std::string& host_key, Int radius) const;
  FiniteWindow family_window(const std::string& family, Int radius) const;
  int family_depth(const std::string& family, Int radius) const;
  std::vector<CurlWitness> witnesses(const std::vector<WitnessRef>& refs) const;
  /// Vertex set text against the spec of a host.
  VertexSet vertex_set(const std::string& text, const std::string& host_key = "") const;
  CoverOracle cover_oracle() const;
};

class Zoo {
 public:
  static Zoo load(const std::filesystem::path& dir);

  const ZooEntry& get(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::vector<std::string> list() const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::map<std::string, ZooEntry, std::less<>> entries_;
};

/// SCG_ZOO_DIR when set, else the directory compiled into the library.
std::filesystem::path default_zoo_dir();

struct ZooCheck {
  std::string entry;
  std::string check;
  bool passed = false;
  std::string detail;
};

struct ZooValidation {
  std::vector<ZooCheck> checks;
  bool passed() const;
};

/// Radii used by validation.
inline constexpr Int kCertificateRadius = 6;
inline constexpr Int kTruthRadius = 8;

ZooValidation validate_entry(const ZooEntry& e);
ZooValidation validate_all(const Zoo& zoo);
/// Loads and validates; a load failure becomes a failed `load` check.
ZooValidation validate_dir(const std::filesystem::path& dir);

}  // namespace scg
