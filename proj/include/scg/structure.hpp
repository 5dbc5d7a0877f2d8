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

// Structural invariants computed relative to a declared family of removable
// subgraphs: covered vertices, foundation, torsion, curl, phi-closures and
// coverings, plus instance checks of the statements relating them.
//
// A vertex is covered at depth d when it lies in f^i(H) for some member
// (H, f) and i < d. The relative foundation of a window is its set of
// uncovered vertices; it equals the true foundation only when the family is
// asserted complete and d is large enough for the window.

#include <optional>
#include <string>
#include <vector>

#include "scg/embedding.hpp"
#include "scg/finite_oracle.hpp"
#include "scg/graph.hpp"

namespace scg {

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Depth sufficient for exact results on a radius-r ball: scale * r + offset.
struct CompletenessRule {
  Int scale = 1;
  Int offset = 0;
  Int depth_for(Int radius) const { return scale * radius + offset; }
};

struct RemovableFamily {
  GraphOracle host;
  std::vector<IsoCertificate> members;
  bool foundation_complete = false;
  CompletenessRule completeness;
  std::string note;
};

/// The family moved across c onto host \ c.removed.
RemovableFamily transported_family(const RemovableFamily& fam, const IsoCertificate& c);

bool covered(const RemovableFamily& fam, int depth, const VertexId& v);
std::vector<VertexId> covered_closure(const RemovableFamily& fam, int depth, const FiniteWindow& w);

struct FoundationReport {
  std::string host;
  Int radius = -1;
  int depth = 0;
  bool exact = false;
  std::vector<VertexId> covered;
  std::vector<VertexId> foundation;
};

FoundationReport relative_foundation(const RemovableFamily& fam, int depth, const FiniteWindow& w);

struct TorsionReport {
  std::string certificate;
  Int radius = -1;
  int depth = 0;
  bool exact = false;
  std::vector<VertexId> torsion;
  /// Same set recomputed from the twisted-vertex definition.
  std::vector<VertexId> twisted;
  bool cross_check_agrees = false;
};

/// Window vertices w = f(u) with u uncovered and w covered.
TorsionReport torsion(const RemovableFamily& fam, const IsoCertificate& c, int depth, const FiniteWindow& w);

enum class CheckStatus { Pass, Fail, Vacuous, HypothesisFailure };
const char* to_string(CheckStatus s);

struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::Vacuous;
  std::string detail;
  std::vector<VertexId> witness;
  bool passed() const { return status != CheckStatus::Fail; }
};

CheckReport foundation_monotonicity_check(const RemovableFamily& fam, const IsoCertificate& c, int depth,
                                          const FiniteWindow& w);
/// Requires removed(cp) within removed(cq) on the window.
CheckReport torsion_monotonicity_check(const RemovableFamily& fam, const IsoCertificate& cp,
                                       const IsoCertificate& cq, int depth, const FiniteWindow& w);
CheckReport torsion_symmetry_check(const RemovableFamily& fam, const IsoCertificate& cp,
                                   const IsoCertificate& cq, int depth, const FiniteWindow& w);
/// `foundation_cert` lives on the foundation graph of fam.host.
CheckReport torsion_foundation_theorem_check(const RemovableFamily& fam, const IsoCertificate& c,
                                             const IsoCertificate& foundation_cert, int depth,
                                             const FiniteWindow& w);

/// A self-contained removable Q containing P, with a family and a
/// certificate for P computed inside the subgraph induced by Q.
struct CurlWitness {
  IsoCertificate q;
  RemovableFamily inner;
  IsoCertificate p_in_q;
};

/// The subgraph induced by a certificate's removed set.
GraphOracle induced_on(const IsoCertificate& c);

std::vector<VertexId> curl(const RemovableFamily& fam, const IsoCertificate& cp,
                           const std::vector<CurlWitness>& witnesses, int depth, const FiniteWindow& w);

/// Union over the certificates and i < depth of f^i(H u Tor(H)).
std::vector<VertexId> phi_closure(const RemovableFamily& fam, const std::vector<IsoCertificate>& certs,
                                  int depth, const FiniteWindow& w);

struct CoveringReport {
  bool passed = false;
  bool exact = false;
  std::vector<VertexId> foundation;
  std::vector<std::vector<VertexId>> closures;
  std::vector<VertexId> uncovered;
};

CoveringReport covering_check(const std::vector<std::vector<IsoCertificate>>& classes,
                              const RemovableFamily& fam, int depth, const FiniteWindow& w);
CoveringReport monomer_check(const std::vector<IsoCertificate>& certs, const RemovableFamily& fam, int depth,
                             const FiniteWindow& w);

/// `fin_foundation_finite` records whether the foundation has finitely many
/// finite-degree vertices (the hypothesis of the statement).
CheckReport prop14_check(const RemovableFamily& fam, int depth, const FiniteWindow& w,
                         bool fin_foundation_finite);

struct CensusBound {
  bool declared = false;
  Int radius = 0;  // all vertices of degree <= k lie within this ball radius
};

struct CensusComparison {
  bool distinguished = false;
  Int degree = -1;
  std::size_t count1 = 0;
  std::size_t count2 = 0;
  CensusProfile profile1;
  CensusProfile profile2;
  /// The subgraphs induced on low-degree vertices are non-isomorphic.
  bool confirmed = false;
};

/// Throws StructureError when a bound is missing or a window is smaller
/// than its declared bound.
CensusComparison census_obstruction(const GraphOracle& g1, const GraphOracle& g2, Int k,
                                    const FiniteWindow& w1, const FiniteWindow& w2, CensusBound b1,
                                    CensusBound b2);

enum class Evidence { SelfContainedComponent, RemovableComponent, SpanningPattern, Inconclusive };
const char* to_string(Evidence e);

struct EvidenceVerdict {
  Evidence kind = Evidence::Inconclusive;
  std::vector<std::vector<Int>> components;  // component keys involved
  std::vector<VertexId> witness;
  std::string detail;
};

EvidenceVerdict classify_components_evidence(const GraphOracle& g, const IsoCertificate& c,
                                             const FiniteWindow& w);

enum class ProbeOutcome { HypothesisHoldsCertificateFound, HypothesisHoldsNoCertificateFound, HypothesisFails };
const char* to_string(ProbeOutcome o);

struct ProbeReport {
  ProbeOutcome outcome = ProbeOutcome::HypothesisFails;
  std::vector<VertexId> hypothesis_witness;  // Q meets P, Tor(P) or Curl(P) here
  std::vector<VertexId> torsion;
  std::vector<VertexId> curl;
  std::string route;  // transport | restriction
  std::optional<IsoCertificate> certificate;
  std::optional<VerificationReport> verification;
};

ProbeReport conjecture2_probe(const RemovableFamily& fam, const IsoCertificate& cp, const IsoCertificate& cq,
                              const std::vector<CurlWitness>& witnesses, int depth, const FiniteWindow& w);

}  // namespace scg
