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

// Self-embedding certificates: piecewise-affine maps f : G -> G \ H with an
// explicit inverse, their verification on finite windows, and the algebra
// that builds new certificates from old ones.

#include <optional>
#include <string>
#include <vector>

#include "scg/graph.hpp"

namespace scg {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// source(vars) -> target(image) when guard. Guard and image are over the
/// source index variables 0..arity-1.
struct MapBranch {
  std::string source;
  std::vector<std::string> vars;
  Formula guard;
  std::string target;
  std::vector<LinExpr> image;
};

class PiecewiseMap {
 public:
  std::vector<MapBranch> branches;

  /// First branch whose guard holds at v, or nullptr.
  const MapBranch* branch_for(const VertexId& v) const;
  std::optional<VertexId> apply(const VertexId& v) const;
  /// Largest |image_k - x_k| coefficient mass over branches: an index-space
  /// displacement bound per unit of |x|, plus the largest constant shift.
  Int displacement_bound() const;

  bool operator==(const PiecewiseMap& o) const;
};

/// outer o inner. Branches whose combined guard is unsatisfiable (inside the
/// source sort's domain when `spec` is given) are dropped.
PiecewiseMap compose(const PiecewiseMap& outer, const PiecewiseMap& inner,
                     const GraphSpec* spec = nullptr);
PiecewiseMap identity_map(const GraphSpec& spec);

struct IsoCertificate {
  std::string name;
  GraphOracle host;
  VertexSet removed;
  PiecewiseMap forward;
  PiecewiseMap inverse;
};

/// Symbolic image f(S) for S on c.host: y with y outside c.removed and
/// c.inverse(y) in S.
VertexSet image_set(const IsoCertificate& c, const VertexSet& s);
/// Pointwise membership of w in f^i(s), by inverse iteration.
bool in_iterate(const IsoCertificate& c, const VertexSet& s, int i, const VertexId& w);

struct Counterexample {
  std::string check;  // injective | image | adjacency | inverse-forward | forward-inverse | total
  std::vector<VertexId> vertices;
  std::string detail;
};

struct VerificationReport {
  std::string certificate;
  std::string host;
  std::string window_kind;
  Int radius = 0;
  Int box_lo = 0;
  Int box_hi = 0;
  /// Radius up to which the map is certified; every vertex and pair of the
  /// window is checked directly against the oracle, so this equals the
  /// window radius for ball windows.
  Int certified_radius = 0;
  Int displacement = 0;
  std::size_t vertices_checked = 0;
  std::size_t pairs_checked = 0;
  std::size_t removed_in_window = 0;
  bool passed = false;
  std::optional<Counterexample> counterexample;
};

VerificationReport verify_on_window(const IsoCertificate& c, const FiniteWindow& w);
VerificationReport verify_certificate(const IsoCertificate& c, Int radius,
                                      const std::vector<VertexId>& roots);
/// Around the host's declared roots.
VerificationReport verify_certificate(const IsoCertificate& c, Int radius);
/// On an index box; used for complements, whose balls are tiny and dense.
VerificationReport verify_on_box(const IsoCertificate& c, Int lo, Int hi);

/// Certificate on G for P u Q from cP on G and cQ on G \ P.
IsoCertificate compose_certificates(const IsoCertificate& cp, const IsoCertificate& cq);
/// Moves `target` across `c`: certificate on G \ c.removed removing f(target.removed).
IsoCertificate transport(const IsoCertificate& c, const IsoCertificate& target);
/// H, f(H), ..., f^(k-1)(H). Throws CertificateError when the sets meet on
/// the window or the certificate fails there.
std::vector<VertexSet> iterate_copies(const IsoCertificate& c, int k, const FiniteWindow& w);
IsoCertificate complement_transfer(const IsoCertificate& c);
IsoCertificate product_lift(const IsoCertificate& c, const GraphOracle& h);
/// The same maps viewed on host \ p; valid when c's map fixes p setwise.
IsoCertificate restrict_certificate(const IsoCertificate& c, const VertexSet& p);

struct IsoUnionResult {
  std::optional<IsoCertificate> certificate;
  std::optional<VertexId> moved;  // first vertex of Q moved out of Q by cP
};

/// Union certificate for P u Q when cP fixes Q setwise on the window.
/// Throws CertificateError when the removed sets meet on the window.
IsoUnionResult iso_union(const IsoCertificate& cp, const IsoCertificate& cq, const FiniteWindow& w);

/// Vertices of the window lying in `s`.
std::vector<VertexId> members_in(const VertexSet& s, const FiniteWindow& w);

}  // namespace scg
