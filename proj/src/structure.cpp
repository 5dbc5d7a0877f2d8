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

#include "scg/structure.hpp"

#include <algorithm>
#include <set>

namespace scg {

namespace {

std::vector<VertexId> sorted_unique(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<VertexId> intersect(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<VertexId> minus(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_window_of(const GraphOracle& g, const FiniteWindow& w) {
  if (w.provenance.oracle_id != g.id())
    throw StructureError("window of '" + w.provenance.oracle_id + "' does not belong to '" + g.id() + "'");
}

bool exact_for(const RemovableFamily& fam, int depth, const FiniteWindow& w) {
  return fam.foundation_complete && w.provenance.radius >= 0 &&
         depth >= fam.completeness.depth_for(w.provenance.radius);
}

}  // namespace

RemovableFamily transported_family(const RemovableFamily& fam, const IsoCertificate& c) {
  RemovableFamily out{graph_minus(c.host, c.removed), {}, fam.foundation_complete, fam.completeness, fam.note};
  for (const auto& m : fam.members) out.members.push_back(transport(c, m));
  return out;
}

bool covered(const RemovableFamily& fam, int depth, const VertexId& v) {
  for (const auto& m : fam.members)
    for (int i = 0; i < depth; ++i)
      if (in_iterate(m, m.removed, i, v)) return true;
  return false;
}

std::vector<VertexId> covered_closure(const RemovableFamily& fam, int depth, const FiniteWindow& w) {
  require_window_of(fam.host, w);
  std::vector<VertexId> out;
  for (const auto& v : w.vertices)
    if (covered(fam, depth, v)) out.push_back(v);
  return out;
}

FoundationReport relative_foundation(const RemovableFamily& fam, int depth, const FiniteWindow& w) {
  FoundationReport r;
  r.host = fam.host.id();
  r.radius = w.provenance.radius;
  r.depth = depth;
  r.exact = exact_for(fam, depth, w);
  r.covered = covered_closure(fam, depth, w);
  r.foundation = minus(w.vertices, r.covered);
  return r;
}

TorsionReport torsion(const RemovableFamily& fam, const IsoCertificate& c, int depth, const FiniteWindow& w) {
  require_window_of(fam.host, w);
  if (!c.host.same_graph(fam.host)) throw StructureError("certificate '" + c.name + "' is not on the family's host");
  TorsionReport r;
  r.certificate = c.name;
  r.radius = w.provenance.radius;
  r.depth = depth;
  r.exact = exact_for(fam, depth, w);
  // Image formula: Fnd(G \ H) = f(Fnd(G)).
  for (const auto& v : w.vertices) {
    if (c.removed.contains(v) || !covered(fam, depth, v)) continue;
    auto u = c.inverse.apply(v);
    if (!u || !fam.host.contains(*u)) continue;
    if (!covered(fam, depth, *u)) r.torsion.push_back(v);
  }
  // Definition: covered in G and uncovered by the family moved onto G \ H.
  RemovableFamily moved = transported_family(fam, c);
  for (const auto& v : w.vertices) {
    if (c.removed.contains(v) || !covered(fam, depth, v)) continue;
    if (!covered(moved, depth, v)) r.twisted.push_back(v);
  }
  r.cross_check_agrees = r.torsion == r.twisted;
  return r;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Vacuous: return "vacuous";
    case CheckStatus::HypothesisFailure: return "hypothesis-failure";
  }
  return "?";
}

CheckReport foundation_monotonicity_check(const RemovableFamily& fam, const IsoCertificate& c, int depth,
                                          const FiniteWindow& w) {
  CheckReport r{"foundation-monotonicity", CheckStatus::Vacuous, {}, {}};
  FoundationReport f = relative_foundation(fam, depth, w);
  if (f.foundation.empty()) {
    r.detail = "relative foundation is empty on the window";
    return r;
  }
  RemovableFamily moved = transported_family(fam, c);
  for (const auto& v : f.foundation) {
    if (c.removed.contains(v)) {
      r.status = CheckStatus::Fail;
      r.detail = to_dsl(v) + " is in the foundation but also in the removed set";
      r.witness = {v};
      return r;
    }
    if (covered(moved, depth, v)) {
      r.status = CheckStatus::Fail;
      r.detail = to_dsl(v) + " is in the foundation of the host but not of the host minus " + c.name;
      r.witness = {v};
      return r;
    }
  }
  r.status = CheckStatus::Pass;
  r.detail = std::to_string(f.foundation.size()) + " foundation vertices stay in the foundation";
  return r;
}

CheckReport torsion_monotonicity_check(const RemovableFamily& fam, const IsoCertificate& cp,
                                       const IsoCertificate& cq, int depth, const FiniteWindow& w) {
  for (const auto& v : w.vertices) {
    if (cp.removed.contains(v) && !cq.removed.contains(v))
      throw StructureError("precondition violated: " + to_dsl(v) + " is removed by " + cp.name + " but not by " +
                           cq.name);
  }
  CheckReport r{"torsion-monotonicity", CheckStatus::Pass, {}, {}};
  auto tp = torsion(fam, cp, depth, w).torsion;
  auto tq = torsion(fam, cq, depth, w).torsion;
  auto extra = minus(tp, tq);
  if (!extra.empty()) {
    r.status = CheckStatus::Fail;
    r.witness = {extra.front()};
    r.detail = to_dsl(extra.front()) + " is twisted for " + cp.name + " but not for " + cq.name;
    return r;
  }
  r.detail = std::to_string(tp.size()) + " within " + std::to_string(tq.size()) + " torsion vertices";
  return r;
}

CheckReport torsion_symmetry_check(const RemovableFamily& fam, const IsoCertificate& cp,
                                   const IsoCertificate& cq, int depth, const FiniteWindow& w) {
  CheckReport r{"torsion-symmetry", CheckStatus::Vacuous, {}, {}};
  auto tp = torsion(fam, cp, depth, w).torsion;
  auto q_hit = intersect(members_in(cq.removed, w), tp);
  if (q_hit.empty()) {
    r.detail = cq.name + " does not meet the torsion of " + cp.name;
    return r;
  }
  auto tq = torsion(fam, cq, depth, w).torsion;
  auto p_hit = intersect(members_in(cp.removed, w), tq);
  if (p_hit.empty()) {
    r.status = CheckStatus::Fail;
    r.witness = q_hit;
    r.detail = cq.name + " meets the torsion of " + cp.name + " but not conversely";
    return r;
  }
  r.status = CheckStatus::Pass;
  r.witness = q_hit;
  r.witness.insert(r.witness.end(), p_hit.begin(), p_hit.end());
  r.detail = to_dsl(q_hit.front()) + " twisted for " + cp.name + ", " + to_dsl(p_hit.front()) + " twisted for " +
             cq.name;
  return r;
}

CheckReport torsion_foundation_theorem_check(const RemovableFamily& fam, const IsoCertificate& c,
                                             const IsoCertificate& foundation_cert, int depth,
                                             const FiniteWindow& w) {
  CheckReport r{"torsion-foundation", CheckStatus::Vacuous, {}, {}};
  auto tor = torsion(fam, c, depth, w).torsion;
  if (tor.empty()) {
    r.detail = "torsion of " + c.name + " is empty";
    return r;
  }
  FiniteWindow fw = restrict_window(foundation_cert.host, w);
  VerificationReport v = verify_on_window(foundation_cert, fw);
  if (!v.passed) {
    r.status = CheckStatus::Fail;
    r.witness = v.counterexample->vertices;
    r.detail = "foundation certificate fails: " + v.counterexample->detail;
    return r;
  }
  auto removed = members_in(foundation_cert.removed, fw);
  FiniteWindow a = induced_window(foundation_cert.host, removed);
  FiniteWindow b = induced_window(fam.host, tor);
  std::optional<Mapping> m;
  try {
    m = induced_isomorphic(a, b);
  } catch (const OracleLimit& e) {
    r.status = CheckStatus::Fail;
    r.detail = e.what();
    return r;
  }
  if (!m) {
    r.status = CheckStatus::Fail;
    r.detail = "removed set of " + foundation_cert.name + " is not isomorphic to the torsion on the window";
    return r;
  }
  r.status = CheckStatus::Pass;
  for (const auto& [x, y] : *m) {
    r.witness.push_back(x);
    r.witness.push_back(y);
  }
  r.detail = foundation_cert.name + " verifies on the foundation and its removed set matches the torsion";
  return r;
}

GraphOracle induced_on(const IsoCertificate& c) { return graph_minus(c.host, complement_in(c.host, c.removed)); }

std::vector<VertexId> curl(const RemovableFamily& fam, const IsoCertificate& cp,
                           const std::vector<CurlWitness>& witnesses, int depth, const FiniteWindow& w) {
  require_window_of(fam.host, w);
  std::vector<VertexId> out;
  for (const auto& wit : witnesses) {
    for (const auto& v : w.vertices) {
      if (cp.removed.contains(v) && !wit.q.removed.contains(v))
        throw StructureError("curl witness " + wit.q.name + " does not contain " + to_dsl(v));
    }
    FiniteWindow qw = restrict_window(wit.inner.host, w);
    auto t = torsion(wit.inner, wit.p_in_q, depth, qw).torsion;
    out.insert(out.end(), t.begin(), t.end());
  }
  return sorted_unique(std::move(out));
}

std::vector<VertexId> phi_closure(const RemovableFamily& fam, const std::vector<IsoCertificate>& certs,
                                  int depth, const FiniteWindow& w) {
  require_window_of(fam.host, w);
  if (certs.empty() || depth <= 0) return {};
  auto h = members_in(certs.front().removed, w);
  for (const auto& c : certs) {
    if (members_in(c.removed, w) != h)
      throw StructureError("certificates " + certs.front().name + " and " + c.name + " remove different sets");
  }
  std::vector<VertexId> out;
  for (const auto& c : certs) {
    VertexSet seed = c.removed.united(VertexSet::of(torsion(fam, c, depth, w).torsion));
    for (const auto& v : w.vertices) {
      for (int i = 0; i < depth; ++i) {
        if (in_iterate(c, seed, i, v)) {
          out.push_back(v);
          break;
        }
      }
    }
  }
  return sorted_unique(std::move(out));
}

CoveringReport covering_check(const std::vector<std::vector<IsoCertificate>>& classes,
                              const RemovableFamily& fam, int depth, const FiniteWindow& w) {
  CoveringReport r;
  FoundationReport f = relative_foundation(fam, depth, w);
  r.exact = f.exact;
  r.foundation = f.foundation;
  std::vector<VertexId> all = f.foundation;
  for (const auto& cls : classes) {
    r.closures.push_back(phi_closure(fam, cls, depth, w));
    all.insert(all.end(), r.closures.back().begin(), r.closures.back().end());
  }
  r.uncovered = minus(w.vertices, sorted_unique(std::move(all)));
  r.passed = r.uncovered.empty();
  return r;
}

CoveringReport monomer_check(const std::vector<IsoCertificate>& certs, const RemovableFamily& fam, int depth,
                             const FiniteWindow& w) {
  return covering_check({certs}, fam, depth, w);
}

CheckReport prop14_check(const RemovableFamily& fam, int depth, const FiniteWindow& w, bool fin_foundation_finite) {
  CheckReport r{"prop14", CheckStatus::Vacuous, {}, {}};
  FoundationReport f = relative_foundation(fam, depth, w);
  std::size_t finite = 0;
  for (const auto& v : f.foundation) {
    auto nb = fam.host.neighbors_all(v);
    if (!nb) continue;
    ++finite;
    for (const auto& u : *nb) {
      if (!covered(fam, depth, u)) continue;
      r.witness = {v, u};
      if (fin_foundation_finite) {
        r.status = CheckStatus::Fail;
        r.detail = "finite-degree foundation vertex " + to_dsl(v) + " has neighbor " + to_dsl(u) +
                   " outside the foundation";
      } else {
        r.status = CheckStatus::HypothesisFailure;
        r.detail = "hypothesis fails and so does the conclusion: " + to_dsl(v) + " has neighbor " + to_dsl(u) +
                   " outside the foundation";
      }
      return r;
    }
  }
  if (finite == 0) {
    r.detail = "no finite-degree foundation vertex in the window";
    return r;
  }
  r.status = CheckStatus::Pass;
  r.detail = std::to_string(finite) + " finite-degree foundation vertices keep their neighbors in the foundation";
  return r;
}

CensusComparison census_obstruction(const GraphOracle& g1, const GraphOracle& g2, Int k, const FiniteWindow& w1,
                                    const FiniteWindow& w2, CensusBound b1, CensusBound b2) {
  if (!b1.declared || !b2.declared) throw StructureError("census validity bounds are not declared");
  require_window_of(g1, w1);
  require_window_of(g2, w2);
  if (w1.provenance.radius < b1.radius || w2.provenance.radius < b2.radius)
    throw StructureError("census windows are smaller than the declared validity bounds");
  CensusComparison r;
  r.profile1 = degree_census(w1, g1, k);
  r.profile2 = degree_census(w2, g2, k);
  for (Int d = 0; d <= k; ++d) {
    std::size_t c1 = r.profile1.count(d), c2 = r.profile2.count(d);
    if (c1 != c2) {
      r.distinguished = true;
      r.degree = d;
      r.count1 = c1;
      r.count2 = c2;
      break;
    }
  }
  if (r.distinguished) {
    std::vector<VertexId> low1, low2;
    for (const auto& [d, vs] : r.profile1.low_degree) low1.insert(low1.end(), vs.begin(), vs.end());
    for (const auto& [d, vs] : r.profile2.low_degree) low2.insert(low2.end(), vs.begin(), vs.end());
    try {
      r.confirmed = !induced_isomorphic(induced_window(g1, low1), induced_window(g2, low2)).has_value();
    } catch (const OracleLimit&) {
      r.confirmed = false;
    }
  }
  return r;
}

const char* to_string(Evidence e) {
  switch (e) {
    case Evidence::SelfContainedComponent: return "SelfContainedComponent";
    case Evidence::RemovableComponent: return "RemovableComponent";
    case Evidence::SpanningPattern: return "SpanningPattern";
    case Evidence::Inconclusive: return "Inconclusive";
  }
  return "?";
}

EvidenceVerdict classify_components_evidence(const GraphOracle& g, const IsoCertificate& c, const FiniteWindow& w) {
  if (!is_disjoint_union(g)) throw StructureError("graph '" + g.spec().name + "' is not a disjoint union");
  require_window_of(g, w);
  EvidenceVerdict r;
  std::set<std::vector<Int>> hit, image_hit;
  std::vector<VertexId> removed;
  for (const auto& v : w.vertices) {
    if (!c.removed.contains(v)) continue;
    removed.push_back(v);
    hit.insert(component_key(g, v));
    if (auto fv = c.forward.apply(v)) image_hit.insert(component_key(g, *fv));
  }
  if (hit.size() == 1) {
    const auto& k = *hit.begin();
    bool stays = true, all_removed = true;
    std::optional<VertexId> leaver;
    for (const auto& v : w.vertices) {
      if (component_key(g, v) != k) continue;
      if (!c.removed.contains(v)) all_removed = false;
      auto fv = c.forward.apply(v);
      if (!fv || component_key(g, *fv) != k) {
        stays = false;
        if (!leaver) leaver = v;
      }
    }
    r.components = {k};
    if (stays) {
      r.kind = Evidence::SelfContainedComponent;
      r.witness = removed;
      r.detail = "the certificate embeds one component into itself minus the removed set";
      return r;
    }
    if (all_removed) {
      r.kind = Evidence::RemovableComponent;
      r.witness = {*leaver, *c.forward.apply(*leaver)};
      r.components.push_back(component_key(g, r.witness.back()));
      r.detail = "the removed set is a whole component and the map moves it to another";
      return r;
    }
  }
  if (hit.size() >= 3 && image_hit.size() >= 3) {
    r.kind = Evidence::SpanningPattern;
    r.components.assign(hit.begin(), hit.end());
    r.witness = removed;
    r.detail = "removed and image sets meet " + std::to_string(hit.size()) + " and " +
               std::to_string(image_hit.size()) + " components";
    return r;
  }
  r.components.assign(hit.begin(), hit.end());
  r.detail = "no pattern recognized on the window";
  return r;
}

const char* to_string(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::HypothesisHoldsCertificateFound: return "HypothesisHolds+CertificateFound";
    case ProbeOutcome::HypothesisHoldsNoCertificateFound: return "HypothesisHolds+NoCertificateFound";
    case ProbeOutcome::HypothesisFails: return "HypothesisFails";
  }
  return "?";
}

namespace {

bool fixes_setwise(const IsoCertificate& c, const VertexSet& s, const FiniteWindow& w) {
  for (const auto& v : w.vertices) {
    if (!s.contains(v)) continue;
    auto fv = c.forward.apply(v);
    if (!fv || !s.contains(*fv)) return false;
    auto iv = c.inverse.apply(v);
    if (!iv || !s.contains(*iv)) return false;
  }
  return true;
}

}  // namespace

ProbeReport conjecture2_probe(const RemovableFamily& fam, const IsoCertificate& cp, const IsoCertificate& cq,
                              const std::vector<CurlWitness>& witnesses, int depth, const FiniteWindow& w) {
  ProbeReport r;
  r.torsion = torsion(fam, cp, depth, w).torsion;
  r.curl = curl(fam, cp, witnesses, depth, w);
  auto q = members_in(cq.removed, w);
  std::vector<VertexId> blocked = members_in(cp.removed, w);
  blocked.insert(blocked.end(), r.torsion.begin(), r.torsion.end());
  blocked.insert(blocked.end(), r.curl.begin(), r.curl.end());
  r.hypothesis_witness = intersect(q, sorted_unique(std::move(blocked)));
  if (!r.hypothesis_witness.empty()) {
    r.outcome = ProbeOutcome::HypothesisFails;
    return r;
  }
  std::optional<IsoCertificate> cand;
  if (fixes_setwise(cp, cq.removed, w)) {
    cand = transport(cp, cq);
    r.route = "transport";
  } else if (fixes_setwise(cq, cp.removed, w)) {
    cand = restrict_certificate(cq, cp.removed);
    r.route = "restriction";
  }
  if (cand) {
    VerificationReport v = verify_on_window(*cand, restrict_window(cand->host, w));
    r.verification = v;
    if (v.passed) {
      r.certificate = std::move(cand);
      r.outcome = ProbeOutcome::HypothesisHoldsCertificateFound;
      return r;
    }
  }
  r.outcome = ProbeOutcome::HypothesisHoldsNoCertificateFound;
  return r;
}

}  // namespace scg
