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

#include "scg/report.hpp"

#include <algorithm>

namespace scg {

Json labels_json(const std::vector<VertexId>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(label(v));
  return a;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["certificate"] = r.certificate;
  j["host"] = r.host;
  j["window"] = r.window_kind;
  if (r.window_kind == "box") {
    j["box"] = {r.box_lo, r.box_hi};
  } else {
    j["radius"] = r.radius;
    j["certified_radius"] = r.certified_radius;
  }
  j["displacement"] = r.displacement;
  j["vertices_checked"] = r.vertices_checked;
  j["pairs_checked"] = r.pairs_checked;
  j["removed_in_window"] = r.removed_in_window;
  j["passed"] = r.passed;
  if (r.counterexample) {
    j["counterexample"] = {{"check", r.counterexample->check},
                           {"vertices", labels_json(r.counterexample->vertices)},
                           {"detail", r.counterexample->detail}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json to_json(const FoundationReport& r) {
  Json j;
  j["host"] = r.host;
  j["radius"] = r.radius;
  j["depth"] = r.depth;
  j["exact"] = r.exact;
  j["foundation"] = labels_json(r.foundation);
  j["covered"] = labels_json(r.covered);
  return j;
}

Json to_json(const TorsionReport& r) {
  Json j;
  j["certificate"] = r.certificate;
  j["radius"] = r.radius;
  j["depth"] = r.depth;
  j["exact"] = r.exact;
  j["torsion"] = labels_json(r.torsion);
  j["twisted"] = labels_json(r.twisted);
  j["cross_check_agrees"] = r.cross_check_agrees;
  return j;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["detail"] = r.detail;
  j["witness"] = labels_json(r.witness);
  return j;
}

Json to_json(const CoveringReport& r) {
  Json j;
  j["passed"] = r.passed;
  j["exact"] = r.exact;
  j["foundation"] = labels_json(r.foundation);
  Json closures = Json::array();
  for (const auto& c : r.closures) closures.push_back(labels_json(c));
  j["closures"] = closures;
  j["uncovered"] = labels_json(r.uncovered);
  return j;
}

Json to_json(const CensusProfile& p) {
  Json j;
  j["k"] = p.k;
  Json fin = Json::object();
  for (const auto& [d, n] : p.finite) fin[std::to_string(d)] = n;
  j["finite"] = fin;
  j["infinite"] = p.infinite;
  Json low = Json::object();
  for (const auto& [d, vs] : p.low_degree) low[std::to_string(d)] = labels_json(vs);
  j["low_degree"] = low;
  return j;
}

Json to_json(const CensusComparison& r) {
  Json j;
  j["verdict"] = r.distinguished ? "Distinguished" : "Indistinguishable";
  if (r.distinguished) {
    j["degree"] = r.degree;
    j["counts"] = {r.count1, r.count2};
    j["confirmed"] = r.confirmed;
  }
  j["profile1"] = to_json(r.profile1);
  j["profile2"] = to_json(r.profile2);
  return j;
}

Json to_json(const EvidenceVerdict& r) {
  Json j;
  j["verdict"] = to_string(r.kind);
  j["components"] = r.components;
  j["witness"] = labels_json(r.witness);
  j["detail"] = r.detail;
  return j;
}

Json to_json(const ProbeReport& r) {
  Json j;
  j["outcome"] = to_string(r.outcome);
  j["hypothesis_witness"] = labels_json(r.hypothesis_witness);
  j["torsion"] = labels_json(r.torsion);
  j["curl"] = labels_json(r.curl);
  j["route"] = r.route.empty() ? Json(nullptr) : Json(r.route);
  j["certificate"] = r.certificate ? Json(r.certificate->name) : Json(nullptr);
  j["verification"] = r.verification ? to_json(*r.verification) : Json(nullptr);
  return j;
}

Json to_json(const RayPrefix& r) {
  Json j;
  j["length"] = r.vertices.size();
  j["vertices"] = labels_json(r.vertices);
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json x;
    x["cover"] = s.cover;
    x["query"] = label(s.query);
    x["segment"] = labels_json(s.segment);
    x["crossing"] = {label(s.crossing.first), label(s.crossing.second)};
    x["search_bound"] = s.search_bound;
    steps.push_back(std::move(x));
  }
  j["steps"] = steps;
  Json chords = Json::array();
  for (const auto& [a, b] : r.chords) chords.push_back({label(a), label(b)});
  j["chords"] = chords;
  return j;
}

Json to_json(const ZooValidation& r) {
  Json j;
  j["passed"] = r.passed();
  j["total"] = r.checks.size();
  j["failed"] = std::count_if(r.checks.begin(), r.checks.end(), [](const ZooCheck& c) { return !c.passed; });
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"entry", c.entry}, {"check", c.check}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_table(const Json& j) {
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : j.items()) {
    out += k + std::string(width - k.size() + 2, ' ');
    if (v.is_string()) {
      out += v.get<std::string>();
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string(); })) {
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].get<std::string>();
    } else {
      out += v.dump();
    }
    out += "\n";
  }
  return out;
}

}  // namespace scg
