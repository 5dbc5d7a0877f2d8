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

#include "scg/zoo.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "scg/dsl.hpp"

#ifndef SCG_DEFAULT_ZOO_DIR
#define SCG_DEFAULT_ZOO_DIR "data/zoo"
#endif

namespace scg {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ZooError(p.string() + ": cannot read file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <typename T>
T take(ParseResult<T> r, const fs::path& file) {
  if (r.ok()) return std::move(*r.value);
  std::string msg;
  for (const auto& d : r.diagnostics) {
    if (d.severity != ParseDiagnostic::Severity::Error) continue;
    if (!msg.empty()) msg += "\n";
    msg += file.string() + ":" + to_string(d);
  }
  throw ZooError(msg.empty() ? file.string() + ": parse failed" : msg);
}

std::string str(const json& j, const char* key, const std::string& fallback = "") {
  return j.contains(key) ? j.at(key).get<std::string>() : fallback;
}

std::vector<std::string> strs(const json& j, const char* key) {
  return j.contains(key) ? j.at(key).get<std::vector<std::string>>() : std::vector<std::string>{};
}

std::vector<WitnessRef> witness_refs(const json& j) {
  std::vector<WitnessRef> out;
  if (!j.contains("witnesses")) return out;
  for (const auto& w : j.at("witnesses"))
    out.push_back({w.at("q").get<std::string>(), w.at("inner").get<std::string>(), w.at("p_in_q").get<std::string>()});
  return out;
}

std::string substitute_k(std::string text, Int k) {
  const std::string value = std::to_string(k);
  for (std::size_t p = text.find("$K"); p != std::string::npos; p = text.find("$K", p + value.size()))
    text.replace(p, 2, value);
  return text;
}

ZooEntry load_entry(const fs::path& dir, const std::string& name, const std::map<std::string, GraphOracle>& graphs) {
  const fs::path sidecar = dir / (name + ".json");
  json j;
  try {
    j = json::parse(read_file(sidecar));
  } catch (const json::parse_error& e) {
    throw ZooError(sidecar.string() + ": " + e.what());
  }

  ZooEntry e(name, dir, graphs.at(name));
  try {
    e.provenance = str(j, "provenance");
    e.hosts.emplace("", e.graph);
    auto cert_path = [&](const std::string& c) { return dir / (name + "." + c + ".sgc"); };
    auto load_cert = [&](const std::string& c, const std::string& host_key) {
      if (e.certificates.count(c)) return;
      const fs::path p = cert_path(c);
      IsoCertificate cert = take(parse_certificate_spec(read_file(p), e.host(host_key)), p);
      if (cert.name != c) throw ZooError(p.string() + ": certificate is named '" + cert.name + "', expected '" + c + "'");
      e.certificates.emplace(c, std::move(cert));
      e.certificate_host.emplace(c, host_key);
      e.certificate_order.push_back(c);
    };

    if (j.contains("hosts")) {
      for (const auto& [key, h] : j.at("hosts").items()) {
        GraphOracle g = e.graph;
        if (h.contains("induced_by")) {
          std::string c = h.at("induced_by").get<std::string>();
          load_cert(c, "");
          g = induced_on(e.certificates.at(c));
        } else {
          g = e.host(str(h, "base"));
        }
        if (h.contains("minus")) g = graph_minus(g, e.vertex_set(h.at("minus").get<std::string>(), str(h, "base")));
        std::vector<VertexId> roots;
        for (const auto& r : strs(h, "roots")) roots.push_back(take(parse_vertex(r), sidecar));
        e.hosts.emplace(key, g);
        if (!roots.empty()) e.host_roots.emplace(key, std::move(roots));
      }
    }
    for (const auto& [key, g] : e.hosts) {
      if (e.host_roots.count(key)) continue;
      std::vector<VertexId> roots;
      for (const auto& r : g.spec().roots)
        if (g.contains(r)) roots.push_back(r);
      e.host_roots.emplace(key, std::move(roots));
    }

    if (j.contains("certificates"))
      for (const auto& c : j.at("certificates")) load_cert(c.at("name").get<std::string>(), str(c, "host"));

    if (j.contains("derived")) {
      for (const auto& d : j.at("derived")) {
        std::string dname = d.at("name").get<std::string>();
        std::string kind = d.at("kind").get<std::string>();
        auto of = strs(d, "of");
        if (of.empty()) throw ZooError(sidecar.string() + ": derived '" + dname + "' lists no certificates");
        IsoCertificate c = e.certificate(of.front());
        if (kind == "complement") {
          c = complement_transfer(c);
        } else if (kind == "product") {
          auto with = str(d, "with");
          auto it = graphs.find(with);
          if (it == graphs.end()) throw ZooError(sidecar.string() + ": unknown graph '" + with + "'");
          c = product_lift(c, it->second);
        } else if (kind == "stack") {
          if (of.size() != 2) throw ZooError(sidecar.string() + ": stack needs two certificates");
          c = compose_certificates(c, transport(c, e.certificate(of[1])));
        } else {
          throw ZooError(sidecar.string() + ": unknown derived kind '" + kind + "'");
        }
        c.name = dname;
        std::string key = "#" + dname;
        e.hosts.emplace(key, c.host);
        std::vector<VertexId> roots;
        for (const auto& r : c.host.spec().roots)
          if (c.host.contains(r)) roots.push_back(r);
        e.host_roots.emplace(key, std::move(roots));
        e.certificates.emplace(dname, std::move(c));
        e.certificate_host.emplace(dname, key);
        e.derived_kind.emplace(dname, kind);
        e.certificate_order.push_back(dname);
      }
    }

    if (j.contains("families")) {
      for (const auto& f : j.at("families")) {
        std::string fname = f.at("name").get<std::string>();
        std::string key = str(f, "host");
        RemovableFamily fam{e.host(key), {}, f.value("foundation_complete", false), {}, str(f, "note")};
        if (f.contains("completeness")) {
          fam.completeness.scale = f.at("completeness").value("scale", Int{1});
          fam.completeness.offset = f.at("completeness").value("offset", Int{0});
        }
        for (const auto& m : strs(f, "members")) {
          if (e.certificate_host.at(e.certificate(m).name) != key)
            throw ZooError(sidecar.string() + ": member '" + m + "' of family '" + fname + "' is on another host");
          fam.members.push_back(e.certificate(m));
        }
        e.families.emplace(fname, std::move(fam));
        e.family_host.emplace(fname, key);
        e.family_order.push_back(fname);
      }
    }

    auto fam_set = [&](const json& x, const char* key) {
      std::string fam = str(x, "family", "main");
      return e.vertex_set(str(x, key), e.family_host.count(fam) ? e.family_host.at(fam) : "");
    };
    for (const auto& x : j.value("foundation", json::array()))
      e.foundation.push_back({str(x, "family", "main"), fam_set(x, "set"), str(x, "provenance")});
    for (const auto& x : j.value("torsion", json::array()))
      e.torsion.push_back({str(x, "family", "main"), str(x, "certificate"), fam_set(x, "set"), str(x, "provenance")});
    for (const auto& x : j.value("curl", json::array()))
      e.curl.push_back({str(x, "family", "main"), str(x, "certificate"), witness_refs(x), fam_set(x, "contains"),
                        str(x, "provenance")});
    for (const auto& x : j.value("nested", json::array()))
      e.nested.push_back({str(x, "family", "main"), str(x, "p"), str(x, "q"), str(x, "expect", "pass"),
                          str(x, "provenance")});
    for (const auto& x : j.value("symmetry", json::array()))
      e.symmetry.push_back({str(x, "family", "main"), str(x, "p"), str(x, "q"), str(x, "expect", "pass"),
                            str(x, "provenance")});
    for (const auto& x : j.value("torsion_foundation", json::array()))
      e.torsion_foundation.push_back({str(x, "family", "main"), str(x, "certificate"),
                                      str(x, "foundation_certificate"), str(x, "expect", "pass"),
                                      str(x, "provenance")});
    for (const auto& x : j.value("phi", json::array()))
      e.phi.push_back({str(x, "family", "main"), strs(x, "certificates"), fam_set(x, "contains"), str(x, "provenance")});
    for (const auto& x : j.value("coverings", json::array())) {
      CoveringCase c{str(x, "family", "main"), x.at("classes").get<std::vector<std::vector<std::string>>>(),
                     x.value("expect", true), std::nullopt, str(x, "provenance")};
      if (x.contains("uncovered")) c.uncovered = fam_set(x, "uncovered");
      e.coverings.push_back(std::move(c));
    }
    for (const auto& x : j.value("monomers", json::array())) {
      CoveringCase c{str(x, "family", "main"), {strs(x, "certificates")}, x.value("expect", true), std::nullopt,
                     str(x, "provenance")};
      if (x.contains("uncovered")) c.uncovered = fam_set(x, "uncovered");
      e.monomers.push_back(std::move(c));
    }
    for (const auto& x : j.value("probes", json::array()))
      e.probes.push_back({str(x, "family", "main"), str(x, "p"), str(x, "q"), witness_refs(x), str(x, "expect"),
                          str(x, "provenance")});
    if (j.contains("prop14")) {
      const auto& x = j.at("prop14");
      e.prop14 = Prop14Case{str(x, "family", "main"), x.value("fin_foundation_finite", false), str(x, "expect"),
                            str(x, "provenance")};
    }
    if (j.contains("census")) {
      const auto& x = j.at("census");
      CensusInfo c{x.value("k", Int{1}), x.value("bound", Int{0}), x.value("radius", Int{9}), {}};
      for (const auto& cmp : x.value("comparisons", json::array())) {
        auto expect = cmp.at("expect").get<std::vector<std::size_t>>();
        if (expect.size() != 2) throw ZooError(sidecar.string() + ": census expectation needs two counts");
        c.comparisons.push_back({strs(cmp, "minus"), cmp.value("bound", Int{0}), expect[0], expect[1],
                                 str(cmp, "provenance")});
      }
      e.census = std::move(c);
    }
    if (j.contains("cover")) {
      const auto& x = j.at("cover");
      std::string t = x.at("template").get<std::string>();
      e.cover = CoverTemplate{t, read_file(dir / (name + "." + t + ".sgc.in")), x.value("coordinate", 0)};
    }
    if (j.contains("ray")) e.ray_start = take(parse_vertex(j.at("ray").at("start").get<std::string>()), sidecar);
  } catch (const json::exception& ex) {
    throw ZooError(sidecar.string() + ": " + ex.what());
  } catch (const CertificateError& ex) {
    throw ZooError(sidecar.string() + ": " + ex.what());
  } catch (const GraphError& ex) {
    throw ZooError(sidecar.string() + ": " + ex.what());
  }
  return e;
}

}  // namespace

const IsoCertificate& ZooEntry::certificate(const std::string& c) const {
  auto it = certificates.find(c);
  if (it == certificates.end()) throw ZooError("entry '" + name + "' has no certificate '" + c + "'");
  return it->second;
}

const RemovableFamily& ZooEntry::family(const std::string& f) const {
  auto it = families.find(f);
  if (it == families.end()) throw ZooError("entry '" + name + "' has no family '" + f + "'");
  return it->second;
}

const GraphOracle& ZooEntry::host(const std::string& key) const {
  auto it = hosts.find(key);
  if (it == hosts.end()) throw ZooError("entry '" + name + "' has no host '" + key + "'");
  return it->second;
}

const std::vector<VertexId>& ZooEntry::roots(const std::string& host_key) const {
  auto it = host_roots.find(host_key);
  if (it == host_roots.end() || it->second.empty())
    throw ZooError("entry '" + name + "' declares no valid roots for host '" + host_key + "'");
  return it->second;
}

FiniteWindow ZooEntry::window(const std::string& host_key, Int radius) const {
  return ball(host(host_key), roots(host_key), radius);
}

FiniteWindow ZooEntry::family_window(const std::string& f, Int radius) const {
  family(f);
  return window(family_host.at(f), radius);
}

int ZooEntry::family_depth(const std::string& f, Int radius) const {
  return static_cast<int>(family(f).completeness.depth_for(radius));
}

std::vector<CurlWitness> ZooEntry::witnesses(const std::vector<WitnessRef>& refs) const {
  std::vector<CurlWitness> out;
  for (const auto& r : refs) out.push_back({certificate(r.q), family(r.inner), certificate(r.p_in_q)});
  return out;
}

VertexSet ZooEntry::vertex_set(const std::string& text, const std::string& host_key) const {
  if (text.find_first_not_of(" \t") == std::string::npos) return VertexSet{};
  auto r = parse_vertex_set(text, host(host_key).spec());
  if (!r.ok()) {
    std::string msg = "entry '" + name + "': bad vertex set '" + text + "'";
    for (const auto& d : r.diagnostics) msg += "\n" + to_string(d);
    throw ZooError(msg);
  }
  return *r.value;
}

CoverOracle ZooEntry::cover_oracle() const {
  if (!cover) throw ZooError("entry '" + name + "' declares no cover template");
  CoverTemplate t = *cover;
  GraphOracle g = graph;
  fs::path file = dir / (name + "." + t.name + ".sgc.in");
  return [t, g, file](const VertexId& u) {
    if (t.coordinate < 0 || static_cast<std::size_t>(t.coordinate) >= u.index.size())
      throw ZooError("cover template coordinate out of range for " + to_dsl(u));
    Int k = std::max<Int>(0, u.index[static_cast<std::size_t>(t.coordinate)]);
    return take(parse_certificate_spec(substitute_k(t.text, k), g), file);
  };
}

Zoo Zoo::load(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw ZooError(dir.string() + ": not a directory");
  Zoo z;
  z.dir_ = dir;
  std::vector<std::string> names;
  for (const auto& f : fs::directory_iterator(dir))
    if (f.path().extension() == ".sgr") names.push_back(f.path().stem().string());
  std::sort(names.begin(), names.end());
  std::map<std::string, GraphOracle> graphs;
  for (const auto& n : names) {
    fs::path p = dir / (n + ".sgr");
    GraphOracle g = take(parse_graph_spec(read_file(p)), p);
    if (g.spec().name != n) throw ZooError(p.string() + ": graph is named '" + g.spec().name + "'");
    graphs.emplace(n, std::move(g));
  }
  for (const auto& n : names) z.entries_.emplace(n, load_entry(dir, n, graphs));
  return z;
}

const ZooEntry& Zoo::get(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ZooError("unknown zoo entry '" + std::string(name) + "'");
  return it->second;
}

bool Zoo::contains(std::string_view name) const { return entries_.find(name) != entries_.end(); }

std::vector<std::string> Zoo::list() const {
  std::vector<std::string> out;
  for (const auto& [n, e] : entries_) out.push_back(n);
  return out;
}

fs::path default_zoo_dir() {
  if (const char* env = std::getenv("SCG_ZOO_DIR"); env && *env) return env;
  return SCG_DEFAULT_ZOO_DIR;
}

bool ZooValidation::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ZooCheck& c) { return c.passed; });
}

namespace {

std::string labels(const std::vector<VertexId>& vs, std::size_t limit = 8) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size() && i < limit; ++i) out += (i ? ", " : "") + label(vs[i]);
  if (vs.size() > limit) out += ", ...";
  return out + "}";
}

bool provenance_ok(const std::string& p) { return p.starts_with("[PAPER]") || p.starts_with("[DERIVED]"); }

class Checker {
 public:
  explicit Checker(const ZooEntry& e) : e_(e) {}

  template <typename F>
  void run(const std::string& check, F&& f) {
    ZooCheck c{e_.name, check, false, {}};
    try {
      c.passed = f(c.detail);
    } catch (const std::exception& ex) {
      c.detail = ex.what();
    }
    out_.checks.push_back(std::move(c));
  }

  void provenance(const std::string& check, const std::string& p) {
    run(check + " provenance", [&](std::string& d) {
      d = p.empty() ? "missing" : p.substr(0, p.find(']') + 1);
      return provenance_ok(p);
    });
  }

  ZooValidation take() { return std::move(out_); }

 private:
  const ZooEntry& e_;
  ZooValidation out_;
};

}  // namespace

ZooValidation validate_entry(const ZooEntry& e) {
  Checker ck(e);
  const Int R = kTruthRadius;

  ck.run("round-trip", [&](std::string& d) {
    std::string text = emit_spec(e.graph);
    auto r = parse_graph_spec(text);
    if (!r.ok()) {
      d = "emitted spec does not parse";
      return false;
    }
    bool fix = emit_spec(*r.value) == text && r.value->same_graph(e.graph);
    d = fix ? "emit is a fixpoint" : "emit is not a fixpoint";
    return fix;
  });
  ck.provenance("entry", e.provenance);

  for (const auto& name : e.certificate_order) {
    ck.run("verify " + name, [&](std::string& d) {
      const IsoCertificate& c = e.certificate(name);
      auto kind = e.derived_kind.find(name);
      VerificationReport r = (kind != e.derived_kind.end() && kind->second == "complement")
                                 ? verify_on_box(c, 0, kCertificateRadius + 2)
                                 : verify_certificate(c, kCertificateRadius, e.roots(e.certificate_host.at(name)));
      d = r.passed ? std::to_string(r.vertices_checked) + " vertices, " + std::to_string(r.pairs_checked) + " pairs"
                   : r.counterexample->check + ": " + r.counterexample->detail;
      return r.passed;
    });
  }

  for (const auto& [fname, fam] : e.families) {
    if (!fam.note.empty()) ck.provenance("family " + fname, fam.note);
    for (const auto& c : fam.members) {
      ck.run("foundation-monotonicity " + fname + "/" + c.name, [&](std::string& d) {
        auto r = foundation_monotonicity_check(fam, c, e.family_depth(fname, R), e.family_window(fname, R));
        d = std::string(to_string(r.status)) + ": " + r.detail;
        return r.passed();
      });
    }
  }

  for (const auto& t : e.foundation) {
    ck.provenance("foundation", t.provenance);
    ck.run("foundation " + t.family, [&](std::string& d) {
      FiniteWindow w = e.family_window(t.family, R);
      auto r = relative_foundation(e.family(t.family), e.family_depth(t.family, R), w);
      auto want = members_in(t.set, w);
      d = "got " + labels(r.foundation) + ", want " + labels(want) + (r.exact ? ", exact" : ", not exact");
      return r.exact && r.foundation == want;
    });
  }
  for (const auto& t : e.torsion) {
    ck.provenance("torsion " + t.certificate, t.provenance);
    ck.run("torsion " + t.family + "/" + t.certificate, [&](std::string& d) {
      FiniteWindow w = e.family_window(t.family, R);
      auto r = torsion(e.family(t.family), e.certificate(t.certificate), e.family_depth(t.family, R), w);
      auto want = members_in(t.set, w);
      d = "got " + labels(r.torsion) + ", want " + labels(want) + (r.cross_check_agrees ? "" : ", cross-check differs");
      return r.torsion == want && r.cross_check_agrees;
    });
  }
  for (const auto& t : e.curl) {
    ck.provenance("curl " + t.certificate, t.provenance);
    ck.run("curl " + t.certificate, [&](std::string& d) {
      FiniteWindow w = e.family_window(t.family, R);
      auto got = curl(e.family(t.family), e.certificate(t.certificate), e.witnesses(t.witnesses),
                      e.family_depth(t.family, R), w);
      auto want = members_in(t.contains, w);
      d = "got " + labels(got) + ", must contain " + labels(want);
      return std::includes(got.begin(), got.end(), want.begin(), want.end());
    });
  }
  for (const auto& t : e.nested) {
    ck.provenance("nested " + t.p + "/" + t.q, t.provenance);
    ck.run("torsion-monotonicity " + t.p + "/" + t.q, [&](std::string& d) {
      auto r = torsion_monotonicity_check(e.family(t.family), e.certificate(t.p), e.certificate(t.q),
                                          e.family_depth(t.family, R), e.family_window(t.family, R));
      d = std::string(to_string(r.status)) + ": " + r.detail;
      return r.status == CheckStatus::Pass;
    });
  }
  for (const auto& t : e.symmetry) {
    ck.provenance("symmetry " + t.p + "/" + t.q, t.provenance);
    ck.run("torsion-symmetry " + t.p + "/" + t.q, [&](std::string& d) {
      auto r = torsion_symmetry_check(e.family(t.family), e.certificate(t.p), e.certificate(t.q),
                                      e.family_depth(t.family, R), e.family_window(t.family, R));
      d = std::string(to_string(r.status)) + ": " + r.detail;
      return to_string(r.status) == t.expect;
    });
  }
  for (const auto& t : e.torsion_foundation) {
    ck.provenance("torsion-foundation " + t.certificate, t.provenance);
    ck.run("torsion-foundation " + t.certificate, [&](std::string& d) {
      auto r = torsion_foundation_theorem_check(e.family(t.family), e.certificate(t.certificate),
                                                e.certificate(t.foundation_certificate),
                                                e.family_depth(t.family, R), e.family_window(t.family, R));
      d = std::string(to_string(r.status)) + ": " + r.detail;
      return to_string(r.status) == t.expect;
    });
  }
  for (const auto& t : e.phi) {
    ck.provenance("phi", t.provenance);
    ck.run("phi " + t.family, [&](std::string& d) {
      std::vector<IsoCertificate> certs;
      for (const auto& c : t.certificates) certs.push_back(e.certificate(c));
      FiniteWindow w = e.family_window(t.family, R);
      auto got = phi_closure(e.family(t.family), certs, e.family_depth(t.family, R), w);
      auto want = members_in(t.contains, w);
      d = std::to_string(got.size()) + " vertices, must contain " + labels(want);
      return std::includes(got.begin(), got.end(), want.begin(), want.end());
    });
  }
  auto covering_case = [&](const CoveringCase& t, const char* kind) {
    std::string title = std::string(kind) + " " + std::to_string(t.classes.size()) + " classes";
    ck.provenance(title, t.provenance);
    ck.run(title, [&](std::string& d) {
      std::vector<std::vector<IsoCertificate>> classes;
      for (const auto& cls : t.classes) {
        classes.emplace_back();
        for (const auto& c : cls) classes.back().push_back(e.certificate(c));
      }
      FiniteWindow w = e.family_window(t.family, R);
      auto r = covering_check(classes, e.family(t.family), e.family_depth(t.family, R), w);
      d = std::string(r.passed ? "covered" : "uncovered " + labels(r.uncovered));
      if (r.passed != t.expect) return false;
      if (t.uncovered && !std::any_of(r.uncovered.begin(), r.uncovered.end(),
                                      [&](const VertexId& v) { return t.uncovered->contains(v); }))
        return false;
      return true;
    });
  };
  for (const auto& t : e.coverings) covering_case(t, "covering");
  for (const auto& t : e.monomers) covering_case(t, "monomer");
  for (const auto& t : e.probes) {
    ck.provenance("probe " + t.p + "/" + t.q, t.provenance);
    ck.run("probe " + t.p + "/" + t.q, [&](std::string& d) {
      auto r = conjecture2_probe(e.family(t.family), e.certificate(t.p), e.certificate(t.q), e.witnesses(t.witnesses),
                                 e.family_depth(t.family, R), e.family_window(t.family, R));
      d = std::string(to_string(r.outcome));
      if (!r.hypothesis_witness.empty()) d += " at " + labels(r.hypothesis_witness);
      return to_string(r.outcome) == t.expect;
    });
  }
  if (e.prop14) {
    const auto& t = *e.prop14;
    ck.provenance("prop14", t.provenance);
    ck.run("prop14", [&](std::string& d) {
      auto r = prop14_check(e.family(t.family), e.family_depth(t.family, R), e.family_window(t.family, R),
                            t.fin_foundation_finite);
      d = std::string(to_string(r.status)) + ": " + r.detail;
      return to_string(r.status) == t.expect;
    });
  }
  if (e.census) {
    const auto& c = *e.census;
    for (const auto& cmp : c.comparisons) {
      std::string title = "census minus";
      for (const auto& m : cmp.minus) title += " " + m;
      ck.provenance(title, cmp.provenance);
      ck.run(title, [&](std::string& d) {
        VertexSet removed;
        for (const auto& m : cmp.minus) removed = removed.united(e.certificate(m).removed);
        GraphOracle other = graph_minus(e.graph, removed);
        FiniteWindow w1 = e.window("", c.radius);
        FiniteWindow w2 = ball(other, e.roots(""), c.radius);
        auto r = census_obstruction(e.graph, other, c.k, w1, w2, {true, c.bound}, {true, cmp.bound});
        d = "degree " + std::to_string(r.degree) + ": " + std::to_string(r.count1) + " vs " + std::to_string(r.count2) +
            (r.confirmed ? ", confirmed" : ", unconfirmed");
        return r.distinguished && r.confirmed && r.count1 == cmp.expect1 && r.count2 == cmp.expect2;
      });
    }
  }
  if (e.cover && e.ray_start) {
    ck.run("ray", [&](std::string& d) {
      auto r = build_ray(e.graph, e.cover_oracle(), *e.ray_start, 20);
      d = std::to_string(r.vertices.size()) + " vertices, " + std::to_string(r.chords.size()) + " chords";
      return r.vertices.size() >= 21 && is_path(e.graph, r.vertices);
    });
  }
  return ck.take();
}

ZooValidation validate_all(const Zoo& zoo) {
  ZooValidation out;
  for (const auto& n : zoo.list()) {
    auto v = validate_entry(zoo.get(n));
    out.checks.insert(out.checks.end(), v.checks.begin(), v.checks.end());
  }
  return out;
}

ZooValidation validate_dir(const fs::path& dir) {
  try {
    return validate_all(Zoo::load(dir));
  } catch (const ZooError& e) {
    return ZooValidation{{ZooCheck{"", "load", false, e.what()}}};
  }
}

}  // namespace scg
