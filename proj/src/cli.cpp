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

#include "scg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "scg/dsl.hpp"
#include "scg/report.hpp"
#include "scg/zoo.hpp"

namespace scg {

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Bad flags, unreadable files and parse errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot read file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos || s.ends_with(".sgr") || s.ends_with(".sgc") || s.ends_with(".in");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

template <typename T>
T take(ParseResult<T> r, const std::string& source, std::ostream& err) {
  for (const auto& d : r.diagnostics) err << source << ":" << to_string(d) << "\n";
  if (!r.ok()) throw UsageError(source + ": parse failed");
  return std::move(*r.value);
}

// Shared flags and the resolved inputs.
struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string zoo_dir;
  std::string graph_arg;
  std::string format = "json";
  Int radius = -1;
  int depth = -1;
  std::string roots_arg;
  std::string family_arg = "main";
  std::vector<std::string> members;

  std::optional<Zoo> zoo;
  const ZooEntry* entry = nullptr;
  std::optional<GraphOracle> graph;

  Context(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  const Zoo& load_zoo() {
    if (!zoo) {
      fs::path dir = zoo_dir.empty() ? default_zoo_dir() : fs::path(zoo_dir);
      try {
        zoo = Zoo::load(dir);
      } catch (const ZooError& e) {
        throw UsageError(e.what());
      }
    }
    return *zoo;
  }

  const GraphOracle& resolve_graph() {
    if (graph) return *graph;
    if (graph_arg.empty()) throw UsageError("--graph is required");
    if (looks_like_path(graph_arg) || fs::is_regular_file(graph_arg)) {
      graph = take(parse_graph_spec(read_file(graph_arg)), graph_arg, err);
    } else {
      const Zoo& z = load_zoo();
      if (!z.contains(graph_arg)) throw UsageError("unknown graph '" + graph_arg + "' (not a zoo entry or file)");
      entry = &z.get(graph_arg);
      graph = entry->graph;
    }
    return *graph;
  }

  IsoCertificate resolve_cert(const std::string& arg, const GraphOracle& host) {
    resolve_graph();
    if (entry && !looks_like_path(arg)) {
      if (!entry->certificates.count(arg))
        throw UsageError("graph '" + entry->name + "' has no certificate '" + arg + "'");
      return entry->certificate(arg);
    }
    return take(parse_certificate_spec(read_file(arg), host), arg, err);
  }

  IsoCertificate resolve_cert(const std::string& arg) { return resolve_cert(arg, resolve_graph()); }

  RemovableFamily resolve_family() {
    const GraphOracle& g = resolve_graph();
    if (!members.empty()) {
      RemovableFamily fam{g, {}, false, {}, "declared on the command line"};
      for (const auto& m : members) fam.members.push_back(resolve_cert(m));
      return fam;
    }
    if (!entry) throw UsageError("graphs loaded from files need --member certificates");
    if (!entry->families.count(family_arg))
      throw UsageError("graph '" + entry->name + "' has no family '" + family_arg + "'");
    return entry->family(family_arg);
  }

  Int radius_or(Int fallback) const { return radius >= 0 ? radius : fallback; }

  int depth_for(const RemovableFamily& fam, Int r) const {
    if (depth >= 0) return depth;
    return static_cast<int>(std::max<Int>(1, fam.completeness.depth_for(r)));
  }

  std::vector<VertexId> roots_for(const GraphOracle& g) {
    std::vector<VertexId> roots;
    if (!roots_arg.empty()) {
      for (const auto& r : split(roots_arg, ';')) roots.push_back(take(parse_vertex(r), "--roots", err));
      return roots;
    }
    if (entry && g.same_graph(entry->graph)) return entry->roots("");
    for (const auto& r : g.spec().roots)
      if (g.contains(r)) roots.push_back(r);
    if (roots.empty()) throw UsageError("no valid roots; pass --roots");
    return roots;
  }

  FiniteWindow window_on(const GraphOracle& g, Int r) {
    if (entry) {
      for (const auto& [key, h] : entry->hosts)
        if (h.same_graph(g) && roots_arg.empty()) return entry->window(key, r);
    }
    return ball(g, roots_for(g), r);
  }

  void emit(const Json& j) {
    if (format == "table") out << to_table(j);
    else out << dump(j);
  }

  void require_format(bool dot_allowed) const {
    if (format == "json" || format == "table") return;
    if (format == "dot" && dot_allowed) return;
    throw UsageError("format '" + format + "' is not available here");
  }
};

void merge(Json& j, const Json& extra) {
  for (const auto& [key, v] : extra.items()) j[key] = v;
}

std::string diagnostic_severity(const ParseDiagnostic& d) {
  return d.severity == ParseDiagnostic::Severity::Error ? "error" : "warning";
}

int cmd_validate(Context& cx, const std::string& file) {
  cx.require_format(false);
  std::string text = read_file(file);
  Json j;
  j["file"] = file;
  std::vector<ParseDiagnostic> diags;
  bool ok = false;
  if (file.ends_with(".sgc")) {
    const GraphOracle& g = cx.resolve_graph();
    auto r = parse_certificate_spec(text, g);
    diags = r.diagnostics;
    ok = r.ok();
    j["kind"] = "certificate";
    j["name"] = ok ? Json(r.value->name) : Json(nullptr);
  } else {
    auto r = parse_graph_spec(text);
    diags = r.diagnostics;
    ok = r.ok();
    j["kind"] = "graph";
    j["name"] = ok ? Json(r.value->spec().name) : Json(nullptr);
  }
  j["ok"] = ok;
  Json ds = Json::array();
  for (const auto& d : diags) {
    cx.err << file << ":" << to_string(d) << "\n";
    ds.push_back({{"line", d.line}, {"column", d.column}, {"severity", diagnostic_severity(d)}, {"message", d.message}});
  }
  j["diagnostics"] = ds;
  cx.emit(j);
  return ok ? kOk : kUsage;
}

int cmd_window(Context& cx) {
  cx.require_format(true);
  const GraphOracle& g = cx.resolve_graph();
  FiniteWindow w = ball(g, cx.roots_for(g), cx.radius_or(3));
  if (cx.format == "dot") cx.out << window_to_dot(w);
  else if (cx.format == "table") cx.out << to_table(Json::parse(window_to_json(w)));
  else cx.out << window_to_json(w);
  return kOk;
}

int cmd_verify(Context& cx, const std::string& cert, const std::string& box) {
  cx.require_format(false);
  IsoCertificate c = cx.resolve_cert(cert);
  VerificationReport r;
  if (!box.empty()) {
    auto parts = split(box, ',');
    if (parts.size() != 2) throw UsageError("--box expects lo,hi");
    r = verify_on_box(c, std::stoll(parts[0]), std::stoll(parts[1]));
  } else {
    std::string key;
    if (cx.entry && cx.entry->certificate_host.count(cert)) key = cx.entry->certificate_host.at(cert);
    r = (cx.entry && cx.roots_arg.empty()) ? verify_certificate(c, cx.radius_or(kCertificateRadius), cx.entry->roots(key))
                                            : verify_certificate(c, cx.radius_or(kCertificateRadius), cx.roots_for(c.host));
  }
  cx.emit(to_json(r));
  if (!r.passed) cx.err << "verification failed: " << r.counterexample->detail << "\n";
  return r.passed ? kOk : kFailure;
}

int cmd_foundation(Context& cx) {
  cx.require_format(false);
  RemovableFamily fam = cx.resolve_family();
  Int r = cx.radius_or(kTruthRadius);
  FoundationReport rep = relative_foundation(fam, cx.depth_for(fam, r), cx.window_on(fam.host, r));
  cx.emit(to_json(rep));
  return kOk;
}

int cmd_torsion(Context& cx, const std::string& cert) {
  cx.require_format(false);
  RemovableFamily fam = cx.resolve_family();
  IsoCertificate c = cx.resolve_cert(cert, fam.host);
  Int r = cx.radius_or(kTruthRadius);
  TorsionReport rep = torsion(fam, c, cx.depth_for(fam, r), cx.window_on(fam.host, r));
  cx.emit(to_json(rep));
  return kOk;
}

int cmd_phi(Context& cx, const std::vector<std::string>& certs) {
  cx.require_format(false);
  RemovableFamily fam = cx.resolve_family();
  std::vector<IsoCertificate> cs;
  for (const auto& c : certs) cs.push_back(cx.resolve_cert(c, fam.host));
  Int r = cx.radius_or(kTruthRadius);
  int d = cx.depth_for(fam, r);
  auto closure = phi_closure(fam, cs, d, cx.window_on(fam.host, r));
  Json j;
  j["certificates"] = certs;
  j["radius"] = r;
  j["depth"] = d;
  j["closure"] = labels_json(closure);
  cx.emit(j);
  return kOk;
}

int cmd_covering(Context& cx, const std::vector<std::vector<std::string>>& classes) {
  cx.require_format(false);
  RemovableFamily fam = cx.resolve_family();
  std::vector<std::vector<IsoCertificate>> cs;
  for (const auto& cls : classes) {
    cs.emplace_back();
    for (const auto& c : cls) cs.back().push_back(cx.resolve_cert(c, fam.host));
  }
  Int r = cx.radius_or(kTruthRadius);
  CoveringReport rep = covering_check(cs, fam, cx.depth_for(fam, r), cx.window_on(fam.host, r));
  cx.emit(to_json(rep));
  if (!rep.passed) cx.err << "covering fails: " << rep.uncovered.size() << " uncovered vertices\n";
  return rep.passed ? kOk : kFailure;
}

int cmd_ray(Context& cx, int steps, const std::string& start_arg, const std::string& tmpl, int coordinate) {
  cx.require_format(true);
  const GraphOracle& g = cx.resolve_graph();
  CoverOracle cover;
  if (!tmpl.empty()) {
    std::string text = read_file(tmpl);
    GraphOracle host = g;
    cover = [text, host, tmpl, coordinate](const VertexId& u) {
      if (coordinate < 0 || static_cast<std::size_t>(coordinate) >= u.index.size())
        throw RayError("cover coordinate out of range for " + to_dsl(u));
      std::string t = text;
      std::string k = std::to_string(std::max<Int>(0, u.index[static_cast<std::size_t>(coordinate)]));
      for (auto p = t.find("$K"); p != std::string::npos; p = t.find("$K", p + k.size())) t.replace(p, 2, k);
      auto r = parse_certificate_spec(t, host);
      if (!r.ok()) throw RayError(tmpl + ": cover template does not parse for " + to_dsl(u));
      return *r.value;
    };
  } else if (cx.entry && cx.entry->cover) {
    cover = cx.entry->cover_oracle();
  } else {
    throw UsageError("graph declares no cover template; pass --cover-template");
  }
  VertexId start;
  if (!start_arg.empty()) start = take(parse_vertex(start_arg), "--start", cx.err);
  else if (cx.entry && cx.entry->ray_start) start = *cx.entry->ray_start;
  else start = cx.roots_for(g).front();
  RayPrefix ray = build_ray(g, cover, start, steps);
  if (cx.format == "dot") {
    FiniteWindow w = induced_window(g, ray.vertices);
    try {
      w = ball(g, {start}, static_cast<Int>(ray.vertices.size()) - 1);
    } catch (const BoundExceeded&) {
    }
    cx.out << window_to_dot(w, ray.vertices);
  } else {
    Json j;
    j["graph"] = g.id();
    j["start"] = label(start);
    j["requested_steps"] = steps;
    j["path_verified"] = is_path(g, ray.vertices);
    merge(j, to_json(ray));
    cx.emit(j);
  }
  return kOk;
}

int cmd_census(Context& cx, const std::string& other_arg, const std::string& minus_arg, Int k, Int bound,
               Int other_bound) {
  cx.require_format(false);
  const GraphOracle& g = cx.resolve_graph();
  std::optional<CensusInfo> info;
  if (cx.entry && cx.entry->census) info = cx.entry->census;
  GraphOracle other = g;
  std::string other_name;
  if (!minus_arg.empty()) {
    VertexSet removed;
    auto names = split(minus_arg, ',');
    for (const auto& m : names) removed = removed.united(cx.resolve_cert(m).removed);
    other = graph_minus(g, removed);
    other_name = other.id();
    if (info && other_bound < 0) {
      for (const auto& c : info->comparisons)
        if (c.minus == names) other_bound = c.bound;
    }
  } else if (!other_arg.empty()) {
    Context sub(cx.out, cx.err);
    sub.zoo_dir = cx.zoo_dir;
    sub.graph_arg = other_arg;
    other = sub.resolve_graph();
    other_name = other.id();
    if (other_bound < 0 && sub.entry && sub.entry->census) other_bound = sub.entry->census->bound;
  } else {
    throw UsageError("census needs --other or --minus");
  }
  if (k < 0) k = info ? info->k : 1;
  if (bound < 0 && info) bound = info->bound;
  if (!cx.entry || !cx.entry->graph.same_graph(other)) {
    if (other_bound < 0 && other.same_graph(g)) other_bound = bound;
  }
  Int r = cx.radius_or(info ? info->radius : 9);
  auto roots = cx.roots_for(g);
  std::vector<VertexId> other_roots;
  for (const auto& v : roots)
    if (other.contains(v)) other_roots.push_back(v);
  if (other_roots.empty()) other_roots = cx.roots_for(other);
  CensusComparison rep = census_obstruction(g, other, k, ball(g, roots, r), ball(other, other_roots, r),
                                            {bound >= 0, std::max<Int>(bound, 0)},
                                            {other_bound >= 0, std::max<Int>(other_bound, 0)});
  Json j;
  j["graph1"] = g.id();
  j["graph2"] = other_name;
  j["k"] = k;
  j["radius"] = r;
  j["bounds"] = {bound, other_bound};
  merge(j, to_json(rep));
  cx.emit(j);
  return kOk;
}

int cmd_classify(Context& cx, const std::string& cert) {
  cx.require_format(false);
  const GraphOracle& g = cx.resolve_graph();
  IsoCertificate c = cx.resolve_cert(cert);
  EvidenceVerdict v = classify_components_evidence(g, c, ball(g, cx.roots_for(g), cx.radius_or(6)));
  cx.emit(to_json(v));
  return kOk;
}

int cmd_probe(Context& cx, const std::string& p, const std::string& q) {
  cx.require_format(false);
  RemovableFamily fam = cx.resolve_family();
  IsoCertificate cp = cx.resolve_cert(p, fam.host);
  IsoCertificate cq = cx.resolve_cert(q, fam.host);
  std::vector<CurlWitness> witnesses;
  if (cx.entry) {
    for (const auto& pc : cx.entry->probes)
      if (pc.p == p && pc.q == q && pc.family == cx.family_arg) witnesses = cx.entry->witnesses(pc.witnesses);
  }
  Int r = cx.radius_or(kTruthRadius);
  ProbeReport rep = conjecture2_probe(fam, cp, cq, witnesses, cx.depth_for(fam, r), cx.window_on(fam.host, r));
  Json j;
  j["p"] = cp.name;
  j["q"] = cq.name;
  j["radius"] = r;
  j["witnesses"] = witnesses.size();
  merge(j, to_json(rep));
  cx.emit(j);
  return kOk;
}

int cmd_zoo_validate(Context& cx, const std::string& only) {
  cx.require_format(false);
  fs::path dir = cx.zoo_dir.empty() ? default_zoo_dir() : fs::path(cx.zoo_dir);
  ZooValidation v;
  if (only.empty()) {
    v = validate_dir(dir);
  } else {
    const Zoo& z = cx.load_zoo();
    if (!z.contains(only)) throw UsageError("unknown zoo entry '" + only + "'");
    v = validate_entry(z.get(only));
  }
  for (const auto& c : v.checks)
    if (!c.passed) cx.err << (c.entry.empty() ? "" : c.entry + ": ") << c.check << ": " << c.detail << "\n";
  cx.emit(to_json(v));
  return v.passed() ? kOk : kFailure;
}

int cmd_zoo_list(Context& cx) {
  cx.require_format(false);
  const Zoo& z = cx.load_zoo();
  Json j;
  j["dir"] = z.dir().string();
  j["entries"] = z.list();
  cx.emit(j);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context cx(out, err);
  CLI::App app{"Finitely presented infinite graphs: windows, certificates and structure.", "scg"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--zoo-dir", cx.zoo_dir, "Fixture directory (default: $SCG_ZOO_DIR or the built-in zoo)");

  auto add_graph = [&](CLI::App* s, bool required = true) {
    auto* o = s->add_option("-g,--graph", cx.graph_arg, "Zoo entry name or .sgr file");
    if (required) o->required();
  };
  auto add_format = [&](CLI::App* s, const std::string& choices) {
    s->add_option("--format", cx.format, "Output format: " + choices);
  };
  auto add_radius = [&](CLI::App* s) { s->add_option("-r,--radius", cx.radius, "Ball radius"); };
  auto add_roots = [&](CLI::App* s) { s->add_option("--roots", cx.roots_arg, "Roots, e.g. 'v(0); v(1)'"); };
  auto add_family = [&](CLI::App* s) {
    s->add_option("--family", cx.family_arg, "Zoo family name");
    s->add_option("--member", cx.members, "Family member certificate (repeatable; replaces --family)");
    s->add_option("-d,--depth", cx.depth, "Iteration depth (default from the family's completeness rule)");
  };

  std::function<int()> action;

  std::string file, cert, box, start, tmpl, other, minus, p, q, entry_only;
  std::vector<std::string> certs, classes;
  int steps = 20, coordinate = 0;
  Int k = -1, bound = -1, other_bound = -1;

  auto* validate = app.add_subcommand("validate", "Check a .sgr or .sgc file");
  validate->add_option("file", file, "File to check")->required();
  add_graph(validate, false);
  add_format(validate, "json|table");
  validate->callback([&] { action = [&] { return cmd_validate(cx, file); }; });

  auto* window = app.add_subcommand("window", "Extract a ball");
  add_graph(window);
  add_radius(window);
  add_roots(window);
  add_format(window, "json|dot|table");
  window->callback([&] { action = [&] { return cmd_window(cx); }; });

  auto* verify = app.add_subcommand("verify-cert", "Verify a certificate on a ball or index box");
  add_graph(verify);
  verify->add_option("-c,--cert", cert, "Certificate name or .sgc file")->required();
  add_radius(verify);
  add_roots(verify);
  verify->add_option("--box", box, "Index box lo,hi instead of a ball");
  add_format(verify, "json|table");
  verify->callback([&] { action = [&] { return cmd_verify(cx, cert, box); }; });

  auto* foundation = app.add_subcommand("foundation", "Relative foundation of a family");
  add_graph(foundation);
  add_radius(foundation);
  add_family(foundation);
  add_roots(foundation);
  add_format(foundation, "json|table");
  foundation->callback([&] { action = [&] { return cmd_foundation(cx); }; });

  auto* tor = app.add_subcommand("torsion", "Torsion of a removable subgraph");
  add_graph(tor);
  tor->add_option("-c,--cert", cert, "Certificate")->required();
  add_radius(tor);
  add_family(tor);
  add_roots(tor);
  add_format(tor, "json|table");
  tor->callback([&] { action = [&] { return cmd_torsion(cx, cert); }; });

  auto* phi = app.add_subcommand("phi", "Closure of a removable subgraph with its torsion");
  add_graph(phi);
  phi->add_option("-c,--cert", certs, "Certificates sharing one removed set")->required();
  add_radius(phi);
  add_family(phi);
  add_roots(phi);
  add_format(phi, "json|table");
  phi->callback([&] { action = [&] { return cmd_phi(cx, certs); }; });

  auto* covering = app.add_subcommand("covering", "Check that classes and the foundation cover a ball");
  add_graph(covering);
  covering->add_option("--class", classes, "Comma-separated certificates of one class (repeatable)")->required();
  add_radius(covering);
  add_family(covering);
  add_roots(covering);
  add_format(covering, "json|table");
  covering->callback([&] {
    action = [&] {
      std::vector<std::vector<std::string>> cls;
      for (const auto& c : classes) cls.push_back(split(c, ','));
      return cmd_covering(cx, cls);
    };
  });

  auto* monomer = app.add_subcommand("monomer", "Check a single-class covering");
  add_graph(monomer);
  monomer->add_option("-c,--cert", certs, "Certificates of the class")->required();
  add_radius(monomer);
  add_family(monomer);
  add_roots(monomer);
  add_format(monomer, "json|table");
  monomer->callback([&] { action = [&] { return cmd_covering(cx, {certs}); }; });

  auto* ray = app.add_subcommand("ray", "Build a path by repeated removal");
  add_graph(ray);
  ray->add_option("--steps", steps, "Number of removal steps")->check(CLI::Range(1, 10000));
  ray->add_option("--start", start, "Start vertex");
  ray->add_option("--cover-template", tmpl, "Certificate template with $K");
  ray->add_option("--coordinate", coordinate, "Index coordinate substituted for $K");
  add_format(ray, "json|dot|table");
  ray->callback([&] { action = [&] { return cmd_ray(cx, steps, start, tmpl, coordinate); }; });

  auto* census = app.add_subcommand("census", "Compare low-degree censuses of two graphs");
  add_graph(census);
  census->add_option("--other", other, "Second graph");
  census->add_option("--minus", minus, "Comma-separated certificates whose removed sets form the second graph");
  census->add_option("-k", k, "Largest degree counted");
  census->add_option("--bound", bound, "Radius holding every low-degree vertex of the first graph");
  census->add_option("--other-bound", other_bound, "Same for the second graph");
  add_radius(census);
  add_roots(census);
  add_format(census, "json|table");
  census->callback([&] { action = [&] { return cmd_census(cx, other, minus, k, bound, other_bound); }; });

  auto* classify = app.add_subcommand("classify", "Component evidence for a certificate on a disjoint union");
  add_graph(classify);
  classify->add_option("-c,--cert", cert, "Certificate")->required();
  add_radius(classify);
  add_roots(classify);
  add_format(classify, "json|table");
  classify->callback([&] { action = [&] { return cmd_classify(cx, cert); }; });

  auto* probe = app.add_subcommand("probe-c2", "Probe whether Q stays removable after removing P");
  add_graph(probe);
  probe->add_option("-p", p, "Certificate for P")->required();
  probe->add_option("-q", q, "Certificate for Q")->required();
  add_radius(probe);
  add_family(probe);
  add_roots(probe);
  add_format(probe, "json|table");
  probe->callback([&] { action = [&] { return cmd_probe(cx, p, q); }; });

  auto* zoo = app.add_subcommand("zoo", "Shipped example graphs");
  zoo->require_subcommand(1);
  auto* zoo_validate = zoo->add_subcommand("validate", "Re-verify every certificate and ground truth");
  zoo_validate->add_option("--entry", entry_only, "Only this entry");
  add_format(zoo_validate, "json|table");
  zoo_validate->callback([&] { action = [&] { return cmd_zoo_validate(cx, entry_only); }; });
  auto* zoo_list = zoo->add_subcommand("list", "List entries");
  add_format(zoo_list, "json|table");
  zoo_list->callback([&] { action = [&] { return cmd_zoo_list(cx); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (!action) return kUsage;
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidVertex& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ZooError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace scg
