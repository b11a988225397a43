/* Copyright 2026 The Exodus Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#include "exodus/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "exodus/builders.h"
#include "exodus/io.h"

namespace exodus::cli {

namespace {

using io::Json;

struct Options {
  std::size_t caps_objects = 0;
  std::size_t caps_morphisms = 0;
  std::string format = "text";
  std::uint64_t seed = 0;
};

// What a subcommand found. Text mode prints facts as "key: value" lines, then
// violations sorted; json mode prints one object.
struct Result {
  std::vector<std::pair<std::string, Json>> facts;
  std::vector<std::string> violations;
  std::optional<Json> document;  // printed as-is in both modes
  std::string text;              // replaces the fact lines in text mode

  void fact(std::string key, Json value) { facts.emplace_back(std::move(key), std::move(value)); }
  void merge(const Report& r) {
    violations.insert(violations.end(), r.violations.begin(), r.violations.end());
  }
  bool ok() const { return violations.empty(); }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::string path_string(const std::vector<int>& p) {
  std::vector<std::string> xs;
  for (int v : p) xs.push_back(std::to_string(v));
  return join(xs, " ");
}

class Session {
 public:
  Session(Caps caps, std::istream& in) : caps_(caps), in_(in) {}

  const Caps& caps() const { return caps_; }

  // A fresh loader whose relative references resolve next to `path`.
  io::Loader& loader_for(const std::string& path) {
    std::filesystem::path base;
    if (path != "-" && !path.empty()) base = std::filesystem::path(path).parent_path();
    loaders_.push_back(std::make_unique<io::Loader>(caps_, base));
    return *loaders_.back();
  }

  Json read(const std::string& path) {
    if (path == "-" || path.empty()) {
      if (stdin_used_) throw InputError("standard input can only be read once");
      stdin_used_ = true;
      return parse(in_, "standard input");
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    return parse(f, "'" + path + "'");
  }

 private:
  static Json parse(std::istream& s, const std::string& what) {
    try {
      return Json::parse(s);
    } catch (const Json::parse_error& e) {
      throw InputError(what + " is not valid JSON: " + e.what());
    }
  }

  Caps caps_;
  std::istream& in_;
  bool stdin_used_ = false;
  std::vector<std::unique_ptr<io::Loader>> loaders_;
};

// --- Reports ------------------------------------------------------------------

std::string presentation_text(const Pres2Cat& p) {
  std::ostringstream s;
  s << "objects: " << join(p.objects, ", ") << "\n";
  s << "1-generators: " << p.gen1.size() << "\n";
  for (const Gen1& g : p.gen1)
    s << "  " << g.name << ": " << p.objects[g.src] << " -> " << p.objects[g.dst]
      << (g.invertible ? " (invertible)" : "") << "\n";
  s << "2-generators: " << p.gen2.size() << "\n";
  for (const Gen2& g : p.gen2)
    s << "  " << g.name << ": " << word_string(p, g.src) << " => " << word_string(p, g.dst) << "\n";
  s << "relations: " << p.rel2.size() << "\n";
  for (const Rel2& r : p.rel2)
    s << "  " << expr_string(p, r.lhs) << " = " << expr_string(p, r.rhs) << "\n";
  return s.str();
}

std::string rep_summary(const Rep& r, const io::CatRegistry& reg) {
  std::vector<std::string> xs;
  for (int o = 0; o < r.source->num_objects(); ++o)
    xs.push_back(r.source->objects[o] + " -> " + reg.label(r.objects[o]));
  return join(xs, ", ");
}

void section_facts(Result& res, const CatPtr& cat) {
  res.fact("objects", cat->num_objects());
  res.fact("morphisms", cat->num_morphisms());
  res.fact("iso classes", static_cast<int>(iso_classes(*cat).size()));
}

// --- Subcommands ------------------------------------------------------------------

Result check_cat(Session& s, const std::string& path) {
  const CatPtr c = s.loader_for(path).unchecked_category(s.read(path));
  Result res;
  res.fact("objects", c->num_objects());
  res.fact("morphisms", c->num_morphisms());
  res.merge(validate_category(*c));
  return res;
}

Result check_2cat(Session& s, const std::string& path, std::size_t samples,
                  std::uint64_t seed) {
  const Concrete2Cat c = s.loader_for(path).two_category(s.read(path));
  Result res;
  res.fact("objects", c.num_objects());
  res.merge(validate_2cat(c));
  const Report inter = check_interchange(c, samples, seed);
  res.fact("interchange", samples == 0 ? Json("exhaustive") : Json(samples));
  res.merge(inter);
  return res;
}

Result exit_pres(Session& s, const std::string& path, bool json) {
  const Pres2Cat p = s.loader_for(path).presentation(s.read(path));
  Result res;
  if (json)
    res.document = io::presentation_json(p);
  else
    res.text = presentation_text(p);
  return res;
}

Result rep_check(Session& s, const std::string& path) {
  io::Loader& l = s.loader_for(path);
  const Rep r = l.rep(s.read(path));
  Result res;
  res.fact("rep", rep_summary(r, l.registry()));
  res.merge(validate_rep(r));
  return res;
}

Result sections(Session& s, const std::string& path) {
  io::Loader& l = s.loader_for(path);
  const Rep r = l.rep(s.read(path));
  Result res;
  res.merge(validate_rep(r));
  if (!res.ok()) return res;
  const TwoLimit lim = two_limit(r, s.caps());
  section_facts(res, lim.cat);
  for (int o = 0; o < r.source->num_objects(); ++o) {
    const bool eq = static_cast<bool>(is_equivalence_functor(lim.projections[o]));
    res.fact("projection to " + r.source->objects[o],
             "equivalent to " + l.registry().label(r.objects[o]) + ": " + yes_no(eq));
  }
  return res;
}

Result descent_check(Session& s, const std::string& path) {
  const auto d = s.loader_for(path).datum(s.read(path));
  Result res;
  res.fact("charts", join(d.datum.cover.charts, ", "));
  res.fact("inclusions", static_cast<int>(d.datum.cover.incl.size()));
  res.fact("triangles", static_cast<int>(d.datum.coherence.size()));
  res.fact("tetrahedra", static_cast<int>(d.datum.cover.chains4().size()));
  res.merge(check_descent_datum(d.datum));
  return res;
}

Result glue(Session& s, const std::string& path) {
  io::Loader& l = s.loader_for(path);
  const auto d = l.datum(s.read(path));
  Result res;
  res.merge(check_descent_datum(d.datum));
  if (!res.ok()) return res;
  const GluedSections g = glue_sections(d.datum, s.caps());
  res.fact("charts", join(d.datum.cover.charts, ", "));
  section_facts(res, g.cat);
  if (d.glue2) {
    const Rep r = glue_reps(d.datum, *d.glue2);
    res.merge(validate_rep(r));
    res.fact("glued rep", rep_summary(r, l.registry()));
    if (res.ok()) {
      const TwoLimit lim = two_limit(r, s.caps());
      res.fact("sections of glued rep agree",
               yes_no(static_cast<int>(iso_classes(*lim.cat).size()) ==
                      static_cast<int>(iso_classes(*g.cat).size())));
    }
  }
  return res;
}

Result factor(Session& s, const std::string& path) {
  const TriangulatedSquare t = s.loader_for(path).square(s.read(path));
  const auto moves = factor_elementary(t);
  Result res;
  res.fact("triangles", static_cast<int>(t.triangles.size()));
  res.fact("moves", static_cast<int>(moves.size()));
  for (std::size_t i = 0; i < moves.size(); ++i)
    res.fact("move " + std::to_string(i + 1),
             moves[i].chart + " triangle " + std::to_string(moves[i].triangle) + ": " +
                 path_string(moves[i].before) + " => " + path_string(moves[i].after));
  const auto right = final_right_path(t, moves);
  res.fact("final path", path_string(right));
  if (right != t.right) res.violations.push_back("final front is not the right path");
  return res;
}

Result enumerate(Session& s, const std::string& pres_path, const std::string& uni_path) {
  const auto p = std::make_shared<const Pres2Cat>(
      s.loader_for(pres_path).presentation(s.read(pres_path)));
  io::Loader& ul = s.loader_for(uni_path);
  const auto universe = ul.universe(s.read(uni_path));
  const RepEnumeration e = enumerate_reps(p, universe, s.caps());
  if (e.truncated) throw_cap("representation count", s.caps().max_reps);
  Result res;
  res.fact("candidates", static_cast<int>(e.candidates));
  res.fact("classes", static_cast<int>(e.reps.size()));
  res.fact("undecided", yes_no(e.undecided));
  for (std::size_t i = 0; i < e.reps.size(); ++i)
    res.fact("class " + std::to_string(i + 1), rep_summary(e.reps[i], ul.registry()));
  return res;
}

Result check_path(Session& s, const std::string& path) {
  io::Loader& l = s.loader_for(path);
  const Json j = s.read(path);
  if (!j.is_object() || !j.contains("complex") || !j.contains("paths"))
    throw InputError("expected {\"complex\": ..., \"paths\": [...]}");
  const StratSimpComplex k = l.complex(j.at("complex"));
  const Report v = validate_complex(k);
  if (!v.ok()) throw InputError("invalid complex: " + v.violations.front());
  std::vector<std::vector<int>> paths;
  for (const Json& p : j.at("paths")) {
    if (!p.is_array()) throw InputError("a path is a list of vertices");
    paths.push_back(p.get<std::vector<int>>());
  }
  std::vector<bool> verdict;
  for (const auto& p : paths) verdict.push_back(check_exit_path(k, p));
  Result res;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    res.fact("path " + path_string(paths[i]), yes_no(verdict[i]));
    if (!verdict[i])
      res.violations.push_back("path " + path_string(paths[i]) + " decreases stratum dimension");
  }
  return res;
}

// --- Builtins -------------------------------------------------------------------

DescentDatum constant_datum(const DCover& c, const CatPtr& cat) {
  DescentDatum d;
  d.cover = c;
  for (const auto& p : c.pres) d.reps.push_back(constant_rep(p, cat));
  for (const auto& [key, m] : c.incl)
    d.equiv[key] = identity_two_nat(restrict_to(c, d.reps[key.second], key.first, key.second));
  for (const auto& ch : c.chains3())
    d.coherence[ch] = identity_modification(d.equiv.at({std::get<0>(ch), std::get<2>(ch)}));
  return d;
}

// Exchanges the two objects of discrete(2).
Functor swap_functor(const CatPtr& c) {
  return Functor{c, c, {1, 0}, {c->identity(1), c->identity(0)}};
}

void twist(DescentDatum& d, std::pair<int, int> key) {
  TwoNatRep& e = d.equiv.at(key);
  for (auto& comp : e.components) comp = swap_functor(comp.domain);
  for (auto& n : e.naturality) n = identity_nat(e.components[0]);
}

DCover point_cover(const std::vector<std::string>& charts,
                   const std::vector<std::pair<int, int>>& less) {
  Pres2Cat pt;
  pt.add_object("pt");
  const auto p = std::make_shared<const Pres2Cat>(pt);
  DCover c;
  c.charts = charts;
  c.pres.assign(charts.size(), p);
  for (const auto& key : less) c.incl[key] = PresMorphism{{0}, {}, {}};
  return c;
}

io::CatRegistry registry_with(const CatPtr& c, const std::string& label, Json spec) {
  io::CatRegistry reg;
  reg.add(c, label, std::move(spec));
  return reg;
}

Result builtin(Session& s, const std::string& name, int q, int dmax, bool twisted,
               bool broken) {
  Result res;
  if (name == "disk") {
    res.document = io::space_json(disk_space());
  } else if (name == "p1") {
    res.document = io::space_json(p1_space());
  } else if (name == "circle-leaf") {
    res.document = io::space_json(SpaceExpr::leaf(circle_leaf()));
  } else if (name == "deligne") {
    res.document = io::category_json(*build_deligne_cat(q, dmax, s.caps()));
  } else if (name == "fin-vect") {
    res.document = io::category_json(*build_fin_vect(q, dmax, s.caps()));
  } else if (name == "perverse-disk") {
    io::Loader l(s.caps());
    const Rep r = l.rep(Json{{"builtin", "perverse_disk"}, {"q", q}, {"dmax", dmax}});
    res.document = io::rep_json(r, l.registry(), true);
  } else if (name == "p1-datum") {
    const Glue2Cover c = glue2_cover(p1_space());
    const CatPtr cat = discrete_category(2);
    DescentDatum d = constant_datum(c.cover, cat);
    if (twisted) twist(d, {2, 1});
    Json j = io::datum_json(d, registry_with(cat, "discrete(2)", {{"builder", "discrete"}, {"n", 2}}));
    j["cover"] = Json{{"space", io::space_json(p1_space())}};
    res.document = j;
  } else if (name == "circle-datum") {
    // Two arcs a, b meeting in two components o1, o2.
    const DCover c = point_cover({"a", "b", "o1", "o2"}, {{2, 0}, {2, 1}, {3, 0}, {3, 1}});
    const CatPtr cat = discrete_category(2);
    DescentDatum d = constant_datum(c, cat);
    if (twisted) twist(d, {3, 1});
    res.document =
        io::datum_json(d, registry_with(cat, "discrete(2)", {{"builder", "discrete"}, {"n", 2}}));
  } else if (name == "z3-chain") {
    const DCover c = point_cover({"c0", "c1", "c2", "c3"},
                                 {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const CatPtr cat = cyclic_group(3);
    DescentDatum d = constant_datum(c, cat);
    if (broken) {
      NatTransform& n = d.coherence.at({0, 1, 2}).components[0];
      n.components[0] = 1;
    }
    res.document = io::datum_json(
        d, registry_with(cat, "cyclic_group(3)", {{"builder", "cyclic_group"}, {"n", 3}}));
  } else {
    throw InputError("unknown builtin '" + name +
                     "' (disk, p1, circle-leaf, deligne, fin-vect, perverse-disk, p1-datum, "
                     "circle-datum, z3-chain)");
  }
  return res;
}

void render(const Result& res, bool json, const std::string& command, std::ostream& out) {
  std::vector<std::string> sorted = res.violations;
  std::stable_sort(sorted.begin(), sorted.end());
  if (res.document && res.facts.empty() && res.violations.empty()) {
    out << res.document->dump(2) << "\n";
    return;
  }
  if (json) {
    Json j{{"command", command}, {"ok", res.ok()}};
    for (const auto& [k, v] : res.facts) j[k] = v;
    j["violations"] = sorted;
    out << j.dump(2) << "\n";
    return;
  }
  out << res.text;
  for (const auto& [k, v] : res.facts)
    out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& v : sorted) out << "violation: " << v << "\n";
  out << (res.ok() ? "result: ok" : "result: FAILED (" + std::to_string(sorted.size()) +
                                         " violation" + (sorted.size() == 1 ? "" : "s") + ")")
      << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exodus: exit-path 2-categories, representations and descent"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--caps-objects", o.caps_objects, "cap on enumerated objects")
      ->check(CLI::PositiveNumber);
  app.add_option("--caps-morphisms", o.caps_morphisms, "cap on enumerated morphisms")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "seed for sampled checks");

  std::string file = "-", file2;
  std::size_t samples = 0;
  std::string builtin_name;
  int q = 2, dmax = 1;
  bool twisted = false, broken = false;

  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto* c_cat = sub("check-cat", "validate a category file");
  auto* c_2cat = sub("check-2cat", "validate a 2-category file");
  auto* c_pres = sub("exit-pres", "exit presentation of a space");
  auto* c_rep = sub("rep-check", "validate a representation");
  auto* c_sec = sub("sections", "2-limit of a representation");
  auto* c_glue = sub("glue", "glue a descent datum");
  auto* c_desc = sub("descent-check", "check a descent datum");
  auto* c_fac = sub("factor", "factor a triangulated square into elementary moves");
  auto* c_enum = sub("enumerate", "representations up to equivalence");
  auto* c_path = sub("check-path", "check exit paths in a stratified complex");
  auto* c_bi = sub("builtin", "print a built-in document");
  for (auto* c : {c_cat, c_2cat, c_pres, c_rep, c_sec, c_glue, c_desc, c_fac, c_path})
    c->add_option("file", file, "input file, - for standard input");
  c_2cat->add_option("--samples", samples, "random interchange samples (0 = all)");
  c_enum->add_option("presentation", file, "presentation or space file")->required();
  c_enum->add_option("universe", file2, "universe file")->required();
  c_bi->add_option("name", builtin_name, "document name")->required();
  c_bi->add_option("--q", q, "field size")->check(CLI::Range(2, 5));
  c_bi->add_option("--dmax", dmax, "maximal dimension")->check(CLI::Range(0, 4));
  c_bi->add_flag("--twisted", twisted, "non-trivial gluing");
  c_bi->add_flag("--broken", broken, "break one coherence cell");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::ostringstream buffer;
  try {
    Caps caps = Caps::from_env();
    if (o.caps_objects) caps.max_objects = o.caps_objects;
    if (o.caps_morphisms) caps.max_morphisms = o.caps_morphisms;
    Session s(caps, in);
    const bool json = o.format == "json";
    CLI::App* chosen = app.get_subcommands().front();
    const std::string cmd = chosen->get_name();
    Result res;
    if (chosen == c_cat) res = check_cat(s, file);
    else if (chosen == c_2cat) res = check_2cat(s, file, samples, o.seed);
    else if (chosen == c_pres) res = exit_pres(s, file, json);
    else if (chosen == c_rep) res = rep_check(s, file);
    else if (chosen == c_sec) res = sections(s, file);
    else if (chosen == c_glue) res = glue(s, file);
    else if (chosen == c_desc) res = descent_check(s, file);
    else if (chosen == c_fac) res = factor(s, file);
    else if (chosen == c_enum) res = enumerate(s, file, file2);
    else if (chosen == c_path) res = check_path(s, file);
    else res = builtin(s, builtin_name, q, dmax, twisted, broken);
    render(res, json, cmd, buffer);
    out << buffer.str();
    return res.ok() ? kOk : kCheckFailed;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace exodus::cli
