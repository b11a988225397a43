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


#include "exodus/io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "exodus/builders.h"

namespace exodus::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

int integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

int integer_or(const Json& j, const char* key, int dflt) {
  return j.contains(key) ? integer(j, key) : dflt;
}

template <class T>
T checked(const std::optional<T>& v, const std::string& what) {
  if (!v) fail(what);
  return *v;
}

ObjId pres_object(const Pres2Cat& p, const Json& j) {
  const std::string name = str(j, "object name");
  return checked(p.find_object(name), "unknown object '" + name + "'");
}

std::string key_of(int j, int i, const DCover& c) { return c.charts[j] + "<" + c.charts[i]; }

}  // namespace

// ---------------------------------------------------------------------------
// Registry

void CatRegistry::add(const CatPtr& c, std::string label, Json spec) {
  for (const auto& e : entries_)
    if (e.cat.get() == c.get()) return;
  entries_.push_back({c, std::move(label), std::move(spec)});
}

std::string CatRegistry::label(const CatPtr& c) const {
  for (const auto& e : entries_)
    if (e.cat.get() == c.get()) return e.label;
  for (const auto& e : entries_)
    if (same_category(e.cat, c)) return e.label;
  return "category";
}

std::optional<Json> CatRegistry::spec(const CatPtr& c) const {
  for (const auto& e : entries_)
    if (same_category(e.cat, c) && !e.spec.is_null()) return e.spec;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Loader

Loader::Loader(Caps caps, std::filesystem::path base)
    : caps_(caps), base_(std::move(base)) {}

Json Loader::read_file(const std::filesystem::path& path) {
  const std::filesystem::path full = path.is_absolute() || base_.empty() ? path : base_ / path;
  std::ifstream in(full);
  if (!in) fail("cannot open '" + full.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail("'" + full.string() + "' is not valid JSON: " + e.what());
  }
}

Json Loader::resolve(const Json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.size() > 5 && s.substr(s.size() - 5) == ".json") return read_file(s);
  }
  return v;
}

CatPtr Loader::builder_category(const Json& j) {
  const std::string b = str(field(j, "builder"), "builder");
  const std::string key = j.dump();
  if (auto it = by_spec_.find(key); it != by_spec_.end()) return it->second;
  CatPtr c;
  std::string label;
  auto args = [](std::initializer_list<int> xs) {
    std::string s = "(";
    for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + ")";
  };
  if (b == "finset") {
    const int n = integer(j, "n");
    if (n < 0 || n > 4) fail("finset: n must be in 0..4");
    c = finset(n, caps_);
    label = "finset" + args({n});
  } else if (b == "finset_bijections") {
    const int n = integer(j, "n");
    if (n < 0 || n > 5) fail("finset_bijections: n must be in 0..5");
    c = finset_bijections(n);
    label = "finset_bijections" + args({n});
  } else if (b == "fin_vect") {
    const int q = integer(j, "q"), d = integer(j, "dmax");
    c = build_fin_vect(q, d, caps_);
    label = "fin_vect" + args({q, d});
  } else if (b == "deligne") {
    const int q = integer(j, "q"), d = integer(j, "dmax");
    c = build_deligne_cat(q, d, caps_);
    label = "deligne" + args({q, d});
  } else if (b == "disk_sheaf") {
    const int n = integer(j, "nmax");
    c = build_disk_sheaf_cat(n, caps_);
    label = "disk_sheaf" + args({n});
  } else if (b == "terminal") {
    c = terminal_category();
    label = "terminal";
  } else if (b == "discrete") {
    const int n = integer(j, "n");
    if (n < 0 || n > 64) fail("discrete: n must be in 0..64");
    c = discrete_category(n);
    label = "discrete" + args({n});
  } else if (b == "cyclic_group") {
    const int n = integer(j, "n");
    if (n < 1 || n > 64) fail("cyclic_group: n must be in 1..64");
    c = cyclic_group(n);
    label = "cyclic_group" + args({n});
  } else if (b == "symmetric_group") {
    const int n = integer(j, "n");
    if (n < 1 || n > 5) fail("symmetric_group: n must be in 1..5");
    c = symmetric_group(n);
    label = "symmetric_group" + args({n});
  } else if (b == "chain") {
    const int n = integer(j, "n");
    if (n < 1 || n > 64) fail("chain: n must be in 1..64");
    c = chain_category(n);
    label = "chain" + args({n});
  } else {
    fail("unknown category builder '" + b + "'");
  }
  by_spec_.emplace(key, c);
  registry_.add(c, label, j);
  return c;
}

CatPtr Loader::named_category(const Json& j) {
  const std::string name = j.get<std::string>();
  for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
    if (auto f = it->find(name); f != it->end()) return f->second;
  fail("unknown category '" + name + "'");
}

CatPtr Loader::category(const Json& raw) {
  const bool explicit_table = raw.is_object() ? !raw.contains("builder")
                                              : raw.is_string() && raw.get<std::string>().ends_with(".json");
  CatPtr c = unchecked_category(raw);
  if (explicit_table) {
    const Report v = validate_category(*c);
    if (!v.ok()) fail("invalid category: " + v.violations.front());
  }
  return c;
}

CatPtr Loader::unchecked_category(const Json& raw) {
  if (raw.is_string() && !raw.get<std::string>().ends_with(".json")) return named_category(raw);
  const Json j = resolve(raw);
  if (!j.is_object()) fail("a category must be an object");
  if (j.contains("builder")) return builder_category(j);
  FinCat::Builder b;
  std::map<std::string, ObjId> objs;
  for (const Json& o : field(j, "objects")) {
    const std::string name = str(o, "object name");
    if (objs.count(name)) fail("duplicate object id '" + name + "'");
    objs[name] = b.add_object(name);
  }
  std::map<std::string, MorId> mors;
  auto obj = [&](const Json& v) {
    auto it = objs.find(str(v, "object name"));
    if (it == objs.end()) fail("unknown object '" + v.get<std::string>() + "'");
    return it->second;
  };
  auto mor = [&](const Json& v) {
    auto it = mors.find(str(v, "morphism id"));
    if (it == mors.end()) fail("unknown morphism '" + v.get<std::string>() + "'");
    return it->second;
  };
  for (const Json& m : field(j, "morphisms")) {
    const std::string name = str(field(m, "id"), "morphism id");
    if (mors.count(name)) fail("duplicate morphism id '" + name + "'");
    mors[name] = b.add_morphism(name, obj(field(m, "src")), obj(field(m, "dst")));
  }
  std::vector<bool> is_id(b.num_morphisms(), false);
  for (const auto& [o, m] : field(j, "identity").items()) {
    auto it = objs.find(o);
    if (it == objs.end()) fail("identity for unknown object '" + o + "'");
    const MorId id = mor(m);
    b.set_identity(it->second, id);
    is_id[id] = true;
  }
  std::set<std::pair<MorId, MorId>> given;
  if (j.contains("compose")) {
    for (const Json& e : j.at("compose")) {
      if (!e.is_array() || e.size() != 3) fail("compose entries are [g, f, g o f]");
      const MorId g = mor(e[0]), f = mor(e[1]);
      if (!given.emplace(g, f).second) fail("compose entry for (" + e[0].get<std::string>() +
                                            ", " + e[1].get<std::string>() + ") given twice");
      b.set_compose(g, f, mor(e[2]));
    }
  }
  // Composites with an identity default to the other factor.
  for (MorId u = 0; u < b.num_morphisms(); ++u) {
    if (!is_id[u]) continue;
    for (MorId f = 0; f < b.num_morphisms(); ++f) {
      if (b.dst(f) == b.src(u) && !given.count({u, f})) b.set_compose(u, f, f);
      if (b.src(f) == b.dst(u) && !given.count({f, u})) b.set_compose(f, u, f);
    }
  }
  CatPtr c = std::move(b).build_shared();
  registry_.add(c, j.value("name", std::string("category")), nullptr);
  return c;
}

Concrete2Cat Loader::two_category(const Json& raw) {
  const Json j = resolve(raw);
  if (j.contains("builder")) {
    const std::string b = str(j.at("builder"), "builder");
    if (b == "two_group") {
      const int g = integer(j, "g_order"), a = integer(j, "a_order");
      if (g < 1 || a < 1 || g > 16 || a > 16) fail("two_group: orders must be in 1..16");
      return two_group(g, a);
    }
    if (b == "locally_discrete") {
      Concrete2Cat c = locally_discrete(*category(field(j, "category")));
      return c;
    }
    if (b == "cat") {
      std::vector<std::pair<std::string, CatPtr>> objs;
      for (const Json& o : field(j, "objects"))
        objs.emplace_back(str(field(o, "name"), "name"), category(field(o, "category")));
      return cat_2category(objs, caps_);
    }
    fail("unknown 2-category builder '" + b + "'");
  }
  std::vector<std::string> names;
  for (const Json& o : field(j, "objects")) names.push_back(str(o, "object name"));
  const int n = static_cast<int>(names.size());
  auto index = [&](const Json& v) {
    const std::string s = str(v, "object name");
    for (int i = 0; i < n; ++i)
      if (names[i] == s) return i;
    fail("unknown object '" + s + "'");
  };
  std::vector<CatPtr> homs(n * n);
  for (const Json& h : field(j, "homs"))
    homs[index(field(h, "src")) * n + index(field(h, "dst"))] = category(field(h, "category"));
  for (int i = 0; i < n * n; ++i)
    if (!homs[i]) fail("hom(" + names[i / n] + ", " + names[i % n] + ") is missing");
  std::vector<ObjId> units(n);
  for (int x = 0; x < n; ++x)
    units[x] = homs[x * n + x]->object_id(str(field(field(j, "units"), names[x].c_str()), "unit"));
  std::vector<Functor> comps(n * n * n);
  std::vector<bool> seen(n * n * n, false);
  for (const Json& c : field(j, "compose")) {
    const int x = index(field(c, "x")), y = index(field(c, "y")), z = index(field(c, "z"));
    const CatPtr& a = homs[x * n + y];
    const CatPtr& b = homs[y * n + z];
    Functor f{product(b, a), homs[x * n + z], {}, {}};
    f.on_objects.assign(f.domain->num_objects(), -1);
    f.on_morphisms.assign(f.domain->num_morphisms(), kNoMorphism);
    for (const Json& e : field(c, "objects")) {
      if (!e.is_array() || e.size() != 3) fail("composition entries are [g, f, g o f]");
      f.on_objects[b->object_id(str(e[0], "1-cell")) * a->num_objects() +
                   a->object_id(str(e[1], "1-cell"))] = f.codomain->object_id(str(e[2], "1-cell"));
    }
    for (const Json& e : field(c, "morphisms")) {
      if (!e.is_array() || e.size() != 3) fail("composition entries are [b, a, b * a]");
      f.on_morphisms[b->morphism_id(str(e[0], "2-cell")) * a->num_morphisms() +
                     a->morphism_id(str(e[1], "2-cell"))] =
          f.codomain->morphism_id(str(e[2], "2-cell"));
    }
    for (ObjId v : f.on_objects)
      if (v < 0) fail("composition of " + names[x] + "," + names[y] + "," + names[z] + " is incomplete");
    for (MorId v : f.on_morphisms)
      if (v < 0) fail("composition of " + names[x] + "," + names[y] + "," + names[z] + " is incomplete");
    comps[(x * n + y) * n + z] = std::move(f);
    seen[(x * n + y) * n + z] = true;
  }
  for (int i = 0; i < n * n * n; ++i)
    if (!seen[i]) fail("a composition functor is missing");
  return Concrete2Cat(names, homs, comps, units);
}

Word Loader::word(const Pres2Cat& p, const Json& j) {
  const ObjId src = pres_object(p, field(j, "src"));
  std::vector<Letter> letters;
  if (j.contains("letters")) {
    for (const Json& l : j.at("letters")) {
      std::string name = str(l, "letter");
      bool inv = false;
      if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
        inv = true;
        name.resize(name.size() - 3);
      }
      letters.push_back({checked(p.find_gen1(name), "unknown 1-generator '" + name + "'"), inv});
    }
  }
  return make_word(p, src, letters);
}

PastingExpr Loader::expr(const Pres2Cat& p, const Json& j) {
  if (!j.is_object() || j.size() != 1) fail("a pasting expression has exactly one key");
  const auto& [k, v] = *j.items().begin();
  if (k == "gen") {
    const std::string name = str(v, "2-generator");
    return PastingExpr::gen(checked(p.find_gen2(name), "unknown 2-generator '" + name + "'"));
  }
  if (k == "inv") return PastingExpr::inv(expr(p, v));
  if (k == "id") return PastingExpr::id(word(p, v));
  if (k == "vcomp" || k == "hcomp") {
    if (!v.is_array() || v.size() != 2) fail(k + " takes [outer/left, inner/right]");
    return k == "vcomp" ? PastingExpr::vcomp(expr(p, v[0]), expr(p, v[1]))
                        : PastingExpr::hcomp(expr(p, v[0]), expr(p, v[1]));
  }
  fail("unknown pasting expression kind '" + k + "'");
}

Pres2Cat Loader::presentation(const Json& raw) {
  const Json j = resolve(raw);
  if (j.contains("kind")) return exit_presentation(space(j));
  Pres2Cat p;
  for (const Json& o : field(j, "objects")) p.add_object(str(o, "object name"));
  if (j.contains("gen1"))
    for (const Json& g : j.at("gen1"))
      p.add_gen1(str(field(g, "name"), "name"), pres_object(p, field(g, "src")),
                 pres_object(p, field(g, "dst")), g.value("invertible", false));
  if (j.contains("gen2"))
    for (const Json& g : j.at("gen2"))
      p.add_gen2(str(field(g, "name"), "name"), word(p, field(g, "src")), word(p, field(g, "dst")));
  if (j.contains("rel2"))
    for (const Json& r : j.at("rel2"))
      p.rel2.push_back({expr(p, field(r, "lhs")), expr(p, field(r, "rhs"))});
  const Report v = validate_presentation(p);
  if (!v.ok()) fail("invalid presentation: " + v.violations.front());
  return p;
}

SpaceExpr Loader::space(const Json& raw) {
  const Json j = resolve(raw);
  const std::string kind = str(field(j, "kind"), "kind");
  if (kind == "point") return SpaceExpr::point();
  if (kind == "leaf") return SpaceExpr::leaf(presentation(field(j, "presentation")));
  if (kind == "cone")
    return SpaceExpr::cone(space(field(j, "link")), j.value("apex", std::string("*")));
  if (kind == "product") return SpaceExpr::product_r(space(field(j, "base")), integer(j, "k"));
  if (kind == "glue") {
    SpaceExpr a = space(field(j, "a"));
    SpaceExpr b = space(field(j, "b"));
    SpaceExpr o = space(field(j, "overlap"));
    const Pres2Cat pa = exit_presentation(a), pb = exit_presentation(b),
                   po = exit_presentation(o);
    PresMorphism ia = morphism(po, pa, field(j, "incl_a"));
    PresMorphism ib = morphism(po, pb, field(j, "incl_b"));
    return SpaceExpr::glue2(a, b, o, ia, ib);
  }
  if (kind == "builtin") {
    const std::string name = str(field(j, "name"), "name");
    if (name == "disk") return disk_space();
    if (name == "p1") return p1_space();
    if (name == "circle") return SpaceExpr::leaf(circle_leaf());
    fail("unknown builtin space '" + name + "'");
  }
  fail("unknown space kind '" + kind + "'");
}

PresMorphism Loader::morphism(const Pres2Cat& src, const Pres2Cat& dst, const Json& raw) {
  const Json j = resolve(raw);
  PresMorphism m;
  for (const std::string& o : src.objects)
    m.objects.push_back(pres_object(dst, field(field(j, "objects"), o.c_str())));
  for (const Gen1& g : src.gen1) m.gen1.push_back(word(dst, field(field(j, "gen1"), g.name.c_str())));
  for (const Gen2& g : src.gen2) m.gen2.push_back(expr(dst, field(field(j, "gen2"), g.name.c_str())));
  const Report v = validate_morphism(src, dst, m);
  if (!v.ok()) fail("invalid presentation morphism: " + v.violations.front());
  return m;
}

Functor Loader::functor(const CatPtr& c, const CatPtr& d, const Json& j) {
  if (j.is_object() && j.value("identity", false)) {
    if (!same_category(c, d)) fail("identity functor between different categories");
    return identity_functor(c);
  }
  Functor f{c, d, std::vector<ObjId>(c->num_objects(), -1),
            std::vector<MorId>(c->num_morphisms(), kNoMorphism)};
  for (const auto& [k, v] : field(j, "objects").items())
    f.on_objects[c->object_id(k)] = d->object_id(str(v, "object name"));
  for (ObjId x = 0; x < c->num_objects(); ++x) {
    if (f.on_objects[x] < 0) fail("functor does not map object '" + c->object_name(x) + "'");
    f.on_morphisms[c->identity(x)] = d->identity(f.on_objects[x]);
  }
  if (j.contains("morphisms"))
    for (const auto& [k, v] : j.at("morphisms").items())
      f.on_morphisms[c->morphism_id(k)] = d->morphism_id(str(v, "morphism name"));
  for (MorId m = 0; m < c->num_morphisms(); ++m)
    if (f.on_morphisms[m] == kNoMorphism)
      fail("functor does not map morphism '" + c->morphism_name(m) + "'");
  return f;
}

NatTransform Loader::nat(const Functor& f, const Functor& g, const Json& j) {
  if (j.is_object() && j.value("identity", false)) {
    if (!(f == g)) fail("identity natural transformation between different functors");
    return identity_nat(f);
  }
  const FinCat& c = *f.domain;
  NatTransform a{f, g, std::vector<MorId>(c.num_objects(), kNoMorphism)};
  for (const auto& [k, v] : field(j, "components").items())
    a.components[c.object_id(k)] = f.codomain->morphism_id(str(v, "morphism name"));
  for (ObjId x = 0; x < c.num_objects(); ++x)
    if (a.components[x] == kNoMorphism) fail("missing component at '" + c.object_name(x) + "'");
  return a;
}

Rep Loader::rep(const Json& raw, PresPtr pres) {
  const Json j = resolve(raw);
  if (j.contains("builtin")) {
    const std::string name = str(j.at("builtin"), "builtin");
    if (name != "perverse_disk") fail("unknown builtin rep '" + name + "'");
    const int q = integer_or(j, "q", 2), d = integer_or(j, "dmax", 1);
    const auto model = build_perverse_disk_model(q, d, caps_);
    registry_.add(model.vect, "fin_vect(" + std::to_string(q) + "," + std::to_string(d) + ")",
                  Json{{"builder", "fin_vect"}, {"q", q}, {"dmax", d}});
    registry_.add(model.deligne, "deligne(" + std::to_string(q) + "," + std::to_string(d) + ")",
                  Json{{"builder", "deligne"}, {"q", q}, {"dmax", d}});
    return Rep{std::make_shared<const Pres2Cat>(exit_presentation(disk_space())),
               {model.vect, model.deligne},
               {identity_functor(model.vect), model.forget},
               {model.monodromy}};
  }
  if (!pres) pres = std::make_shared<const Pres2Cat>(presentation(field(j, "presentation")));
  const Pres2Cat& p = *pres;
  scopes_.emplace_back();
  if (j.contains("categories"))
    for (const auto& [k, v] : j.at("categories").items()) {
      CatPtr c = category(v);
      if (!v.contains("builder")) registry_.add(c, k, nullptr);
      scopes_.back()[k] = c;
    }
  Rep r{pres, {}, {}, {}};
  for (const std::string& o : p.objects) r.objects.push_back(category(field(field(j, "objects"), o.c_str())));
  // Words are evaluated against the generators read so far.
  for (const Gen1& g : p.gen1)
    r.gen1.push_back(functor(r.objects[g.src], r.objects[g.dst],
                             field(field(j, "gen1"), g.name.c_str())));
  Rep partial = r;
  partial.gen2.resize(p.gen2.size());
  for (const Gen2& g : p.gen2) {
    Functor s = identity_functor(r.objects[g.src.src]);
    for (const Letter& l : g.src.letters) {
      auto inv = l.inverse ? inverse_functor(r.gen1[l.gen]) : std::optional<Functor>(r.gen1[l.gen]);
      if (!inv) fail("inverse letter on a generator with a non-invertible value");
      s = compose(*inv, s);
    }
    Functor t = identity_functor(r.objects[g.dst.src]);
    for (const Letter& l : g.dst.letters) {
      auto inv = l.inverse ? inverse_functor(r.gen1[l.gen]) : std::optional<Functor>(r.gen1[l.gen]);
      if (!inv) fail("inverse letter on a generator with a non-invertible value");
      t = compose(*inv, t);
    }
    r.gen2.push_back(nat(s, t, field(field(j, "gen2"), g.name.c_str())));
  }
  scopes_.pop_back();
  return r;
}

std::vector<CatPtr> Loader::universe(const Json& raw) {
  const Json j = resolve(raw);
  const Json& list = j.is_array() ? j : field(j, "categories");
  std::vector<CatPtr> out;
  for (const Json& c : list) out.push_back(category(c));
  if (out.empty()) fail("a universe needs at least one category");
  return out;
}

DCover Loader::cover(const Json& raw) {
  const Json j = resolve(raw);
  DCover c;
  std::map<std::string, int> idx;
  for (const Json& ch : field(j, "charts")) {
    const std::string name = str(field(ch, "name"), "chart name");
    if (idx.count(name)) fail("duplicate chart '" + name + "'");
    idx[name] = c.size();
    c.charts.push_back(name);
    c.pres.push_back(std::make_shared<const Pres2Cat>(presentation(field(ch, "presentation"))));
  }
  auto chart = [&](const Json& v) {
    auto it = idx.find(str(v, "chart name"));
    if (it == idx.end()) fail("unknown chart '" + v.get<std::string>() + "'");
    return it->second;
  };
  for (const Json& e : field(j, "leq")) {
    if (!e.is_array() || e.size() != 2) fail("leq entries are [smaller, larger]");
    const int a = chart(e[0]), b = chart(e[1]);
    const std::string key = c.charts[a] + "<" + c.charts[b];
    const Json* m = j.contains("restriction") && j.at("restriction").contains(key)
                        ? &j.at("restriction").at(key)
                        : nullptr;
    if (!m) fail("missing restriction '" + key + "'");
    c.incl[{a, b}] = morphism(*c.pres[a], *c.pres[b], *m);
  }
  return c;
}

Loader::LoadedDatum Loader::datum(const Json& raw) {
  const Json j = resolve(raw);
  LoadedDatum out;
  const Json& cj = field(j, "cover");
  const Json cov = resolve(cj);
  if (cov.contains("space")) {
    const SpaceExpr x = space(cov.at("space"));
    out.glue2 = glue2_cover(x);
    out.datum.cover = out.glue2->cover;
  } else {
    out.datum.cover = cover(cov);
  }
  DescentDatum& d = out.datum;
  const DCover& c = d.cover;
  scopes_.emplace_back();
  if (j.contains("categories"))
    for (const auto& [k, v] : j.at("categories").items()) {
      CatPtr cat = category(v);
      if (!v.contains("builder")) registry_.add(cat, k, nullptr);
      scopes_.back()[k] = cat;
    }
  for (int i = 0; i < c.size(); ++i)
    d.reps.push_back(rep(field(field(j, "reps"), c.charts[i].c_str()), c.pres[i]));
  const Json empty = Json::object();
  const Json& eq = j.contains("equiv") ? j.at("equiv") : empty;
  for (const auto& [key, m] : c.incl) {
    const auto [a, b] = key;
    const std::string name = key_of(a, b, c);
    if (!eq.contains(name)) fail("missing equivalence '" + name + "'");
    const Json& e = eq.at(name);
    const Rep src = restrict_to(c, d.reps[b], a, b);
    const Rep& dst = d.reps[a];
    const Pres2Cat& p = *c.pres[a];
    TwoNatRep n{src, dst, {}, {}};
    for (int o = 0; o < p.num_objects(); ++o)
      n.components.push_back(functor(src.objects[o], dst.objects[o],
                                     field(field(e, "components"), p.objects[o].c_str())));
    for (std::size_t g = 0; g < p.gen1.size(); ++g) {
      const Gen1& gen = p.gen1[g];
      n.naturality.push_back(nat(compose(dst.gen1[g], n.components[gen.src]),
                                 compose(n.components[gen.dst], src.gen1[g]),
                                 field(field(e, "naturality"), gen.name.c_str())));
    }
    d.equiv[key] = std::move(n);
  }
  const Json& co = j.contains("coherence") ? j.at("coherence") : empty;
  for (const auto& ch : c.chains3()) {
    const auto [k, jj, i] = ch;
    const std::string name = c.charts[k] + "<" + c.charts[jj] + "<" + c.charts[i];
    if (!co.contains(name)) fail("missing coherence cell '" + name + "'");
    const TwoNatRep src =
        compose(d.equiv.at({k, jj}), restrict_two_nat(d.equiv.at({jj, i}), c.pres[k], c.incl.at({k, jj})));
    const TwoNatRep& dst = d.equiv.at({k, i});
    ModificationRep th{src, dst, {}};
    const Pres2Cat& p = *c.pres[k];
    for (int o = 0; o < p.num_objects(); ++o)
      th.components.push_back(nat(src.components[o], dst.components[o],
                                  field(field(co.at(name), "components"), p.objects[o].c_str())));
    d.coherence[ch] = std::move(th);
  }
  scopes_.pop_back();
  return out;
}

TriangulatedSquare Loader::square(const Json& raw) {
  const Json j = resolve(raw);
  TriangulatedSquare t;
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    const int rows = integer(g, "rows"), cols = integer(g, "cols");
    if (rows < 1 || cols < 1 || rows * cols > 10000) fail("grid size out of range");
    std::vector<bool> diag(rows * cols, false);
    if (g.contains("diag")) {
      const Json& dj = g.at("diag");
      if (!dj.is_array() || static_cast<int>(dj.size()) != rows * cols)
        fail("diag needs one entry per cell");
      for (int i = 0; i < rows * cols; ++i) diag[i] = dj[i].get<int>() != 0;
    }
    std::vector<std::string> charts;
    if (g.contains("charts"))
      for (const Json& c : g.at("charts")) charts.push_back(str(c, "chart"));
    t = grid_square(rows, cols, diag, charts);
  } else {
    t.num_vertices = integer(j, "vertices");
    for (const Json& tri : field(j, "triangles")) {
      if (!tri.is_array() || tri.size() != 3) fail("triangles are vertex triples");
      t.triangles.push_back({tri[0].get<int>(), tri[1].get<int>(), tri[2].get<int>()});
    }
    if (j.contains("charts"))
      for (const Json& c : j.at("charts")) t.chart.push_back(str(c, "chart"));
    else
      t.chart.assign(t.triangles.size(), "u");
    t.left = field(j, "left").get<std::vector<int>>();
    t.right = field(j, "right").get<std::vector<int>>();
    t.bottom = field(j, "bottom").get<std::vector<int>>();
    t.top = field(j, "top").get<std::vector<int>>();
  }
  for (int s = integer_or(j, "subdivide", 0); s > 0; --s) t = barycentric_subdivide(t);
  validate_square(t);
  return t;
}

StratSimpComplex Loader::complex(const Json& raw) {
  const Json j = resolve(raw);
  if (j.contains("builtin")) {
    if (str(j.at("builtin"), "builtin") != "disk") fail("unknown builtin complex");
    return stratified_disk_complex(integer_or(j, "ring", 4));
  }
  StratSimpComplex k;
  k.num_vertices = integer(j, "vertices");
  for (const Json& s : field(j, "simplices")) {
    k.simplices.push_back(field(s, "vertices").get<std::vector<int>>());
    k.stratum_dim.push_back(integer(s, "dim"));
  }
  return k;
}

// ---------------------------------------------------------------------------
// Writers

Json category_json(const FinCat& c) {
  Json j;
  j["objects"] = Json::array();
  for (ObjId x = 0; x < c.num_objects(); ++x) j["objects"].push_back(c.object_name(x));
  j["morphisms"] = Json::array();
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    j["morphisms"].push_back({{"id", c.morphism_name(f)},
                              {"src", c.object_name(c.src(f))},
                              {"dst", c.object_name(c.dst(f))}});
  j["identity"] = Json::object();
  for (ObjId x = 0; x < c.num_objects(); ++x)
    j["identity"][c.object_name(x)] = c.morphism_name(c.identity(x));
  j["compose"] = Json::array();
  for (ObjId y = 0; y < c.num_objects(); ++y)
    for (MorId f : c.in(y))
      for (MorId g : c.out(y)) {
        const MorId gf = c.compose_unchecked(g, f);
        if (gf == kNoMorphism) continue;
        if (c.is_identity(g) && gf == f) continue;
        if (c.is_identity(f) && gf == g) continue;
        j["compose"].push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(gf)});
      }
  return j;
}

Json word_json(const Pres2Cat& p, const Word& w) {
  Json j{{"src", p.objects[w.src]}, {"letters", Json::array()}};
  for (const Letter& l : w.letters)
    j["letters"].push_back(p.gen1[l.gen].name + (l.inverse ? "^-1" : ""));
  return j;
}

Json expr_json(const Pres2Cat& p, const PastingExpr& e) {
  using Kind = PastingExpr::Kind;
  switch (e.kind()) {
    case Kind::kGen:
      return Json{{"gen", p.gen2[e.gen_index()].name}};
    case Kind::kInv:
      return Json{{"inv", expr_json(p, e.first())}};
    case Kind::kId:
      return Json{{"id", word_json(p, e.word())}};
    case Kind::kVComp:
      return Json{{"vcomp", Json::array({expr_json(p, e.first()), expr_json(p, e.second())})}};
    case Kind::kHComp:
      return Json{{"hcomp", Json::array({expr_json(p, e.first()), expr_json(p, e.second())})}};
  }
  return nullptr;
}

Json presentation_json(const Pres2Cat& p) {
  Json j{{"objects", p.objects}, {"gen1", Json::array()}, {"gen2", Json::array()},
         {"rel2", Json::array()}};
  for (const Gen1& g : p.gen1) {
    Json e{{"name", g.name}, {"src", p.objects[g.src]}, {"dst", p.objects[g.dst]}};
    if (g.invertible) e["invertible"] = true;
    j["gen1"].push_back(std::move(e));
  }
  for (const Gen2& g : p.gen2)
    j["gen2"].push_back({{"name", g.name}, {"src", word_json(p, g.src)}, {"dst", word_json(p, g.dst)}});
  for (const Rel2& r : p.rel2)
    j["rel2"].push_back({{"lhs", expr_json(p, r.lhs)}, {"rhs", expr_json(p, r.rhs)}});
  return j;
}

Json morphism_json(const Pres2Cat& src, const Pres2Cat& dst, const PresMorphism& m) {
  Json j{{"objects", Json::object()}, {"gen1", Json::object()}, {"gen2", Json::object()}};
  for (int o = 0; o < src.num_objects(); ++o) j["objects"][src.objects[o]] = dst.objects[m.objects[o]];
  for (std::size_t g = 0; g < src.gen1.size(); ++g) j["gen1"][src.gen1[g].name] = word_json(dst, m.gen1[g]);
  for (std::size_t g = 0; g < src.gen2.size(); ++g) j["gen2"][src.gen2[g].name] = expr_json(dst, m.gen2[g]);
  return j;
}

Json space_json(const SpaceExpr& x) {
  using Kind = SpaceExpr::Kind;
  switch (x.kind()) {
    case Kind::kPoint:
      return Json{{"kind", "point"}};
    case Kind::kLeaf:
      return Json{{"kind", "leaf"}, {"presentation", presentation_json(x.leaf_presentation())}};
    case Kind::kCone:
      return Json{{"kind", "cone"}, {"apex", x.apex()}, {"link", space_json(x.child(0))}};
    case Kind::kProductR:
      return Json{{"kind", "product"}, {"k", x.k()}, {"base", space_json(x.child(0))}};
    case Kind::kGlue2: {
      const Pres2Cat pa = exit_presentation(x.child(0)), pb = exit_presentation(x.child(1)),
                     po = exit_presentation(x.child(2));
      return Json{{"kind", "glue"},
                  {"a", space_json(x.child(0))},
                  {"b", space_json(x.child(1))},
                  {"overlap", space_json(x.child(2))},
                  {"incl_a", morphism_json(po, pa, x.incl_a())},
                  {"incl_b", morphism_json(po, pb, x.incl_b())}};
    }
  }
  return nullptr;
}

Json functor_json(const Functor& f) {
  const FinCat& c = *f.domain;
  const FinCat& d = *f.codomain;
  Json j{{"objects", Json::object()}, {"morphisms", Json::object()}};
  for (ObjId x = 0; x < c.num_objects(); ++x) j["objects"][c.object_name(x)] = d.object_name(f.obj(x));
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    if (!c.is_identity(m)) j["morphisms"][c.morphism_name(m)] = d.morphism_name(f.mor(m));
  return j;
}

Json nat_json(const NatTransform& a) {
  const FinCat& c = *a.source.domain;
  Json j{{"components", Json::object()}};
  for (ObjId x = 0; x < c.num_objects(); ++x)
    j["components"][c.object_name(x)] = a.source.codomain->morphism_name(a.at(x));
  return j;
}

namespace {

// Names categories in first-use order, writing builder specs when known.
struct CatNamer {
  const CatRegistry& reg;
  std::vector<CatPtr> cats;
  Json block = Json::object();

  std::string name(const CatPtr& c) {
    for (std::size_t i = 0; i < cats.size(); ++i)
      if (same_category(cats[i], c)) return "c" + std::to_string(i);
    cats.push_back(c);
    const std::string n = "c" + std::to_string(cats.size() - 1);
    auto spec = reg.spec(c);
    block[n] = spec ? *spec : category_json(*c);
    return n;
  }
};

Json rep_body(const Rep& r, CatNamer& names) {
  const Pres2Cat& p = *r.source;
  Json j{{"objects", Json::object()}, {"gen1", Json::object()}, {"gen2", Json::object()}};
  for (int o = 0; o < p.num_objects(); ++o) j["objects"][p.objects[o]] = names.name(r.objects[o]);
  for (std::size_t g = 0; g < p.gen1.size(); ++g) {
    const Functor& f = r.gen1[g];
    j["gen1"][p.gen1[g].name] =
        f == identity_functor(f.domain) ? Json{{"identity", true}} : functor_json(f);
  }
  for (std::size_t s = 0; s < p.gen2.size(); ++s) j["gen2"][p.gen2[s].name] = nat_json(r.gen2[s]);
  return j;
}

}  // namespace

Json rep_json(const Rep& r, const CatRegistry& reg, bool with_presentation) {
  CatNamer names{reg, {}};
  Json body = rep_body(r, names);
  Json j;
  if (with_presentation) j["presentation"] = presentation_json(*r.source);
  j["categories"] = names.block;
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json cover_json(const DCover& c) {
  Json j{{"charts", Json::array()}, {"leq", Json::array()}, {"restriction", Json::object()}};
  for (int i = 0; i < c.size(); ++i)
    j["charts"].push_back({{"name", c.charts[i]}, {"presentation", presentation_json(*c.pres[i])}});
  for (const auto& [key, m] : c.incl) {
    j["leq"].push_back({c.charts[key.first], c.charts[key.second]});
    j["restriction"][key_of(key.first, key.second, c)] =
        morphism_json(*c.pres[key.first], *c.pres[key.second], m);
  }
  return j;
}

Json datum_json(const DescentDatum& d, const CatRegistry& reg) {
  const DCover& c = d.cover;
  CatNamer names{reg, {}};
  Json reps = Json::object();
  for (int i = 0; i < c.size(); ++i) reps[c.charts[i]] = rep_body(d.reps[i], names);
  Json eq = Json::object();
  for (const auto& [key, e] : d.equiv) {
    const Pres2Cat& p = *c.pres[key.first];
    Json ej{{"components", Json::object()}, {"naturality", Json::object()}};
    for (int o = 0; o < p.num_objects(); ++o) ej["components"][p.objects[o]] = functor_json(e.components[o]);
    for (std::size_t g = 0; g < p.gen1.size(); ++g)
      ej["naturality"][p.gen1[g].name] = nat_json(e.naturality[g]);
    eq[key_of(key.first, key.second, c)] = ej;
  }
  Json co = Json::object();
  for (const auto& [key, th] : d.coherence) {
    const auto [k, j, i] = key;
    const Pres2Cat& p = *c.pres[k];
    Json tj{{"components", Json::object()}};
    for (int o = 0; o < p.num_objects(); ++o) tj["components"][p.objects[o]] = nat_json(th.components[o]);
    co[c.charts[k] + "<" + c.charts[j] + "<" + c.charts[i]] = tj;
  }
  return Json{{"cover", cover_json(c)}, {"categories", names.block}, {"reps", reps},
              {"equiv", eq}, {"coherence", co}};
}

}  // namespace exodus::io
