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

#include "exodus/fincat.h"

#include <algorithm>
#include <numeric>

#include "exodus/kernels.h"

namespace exodus {

// ---------------------------------------------------------------------------
// FinCat

std::span<const MorId> FinCat::hom(ObjId x, ObjId y) const {
  const auto& o = out_[x];
  auto lo = std::lower_bound(o.begin(), o.end(), y, [&](MorId f, ObjId t) {
    return morphisms_[f].dst < t;
  });
  auto hi = std::upper_bound(lo, o.end(), y, [&](ObjId t, MorId f) {
    return t < morphisms_[f].dst;
  });
  return {o.data() + (lo - o.begin()), static_cast<std::size_t>(hi - lo)};
}

MorId FinCat::compose(MorId g, MorId f) const {
  if (morphisms_[f].dst != morphisms_[g].src)
    throw InputError("cannot compose " + morphisms_[g].name + " o " +
                     morphisms_[f].name + ": endpoints do not match");
  return compose_unchecked(g, f);
}

std::optional<ObjId> FinCat::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCat::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

ObjId FinCat::object_id(std::string_view name) const {
  auto x = find_object(name);
  if (!x) throw InputError("unknown object '" + std::string(name) + "'");
  return *x;
}

MorId FinCat::morphism_id(std::string_view name) const {
  auto f = find_morphism(name);
  if (!f) throw InputError("unknown morphism '" + std::string(name) + "'");
  return *f;
}

std::optional<MorId> FinCat::inverse(MorId f) const {
  const ObjId x = src(f), y = dst(f);
  for (MorId g : hom(y, x)) {
    if (compose_unchecked(g, f) == identity_[x] &&
        compose_unchecked(f, g) == identity_[y])
      return g;
  }
  return std::nullopt;
}

bool FinCat::operator==(const FinCat& other) const {
  if (object_names_ != other.object_names_) return false;
  if (morphisms_.size() != other.morphisms_.size()) return false;
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    const auto& a = morphisms_[i];
    const auto& b = other.morphisms_[i];
    if (a.name != b.name || a.src != b.src || a.dst != b.dst) return false;
  }
  return identity_ == other.identity_ && table_ == other.table_;
}

// ---------------------------------------------------------------------------
// Builder

ObjId FinCat::Builder::add_object(std::string name) {
  cat_.object_names_.push_back(std::move(name));
  cat_.identity_.push_back(kNoMorphism);
  return static_cast<ObjId>(cat_.object_names_.size() - 1);
}

MorId FinCat::Builder::add_morphism(std::string name, ObjId src, ObjId dst) {
  const int n = num_objects();
  if (src < 0 || src >= n || dst < 0 || dst >= n)
    throw InputError("morphism '" + name + "' has a dangling endpoint");
  cat_.morphisms_.push_back({std::move(name), src, dst});
  return static_cast<MorId>(cat_.morphisms_.size() - 1);
}

MorId FinCat::Builder::add_identity(ObjId x, std::string name) {
  const MorId f = add_morphism(std::move(name), x, x);
  cat_.identity_[x] = f;
  return f;
}

void FinCat::Builder::set_identity(ObjId x, MorId f) {
  if (x < 0 || x >= num_objects() || f < 0 || f >= num_morphisms())
    throw InputError("identity entry refers to a dangling id");
  cat_.identity_[x] = f;
}

void FinCat::Builder::set_compose(MorId g, MorId f, MorId gf) {
  const int m = num_morphisms();
  if (g < 0 || g >= m || f < 0 || f >= m || gf < 0 || gf >= m)
    throw InputError("composition entry refers to a dangling morphism id");
  entries_.emplace_back(g, f, gf);
}

void FinCat::Builder::index() {
  if (indexed_) return;
  indexed_ = true;
  FinCat& c = cat_;
  const int n = c.num_objects();
  const int m = c.num_morphisms();
  c.out_.assign(n, {});
  c.in_.assign(n, {});
  for (MorId f = 0; f < m; ++f) {
    c.out_[c.morphisms_[f].src].push_back(f);
    c.in_[c.morphisms_[f].dst].push_back(f);
  }
  for (ObjId x = 0; x < n; ++x) {
    std::stable_sort(c.out_[x].begin(), c.out_[x].end(), [&](MorId a, MorId b) {
      return c.morphisms_[a].dst < c.morphisms_[b].dst;
    });
    std::stable_sort(c.in_[x].begin(), c.in_[x].end(), [&](MorId a, MorId b) {
      return c.morphisms_[a].src < c.morphisms_[b].src;
    });
  }
  c.out_pos_.assign(m, 0);
  c.in_pos_.assign(m, 0);
  for (ObjId x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < c.out_[x].size(); ++i) c.out_pos_[c.out_[x][i]] = i;
    for (std::size_t i = 0; i < c.in_[x].size(); ++i) c.in_pos_[c.in_[x][i]] = i;
  }
  c.table_.assign(n, {});
  for (ObjId y = 0; y < n; ++y)
    c.table_[y].assign(c.in_[y].size() * c.out_[y].size(), kNoMorphism);
}

void FinCat::Builder::fill_compose(
    const std::function<MorId(MorId, MorId)>& fn) {
  index();
  FinCat& c = cat_;
  for (ObjId y = 0; y < c.num_objects(); ++y) {
    for (MorId f : c.in_[y]) {
      for (MorId g : c.out_[y]) {
        c.table_[y][c.in_pos_[f] * c.out_[y].size() + c.out_pos_[g]] = fn(g, f);
      }
    }
  }
}

FinCat FinCat::Builder::build() && {
  index();
  FinCat& c = cat_;
  for (std::size_t x = 0; x < c.object_names_.size(); ++x) {
    if (!c.object_index_.emplace(c.object_names_[x], x).second)
      throw InputError("duplicate object id '" + c.object_names_[x] + "'");
  }
  for (std::size_t f = 0; f < c.morphisms_.size(); ++f) {
    if (!c.morphism_index_.emplace(c.morphisms_[f].name, f).second)
      throw InputError("duplicate morphism id '" + c.morphisms_[f].name + "'");
  }
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    const MorId id = c.identity_[x];
    if (id == kNoMorphism)
      throw InputError("object '" + c.object_names_[x] + "' has no identity");
    if (c.src(id) != x || c.dst(id) != x)
      throw InputError("identity of '" + c.object_names_[x] +
                       "' is not an endomorphism of it");
  }
  for (auto [g, f, gf] : entries_) {
    if (c.dst(f) != c.src(g))
      throw InputError("composition entry " + c.morphism_name(g) + " o " +
                       c.morphism_name(f) + " is not composable");
    const ObjId y = c.dst(f);
    MorId& slot = c.table_[y][c.in_pos_[f] * c.out_[y].size() + c.out_pos_[g]];
    if (slot != kNoMorphism && slot != gf)
      throw InputError("conflicting composition entries for " +
                       c.morphism_name(g) + " o " + c.morphism_name(f));
    slot = gf;
  }
  entries_.clear();
  return std::move(cat_);
}

CatPtr FinCat::Builder::build_shared() && {
  return std::make_shared<const FinCat>(std::move(*this).build());
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------
// Functors and natural transformations

bool operator==(const Functor& a, const Functor& b) {
  return a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms &&
         same_category(a.domain, b.domain) &&
         same_category(a.codomain, b.codomain);
}

bool operator==(const NatTransform& a, const NatTransform& b) {
  return a.components == b.components && a.source == b.source &&
         a.target == b.target;
}

Functor identity_functor(const CatPtr& c) {
  Functor f{c, c, {}, {}};
  f.on_objects.resize(c->num_objects());
  std::iota(f.on_objects.begin(), f.on_objects.end(), 0);
  f.on_morphisms.resize(c->num_morphisms());
  std::iota(f.on_morphisms.begin(), f.on_morphisms.end(), 0);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.codomain, g.domain))
    throw InputError("functor composition: codomain/domain mismatch");
  Functor h{f.domain, g.codomain, {}, {}};
  h.on_objects.reserve(f.on_objects.size());
  for (ObjId x : f.on_objects) h.on_objects.push_back(g.obj(x));
  h.on_morphisms.reserve(f.on_morphisms.size());
  for (MorId m : f.on_morphisms) h.on_morphisms.push_back(g.mor(m));
  return h;
}

std::optional<Functor> inverse_functor(const Functor& f) {
  const FinCat& c = *f.domain;
  const FinCat& d = *f.codomain;
  if (c.num_objects() != d.num_objects() ||
      c.num_morphisms() != d.num_morphisms())
    return std::nullopt;
  Functor g{f.codomain, f.domain,
            std::vector<ObjId>(d.num_objects(), -1),
            std::vector<MorId>(d.num_morphisms(), kNoMorphism)};
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (g.on_objects[f.obj(x)] != -1) return std::nullopt;
    g.on_objects[f.obj(x)] = x;
  }
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    if (g.on_morphisms[f.mor(m)] != kNoMorphism) return std::nullopt;
    g.on_morphisms[f.mor(m)] = m;
  }
  return g;
}

bool is_isomorphism(const Functor& f) { return inverse_functor(f).has_value(); }

NatTransform identity_nat(const Functor& f) {
  NatTransform a{f, f, {}};
  a.components.reserve(f.on_objects.size());
  for (ObjId x : f.on_objects) a.components.push_back(f.codomain->identity(x));
  return a;
}

NatTransform vcompose(const NatTransform& b, const NatTransform& a) {
  if (!(a.target == b.source))
    throw InputError("vertical composition: target/source mismatch");
  NatTransform c{a.source, b.target, {}};
  const FinCat& d = *a.source.codomain;
  c.components.reserve(a.components.size());
  for (std::size_t x = 0; x < a.components.size(); ++x)
    c.components.push_back(d.compose(b.components[x], a.components[x]));
  return c;
}

NatTransform whisker_left(const Functor& g, const NatTransform& a) {
  NatTransform c{compose(g, a.source), compose(g, a.target), {}};
  c.components.reserve(a.components.size());
  for (MorId m : a.components) c.components.push_back(g.mor(m));
  return c;
}

NatTransform whisker_right(const NatTransform& a, const Functor& f) {
  NatTransform c{compose(a.source, f), compose(a.target, f), {}};
  c.components.reserve(f.on_objects.size());
  for (ObjId x : f.on_objects) c.components.push_back(a.components[x]);
  return c;
}

NatTransform hcompose(const NatTransform& b, const NatTransform& a) {
  return vcompose(whisker_right(b, a.target), whisker_left(b.source, a));
}

std::optional<NatTransform> inverse(const NatTransform& a) {
  NatTransform b{a.target, a.source, {}};
  const FinCat& d = *a.source.codomain;
  b.components.reserve(a.components.size());
  for (MorId m : a.components) {
    auto inv = d.inverse(m);
    if (!inv) return std::nullopt;
    b.components.push_back(*inv);
  }
  return b;
}

bool is_invertible(const NatTransform& a) { return inverse(a).has_value(); }

// ---------------------------------------------------------------------------
// Validation

Report validate_category(const FinCat& c) {
  Report r;
  for (ObjId y = 0; y < c.num_objects(); ++y) {
    for (MorId f : c.in(y)) {
      for (MorId g : c.out(y)) {
        const MorId gf = c.compose_unchecked(g, f);
        const std::string pair = c.morphism_name(g) + " o " + c.morphism_name(f);
        if (gf == kNoMorphism) {
          r.add("missing composite " + pair);
        } else if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g)) {
          r.add("closure: " + pair + " = " + c.morphism_name(gf) +
                " has the wrong endpoints");
        }
      }
    }
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    const MorId lhs = c.compose_unchecked(c.identity(c.dst(f)), f);
    if (lhs != f)
      r.add("identity law: " + c.morphism_name(c.identity(c.dst(f))) + " o " +
            c.morphism_name(f) + " != " + c.morphism_name(f));
    const MorId rhs = c.compose_unchecked(f, c.identity(c.src(f)));
    if (rhs != f)
      r.add("identity law: " + c.morphism_name(f) + " o " +
            c.morphism_name(c.identity(c.src(f))) + " != " + c.morphism_name(f));
  }
  if (!r.ok()) return r;  // associativity is meaningless without closure
  for (const auto& t : kernels::associativity_failures_parallel(c)) {
    r.add("associativity: (" + c.morphism_name(t.h) + " o " +
          c.morphism_name(t.g) + ") o " + c.morphism_name(t.f) + " != " +
          c.morphism_name(t.h) + " o (" + c.morphism_name(t.g) + " o " +
          c.morphism_name(t.f) + ")");
  }
  return r;
}

Report validate_functor(const Functor& fn) {
  Report r;
  const FinCat& c = *fn.domain;
  const FinCat& d = *fn.codomain;
  if (static_cast<int>(fn.on_objects.size()) != c.num_objects() ||
      static_cast<int>(fn.on_morphisms.size()) != c.num_morphisms()) {
    r.add("functor tables do not cover the domain");
    return r;
  }
  for (ObjId x : fn.on_objects)
    if (x < 0 || x >= d.num_objects()) {
      r.add("functor sends an object outside the codomain");
      return r;
    }
  for (MorId m : fn.on_morphisms)
    if (m < 0 || m >= d.num_morphisms()) {
      r.add("functor sends a morphism outside the codomain");
      return r;
    }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (d.src(fn.mor(f)) != fn.obj(c.src(f)) ||
        d.dst(fn.mor(f)) != fn.obj(c.dst(f)))
      r.add("functor does not preserve endpoints of " + c.morphism_name(f));
  }
  for (ObjId x = 0; x < c.num_objects(); ++x)
    if (fn.mor(c.identity(x)) != d.identity(fn.obj(x)))
      r.add("functor does not preserve the identity of " + c.object_name(x));
  if (!r.ok()) return r;
  for (ObjId y = 0; y < c.num_objects(); ++y)
    for (MorId f : c.in(y))
      for (MorId g : c.out(y)) {
        const MorId gf = c.compose_unchecked(g, f);
        if (gf == kNoMorphism) continue;
        if (fn.mor(gf) != d.compose_unchecked(fn.mor(g), fn.mor(f)))
          r.add("functor does not preserve " + c.morphism_name(g) + " o " +
                c.morphism_name(f));
      }
  return r;
}

Report validate_nat(const NatTransform& a) {
  Report r;
  const FinCat& c = *a.source.domain;
  const FinCat& d = *a.source.codomain;
  if (!same_category(a.source.domain, a.target.domain) ||
      !same_category(a.source.codomain, a.target.codomain)) {
    r.add("natural transformation between non-parallel functors");
    return r;
  }
  if (static_cast<int>(a.components.size()) != c.num_objects()) {
    r.add("natural transformation has the wrong number of components");
    return r;
  }
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    const MorId m = a.at(x);
    if (m < 0 || m >= d.num_morphisms() || d.src(m) != a.source.obj(x) ||
        d.dst(m) != a.target.obj(x)) {
      r.add("component at " + c.object_name(x) + " has the wrong type");
      return r;
    }
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    const ObjId x = c.src(f), y = c.dst(f);
    if (d.compose_unchecked(a.target.mor(f), a.at(x)) !=
        d.compose_unchecked(a.at(y), a.source.mor(f)))
      r.add("naturality fails at " + c.morphism_name(f));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d,
                                        const Caps& caps) {
  return kernels::enumerate_functors_parallel(c, d, caps);
}

std::vector<NatTransform> enumerate_nats(const Functor& f, const Functor& g,
                                         bool invertible_only,
                                         const Caps& caps) {
  const FinCat& c = *f.domain;
  const FinCat& d = *f.codomain;
  const int n = c.num_objects();
  std::vector<std::vector<MorId>> candidates(n);
  for (ObjId x = 0; x < n; ++x) {
    for (MorId m : d.hom(f.obj(x), g.obj(x)))
      if (!invertible_only || d.is_iso(m)) candidates[x].push_back(m);
    if (candidates[x].empty()) return {};
  }
  // Naturality constraints, each checked once both endpoints are assigned.
  std::vector<std::vector<MorId>> checks(n);
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    checks[std::max(c.src(m), c.dst(m))].push_back(m);
  }
  std::vector<NatTransform> out;
  std::vector<MorId> comp(n, kNoMorphism);
  std::function<void(ObjId)> rec = [&](ObjId x) {
    if (x == n) {
      if (out.size() >= caps.max_morphisms)
        throw_cap("natural transformation count", caps.max_morphisms);
      out.push_back({f, g, comp});
      return;
    }
    for (MorId m : candidates[x]) {
      comp[x] = m;
      bool ok = true;
      for (MorId e : checks[x]) {
        const ObjId s = c.src(e), t = c.dst(e);
        if (d.compose_unchecked(g.mor(e), comp[s]) !=
            d.compose_unchecked(comp[t], f.mor(e))) {
          ok = false;
          break;
        }
      }
      if (ok) rec(x + 1);
    }
  };
  rec(0);
  return out;
}

std::string table_key(std::span<const std::int32_t> a,
                      std::span<const std::int32_t> b) {
  std::string key;
  key.reserve(4 * (a.size() + b.size()) + 1);
  for (auto v : a) {
    key += std::to_string(v);
    key += ',';
  }
  key += '|';
  for (auto v : b) {
    key += std::to_string(v);
    key += ',';
  }
  return key;
}

namespace {

std::string nat_key(ObjId s, ObjId t, const std::vector<MorId>& comps) {
  const std::int32_t ends[2] = {s, t};
  return table_key(ends, comps);
}

}  // namespace

std::optional<ObjId> FunctorCategory::find(const Functor& f) const {
  auto it = functor_index.find(table_key(f.on_objects, f.on_morphisms));
  if (it == functor_index.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FunctorCategory::find(const NatTransform& a) const {
  auto s = find(a.source);
  auto t = find(a.target);
  if (!s || !t) return std::nullopt;
  auto it = transform_index.find(nat_key(*s, *t, a.components));
  if (it == transform_index.end()) return std::nullopt;
  return it->second;
}

FunctorCategory functor_category(const CatPtr& c, const CatPtr& d,
                                 const Caps& caps) {
  FunctorCategory fc;
  fc.functors = enumerate_functors(c, d, caps);
  const int n = static_cast<int>(fc.functors.size());
  FinCat::Builder b;
  for (int i = 0; i < n; ++i) {
    b.add_object("F" + std::to_string(i));
    fc.functor_index.emplace(
        table_key(fc.functors[i].on_objects, fc.functors[i].on_morphisms), i);
  }
  std::vector<std::vector<MorId>> hom_ids(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto nats = enumerate_nats(fc.functors[i], fc.functors[j], false, caps);
      int k = 0;
      for (auto& a : nats) {
        if (fc.transforms.size() >= caps.max_morphisms)
          throw_cap("functor category morphism count", caps.max_morphisms);
        const MorId id = b.add_morphism("F" + std::to_string(i) + "=>F" +
                                            std::to_string(j) + "#" +
                                            std::to_string(k++),
                                        i, j);
        fc.transform_index.emplace(nat_key(i, j, a.components), id);
        hom_ids[static_cast<std::size_t>(i) * n + j].push_back(id);
        fc.transforms.push_back(std::move(a));
      }
    }
  }
  const FinCat& dd = *d;
  for (int i = 0; i < n; ++i) {
    std::vector<MorId> comps;
    for (ObjId x : fc.functors[i].on_objects) comps.push_back(dd.identity(x));
    b.set_identity(i, fc.transform_index.at(nat_key(i, i, comps)));
  }
  b.fill_compose([&](MorId g, MorId f) {
    const auto& a = fc.transforms[f];
    const auto& bb = fc.transforms[g];
    std::vector<MorId> comps(a.components.size());
    for (std::size_t x = 0; x < comps.size(); ++x)
      comps[x] = dd.compose_unchecked(bb.components[x], a.components[x]);
    return fc.transform_index.at(nat_key(b.src(f), b.dst(g), comps));
  });
  fc.cat = std::move(b).build_shared();
  return fc;
}

// ---------------------------------------------------------------------------
// Equivalences and isomorphism classes

EquivalenceResult is_equivalence_functor(const Functor& fn) {
  EquivalenceResult res;
  const FinCat& c = *fn.domain;
  const FinCat& d = *fn.codomain;
  // Full faithfulness, recording the preimage of every hom-set element.
  std::vector<std::unordered_map<MorId, MorId>> preimage(
      static_cast<std::size_t>(c.num_objects()) * c.num_objects());
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      auto src = c.hom(x, y);
      auto dst = d.hom(fn.obj(x), fn.obj(y));
      auto& pre = preimage[static_cast<std::size_t>(x) * c.num_objects() + y];
      for (MorId f : src) pre.emplace(fn.mor(f), f);
      if (pre.size() != src.size() || src.size() != dst.size()) {
        res.failure = "not fully faithful on (" + c.object_name(x) + ", " +
                      c.object_name(y) + ")";
        return res;
      }
    }
  }
  // Essential surjectivity with a chosen iso eps_d : F(x_d) -> d.
  std::vector<ObjId> chosen(d.num_objects(), -1);
  std::vector<MorId> eps(d.num_objects(), kNoMorphism);
  for (ObjId t = 0; t < d.num_objects(); ++t) {
    for (ObjId x = 0; x < c.num_objects() && chosen[t] < 0; ++x) {
      for (MorId m : d.hom(fn.obj(x), t)) {
        if (d.is_iso(m)) {
          chosen[t] = x;
          eps[t] = m;
          break;
        }
      }
    }
    if (chosen[t] < 0) {
      res.failure = "not essentially surjective: " + d.object_name(t) +
                    " is not in the essential image";
      return res;
    }
  }
  auto pre = [&](ObjId x, ObjId y, MorId m) {
    return preimage[static_cast<std::size_t>(x) * c.num_objects() + y].at(m);
  };
  Functor g{fn.codomain, fn.domain, chosen,
            std::vector<MorId>(d.num_morphisms(), kNoMorphism)};
  for (MorId h = 0; h < d.num_morphisms(); ++h) {
    const ObjId s = d.src(h), t = d.dst(h);
    const MorId conj =
        d.compose(*d.inverse(eps[t]), d.compose(h, eps[s]));
    g.on_morphisms[h] = pre(chosen[s], chosen[t], conj);
  }
  NatTransform unit{identity_functor(fn.domain), compose(g, fn), {}};
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    const ObjId fx = fn.obj(x);
    unit.components.push_back(pre(x, chosen[fx], *d.inverse(eps[fx])));
  }
  NatTransform counit{compose(fn, g), identity_functor(fn.codomain), eps};
  res.witness = EquivalenceWitness{std::move(g), std::move(unit),
                                   std::move(counit)};
  return res;
}

std::vector<int> iso_class_labels(const FinCat& c) {
  const int n = c.num_objects();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = x + 1; y < n; ++y) {
      if (find(x) == find(y)) continue;
      for (MorId f : c.hom(x, y)) {
        if (c.is_iso(f)) {
          parent[find(y)] = find(x);
          break;
        }
      }
    }
  }
  std::vector<int> label(n, -1);
  std::vector<int> root_label(n, -1);
  int next = 0;
  for (ObjId x = 0; x < n; ++x) {
    const int r = find(x);
    if (root_label[r] < 0) root_label[r] = next++;
    label[x] = root_label[r];
  }
  return label;
}

std::vector<ObjId> iso_classes(const FinCat& c) {
  const auto label = iso_class_labels(c);
  std::vector<ObjId> reps;
  for (ObjId x = 0; x < c.num_objects(); ++x)
    if (label[x] == static_cast<int>(reps.size())) reps.push_back(x);
  return reps;
}

FinCat full_subcategory(const FinCat& c, std::span<const ObjId> objects) {
  FinCat::Builder b;
  std::vector<ObjId> local(c.num_objects(), -1);
  for (ObjId x : objects) local[x] = b.add_object(c.object_name(x));
  std::vector<MorId> mor_local(c.num_morphisms(), kNoMorphism);
  std::vector<MorId> mor_global;
  for (ObjId x : objects)
    for (ObjId y : objects)
      for (MorId f : c.hom(x, y)) {
        mor_local[f] = b.add_morphism(c.morphism_name(f), local[x], local[y]);
        mor_global.push_back(f);
      }
  for (ObjId x : objects) b.set_identity(local[x], mor_local[c.identity(x)]);
  b.fill_compose([&](MorId g, MorId f) {
    const MorId gf = c.compose_unchecked(mor_global[g], mor_global[f]);
    return gf == kNoMorphism ? kNoMorphism : mor_local[gf];
  });
  return std::move(b).build();
}

CatPtr product(const CatPtr& a, const CatPtr& b) {
  const FinCat& A = *a;
  const FinCat& B = *b;
  const int nb = B.num_objects();
  const int mb = B.num_morphisms();
  FinCat::Builder pb;
  for (ObjId x = 0; x < A.num_objects(); ++x)
    for (ObjId y = 0; y < nb; ++y)
      pb.add_object("(" + A.object_name(x) + "," + B.object_name(y) + ")");
  for (MorId f = 0; f < A.num_morphisms(); ++f)
    for (MorId g = 0; g < mb; ++g)
      pb.add_morphism("(" + A.morphism_name(f) + "," + B.morphism_name(g) + ")",
                      A.src(f) * nb + B.src(g), A.dst(f) * nb + B.dst(g));
  for (ObjId x = 0; x < A.num_objects(); ++x)
    for (ObjId y = 0; y < nb; ++y)
      pb.set_identity(x * nb + y, A.identity(x) * mb + B.identity(y));
  pb.fill_compose([&](MorId g, MorId f) {
    const MorId l = A.compose_unchecked(g / mb, f / mb);
    const MorId r = B.compose_unchecked(g % mb, f % mb);
    if (l == kNoMorphism || r == kNoMorphism) return kNoMorphism;
    return l * mb + r;
  });
  return std::move(pb).build_shared();
}

}  // namespace exodus
