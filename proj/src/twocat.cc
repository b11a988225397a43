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

#include "exodus/twocat.h"

#include <map>
#include <random>

#include "exodus/kernels.h"

namespace exodus {

using Cell1 = Concrete2Cat::Cell1;
using Cell2 = Concrete2Cat::Cell2;

Concrete2Cat::Concrete2Cat(std::vector<std::string> names,
                           std::vector<CatPtr> homs,
                           std::vector<Functor> comps,
                           std::vector<ObjId> units)
    : names_(std::move(names)),
      homs_(std::move(homs)),
      comps_(std::move(comps)),
      units_(std::move(units)) {
  const std::size_t n = names_.size();
  if (homs_.size() != n * n || comps_.size() != n * n * n || units_.size() != n)
    throw InputError("2-category tables have inconsistent sizes");
  for (ObjId x = 0; x < static_cast<ObjId>(n); ++x)
    if (units_[x] < 0 || units_[x] >= hom(x, x)->num_objects())
      throw InputError("unit of '" + names_[x] + "' is not a 1-cell");
}

std::optional<ObjId> Concrete2Cat::find_object(const std::string& name) const {
  for (ObjId x = 0; x < num_objects(); ++x)
    if (names_[x] == name) return x;
  return std::nullopt;
}

Cell2 Concrete2Cat::id2(const Cell1& f) const {
  return {f.src, f.dst, hom(f.src, f.dst)->identity(f.id)};
}

Cell1 Concrete2Cat::src2(const Cell2& a) const {
  return {a.src, a.dst, hom(a.src, a.dst)->src(a.id)};
}

Cell1 Concrete2Cat::dst2(const Cell2& a) const {
  return {a.src, a.dst, hom(a.src, a.dst)->dst(a.id)};
}

Cell1 Concrete2Cat::compose1(const Cell1& g, const Cell1& f) const {
  if (f.dst != g.src) throw InputError("1-cells are not composable");
  const int left = hom(f.src, f.dst)->num_objects();
  return {f.src, g.dst, comp(f.src, f.dst, g.dst).obj(g.id * left + f.id)};
}

Cell2 Concrete2Cat::vcompose(const Cell2& b, const Cell2& a) const {
  if (a.src != b.src || a.dst != b.dst)
    throw InputError("2-cells live in different hom-categories");
  const MorId ba = hom(a.src, a.dst)->compose(b.id, a.id);
  if (ba == kNoMorphism) throw InputError("hom-category has no composite");
  return {a.src, a.dst, ba};
}

Cell2 Concrete2Cat::hcompose(const Cell2& b, const Cell2& a) const {
  if (a.dst != b.src) throw InputError("2-cells are not horizontally composable");
  const int left = hom(a.src, a.dst)->num_morphisms();
  return {a.src, b.dst, comp(a.src, a.dst, b.dst).mor(b.id * left + a.id)};
}

std::optional<Cell1> Concrete2Cat::inverse1(const Cell1& f) const {
  for (ObjId g = 0; g < hom(f.dst, f.src)->num_objects(); ++g) {
    const Cell1 gc{f.dst, f.src, g};
    if (compose1(gc, f) == unit_cell(f.src) && compose1(f, gc) == unit_cell(f.dst))
      return gc;
  }
  return std::nullopt;
}

std::optional<Cell2> Concrete2Cat::inverse2(const Cell2& a) const {
  auto inv = hom(a.src, a.dst)->inverse(a.id);
  if (!inv) return std::nullopt;
  return Cell2{a.src, a.dst, *inv};
}

Concrete2Cat Concrete2Cat::with_comp(ObjId x, ObjId y, ObjId z, Functor f) const {
  Concrete2Cat c = *this;
  const int n = num_objects();
  c.comps_[(x * n + y) * n + z] = std::move(f);
  return c;
}

bool Concrete2Cat::operator==(const Concrete2Cat& other) const {
  if (names_ != other.names_ || units_ != other.units_) return false;
  for (std::size_t i = 0; i < homs_.size(); ++i)
    if (!same_category(homs_[i], other.homs_[i])) return false;
  return comps_ == other.comps_;
}

// ---------------------------------------------------------------------------

Report validate_2cat(const Concrete2Cat& c) {
  Report r;
  const int n = c.num_objects();
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      Report h = validate_category(*c.hom(x, y));
      r.merge(h, "hom(" + c.object_name(x) + "," + c.object_name(y) + "): ");
    }
  if (!r.ok()) return r;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) {
        const Functor& f = c.comp(x, y, z);
        const std::string where = "comp(" + c.object_name(x) + "," +
                                  c.object_name(y) + "," + c.object_name(z) +
                                  "): ";
        if (f.domain->num_objects() !=
                c.hom(y, z)->num_objects() * c.hom(x, y)->num_objects() ||
            f.domain->num_morphisms() !=
                c.hom(y, z)->num_morphisms() * c.hom(x, y)->num_morphisms() ||
            !same_category(f.codomain, c.hom(x, z))) {
          r.add(where + "composition functor has the wrong type");
          continue;
        }
        r.merge(validate_functor(f), where);
      }
  if (!r.ok()) return r;
  // Strict unit laws.
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      const FinCat& h = *c.hom(x, y);
      for (MorId a = 0; a < h.num_morphisms(); ++a) {
        const Cell2 cell{x, y, a};
        if (!(c.hcompose(cell, c.id2(c.unit_cell(x))) == cell) ||
            !(c.hcompose(c.id2(c.unit_cell(y)), cell) == cell))
          r.add("unit law fails at 2-cell " + h.morphism_name(a));
      }
    }
  // Strict associativity on 2-cells (1-cells follow through identities).
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z)
        for (ObjId w = 0; w < n; ++w) {
          const int m1 = c.hom(x, y)->num_morphisms();
          const int m2 = c.hom(y, z)->num_morphisms();
          const int m3 = c.hom(z, w)->num_morphisms();
          for (MorId a = 0; a < m1; ++a)
            for (MorId b = 0; b < m2; ++b) {
              const Cell2 ba = c.hcompose({y, z, b}, {x, y, a});
              for (MorId cc = 0; cc < m3; ++cc) {
                const Cell2 lhs = c.hcompose({z, w, cc}, ba);
                const Cell2 rhs = c.hcompose(c.hcompose({z, w, cc}, {y, z, b}),
                                             Cell2{x, y, a});
                if (!(lhs == rhs))
                  r.add("associativity fails at " +
                        c.hom(z, w)->morphism_name(cc) + " * " +
                        c.hom(y, z)->morphism_name(b) + " * " +
                        c.hom(x, y)->morphism_name(a));
              }
            }
        }
  return r;
}

Cell2 compose2(const Concrete2Cat& c, Direction mode, const Cell2& a,
               const Cell2& b) {
  if (mode == Direction::kVertical) {
    if (!(c.src2(a) == c.dst2(b)))
      throw InputError("vertical composition: source/target mismatch");
    return c.vcompose(a, b);
  }
  return c.hcompose(a, b);
}

Report check_interchange(const Concrete2Cat& c, std::size_t samples,
                         std::uint64_t seed) {
  Report r;
  auto describe = [&](const kernels::Quadruple& q) {
    const FinCat& a = *c.hom(q.x, q.y);
    const FinCat& b = *c.hom(q.y, q.z);
    return "interchange fails over (" + c.object_name(q.x) + "," +
           c.object_name(q.y) + "," + c.object_name(q.z) + ") at k=" +
           b.morphism_name(q.k) + " g=" + a.morphism_name(q.g) +
           " h=" + b.morphism_name(q.h) + " f=" + a.morphism_name(q.f);
  };
  if (samples == 0) {
    for (const auto& q : kernels::interchange_failures_parallel(c))
      r.add(describe(q));
    return r;
  }
  std::mt19937_64 rng(seed);
  const int n = c.num_objects();
  if (n == 0) return r;
  std::uniform_int_distribution<int> obj(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const ObjId x = obj(rng), y = obj(rng), z = obj(rng);
    const FinCat& a = *c.hom(x, y);
    const FinCat& b = *c.hom(y, z);
    if (a.num_morphisms() == 0 || b.num_morphisms() == 0) continue;
    auto pick = [&](std::span<const MorId> s) {
      return s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)];
    };
    const MorId f = std::uniform_int_distribution<MorId>(0, a.num_morphisms() - 1)(rng);
    const MorId g = pick(a.out(a.dst(f)));
    const MorId h = std::uniform_int_distribution<MorId>(0, b.num_morphisms() - 1)(rng);
    const MorId k = pick(b.out(b.dst(h)));
    const Cell2 lhs = c.vcompose(c.hcompose({y, z, k}, {x, y, g}),
                                 c.hcompose({y, z, h}, {x, y, f}));
    const Cell2 rhs = c.hcompose(c.vcompose({y, z, k}, {y, z, h}),
                                 c.vcompose({x, y, g}, {x, y, f}));
    if (!(lhs == rhs)) r.add(describe({x, y, z, f, g, h, k}));
  }
  return r;
}

Concrete2Cat opposite(const Concrete2Cat& c) {
  const int n = c.num_objects();
  std::vector<std::string> names;
  for (ObjId x = 0; x < n; ++x) names.push_back(c.object_name(x));
  std::vector<CatPtr> homs(n * n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) homs[x * n + y] = c.hom(y, x);
  std::map<std::pair<ObjId, ObjId>, CatPtr> products;
  std::vector<Functor> comps(n * n * n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) {
        // op: hom(z,y) x hom(y,x) -> hom(z,x), from comp(z,y,x) on
        // hom(y,x) x hom(z,y).
        const CatPtr& right = c.hom(z, y);  // hom_op(y, z)
        const CatPtr& left = c.hom(y, x);   // hom_op(x, y)
        auto key = std::make_pair(z * n + y, y * n + x);
        auto it = products.find(key);
        if (it == products.end())
          it = products.emplace(key, product(right, left)).first;
        const Functor& orig = c.comp(z, y, x);
        Functor f{it->second, c.hom(z, x), {}, {}};
        const int ro = right->num_objects(), lo = left->num_objects();
        const int rm = right->num_morphisms(), lm = left->num_morphisms();
        f.on_objects.resize(ro * lo);
        for (int b = 0; b < ro; ++b)
          for (int a = 0; a < lo; ++a)
            f.on_objects[b * lo + a] = orig.obj(a * ro + b);
        f.on_morphisms.resize(rm * lm);
        for (int b = 0; b < rm; ++b)
          for (int a = 0; a < lm; ++a)
            f.on_morphisms[b * lm + a] = orig.mor(a * rm + b);
        comps[(x * n + y) * n + z] = std::move(f);
      }
  std::vector<ObjId> units;
  for (ObjId x = 0; x < n; ++x) units.push_back(c.unit(x));
  return Concrete2Cat(std::move(names), std::move(homs), std::move(comps),
                      std::move(units));
}

Report check_adjunction(const Concrete2Cat& c, const Cell1& f, const Cell1& g,
                        const Cell2& eta, const Cell2& eps) {
  if (f.dst != g.src || g.dst != f.src)
    throw InputError("adjunction: f and g are not opposite 1-cells");
  if (!(c.src2(eta) == c.unit_cell(f.src)) ||
      !(c.dst2(eta) == c.compose1(g, f)))
    throw InputError("adjunction: unit is not a 2-cell 1 => g f");
  if (!(c.src2(eps) == c.compose1(f, g)) ||
      !(c.dst2(eps) == c.unit_cell(f.dst)))
    throw InputError("adjunction: counit is not a 2-cell f g => 1");
  Report r;
  const Cell2 g_eps = c.hcompose(c.id2(g), eps);
  const Cell2 eta_g = c.hcompose(eta, c.id2(g));
  if (!(c.vcompose(g_eps, eta_g) == c.id2(g)))
    r.add("triangle identity (g eps) o (eta g) = 1_g fails");
  const Cell2 eps_f = c.hcompose(eps, c.id2(f));
  const Cell2 f_eta = c.hcompose(c.id2(f), eta);
  if (!(c.vcompose(eps_f, f_eta) == c.id2(f)))
    r.add("triangle identity (eps f) o (f eta) = 1_f fails");
  return r;
}

std::optional<AdjointEquivalence> find_equivalence_witness(const Concrete2Cat& c,
                                                           const Cell1& f) {
  const ObjId x = f.src, y = f.dst;
  const FinCat& hxx = *c.hom(x, x);
  const FinCat& hyy = *c.hom(y, y);
  for (ObjId gi = 0; gi < c.hom(y, x)->num_objects(); ++gi) {
    const Cell1 g{y, x, gi};
    const ObjId gf = c.compose1(g, f).id;
    const ObjId fg = c.compose1(f, g).id;
    for (MorId eta : hxx.hom(c.unit(x), gf)) {
      if (!hxx.is_iso(eta)) continue;
      for (MorId eps : hyy.hom(fg, c.unit(y))) {
        if (!hyy.is_iso(eps)) continue;
        const Cell2 e{x, x, eta}, ep{y, y, eps};
        if (check_adjunction(c, f, g, e, ep).ok())
          return AdjointEquivalence{g, e, ep};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generators

Concrete2Cat cat_2category(
    const std::vector<std::pair<std::string, CatPtr>>& objects,
    const Caps& caps) {
  const int n = static_cast<int>(objects.size());
  std::vector<std::string> names;
  for (const auto& [name, _] : objects) names.push_back(name);
  std::vector<FunctorCategory> fcs;
  fcs.reserve(n * n);
  std::vector<CatPtr> homs;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      fcs.push_back(functor_category(objects[x].second, objects[y].second, caps));
      homs.push_back(fcs.back().cat);
    }
  auto fc = [&](ObjId x, ObjId y) -> const FunctorCategory& { return fcs[x * n + y]; };
  std::vector<Functor> comps(n * n * n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) {
        const auto& left = fc(x, y);
        const auto& right = fc(y, z);
        const auto& target = fc(x, z);
        if (static_cast<std::size_t>(right.cat->num_morphisms()) *
                left.cat->num_morphisms() >
            caps.max_morphisms)
          throw_cap("composition domain morphisms", caps.max_morphisms);
        Functor f{product(right.cat, left.cat), target.cat, {}, {}};
        for (const auto& g : right.functors)
          for (const auto& h : left.functors)
            f.on_objects.push_back(*target.find(compose(g, h)));
        for (const auto& b : right.transforms)
          for (const auto& a : left.transforms)
            f.on_morphisms.push_back(*target.find(hcompose(b, a)));
        comps[(x * n + y) * n + z] = std::move(f);
      }
  std::vector<ObjId> units;
  for (ObjId x = 0; x < n; ++x)
    units.push_back(*fc(x, x).find(identity_functor(objects[x].second)));
  return Concrete2Cat(std::move(names), std::move(homs), std::move(comps),
                      std::move(units));
}

Concrete2Cat locally_discrete(const FinCat& c) {
  const int n = c.num_objects();
  std::vector<std::string> names;
  for (ObjId x = 0; x < n; ++x) names.push_back(c.object_name(x));
  std::vector<CatPtr> homs;
  // position of a morphism inside its hom-set
  std::vector<int> local(c.num_morphisms());
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      FinCat::Builder b;
      int i = 0;
      for (MorId f : c.hom(x, y)) {
        local[f] = i++;
        const ObjId o = b.add_object(c.morphism_name(f));
        b.add_identity(o, "1_" + c.morphism_name(f));
      }
      b.fill_compose([](MorId g, MorId) { return g; });
      homs.push_back(std::move(b).build_shared());
    }
  std::vector<Functor> comps(n * n * n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) {
        Functor f{product(homs[y * n + z], homs[x * n + y]), homs[x * n + z], {}, {}};
        for (MorId g : c.hom(y, z))
          for (MorId h : c.hom(x, y))
            f.on_objects.push_back(local[c.compose(g, h)]);
        f.on_morphisms = f.on_objects;  // identities map to identities
        comps[(x * n + y) * n + z] = std::move(f);
      }
  std::vector<ObjId> units;
  for (ObjId x = 0; x < n; ++x) units.push_back(local[c.identity(x)]);
  return Concrete2Cat(std::move(names), std::move(homs), std::move(comps),
                      std::move(units));
}

Concrete2Cat two_group(int g_order, int a_order) {
  if (g_order < 1 || a_order < 1) throw InputError("two_group: orders must be positive");
  FinCat::Builder b;
  for (int g = 0; g < g_order; ++g) b.add_object("g" + std::to_string(g));
  for (int g = 0; g < g_order; ++g)
    for (int a = 0; a < a_order; ++a)
      b.add_morphism("(" + std::to_string(a) + ",g" + std::to_string(g) + ")", g, g);
  for (int g = 0; g < g_order; ++g) b.set_identity(g, g * a_order);
  b.fill_compose([&](MorId p, MorId q) {
    const int g = p / a_order;
    return g * a_order + (p % a_order + q % a_order) % a_order;
  });
  CatPtr hom = std::move(b).build_shared();
  Functor f{product(hom, hom), hom, {}, {}};
  for (int g = 0; g < g_order; ++g)
    for (int h = 0; h < g_order; ++h) f.on_objects.push_back((g + h) % g_order);
  const int m = g_order * a_order;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      const int g = (p / a_order + q / a_order) % g_order;
      const int a = (p % a_order + q % a_order) % a_order;
      f.on_morphisms.push_back(g * a_order + a);
    }
  return Concrete2Cat({"*"}, {hom}, {std::move(f)}, {0});
}

std::string CatModel::describe(const NatTransform& a) const {
  std::string s = "[";
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (i) s += ",";
    s += a.source.codomain->morphism_name(a.components[i]);
  }
  return s + "]";
}

}  // namespace exodus
