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

#include "exodus/rep.h"

#include <functional>
#include <random>

#include "exodus/builders.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace exodus {
namespace {

using test_util::circle_presentation;
using test_util::disk_presentation;
using test_util::perverse_disk_rep;

PresPtr share(Pres2Cat p) { return std::make_shared<const Pres2Cat>(std::move(p)); }

PresPtr point_presentation() {
  Pres2Cat p;
  p.add_object("pt");
  return share(std::move(p));
}

Rep circle_rep(const CatPtr& c, const Functor& beta) {
  return Rep{share(circle_presentation()), {c}, {beta}, {}};
}

TEST(ValidateRep, ConstantRep) {
  const Rep r = constant_rep(disk_presentation(), finset(2));
  EXPECT_TRUE(validate_rep(r).ok());
}

TEST(ValidateRep, PerverseDisk) {
  for (int q : {2, 3}) {
    const Rep r = perverse_disk_rep(q, 1);
    const Report rep = validate_rep(r);
    EXPECT_TRUE(rep.ok()) << (rep.ok() ? "" : rep.violations.front());
  }
}

TEST(ValidateRep, MonodromyReplacedByIdentity) {
  for (int q : {2, 3}) {
    const Rep r = perverse_disk_rep(q, 1);
    Rep plain = r;
    plain.gen2[0] = identity_nat(r.gen1[1]);
    EXPECT_TRUE(validate_rep(plain).ok());
    // Over F_2 in dimension <= 1, mn = 0 on every object, so 1 - mn = 1.
    EXPECT_EQ(q == 2, plain == r);
  }
}

TEST(ValidateRep, Violations) {
  // beta sent to a non-invertible endofunctor of FinSet<=1.
  const CatPtr c = finset(1);
  Functor collapse = identity_functor(c);
  const auto fs = enumerate_functors(c, c);
  for (const Functor& f : fs)
    if (!is_isomorphism(f)) collapse = f;
  ASSERT_FALSE(is_isomorphism(collapse));
  EXPECT_FALSE(validate_rep(circle_rep(c, collapse)).ok());

  // 2-generator with the wrong boundary.
  Rep r = perverse_disk_rep(2, 1);
  r.gen2[0] = identity_nat(identity_functor(r.objects[1]));
  EXPECT_FALSE(validate_rep(r).ok());

  // Endpoint mismatch is an input error.
  Rep bad = perverse_disk_rep(2, 1);
  bad.gen1[1] = identity_functor(bad.objects[1]);
  EXPECT_THROW(validate_rep(bad), InputError);
}

TEST(ValidateRep, RelationChecked) {
  // Circle with t: beta => beta and the relation t = 1_beta.
  Pres2Cat p = circle_presentation();
  const Word beta = letter_word(p, 0);
  p.add_gen2("t", beta, beta);
  p.rel2.push_back({PastingExpr::gen(0), PastingExpr::id(beta)});
  const PresPtr pp = share(std::move(p));
  const CatPtr z3 = cyclic_group(3);
  const Functor id = identity_functor(z3);
  Rep r{pp, {z3}, {id}, {NatTransform{id, id, {0}}}};
  EXPECT_TRUE(validate_rep(r).ok());
  r.gen2[0].components[0] = 1;  // central, so natural, but not the identity
  const Report rep = validate_rep(r);
  ASSERT_FALSE(rep.ok());
  EXPECT_NE(rep.violations.front().find("relation 0"), std::string::npos);
}

TEST(RestrictRep, DiskToCircle) {
  const Rep r = perverse_disk_rep(2, 1);
  const PresPtr circle = share(circle_presentation());
  const Pres2Cat& d = *r.source;
  PresMorphism incl{{*d.find_object("x")}, {letter_word(d, *d.find_gen1("beta"))}, {}};
  const Rep res = restrict_rep(r, circle, incl);
  EXPECT_TRUE(validate_rep(res).ok());
  EXPECT_TRUE(same_category(res.objects[0], r.objects[0]));
  EXPECT_EQ(res.gen1[0], identity_functor(r.objects[0]));
}

// --- 2-natural transformations --------------------------------------------

TEST(TwoNat, IdentityAndInverse) {
  const Rep r = perverse_disk_rep(3, 1);
  const TwoNatRep id = identity_two_nat(r);
  EXPECT_TRUE(validate_two_nat(id).ok());
  auto inv = inverse(id);
  ASSERT_TRUE(inv);
  EXPECT_EQ(compose(*inv, id), id);
  EXPECT_TRUE(validate_modification(identity_modification(id)).ok());
}

TEST(TwoNat, BrokenNaturalityReported) {
  const CatPtr c = finset(2);
  const Rep r = circle_rep(c, test_util::swap_conjugation(c));
  ASSERT_TRUE(validate_rep(r).ok());
  TwoNatRep n = identity_two_nat(r);
  // identity components need an identity naturality cell; swap it at object 2.
  const MorId swap2 = c->morphism_id("2->2:10");
  n.naturality[0].components[2] = swap2;
  EXPECT_FALSE(validate_two_nat(n).ok());
}

TEST(RepHomCategory, DegeneratePresentationIsFunctorCategory) {
  const PresPtr pt = point_presentation();
  for (auto [a, b] : {std::pair{finset(1), finset(2)}, std::pair{cyclic_group(2), finset(2)},
                      std::pair{chain_category(2), chain_category(3)}}) {
    const Rep r1{pt, {a}, {}, {}}, r2{pt, {b}, {}, {}};
    const auto h = rep_hom_category(r1, r2);
    const auto fc = functor_category(a, b);
    EXPECT_EQ(h.cat->num_objects(), fc.cat->num_objects());
    EXPECT_EQ(h.cat->num_morphisms(), fc.cat->num_morphisms());
    EXPECT_EQ(iso_classes(*h.cat).size(), iso_classes(*fc.cat).size());
  }
}

TEST(RepHomCategory, ValidAndContainsIdentity) {
  const CatPtr c = finset(2);
  for (const Functor& beta : {identity_functor(c), test_util::swap_conjugation(c)}) {
    const Rep r = circle_rep(c, beta);
    const auto h = rep_hom_category(r, r);
    EXPECT_TRUE(validate_category(*h.cat).ok());
    const TwoNatRep id = identity_two_nat(r);
    EXPECT_NE(std::find(h.transformations.begin(), h.transformations.end(), id),
              h.transformations.end());
  }
}

// Oracle: (n, N) pairs and modification families counted from raw tables.
std::pair<std::size_t, std::size_t> circle_hom_oracle(const CatPtr& cp, const Functor& s) {
  const FinCat& c = *cp;
  struct Pair {
    Functor n;
    std::vector<MorId> nat;
  };
  std::vector<Pair> pairs;
  for (const Functor& n : enumerate_functors(cp, cp)) {
    std::vector<MorId> comp(c.num_objects());
    std::function<void(ObjId)> rec = [&](ObjId x) {
      if (x == c.num_objects()) {
        for (MorId f = 0; f < c.num_morphisms(); ++f) {
          const MorId lhs = c.compose(comp[c.dst(f)], s.mor(n.mor(f)));
          const MorId rhs = c.compose(n.mor(s.mor(f)), comp[c.src(f)]);
          if (lhs != rhs) return;
        }
        pairs.push_back({n, comp});
        return;
      }
      for (MorId m : c.hom(s.obj(n.obj(x)), n.obj(s.obj(x))))
        if (c.is_iso(m)) {
          comp[x] = m;
          rec(x + 1);
        }
    };
    rec(0);
  }
  std::size_t mods = 0;
  for (const Pair& a : pairs)
    for (const Pair& b : pairs) {
      std::vector<MorId> comp(c.num_objects());
      std::function<void(ObjId)> rec = [&](ObjId x) {
        if (x == c.num_objects()) {
          for (MorId f = 0; f < c.num_morphisms(); ++f)
            if (c.compose(comp[c.dst(f)], a.n.mor(f)) != c.compose(b.n.mor(f), comp[c.src(f)]))
              return;
          for (ObjId y = 0; y < c.num_objects(); ++y)
            if (c.compose(b.nat[y], s.mor(comp[y])) != c.compose(comp[s.obj(y)], a.nat[y]))
              return;
          ++mods;
          return;
        }
        for (MorId m : c.hom(a.n.obj(x), b.n.obj(x))) {
          comp[x] = m;
          rec(x + 1);
        }
      };
      rec(0);
    }
  return {pairs.size(), mods};
}

TEST(RepHomCategory, CircleMatchesOracle) {
  for (const CatPtr& c : {finset(1), finset(2)}) {
    const Functor swap = test_util::swap_conjugation(c);
    const Rep r = circle_rep(c, swap);
    const auto h = rep_hom_category(r, r);
    const auto [objs, mors] = circle_hom_oracle(c, swap);
    EXPECT_EQ(h.cat->num_objects(), static_cast<int>(objs));
    EXPECT_EQ(h.cat->num_morphisms(), static_cast<int>(mors));
  }
}

TEST(RepEquivalence, SwapConjugationIsInner) {
  const CatPtr c = finset(2);
  const Rep plain = circle_rep(c, identity_functor(c));
  const Rep swapped = circle_rep(c, test_util::swap_conjugation(c));
  EXPECT_FALSE(plain == swapped);
  auto e = find_rep_equivalence(plain, swapped);
  ASSERT_TRUE(e);
  EXPECT_TRUE(validate_two_nat(*e).ok());
}

TEST(RepEquivalence, DifferentCategoriesRefused) {
  const PresPtr pt = point_presentation();
  EXPECT_FALSE(find_rep_equivalence(Rep{pt, {finset(1)}, {}, {}}, Rep{pt, {finset(2)}, {}, {}}));
  EXPECT_TRUE(find_rep_equivalence(Rep{pt, {test_util::connected_groupoid(3, 2)}, {}, {}},
                                   Rep{pt, {cyclic_group(2)}, {}, {}}));
}

// --- 2-limits ---------------------------------------------------------------

TEST(TwoLimit, TrivialIndex) {
  const PresPtr pt = point_presentation();
  for (const CatPtr& c : test_util::category_corpus(11, 10)) {
    const TwoLimit lim = two_limit(Rep{pt, {c}, {}, {}});
    EXPECT_EQ(lim.cat->num_morphisms(), c->num_morphisms());
    EXPECT_TRUE(validate_category(*lim.cat).ok());
    EXPECT_TRUE(is_equivalence_functor(lim.projections[0]));
  }
}

TEST(TwoLimit, CircleWithIdentityMonodromy) {
  const CatPtr c = finset(2);
  const TwoLimit lim = two_limit(circle_rep(c, identity_functor(c)));
  EXPECT_TRUE(validate_category(*lim.cat).ok());
  // Oracle: sets of size 0, 1, 2 with an automorphism up to conjugacy.
  EXPECT_EQ(iso_classes(*lim.cat).size(), 1u + 1u + 2u);
  // Objects are (k, sigma in S_k).
  EXPECT_EQ(lim.cat->num_objects(), 1 + 1 + 2);
}

TEST(TwoLimit, PerverseDiskIsDeligne) {
  for (int q : {2, 3}) {
    const Rep r = perverse_disk_rep(q, 1);
    const TwoLimit lim = two_limit(r);
    EXPECT_TRUE(validate_category(*lim.cat).ok());
    const ObjId apex = *r.source->find_object("0");
    const auto eq = is_equivalence_functor(lim.projections[apex]);
    EXPECT_TRUE(eq) << eq.failure;
    EXPECT_EQ(iso_classes(*lim.cat).size(), iso_classes(*r.objects[apex]).size());
  }
  EXPECT_EQ(iso_classes(*two_limit(perverse_disk_rep(2, 1)).cat).size(), 6u);
}

// Two parallel arrows f, g: x -> y with s: f => g and R(f) = R(g), R(s) = 1.
// The 2-limit is then the iso-comma category of R(f), counted directly.
TEST(TwoLimit, IdentityForcingMatchesIsoComma) {
  Pres2Cat p;
  p.add_object("x");
  p.add_object("y");
  p.add_gen1("f", 0, 1, false);
  p.add_gen1("g", 0, 1, false);
  p.add_gen2("s", letter_word(p, 0), letter_word(p, 1));
  const PresPtr pp = share(std::move(p));
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const CatPtr a = test_util::random_poset(rng, 3);
    const CatPtr b = trial % 2 ? test_util::connected_groupoid(2, 2) : finset(2);
    const auto fs = enumerate_functors(a, b);
    if (fs.empty()) continue;
    const Functor& f = fs[rng() % fs.size()];
    const Rep r{pp, {a, b}, {f, f}, {identity_nat(f)}};
    ASSERT_TRUE(validate_rep(r).ok());
    const TwoLimit lim = two_limit(r);
    std::size_t objects = 0, morphisms = 0;
    std::vector<std::tuple<ObjId, ObjId, MorId>> obs;
    for (ObjId u = 0; u < a->num_objects(); ++u)
      for (ObjId v = 0; v < b->num_objects(); ++v)
        for (MorId phi : b->hom(f.obj(u), v))
          if (b->is_iso(phi)) obs.emplace_back(u, v, phi);
    objects = obs.size();
    for (auto [u, v, phi] : obs)
      for (auto [u2, v2, phi2] : obs)
        for (MorId s : a->hom(u, u2))
          for (MorId t : b->hom(v, v2))
            if (b->compose(t, phi) == b->compose(phi2, f.mor(s))) ++morphisms;
    EXPECT_EQ(lim.cat->num_objects(), static_cast<int>(objects));
    EXPECT_EQ(lim.cat->num_morphisms(), static_cast<int>(morphisms));
    ++checked;
  }
  EXPECT_GT(checked, 6);
}

// --- Filtered colimits -----------------------------------------------------

TEST(ChainColimit, ConstantChain) {
  for (const CatPtr& c : test_util::category_corpus(4, 8)) {
    const Functor id = identity_functor(c);
    const ChainColimit col = filtered_two_colimit({c, c, c}, {id, id});
    EXPECT_TRUE(validate_category(*col.cat).ok());
    EXPECT_EQ(col.cat->num_objects(), 3 * c->num_objects());
    for (const Functor& inc : col.inclusions) EXPECT_TRUE(is_equivalence_functor(inc));
  }
}

TEST(ChainColimit, FullInclusions) {
  const CatPtr s1 = finset(1), s2 = finset(2);
  const ChainColimit col = filtered_two_colimit({s1, s2}, {test_util::inclusion_by_name(s1, s2)});
  EXPECT_TRUE(is_equivalence_functor(col.inclusions[1]));
  EXPECT_FALSE(is_equivalence_functor(col.inclusions[0]));
  EXPECT_EQ(iso_classes(*col.cat).size(), 3u);
}

TEST(ChainColimit, ChainOfEquivalences) {
  const CatPtr g1 = test_util::connected_groupoid(1, 3);
  const CatPtr g2 = test_util::connected_groupoid(2, 3);
  const CatPtr g3 = test_util::connected_groupoid(3, 3);
  const ChainColimit col = filtered_two_colimit(
      {g1, g2, g3},
      {test_util::inclusion_by_name(g1, g2), test_util::inclusion_by_name(g2, g3)});
  EXPECT_TRUE(validate_category(*col.cat).ok());
  const auto eq = is_equivalence_functor(col.inclusions[0]);
  EXPECT_TRUE(eq) << eq.failure;
}

TEST(ChainColimit, Errors) {
  EXPECT_THROW(filtered_two_colimit({}, {}), InputError);
  const CatPtr c = finset(1);
  EXPECT_THROW(filtered_two_colimit({c, finset(2)}, {identity_functor(c)}), InputError);
  EXPECT_THROW(filtered_two_colimit({c, c}, {}), InputError);
}

// --- Enumeration -------------------------------------------------------------

TEST(EnumerateReps, EmptyPresentation) {
  const auto res = enumerate_reps(share(Pres2Cat{}), {finset(1), terminal_category()});
  EXPECT_EQ(res.reps.size(), 1u);
  EXPECT_FALSE(res.truncated);
}

TEST(EnumerateReps, SingleObject) {
  const PresPtr pt = point_presentation();
  EXPECT_EQ(enumerate_reps(pt, {terminal_category()}).reps.size(), 1u);
  EXPECT_EQ(enumerate_reps(pt, {terminal_category(), finset(1)}).reps.size(), 2u);
  // Equivalent universe entries collapse.
  EXPECT_EQ(enumerate_reps(pt, {cyclic_group(2), test_util::connected_groupoid(2, 2)}).reps.size(),
            1u);
}

TEST(EnumerateReps, CircleInFinSet2) {
  const CatPtr c = finset(2);
  const auto res = enumerate_reps(share(circle_presentation()), {c});
  std::size_t autos = 0;
  for (const Functor& f : enumerate_functors(c, c)) autos += is_isomorphism(f);
  EXPECT_EQ(res.candidates, autos);
  // Every automorphism of FinSet<=2 is inner, so all reps are equivalent.
  EXPECT_EQ(res.reps.size(), 1u);
  for (const Rep& r : res.reps) EXPECT_TRUE(validate_rep(r).ok());
}

TEST(EnumerateReps, DiskRepsAreValid) {
  const auto res = enumerate_reps(disk_presentation(), {terminal_category(), finset(1)});
  EXPECT_FALSE(res.truncated);
  EXPECT_GT(res.reps.size(), 1u);
  for (const Rep& r : res.reps) EXPECT_TRUE(validate_rep(r).ok());
}

TEST(EnumerateReps, CapTruncates) {
  Caps caps;
  caps.max_reps = 1;
  const auto res = enumerate_reps(point_presentation(), {terminal_category(), finset(1)}, caps);
  EXPECT_TRUE(res.truncated);
  EXPECT_EQ(res.reps.size(), 1u);
}

}  // namespace
}  // namespace exodus
