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

#include <algorithm>
#include <numeric>
#include <set>

#include "exodus/builders.h"
#include "exodus/fincat.h"
#include "exodus/kernels.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace exodus {
namespace {

using test_util::category_corpus;
using oracles::deligne_dim1_oracle;
using oracles::disk_sheaf_oracle;

CatPtr bz2_with(MorId es, MorId se, MorId ss) {
  FinCat::Builder b;
  b.add_object("*");
  const MorId e = b.add_identity(0, "e");
  const MorId s = b.add_morphism("s", 0, 0);
  b.set_compose(e, e, e);
  b.set_compose(e, s, es);
  b.set_compose(s, e, se);
  b.set_compose(s, s, ss);
  return std::move(b).build_shared();
}

bool mentions(const Report& r, const std::string& what) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(what) != std::string::npos; });
}

TEST(ValidateCategory, TerminalAndGroup) {
  EXPECT_TRUE(validate_category(*terminal_category()).ok());
  EXPECT_TRUE(validate_category(*bz2_with(1, 1, 0)).ok());
}

TEST(ValidateCategory, IdentityLawMutation) {
  // e o s = e breaks the left identity law.
  Report r = validate_category(*bz2_with(0, 1, 0));
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(mentions(r, "identity"));
  // s o s = s is an idempotent monoid: still a category.
  EXPECT_TRUE(validate_category(*bz2_with(1, 1, 1)).ok());
}

TEST(ValidateCategory, AssociativityMutation) {
  // Z/3 with one product corrupted: s o s^2 = s.
  FinCat::Builder b;
  b.add_object("*");
  for (int i = 0; i < 3; ++i) b.add_morphism("g" + std::to_string(i), 0, 0);
  b.set_identity(0, 0);
  b.fill_compose([](MorId g, MorId f) {
    if (g == 1 && f == 2) return 1;
    return (g + f) % 3;
  });
  Report r = validate_category(*std::move(b).build_shared());
  EXPECT_TRUE(mentions(r, "associativity"));
}

TEST(ValidateCategory, CorpusIsValid) {
  for (const auto& c : category_corpus(7, 40)) EXPECT_TRUE(validate_category(*c).ok());
}

TEST(Builder, RejectsDanglingIds) {
  FinCat::Builder b;
  b.add_object("x");
  EXPECT_THROW(b.add_morphism("f", 0, 3), InputError);
}

TEST(FunctorCategory, FromTerminalMatchesTarget) {
  for (const auto& d : {finset(2), cyclic_group(3), chain_category(3), test_util::connected_groupoid(2, 2)}) {
    auto fc = functor_category(terminal_category(), d);
    EXPECT_EQ(iso_classes(*fc.cat).size(), iso_classes(*d).size());
  }
}

TEST(FunctorCategory, IntoTerminal) {
  for (const auto& c : category_corpus(3, 12)) {
    auto fc = functor_category(c, terminal_category());
    EXPECT_EQ(fc.cat->num_objects(), 1);
    EXPECT_EQ(fc.cat->num_morphisms(), 1);
  }
}

// Involutions on {0..k-1} up to conjugation, k <= n.
int z2_sets_oracle(int n) {
  int total = 0;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::set<std::vector<int>> classes;
    for (const auto& s : perms) {
      bool involution = true;
      for (int i = 0; i < k; ++i) involution &= s[s[i]] == i;
      if (!involution) continue;
      std::vector<int> best;
      for (const auto& t : perms) {  // t s t^-1
        std::vector<int> conj(k);
        for (int i = 0; i < k; ++i) conj[t[i]] = t[s[i]];
        if (best.empty() || conj < best) best = conj;
      }
      classes.insert(best);
    }
    total += static_cast<int>(classes.size());
  }
  return total;
}

TEST(FunctorCategory, Z2ActionsOnSmallSets) {
  auto fc = functor_category(cyclic_group(2), finset(2));
  EXPECT_TRUE(validate_category(*fc.cat).ok());
  EXPECT_EQ(z2_sets_oracle(2), 4);
  EXPECT_EQ(static_cast<int>(iso_classes(*fc.cat).size()), z2_sets_oracle(2));
}

TEST(FunctorCategory, OutputIsValid) {
  auto corpus = category_corpus(11, 10);
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
    auto fc = functor_category(corpus[i], corpus[i + 1]);
    EXPECT_TRUE(validate_category(*fc.cat).ok());
  }
}

TEST(FunctorCategory, RespectsMorphismCap) {
  Caps caps;
  caps.max_morphisms = 10;
  EXPECT_THROW(functor_category(chain_category(2), finset(2), caps), CapExceeded);
}

TEST(Equivalence, Identity) {
  auto c = finset(2);
  auto r = is_equivalence_functor(identity_functor(c));
  ASSERT_TRUE(r);
  EXPECT_EQ(r.witness->inverse, identity_functor(c));
}

TEST(Equivalence, SkeletonInclusion) {
  auto c = test_util::connected_groupoid(3, 2);
  const std::vector<ObjId> one = {0};
  auto sk = std::make_shared<const FinCat>(full_subcategory(*c, one));
  auto r = is_equivalence_functor(test_util::inclusion_by_name(sk, c));
  ASSERT_TRUE(r);
  EXPECT_TRUE(validate_functor(r.witness->inverse).ok());
  EXPECT_TRUE(is_invertible(r.witness->unit));
  EXPECT_TRUE(is_invertible(r.witness->counit));
}

TEST(Equivalence, ConstantFromDiscreteRefused) {
  auto c = discrete_category(2);
  auto d = terminal_category();
  Functor f{c, d, {0, 0}, {0, 0}};
  auto r = is_equivalence_functor(f);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.failure.empty());
}

// Equivalence oracle: some G with invertible 1 => GF and FG => 1.
bool equivalence_oracle(const Functor& f) {
  for (const auto& g : enumerate_functors(f.codomain, f.domain)) {
    if (enumerate_nats(identity_functor(f.domain), compose(g, f), true).empty()) continue;
    if (enumerate_nats(compose(f, g), identity_functor(f.codomain), true).empty()) continue;
    return true;
  }
  return false;
}

TEST(Equivalence, AgreesWithOracle) {
  std::vector<CatPtr> small = {terminal_category(), discrete_category(2), cyclic_group(2),
                               chain_category(2), test_util::connected_groupoid(2, 1),
                               test_util::connected_groupoid(2, 2), cyclic_group(3)};
  int positives = 0;
  for (const auto& c : small)
    for (const auto& d : small)
      for (const auto& f : enumerate_functors(c, d)) {
        const bool got = static_cast<bool>(is_equivalence_functor(f));
        EXPECT_EQ(got, equivalence_oracle(f));
        positives += got;
      }
  EXPECT_GT(positives, 5);
}

TEST(IsoClasses, Basics) {
  EXPECT_EQ(iso_classes(*discrete_category(3)).size(), 3u);
  EXPECT_EQ(iso_classes(*cyclic_group(2)).size(), 1u);
}

TEST(IsoClasses, Idempotent) {
  for (const auto& c : category_corpus(5, 20)) {
    auto reps = iso_classes(*c);
    FinCat sk = full_subcategory(*c, reps);
    EXPECT_EQ(iso_classes(sk).size(), reps.size());
  }
}

TEST(FinVect, HomCounts) {
  auto v = build_fin_vect(2, 1);
  ASSERT_EQ(v->num_objects(), 2);
  EXPECT_EQ(v->hom(0, 0).size(), 1u);
  EXPECT_EQ(v->hom(0, 1).size(), 1u);
  EXPECT_EQ(v->hom(1, 0).size(), 1u);
  EXPECT_EQ(v->hom(1, 1).size(), 2u);
  EXPECT_EQ(build_fin_vect(2, 2)->hom(2, 2).size(), 16u);
}

TEST(FinVect, Valid) {
  EXPECT_TRUE(validate_category(*build_fin_vect(3, 2)).ok());
  EXPECT_TRUE(validate_category(*build_fin_vect(4, 1)).ok());
  auto v = build_fin_vect(4, 1);
  // F_4^x is cyclic of order 3: every nonzero scalar is invertible.
  int isos = 0;
  for (MorId f : v->hom(1, 1)) isos += v->is_iso(f);
  EXPECT_EQ(isos, 3);
}

TEST(FinVect, RangeErrors) {
  EXPECT_THROW(build_fin_vect(6, 1), InputError);
  EXPECT_THROW(build_fin_vect(2, 4), InputError);
}

TEST(FinVect, MatrixIdsAreRowMajor) {
  auto v = build_fin_vect(2, 2);
  EXPECT_TRUE(v->find_morphism("2->2:1001").has_value());
  EXPECT_EQ(v->identity(2), v->morphism_id("2->2:1001"));
  // [[0,1],[0,0]] o [[0,0],[1,0]] = [[1,0],[0,0]]
  EXPECT_EQ(v->compose(v->morphism_id("2->2:0100"), v->morphism_id("2->2:0010")),
            v->morphism_id("2->2:1000"));
}

TEST(Deligne, SmallCounts) {
  for (int q : {2, 3, 5}) {
    auto d = build_deligne_cat(q, 1);
    const auto [objects, classes] = deligne_dim1_oracle(q);
    EXPECT_EQ(d->num_objects(), objects) << q;
    EXPECT_EQ(static_cast<int>(iso_classes(*d).size()), classes) << q;
  }
  auto d = build_deligne_cat(2, 1);
  EXPECT_EQ(d->num_objects(), 6);
  EXPECT_EQ(iso_classes(*d).size(), 6u);
  EXPECT_TRUE(d->find_object("(0,0|m=|n=)").has_value());
  EXPECT_FALSE(d->find_object("(1,1|m=1|n=1)").has_value());
  EXPECT_TRUE(validate_category(*d).ok());
}

TEST(Deligne, LargerInstances) {
  EXPECT_TRUE(validate_category(*build_deligne_cat(3, 1)).ok());
  EXPECT_TRUE(validate_category(*build_deligne_cat(4, 1)).ok());
  EXPECT_THROW(build_deligne_cat(2, 2), CapExceeded);
}

TEST(PerverseModel, MonodromyIsNatural) {
  auto m = build_perverse_disk_model(2, 1);
  EXPECT_TRUE(validate_functor(m.forget).ok());
  EXPECT_TRUE(validate_nat(m.monodromy).ok());
  EXPECT_TRUE(is_invertible(m.monodromy));
}

TEST(DiskSheaf, Counts) {
  EXPECT_EQ(disk_sheaf_oracle(1), 3);
  auto c1 = build_disk_sheaf_cat(1);
  EXPECT_EQ(iso_classes(*c1).size(), 3u);
  auto c2 = build_disk_sheaf_cat(2);
  EXPECT_TRUE(validate_category(*c2).ok());
  EXPECT_EQ(static_cast<int>(iso_classes(*c2).size()), disk_sheaf_oracle(2));
  EXPECT_THROW(build_disk_sheaf_cat(4), InputError);
}

TEST(DiskSheaf, MonodromyTrivialOnSmallW) {
  auto c = build_disk_sheaf_cat(2);
  for (ObjId x = 0; x < c->num_objects(); ++x) {
    const std::string& name = c->object_name(x);
    if (name.find(",0|") != std::string::npos) EXPECT_NE(name.find("|b=)"), std::string::npos);
    if (name.find(",1|") != std::string::npos) EXPECT_NE(name.find("|b=0)"), std::string::npos);
  }
}

TEST(Kernels, FunctorEnumerationSerialMatchesParallel) {
  auto corpus = category_corpus(19, 12);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i];
    const auto& d = corpus[(i * 5 + 3) % corpus.size()];
    auto s = kernels::enumerate_functors_serial(c, d, Caps());
    auto p = kernels::enumerate_functors_parallel(c, d, Caps());
    EXPECT_EQ(s, p);
    for (const auto& f : s) EXPECT_TRUE(validate_functor(f).ok());
  }
}

TEST(Kernels, AssociativitySerialMatchesParallel) {
  FinCat::Builder b;
  b.add_object("*");
  for (int i = 0; i < 4; ++i) b.add_morphism("g" + std::to_string(i), 0, 0);
  b.set_identity(0, 0);
  b.fill_compose([](MorId g, MorId f) { return g == 3 && f == 2 ? 0 : (g + f) % 4; });
  FinCat c = std::move(b).build();
  auto s = kernels::associativity_failures_serial(c);
  EXPECT_FALSE(s.empty());
  EXPECT_EQ(s, kernels::associativity_failures_parallel(c));
}

TEST(Functors, CountsMatchBruteForce) {
  // Functors [1] -> FinSet<=2 are maps between sets of size <= 2.
  int expected = 0;
  for (int s = 0; s <= 2; ++s)
    for (int t = 0; t <= 2; ++t) {
      int p = 1;
      for (int i = 0; i < s; ++i) p *= t;
      expected += p;
    }
  EXPECT_EQ(static_cast<int>(enumerate_functors(arrow_category(), finset(2)).size()), expected);
}

TEST(Caps, Parse) {
  Caps c = Caps::parse("objects=5,reps=7");
  EXPECT_EQ(c.max_objects, 5u);
  EXPECT_EQ(c.max_reps, 7u);
  EXPECT_EQ(c.max_morphisms, Caps().max_morphisms);
  EXPECT_THROW(Caps::parse("bogus=1"), InputError);
  EXPECT_THROW(Caps::parse("objects=x"), InputError);
}

}  // namespace
}  // namespace exodus
