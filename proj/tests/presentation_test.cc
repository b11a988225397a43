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

#include <map>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "exodus/builders.h"
#include "exodus/presentation.h"
#include "gtest/gtest.h"

namespace exodus {
namespace {

Pres2Cat circle() {
  Pres2Cat p;
  p.add_object("x");
  p.add_gen1("beta", 0, 0, true);
  return p;
}

TEST(Words, FreeReduction) {
  Pres2Cat p = circle();
  const Word b = letter_word(p, 0), bi = letter_word(p, 0, true);
  EXPECT_TRUE(append(p, b, bi).empty());
  EXPECT_TRUE(append(p, bi, b).empty());
  const Word bb = append(p, b, b);
  EXPECT_EQ(bb.letters.size(), 2u);
  EXPECT_EQ(inverse_word(p, bb), append(p, bi, bi));
  EXPECT_EQ(word_string(p, append(p, bb, bi)), "beta");
  EXPECT_EQ(word_string(p, empty_word(0)), "1_x");
}

TEST(Words, InverseOfNonInvertibleRejected) {
  Pres2Cat p;
  p.add_object("x");
  p.add_object("y");
  p.add_gen1("f", 0, 1, false);
  EXPECT_THROW(letter_word(p, 0, true), InputError);
  EXPECT_THROW(append(p, letter_word(p, 0), letter_word(p, 0)), InputError);
}

TEST(Validate, NonParallelGenerator) {
  Pres2Cat p;
  p.add_object("x");
  p.add_object("y");
  p.add_gen1("f", 0, 1, false);
  p.add_gen2("s", letter_word(p, 0), empty_word(0));
  EXPECT_FALSE(validate_presentation(p).ok());
}

TEST(Cone, EmptyLink) {
  Pres2Cat c = cone_presentation(Pres2Cat{});
  ASSERT_EQ(c.objects, std::vector<std::string>{"*"});
  EXPECT_TRUE(c.gen1.empty());
  EXPECT_TRUE(c.gen2.empty());
}

TEST(Cone, CircleGivesDisk) {
  Pres2Cat d = cone_presentation(circle(), "0");
  EXPECT_TRUE(validate_presentation(d).ok());
  ASSERT_EQ(d.num_objects(), 2);
  ASSERT_EQ(d.gen1.size(), 2u);
  ASSERT_EQ(d.gen2.size(), 1u);
  const ObjId zero = *d.find_object("0"), x = *d.find_object("x");
  const int a = *d.find_gen1("a_x"), beta = *d.find_gen1("beta");
  EXPECT_EQ(d.gen1[a].src, zero);
  EXPECT_EQ(d.gen1[a].dst, x);
  EXPECT_TRUE(d.gen1[beta].invertible);
  EXPECT_EQ(d.gen2[0].name, "c_beta");
  EXPECT_EQ(word_string(d, d.gen2[0].src), "beta o a_x");
  EXPECT_EQ(word_string(d, d.gen2[0].dst), "a_x");
  EXPECT_TRUE(d.rel2.empty());
}

Pres2Cat random_presentation(std::mt19937_64& rng) {
  Pres2Cat p;
  const int n = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int i = 0; i < n; ++i) p.add_object("o" + std::to_string(i));
  const int m = std::uniform_int_distribution<int>(0, 4)(rng);
  std::uniform_int_distribution<int> obj(0, n - 1);
  for (int g = 0; g < m; ++g)
    p.add_gen1("g" + std::to_string(g), obj(rng), obj(rng), rng() % 2 == 0);
  // 2-generators between pairs of parallel one-letter or empty words.
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      if (g < h && p.gen1[g].src == p.gen1[h].src && p.gen1[g].dst == p.gen1[h].dst)
        p.add_gen2("s" + std::to_string(g) + std::to_string(h), letter_word(p, g),
                   letter_word(p, h));
  for (int g = 0; g < m; ++g)
    if (p.gen1[g].src == p.gen1[g].dst && rng() % 3 == 0)
      p.add_gen2("t" + std::to_string(g), letter_word(p, g), empty_word(p.gen1[g].src));
  return p;
}

TEST(Cone, AlwaysValidAndNothingIntoApex) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Pres2Cat p = random_presentation(rng);
    Pres2Cat c = cone_presentation(p);
    ASSERT_TRUE(validate_presentation(c).ok());
    const ObjId apex = *c.find_object("*");
    for (const Gen1& g : c.gen1) EXPECT_NE(g.dst, apex);
    EXPECT_EQ(c.rel2.size(), p.gen2.size());
    EXPECT_EQ(c.gen2.size(), p.gen2.size() + p.gen1.size());
  }
}

// Reduced words src -> dst of length <= len.
std::vector<Word> words_between(const Pres2Cat& p, ObjId src, ObjId dst, int len) {
  std::vector<Word> frontier = {empty_word(src)}, out;
  std::set<Word> seen = {frontier[0]};
  for (int step = 0; step <= len; ++step) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      if (w.dst == dst) out.push_back(w);
      if (step == len) continue;
      for (std::size_t g = 0; g < p.gen1.size(); ++g)
        for (bool inv : {false, true}) {
          if (inv && !p.gen1[g].invertible) continue;
          const Word l = letter_word(p, static_cast<int>(g), inv);
          if (l.src != w.dst) continue;
          Word v = append(p, w, l);
          if (static_cast<int>(v.letters.size()) == step + 1 && seen.insert(v).second)
            next.push_back(v);
        }
    }
    frontier = std::move(next);
  }
  return out;
}

TEST(Cone, HomFromApexIsContractible) {
  Pres2Cat d = cone_presentation(circle());
  const ObjId apex = *d.find_object("*"), x = *d.find_object("x");
  const int len = 4;
  std::vector<Word> verts = words_between(d, apex, x, len);
  std::map<Word, int> index;
  for (const Word& w : verts) index.emplace(w, static_cast<int>(index.size()));
  // Edges: whiskered 2-generators v ; s ; u with both ends in range.
  std::set<std::tuple<Word, Word, int>> instances;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t s = 0; s < d.gen2.size(); ++s) {
    const Gen2& g = d.gen2[s];
    for (const Word& v : words_between(d, apex, g.src.src, len))
      for (const Word& u : words_between(d, g.src.dst, x, len + 1)) {
        auto a = index.find(append(d, append(d, v, g.src), u));
        auto b = index.find(append(d, append(d, v, g.dst), u));
        if (a == index.end() || b == index.end()) continue;
        if (instances.emplace(v, u, static_cast<int>(s)).second)
          edges.emplace_back(a->second, b->second);
      }
  }
  // A connected graph with |E| = |V| - 1 is a tree: no nontrivial loops.
  std::vector<int> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  std::set<int> roots;
  for (std::size_t i = 0; i < verts.size(); ++i) roots.insert(find(static_cast<int>(i)));
  EXPECT_EQ(verts.size(), 7u);
  EXPECT_EQ(roots.size(), 1u);
  EXPECT_EQ(edges.size(), verts.size() - 1);
}

TEST(Truncate, DiskRelation) {
  Pres2Cat d = cone_presentation(circle(), "0");
  Pres1Cat t = truncate_to_1(d);
  ASSERT_EQ(t.relations.size(), 1u);
  EXPECT_EQ(word_string(d, t.relations[0].first), "beta o a_x");
  EXPECT_EQ(word_string(d, t.relations[0].second), "a_x");
}

TEST(Truncate, FreeCategoryFunctorCount) {
  // No 2-generators: functors are arbitrary choices on generators.
  Pres2Cat p;
  p.add_object("x");
  p.add_object("y");
  p.add_gen1("f", 0, 1, false);
  p.add_gen1("g", 0, 1, false);
  p.add_gen1("h", 1, 1, false);
  Pres1Cat t = truncate_to_1(p);
  EXPECT_TRUE(t.relations.empty());
  auto d = finset(2);
  std::size_t expected = 0;
  for (ObjId a = 0; a < d->num_objects(); ++a)
    for (ObjId b = 0; b < d->num_objects(); ++b)
      expected += d->hom(a, b).size() * d->hom(a, b).size() * d->hom(b, b).size();
  EXPECT_EQ(enumerate_pres1_functors(t, d).size(), expected);
}

TEST(Truncate, InvertibleGeneratorsGoToIsos) {
  Pres1Cat t = truncate_to_1(circle());
  auto d = finset(2);
  // Automorphisms of sets of size 0, 1, 2.
  EXPECT_EQ(enumerate_pres1_functors(t, d).size(), 1u + 1u + 2u);
  auto fc = pres1_functor_category(t, d);
  EXPECT_TRUE(validate_category(*fc.cat).ok());
  EXPECT_EQ(iso_classes(*fc.cat).size(), 4u);
}

TEST(Morphism, IdentityAndComposition) {
  Pres2Cat d = cone_presentation(circle(), "0");
  PresMorphism id = identity_morphism(d);
  EXPECT_TRUE(validate_morphism(d, d, id).ok());
  PresMorphism twice = compose(d, id, id);
  EXPECT_TRUE(same_on_1cells(twice, id));
  // Circle into the disk; beta^-1 maps to beta^-1.
  Pres2Cat c = circle();
  PresMorphism incl{{*d.find_object("x")}, {letter_word(d, *d.find_gen1("beta"))}, {}};
  EXPECT_TRUE(validate_morphism(c, d, incl).ok());
  EXPECT_EQ(word_string(d, map_word(d, incl, letter_word(c, 0, true))), "beta^-1");
  // A non-invertible image for an invertible generator is rejected.
  PresMorphism bad{{*d.find_object("x")}, {empty_word(*d.find_object("0"))}, {}};
  EXPECT_FALSE(validate_morphism(c, d, bad).ok());
}

}  // namespace
}  // namespace exodus
