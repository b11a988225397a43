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

#include "exodus/exitpath.h"

#include <random>
#include <set>

#include "exodus/builders.h"
#include "exodus/rep.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace exodus {
namespace {

void expect_replay(const TriangulatedSquare& t, const std::vector<ElementaryMove>& moves) {
  EXPECT_EQ(oracles::replay_error(t, moves), "");
}

PresPtr share(Pres2Cat p) { return std::make_shared<const Pres2Cat>(std::move(p)); }

TEST(ExitPresentation, Point) {
  const Pres2Cat p = exit_presentation(SpaceExpr::point());
  EXPECT_EQ(p.num_objects(), 1);
  EXPECT_TRUE(p.gen1.empty());
  EXPECT_TRUE(p.gen2.empty());
  // Cone on the empty space is a point too.
  const Pres2Cat c = exit_presentation(SpaceExpr::cone(SpaceExpr::leaf(Pres2Cat{})));
  EXPECT_EQ(c.num_objects(), 1);
  EXPECT_TRUE(c.gen1.empty());
}

TEST(ExitPresentation, Disk) {
  const Pres2Cat d = exit_presentation(disk_space());
  EXPECT_TRUE(validate_presentation(d).ok());
  EXPECT_EQ(std::set<std::string>(d.objects.begin(), d.objects.end()),
            (std::set<std::string>{"0", "x"}));
  ASSERT_EQ(d.gen1.size(), 2u);
  ASSERT_EQ(d.gen2.size(), 1u);
  EXPECT_EQ(word_string(d, d.gen2[0].src), "beta o a_x");
  EXPECT_EQ(word_string(d, d.gen2[0].dst), "a_x");
}

TEST(ExitPresentation, ProjectiveLine) {
  const Pres2Cat p = exit_presentation(p1_space());
  EXPECT_TRUE(validate_presentation(p).ok());
  EXPECT_EQ(p.objects, (std::vector<std::string>{"x", "inf"}));
  ASSERT_EQ(p.gen1.size(), 2u);
  ASSERT_EQ(p.gen2.size(), 2u);
  const int e = *p.find_gen2("e_beta");
  EXPECT_EQ(word_string(p, p.gen2[e].src), "beta");
  EXPECT_EQ(word_string(p, p.gen2[e].dst), "1_x");
  // z = c o (e^-1 * a) is an automorphism of a.
  const int c = *p.find_gen2("c_beta");
  const Word a = letter_word(p, *p.find_gen1("a_x"));
  const PastingExpr z = PastingExpr::vcomp(
      PastingExpr::gen(c), PastingExpr::hcomp(PastingExpr::inv(PastingExpr::gen(e)), PastingExpr::id(a)));
  const Type2 t = type_of(p, z);
  EXPECT_EQ(t.src, a);
  EXPECT_EQ(t.dst, a);
}

TEST(ExitPresentation, ProductIsTransparent) {
  for (const SpaceExpr& x : {SpaceExpr::point(), disk_space(), p1_space()}) {
    const Pres2Cat p = exit_presentation(x);
    EXPECT_EQ(exit_presentation(SpaceExpr::product_r(x, 3)), p);
    EXPECT_EQ(exit_presentation(SpaceExpr::product_r(SpaceExpr::product_r(x, 1), 2)), p);
  }
}

TEST(ExitPresentation, Errors) {
  EXPECT_THROW(exit_presentation(SpaceExpr::cone(p1_space())), InputError);
  // beta into the plane chart must be an invertible word, so a loop on the
  // point is required; a missing generator is ill-typed.
  const PresMorphism to_plane{{0}, {}, {}};
  const SpaceExpr cone = SpaceExpr::cone(SpaceExpr::leaf(circle_leaf()));
  const Pres2Cat cp = exit_presentation(cone);
  const PresMorphism to_cone{{0}, {letter_word(cp, 0)}, {}};
  EXPECT_THROW(exit_presentation(SpaceExpr::glue2(cone, SpaceExpr::point(),
                                                  SpaceExpr::leaf(circle_leaf()), to_cone, to_plane)),
               InputError);
  EXPECT_THROW(SpaceExpr::product_r(SpaceExpr::point(), -1), InputError);
}

TEST(ExitPresentation, GlueWithOverlapTwoGenerators) {
  // Glue two copies of a presentation with a 2-generator along itself: the
  // compatibility relation is added and the result validates.
  Pres2Cat q;
  q.add_object("y");
  q.add_gen1("g", 0, 0, true);
  q.add_gen2("s", letter_word(q, 0), empty_word(0));
  const PresMorphism id = identity_morphism(q);
  const GluedPresentation g = glue_presentations(q, q, q, id, id);
  EXPECT_TRUE(validate_presentation(g.pres).ok());
  EXPECT_EQ(g.pres.num_objects(), 1);
  EXPECT_EQ(g.pres.gen1.size(), 2u);
  EXPECT_EQ(g.pres.gen1[1].name, "g'");
  EXPECT_EQ(g.pres.rel2.size(), 1u);
}

// Axiom (H): reps of B x R^k and of B are literally the same list.
TEST(ExitPresentation, ProductAxiomOnReps) {
  const std::vector<CatPtr> universe = {terminal_category(), finset(1)};
  for (const SpaceExpr& x : {disk_space(), p1_space()}) {
    const PresPtr p = share(exit_presentation(x));
    const PresPtr q = share(exit_presentation(SpaceExpr::product_r(x, 2)));
    const auto a = enumerate_reps(p, universe);
    const auto b = enumerate_reps(q, universe);
    ASSERT_EQ(a.reps.size(), b.reps.size());
    for (std::size_t i = 0; i < a.reps.size(); ++i) {
      EXPECT_EQ(a.reps[i].objects, b.reps[i].objects);
      EXPECT_EQ(a.reps[i].gen1, b.reps[i].gen1);
      EXPECT_EQ(a.reps[i].gen2, b.reps[i].gen2);
    }
  }
}

TEST(Truncation, ProjectiveLineIntoArrow) {
  const Pres2Cat p = exit_presentation(p1_space());
  const Pres1Cat t = truncate_to_1(p);
  const auto fs = enumerate_pres1_functors(t, arrow_category());
  EXPECT_EQ(fs.size(), 3u);
  const ObjId x = *p.find_object("x");
  int with_x_at_1 = 0;
  for (const auto& f : fs) with_x_at_1 += f.objects[x] == 1;
  EXPECT_EQ(with_x_at_1, 2);
  // beta is forced to the identity in every functor.
  const int beta = *p.find_gen1("beta");
  auto arrow = arrow_category();
  for (const auto& f : fs) EXPECT_TRUE(arrow->is_identity(f.gen1[beta]));
}

// Normal form (C_inf, C_0, alpha, f in Aut(alpha)) with both categories
// FinSet<=1, whose only autoequivalence is the identity: pairs (alpha, f)
// up to a natural isomorphism alpha => alpha' conjugating f to f'.
TEST(EnumerateReps, ProjectiveLineNormalForm) {
  const CatPtr s = finset(1);
  const auto reps = enumerate_reps(share(exit_presentation(p1_space())), {s});
  EXPECT_FALSE(reps.truncated);
  struct Pair {
    Functor alpha;
    NatTransform f;
  };
  std::vector<Pair> pairs;
  for (const Functor& a : enumerate_functors(s, s))
    for (const NatTransform& f : enumerate_nats(a, a, true)) pairs.push_back({a, f});
  std::vector<Pair> classes;
  for (const Pair& p : pairs) {
    bool seen = false;
    for (const Pair& c : classes)
      for (const NatTransform& th : enumerate_nats(p.alpha, c.alpha, true))
        if (vcompose(th, p.f) == vcompose(c.f, th)) seen = true;
    if (!seen) classes.push_back(p);
  }
  EXPECT_EQ(reps.reps.size(), classes.size());
  EXPECT_EQ(classes.size(), 3u);
}

// --- Exit paths -------------------------------------------------------------

TEST(ExitPath, DiskComplex) {
  const StratSimpComplex k = stratified_disk_complex(5);
  EXPECT_TRUE(validate_complex(k).ok());
  EXPECT_TRUE(check_exit_path(k, {3}));
  EXPECT_TRUE(check_exit_path(k, {0, 0}));
  EXPECT_TRUE(check_exit_path(k, {0, 2}));
  EXPECT_FALSE(check_exit_path(k, {2, 0}));
  EXPECT_TRUE(check_exit_path(k, {0, 1, 2, 3}));
  EXPECT_THROW(check_exit_path(k, {1, 3}), InputError);
  EXPECT_THROW(check_exit_path(k, {}), InputError);
}

TEST(ExitPath, ValidateComplexCatchesDecrease) {
  StratSimpComplex k = stratified_disk_complex(4);
  for (std::size_t i = 0; i < k.simplices.size(); ++i)
    if (k.simplices[i] == std::vector<int>{1}) k.stratum_dim[i] = 3;
  EXPECT_FALSE(validate_complex(k).ok());
  StratSimpComplex missing = stratified_disk_complex(4);
  missing.simplices.erase(missing.simplices.begin());
  missing.stratum_dim.erase(missing.stratum_dim.begin());
  EXPECT_FALSE(validate_complex(missing).ok());
}

TEST(ExitPath, RandomWalksMatchScan) {
  const int ring = 6;
  const StratSimpComplex k = stratified_disk_complex(ring);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> path = {static_cast<int>(rng() % (ring + 1))};
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < len; ++s) {
      const int v = path.back();
      int w;
      if (rng() % 4 == 0) {
        w = v;
      } else if (v == 0) {
        w = 1 + static_cast<int>(rng() % ring);
      } else {
        const int r = static_cast<int>(rng() % 3);
        w = r == 0 ? 0 : r == 1 ? v % ring + 1 : (v + ring - 2) % ring + 1;
      }
      path.push_back(w);
    }
    // Only the cone point lies in the 0-dimensional stratum; every edge and
    // every other vertex lies in the open 2-dimensional one.
    bool left_point = false, expected = true;
    for (int v : path) {
      if (v != 0) left_point = true;
      else if (left_point) expected = false;
    }
    EXPECT_EQ(check_exit_path(k, path), expected);
  }
}

// --- Squares ----------------------------------------------------------------

TEST(Square, SubdivisionCounts) {
  const TriangulatedSquare t = grid_square(1, 1, {false}, {});
  ASSERT_EQ(t.triangles.size(), 2u);
  const TriangulatedSquare s = barycentric_subdivide(t);
  EXPECT_EQ(s.triangles.size(), 12u);
  EXPECT_NO_THROW(validate_square(s));
  EXPECT_EQ(barycentric_subdivide(s).triangles.size(), 72u);
  // Refined boundary paths keep the original vertices at even positions.
  for (auto [orig, ref] : {std::pair{t.left, s.left}, std::pair{t.right, s.right},
                           std::pair{t.bottom, s.bottom}, std::pair{t.top, s.top}}) {
    ASSERT_EQ(ref.size(), 2 * orig.size() - 1);
    for (std::size_t i = 0; i < orig.size(); ++i) EXPECT_EQ(ref[2 * i], orig[i]);
  }
  for (std::size_t i = 0; i < s.triangles.size(); ++i) EXPECT_EQ(s.chart[i], t.chart[i / 6]);
}

TEST(Square, TwoTriangles) {
  const TriangulatedSquare t = grid_square(1, 1, {true}, {"u", "u"});
  const auto moves = factor_elementary(t);
  ASSERT_EQ(moves.size(), 2u);
  for (const auto& m : moves) EXPECT_EQ(m.chart, "u");
  expect_replay(t, moves);
}

TEST(Square, TwoByTwoAlternating) {
  std::vector<std::string> charts;
  for (int i = 0; i < 8; ++i) charts.push_back(i % 2 ? "v" : "u");
  const TriangulatedSquare t = grid_square(2, 2, {false, true, true, false}, charts);
  const auto moves = factor_elementary(t);
  EXPECT_EQ(moves.size(), 8u);
  expect_replay(t, moves);
}

TEST(Square, PinchedVertexRejected) {
  // Two triangles meeting at vertex 2 only.
  TriangulatedSquare t;
  t.num_vertices = 5;
  t.triangles = {{0, 1, 2}, {2, 3, 4}};
  t.chart = {"u", "u"};
  t.left = {0, 2, 4};
  t.bottom = {0, 1};
  t.right = {1, 2, 3};
  t.top = {4, 3};
  EXPECT_THROW(factor_elementary(t), InputError);
  EXPECT_THROW(validate_square(t), InputError);
}

TEST(Square, BadBoundaryRejected) {
  TriangulatedSquare t = grid_square(2, 2, {false, false, false, false}, {});
  std::swap(t.left, t.right);
  EXPECT_THROW(validate_square(t), InputError);
}

TEST(Square, RandomSquares) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % (25 / rows));
    std::vector<bool> diag(rows * cols);
    for (auto&& d : diag) d = rng() % 2;
    std::vector<std::string> charts(2 * rows * cols);
    for (auto& c : charts) c = std::string(1, static_cast<char>('a' + rng() % 3));
    TriangulatedSquare t = grid_square(rows, cols, diag, charts);
    if (t.triangles.size() <= 8 && rng() % 2) t = barycentric_subdivide(t);
    ASSERT_LE(t.triangles.size(), 50u);
    expect_replay(t, factor_elementary(t));
  }
}

}  // namespace
}  // namespace exodus
