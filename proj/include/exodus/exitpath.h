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

// Combinatorial stratified spaces and their exit-path presentations, exit
// paths on stratified simplicial complexes, and the factorization of a
// triangulated homotopy square into elementary moves.

#ifndef EXODUS_EXITPATH_H_
#define EXODUS_EXITPATH_H_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "exodus/presentation.h"

namespace exodus {

class SpaceExpr {
 public:
  enum class Kind { kPoint, kLeaf, kCone, kProductR, kGlue2 };

  static SpaceExpr point();
  // A stratum given by a presentation of its fundamental 2-groupoid.
  static SpaceExpr leaf(Pres2Cat p);
  static SpaceExpr cone(SpaceExpr link, std::string apex = "*");
  static SpaceExpr product_r(SpaceExpr base, int k);
  // incl_a, incl_b: presentation morphisms from the overlap's presentation
  // into the charts' presentations.
  static SpaceExpr glue2(SpaceExpr a, SpaceExpr b, SpaceExpr overlap,
                         PresMorphism incl_a, PresMorphism incl_b);

  Kind kind() const { return node_->kind; }
  const Pres2Cat& leaf_presentation() const { return node_->leaf; }
  const std::string& apex() const { return node_->apex; }
  int k() const { return node_->k; }
  // Cone: link; ProductR: base; Glue2: chart a, chart b, overlap.
  const SpaceExpr& child(int i) const { return node_->children.at(i); }
  const PresMorphism& incl_a() const { return node_->incl_a; }
  const PresMorphism& incl_b() const { return node_->incl_b; }

 private:
  struct Node {
    Kind kind;
    Pres2Cat leaf;
    std::string apex;
    int k = 0;
    std::vector<SpaceExpr> children;
    PresMorphism incl_a, incl_b;
  };
  explicit SpaceExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Pushout of two chart presentations along an overlap. Objects of the overlap
// are identified through the inclusions; each overlap 1-generator g gets an
// invertible 2-generator e_g: incl_a(g) => incl_b(g), and each overlap
// 2-generator a compatibility relation.
struct GluedPresentation {
  Pres2Cat pres;
  PresMorphism from_a;  // chart a -> pres
  PresMorphism from_b;  // chart b -> pres
  std::vector<int> glue_gen2;  // e_g index in pres, per overlap 1-generator
};
GluedPresentation glue_presentations(const Pres2Cat& a, const Pres2Cat& b,
                                     const Pres2Cat& overlap,
                                     const PresMorphism& incl_a,
                                     const PresMorphism& incl_b);

// The pasting incl_a(w) => incl_b(w) of glue cells along an overlap word.
PastingExpr glue_pasting(const GluedPresentation& g, const Pres2Cat& overlap,
                         const PresMorphism& incl_a, const PresMorphism& incl_b,
                         const Word& w);

// Point: one object "pt". Leaf: its presentation. ProductR: the base's.
// Cone: cone_presentation of the link's. Glue2: glue_presentations.
// Throws InputError for a cone over a Glue2 or ill-typed inclusions.
Pres2Cat exit_presentation(const SpaceExpr& x);

// The circle leaf: one object x, one invertible loop beta.
Pres2Cat circle_leaf();
// Cone on the circle with apex "0".
SpaceExpr disk_space();
// Cone on the circle (apex "inf") glued to a point chart (a plane) along the
// circle: x -> x, beta -> beta on the cone side and x -> pt, beta -> 1 on the
// plane side.
SpaceExpr p1_space();

// --- Stratified simplicial complexes ----------------------------------------

struct StratSimpComplex {
  int num_vertices = 0;
  std::vector<std::vector<int>> simplices;  // sorted vertex lists, faces included
  std::vector<int> stratum_dim;             // per simplex
};
// Faces present, dimensions monotone from faces to cofaces.
Report validate_complex(const StratSimpComplex& k);
// A vertex walk; each step stays put or follows an edge. True iff the stratum
// dimension along v0, edge(v0 v1), v1, ... never decreases. Throws InputError
// when a step is not carried by the complex.
bool check_exit_path(const StratSimpComplex& k, const std::vector<int>& path);
// Cone point 0 (dimension 0) over a ring of `ring` vertices (dimension 2).
StratSimpComplex stratified_disk_complex(int ring = 4);

// --- Triangulated squares ----------------------------------------------------

// Boundary paths: left runs bottom-left to top-left, right bottom-right to
// top-right, bottom bottom-left to bottom-right, top top-left to top-right.
struct TriangulatedSquare {
  int num_vertices = 0;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::string> chart;  // per triangle
  std::vector<int> left, right, bottom, top;
};
// Throws InputError unless the complex is a combinatorial disk whose boundary
// cycle is bottom, right, top reversed, left reversed.
void validate_square(const TriangulatedSquare& t);

// Grid of rows x cols cells, each split along a diagonal chosen by diag (bit
// per cell, row-major), vertices numbered row-major from the bottom-left.
TriangulatedSquare grid_square(int rows, int cols, const std::vector<bool>& diag,
                               const std::vector<std::string>& charts);

// Vertices, then one vertex per edge, then one per triangle; each triangle
// becomes six with its chart.
TriangulatedSquare barycentric_subdivide(const TriangulatedSquare& t);

struct ElementaryMove {
  std::string chart;
  int triangle;
  std::vector<int> before;  // front paths from the bottom-left to the top-left corner
  std::vector<int> after;
};
// Sweeps a front from the left path across one triangle at a time, always at
// the lowest front position where a peel keeps the rest a disk. The first
// front is the left path, the last is bottom, right, top reversed.
std::vector<ElementaryMove> factor_elementary(const TriangulatedSquare& t);

// The final front of a factorization with the constant bottom and top
// segments removed, i.e. the right path.
std::vector<int> final_right_path(const TriangulatedSquare& t,
                                  const std::vector<ElementaryMove>& moves);

}  // namespace exodus

#endif  // EXODUS_EXITPATH_H_
