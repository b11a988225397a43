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

// Strict 2-categories with finite hom-categories, and the two "models" that
// pasting evaluation runs in: a Concrete2Cat, and Cat itself (finite
// categories, functors, natural transformations).

#ifndef EXODUS_TWOCAT_H_
#define EXODUS_TWOCAT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exodus/fincat.h"

namespace exodus {

class Concrete2Cat {
 public:
  // A 1-cell is an object of hom(src, dst); a 2-cell is a morphism of it.
  struct Cell1 {
    ObjId src;
    ObjId dst;
    ObjId id;
    bool operator==(const Cell1&) const = default;
  };
  struct Cell2 {
    ObjId src;
    ObjId dst;
    MorId id;
    bool operator==(const Cell2&) const = default;
  };

  Concrete2Cat() = default;
  // homs is indexed by x * n + y; comps by (x * n + y) * n + z, each a functor
  // hom(y,z) x hom(x,y) -> hom(x,z) whose domain is product(hom(y,z), hom(x,y)).
  Concrete2Cat(std::vector<std::string> names, std::vector<CatPtr> homs,
               std::vector<Functor> comps, std::vector<ObjId> units);

  int num_objects() const { return static_cast<int>(names_.size()); }
  const std::string& object_name(ObjId x) const { return names_[x]; }
  std::optional<ObjId> find_object(const std::string& name) const;
  const CatPtr& hom(ObjId x, ObjId y) const { return homs_[x * num_objects() + y]; }
  const Functor& comp(ObjId x, ObjId y, ObjId z) const {
    const int n = num_objects();
    return comps_[(x * n + y) * n + z];
  }
  ObjId unit(ObjId x) const { return units_[x]; }

  Cell1 unit_cell(ObjId x) const { return {x, x, units_[x]}; }
  Cell2 id2(const Cell1& f) const;
  Cell1 src2(const Cell2& a) const;
  Cell1 dst2(const Cell2& a) const;
  // g o f for 1-cells f: x -> y, g: y -> z.
  Cell1 compose1(const Cell1& g, const Cell1& f) const;
  // b o a inside one hom-category.
  Cell2 vcompose(const Cell2& b, const Cell2& a) const;
  // b * a, the composition functor applied to the pair (b, a).
  Cell2 hcompose(const Cell2& b, const Cell2& a) const;
  std::optional<Cell1> inverse1(const Cell1& f) const;
  std::optional<Cell2> inverse2(const Cell2& a) const;

  // Copy with comp(x, y, z) replaced; used to build negative controls.
  Concrete2Cat with_comp(ObjId x, ObjId y, ObjId z, Functor f) const;

  bool operator==(const Concrete2Cat& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<CatPtr> homs_;
  std::vector<Functor> comps_;
  std::vector<ObjId> units_;
};

// Strict associativity and unit laws of the composition functors, and
// functoriality of each of them. Exhaustive.
Report validate_2cat(const Concrete2Cat& c);

// Vertical or horizontal composition of 2-cells; throws InputError when the
// cells are not composable in that direction.
enum class Direction { kVertical, kHorizontal };
Concrete2Cat::Cell2 compose2(const Concrete2Cat& c, Direction mode,
                             const Concrete2Cat::Cell2& a,
                             const Concrete2Cat::Cell2& b);

// Checks (k * g) o (h * f) = (k o h) * (g o f). samples == 0 means every
// composable quadruple; otherwise that many random ones drawn with `seed`.
Report check_interchange(const Concrete2Cat& c, std::size_t samples = 0,
                         std::uint64_t seed = 0);

// Hom_{op}(x, y) = Hom(y, x); composition arguments swapped.
Concrete2Cat opposite(const Concrete2Cat& c);

// Triangle identities (g eps) o (eta g) = 1_g and (eps f) o (f eta) = 1_f.
Report check_adjunction(const Concrete2Cat& c, const Concrete2Cat::Cell1& f,
                        const Concrete2Cat::Cell1& g,
                        const Concrete2Cat::Cell2& eta,
                        const Concrete2Cat::Cell2& eps);

struct AdjointEquivalence {
  Concrete2Cat::Cell1 g;
  Concrete2Cat::Cell2 eta;  // 1_x => g f
  Concrete2Cat::Cell2 eps;  // f g => 1_y
};
// Exhaustive search for an adjoint equivalence (g, eta, eps) with invertible
// eta and eps; the first one in id order is returned.
std::optional<AdjointEquivalence> find_equivalence_witness(
    const Concrete2Cat& c, const Concrete2Cat::Cell1& f);

// --- Generators used by tests, the acceptance suite and the CLI ----------

// The full sub-2-category of Cat on the given finite categories.
Concrete2Cat cat_2category(
    const std::vector<std::pair<std::string, CatPtr>>& objects,
    const Caps& caps = {});
// A 1-category viewed as a 2-category with discrete hom-categories.
Concrete2Cat locally_discrete(const FinCat& c);
// One object, 1-cells Z/g_order, 2-cells (a, g): g => g for a in Z/a_order,
// horizontal composition (a, g) * (b, h) = (a + b, g + h).
Concrete2Cat two_group(int g_order, int a_order);

// --- Models ----------------------------------------------------------------

// Evaluation model over a Concrete2Cat.
struct ConcreteModel {
  using Object = ObjId;
  using Cell1 = Concrete2Cat::Cell1;
  using Cell2 = Concrete2Cat::Cell2;

  const Concrete2Cat& c;

  Cell1 unit(Object x) const { return c.unit_cell(x); }
  Cell1 compose1(const Cell1& g, const Cell1& f) const { return c.compose1(g, f); }
  std::optional<Cell1> inverse1(const Cell1& f) const { return c.inverse1(f); }
  Cell2 id2(const Cell1& f) const { return c.id2(f); }
  Cell2 vcompose(const Cell2& b, const Cell2& a) const { return c.vcompose(b, a); }
  Cell2 hcompose(const Cell2& b, const Cell2& a) const { return c.hcompose(b, a); }
  std::optional<Cell2> inverse2(const Cell2& a) const { return c.inverse2(a); }
  Cell1 src2(const Cell2& a) const { return c.src2(a); }
  Cell1 dst2(const Cell2& a) const { return c.dst2(a); }
  Object source(const Cell1& f) const { return f.src; }
  Object target(const Cell1& f) const { return f.dst; }
  bool same_object(Object a, Object b) const { return a == b; }
  std::string describe(const Cell2& a) const {
    return c.hom(a.src, a.dst)->morphism_name(a.id);
  }
};

// Evaluation model over Cat: objects are finite categories, 1-cells functors
// and 2-cells natural transformations.
struct CatModel {
  using Object = CatPtr;
  using Cell1 = Functor;
  using Cell2 = NatTransform;

  Cell1 unit(const Object& x) const { return identity_functor(x); }
  Cell1 compose1(const Cell1& g, const Cell1& f) const { return compose(g, f); }
  std::optional<Cell1> inverse1(const Cell1& f) const { return inverse_functor(f); }
  Cell2 id2(const Cell1& f) const { return identity_nat(f); }
  Cell2 vcompose(const Cell2& b, const Cell2& a) const { return exodus::vcompose(b, a); }
  Cell2 hcompose(const Cell2& b, const Cell2& a) const { return exodus::hcompose(b, a); }
  std::optional<Cell2> inverse2(const Cell2& a) const { return exodus::inverse(a); }
  Cell1 src2(const Cell2& a) const { return a.source; }
  Cell1 dst2(const Cell2& a) const { return a.target; }
  Object source(const Cell1& f) const { return f.domain; }
  Object target(const Cell1& f) const { return f.codomain; }
  bool same_object(const Object& a, const Object& b) const { return same_category(a, b); }
  std::string describe(const Cell2& a) const;
};

// A tetrahedron w, x, y, z: six 1-cells and four triangle 2-isomorphisms.
template <class Model>
struct Tetrahedron {
  typename Model::Cell1 wx, xy, yz, wy, xz, wz;
  typename Model::Cell2 wxy;  // xy o wx => wy
  typename Model::Cell2 xyz;  // yz o xy => xz
  typename Model::Cell2 wxz;  // xz o wx => wz
  typename Model::Cell2 wyz;  // yz o wy => wz
};

// The two 2-cells yz o xy o wx => wz, through w -> y -> z and through
// w -> x -> z, must coincide.
template <class Model>
Report check_tetrahedron(const Model& m, const Tetrahedron<Model>& t) {
  Report r;
  auto expect = [&](const typename Model::Cell2& a,
                    const typename Model::Cell1& s,
                    const typename Model::Cell1& d, const char* name) {
    if (!(m.src2(a) == s) || !(m.dst2(a) == d)) {
      r.add(std::string("triangle ") + name + " is not parallel to its edges");
    }
  };
  expect(t.wxy, m.compose1(t.xy, t.wx), t.wy, "wxy");
  expect(t.xyz, m.compose1(t.yz, t.xy), t.xz, "xyz");
  expect(t.wxz, m.compose1(t.xz, t.wx), t.wz, "wxz");
  expect(t.wyz, m.compose1(t.yz, t.wy), t.wz, "wyz");
  if (!r.ok()) throw InputError(r.violations.front());
  const auto via_y = m.vcompose(t.wyz, m.hcompose(m.id2(t.yz), t.wxy));
  const auto via_x = m.vcompose(t.wxz, m.hcompose(t.xyz, m.id2(t.wx)));
  if (!(via_y == via_x))
    r.add("tetrahedron does not commute: " + m.describe(via_y) + " != " +
          m.describe(via_x));
  return r;
}

}  // namespace exodus

#endif  // EXODUS_TWOCAT_H_
