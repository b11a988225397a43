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

// Representations of a presented (2,1)-category in finite categories: a
// category per object, a functor per 1-generator and a natural isomorphism
// per 2-generator, extended strictly to words and pasting expressions.

#ifndef EXODUS_REP_H_
#define EXODUS_REP_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exodus/fincat.h"
#include "exodus/pasting.h"
#include "exodus/presentation.h"
#include "exodus/twocat.h"

namespace exodus {

using PresPtr = std::shared_ptr<const Pres2Cat>;

struct Rep {
  PresPtr source;
  std::vector<CatPtr> objects;
  std::vector<Functor> gen1;
  std::vector<NatTransform> gen2;
};
bool operator==(const Rep& a, const Rep& b);

// Every object to c, every 1-generator to the identity, every 2-generator to
// the identity (only valid when each 2-generator's words are both empty or
// otherwise evaluate equal; validate_rep reports it otherwise).
Rep constant_rep(const PresPtr& p, const CatPtr& c);

// Throws InputError when an invertible generator's value is not an
// isomorphism of categories or endpoints do not match.
Assignment<CatModel> rep_assignment(const Rep& r);
Functor evaluate_word(const Rep& r, const Word& w);
NatTransform evaluate_pasting(const Rep& r, const PastingExpr& e);

// Endpoint mismatches throw InputError. Non-invertible values of invertible
// generators, 2-generator values with the wrong boundary or not invertible,
// and failed relations are reported.
Report validate_rep(const Rep& r);

// r o m for a presentation morphism m: sub -> r.source.
Rep restrict_rep(const Rep& r, const PresPtr& sub, const PresMorphism& m);

// --- 2-natural transformations and modifications --------------------------

// components[o]: R1(o) -> R2(o); naturality[g]: R2(g) n(src) => n(dst) R1(g).
struct TwoNatRep {
  Rep source;
  Rep target;
  std::vector<Functor> components;
  std::vector<NatTransform> naturality;
};
bool operator==(const TwoNatRep& a, const TwoNatRep& b);

// components[o]: n(o) => n'(o).
struct ModificationRep {
  TwoNatRep source;
  TwoNatRep target;
  std::vector<NatTransform> components;
};
bool operator==(const ModificationRep& a, const ModificationRep& b);

// The pasted naturality cell R2(w) n(w.src) => n(w.dst) R1(w).
NatTransform naturality_along(const TwoNatRep& n, const Word& w);

Report validate_two_nat(const TwoNatRep& n);
Report validate_modification(const ModificationRep& m);

TwoNatRep identity_two_nat(const Rep& r);
// m o n: R1 -> R2 -> R3.
TwoNatRep compose(const TwoNatRep& m, const TwoNatRep& n);
// Inverse when every component is an isomorphism of categories.
std::optional<TwoNatRep> inverse(const TwoNatRep& n);
TwoNatRep restrict_two_nat(const TwoNatRep& n, const PresPtr& sub,
                           const PresMorphism& m);

ModificationRep restrict_modification(const ModificationRep& a, const PresPtr& sub,
                                      const PresMorphism& m);

ModificationRep identity_modification(const TwoNatRep& n);
ModificationRep vcompose(const ModificationRep& b, const ModificationRep& a);
// b * a for a: n => n' (R1 -> R2) and b: m => m' (R2 -> R3).
ModificationRep hcompose(const ModificationRep& b, const ModificationRep& a);
std::optional<ModificationRep> inverse(const ModificationRep& a);

// All 2-natural transformations R1 -> R2 whose components pass `accept`
// (all of them when it is empty). Stops after `limit` results when nonzero.
std::vector<TwoNatRep> enumerate_two_nats(
    const Rep& r1, const Rep& r2, const Caps& caps = {},
    const std::function<bool(const Functor&)>& accept = {},
    std::size_t limit = 0);
std::vector<ModificationRep> enumerate_modifications(const TwoNatRep& n,
                                                     const TwoNatRep& n2,
                                                     const Caps& caps = {});

struct RepHomCategory {
  CatPtr cat;
  std::vector<TwoNatRep> transformations;  // by object id
  std::vector<ModificationRep> modifications;  // by morphism id
};
RepHomCategory rep_hom_category(const Rep& r1, const Rep& r2,
                                const Caps& caps = {});

// A 2-natural transformation with equivalence components (hence an
// equivalence of reps), or nullopt when exhaustive search finds none.
std::optional<TwoNatRep> find_rep_equivalence(const Rep& r1, const Rep& r2,
                                              const Caps& caps = {});

// Evaluation model whose objects are reps of one presentation.
struct RepModel {
  using Object = Rep;
  using Cell1 = TwoNatRep;
  using Cell2 = ModificationRep;

  Cell1 unit(const Object& x) const { return identity_two_nat(x); }
  Cell1 compose1(const Cell1& g, const Cell1& f) const { return compose(g, f); }
  std::optional<Cell1> inverse1(const Cell1& f) const { return inverse(f); }
  Cell2 id2(const Cell1& f) const { return identity_modification(f); }
  Cell2 vcompose(const Cell2& b, const Cell2& a) const { return exodus::vcompose(b, a); }
  Cell2 hcompose(const Cell2& b, const Cell2& a) const { return exodus::hcompose(b, a); }
  std::optional<Cell2> inverse2(const Cell2& a) const { return exodus::inverse(a); }
  Cell1 src2(const Cell2& a) const { return a.source; }
  Cell1 dst2(const Cell2& a) const { return a.target; }
  Object source(const Cell1& f) const { return f.source; }
  Object target(const Cell1& f) const { return f.target; }
  bool same_object(const Object& a, const Object& b) const { return a == b; }
  std::string describe(const Cell2& a) const;
};

// --- Limits and colimits -------------------------------------------------

// Coherent families: x_o in R(o) and isomorphisms phi_g: R(g)(x_src) -> x_dst
// compatible with every 2-generator; morphisms are families of maps
// commuting with the phi's.
struct TwoLimit {
  CatPtr cat;
  std::vector<std::vector<ObjId>> families;  // [limit object][presentation object]
  std::vector<std::vector<MorId>> isos;      // [limit object][1-generator]
  std::vector<Functor> projections;          // limit -> R(o)
};
TwoLimit two_limit(const Rep& r, const Caps& caps = {});
// Phi_w: R(w)(x_src) -> x_dst, the isos of a family pasted along a word.
MorId limit_transport(const Rep& r, const std::vector<ObjId>& x,
                      const std::vector<MorId>& phi, const Word& w);

// Colimit of a finite chain stages[0] -> stages[1] -> ... along maps[i]:
// disjoint union of objects, homs computed in the last stage.
struct ChainColimit {
  CatPtr cat;
  std::vector<Functor> inclusions;  // stages[i] -> cat
};
ChainColimit filtered_two_colimit(const std::vector<CatPtr>& stages,
                                  const std::vector<Functor>& maps);

// --- Enumeration ---------------------------------------------------------

struct RepEnumeration {
  std::vector<Rep> reps;  // one per equivalence class
  std::size_t candidates = 0;  // valid reps before deduplication
  bool truncated = false;      // the max_reps cap stopped the search
  bool undecided = false;      // some equivalence search hit a cap; kept as distinct
};
// Every valid rep with objects drawn from `universe`, deduplicated up to
// equivalence. Deterministic order.
RepEnumeration enumerate_reps(const PresPtr& p, const std::vector<CatPtr>& universe,
                              const Caps& caps = {});

}  // namespace exodus

#endif  // EXODUS_REP_H_
