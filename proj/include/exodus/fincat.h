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

// Finite 1-categories given by explicit tables, together with functors,
// natural transformations and the exhaustive constructions built on them
// (functor categories, equivalence detection, isomorphism classes).

#ifndef EXODUS_FINCAT_H_
#define EXODUS_FINCAT_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "exodus/error.h"

namespace exodus {

using ObjId = std::int32_t;
using MorId = std::int32_t;
inline constexpr MorId kNoMorphism = -1;

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

class FinCat {
 public:
  struct Morphism {
    std::string name;
    ObjId src;
    ObjId dst;
  };
  class Builder;

  FinCat() = default;

  int num_objects() const { return static_cast<int>(object_names_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }

  const std::string& object_name(ObjId x) const { return object_names_[x]; }
  const std::string& morphism_name(MorId f) const {
    return morphisms_[f].name;
  }
  ObjId src(MorId f) const { return morphisms_[f].src; }
  ObjId dst(MorId f) const { return morphisms_[f].dst; }
  MorId identity(ObjId x) const { return identity_[x]; }
  bool is_identity(MorId f) const { return identity_[src(f)] == f; }

  // Morphisms x -> y, ordered by id.
  std::span<const MorId> hom(ObjId x, ObjId y) const;
  // Morphisms out of x (sorted by target, then id) and into y (sorted by
  // source, then id).
  std::span<const MorId> out(ObjId x) const { return out_[x]; }
  std::span<const MorId> in(ObjId y) const { return in_[y]; }

  // g o f. Returns kNoMorphism when the table has no entry for a composable
  // pair; throws InputError when dst(f) != src(g).
  MorId compose(MorId g, MorId f) const;
  MorId compose_unchecked(MorId g, MorId f) const {
    const ObjId y = morphisms_[f].dst;
    return table_[y][in_pos_[f] * out_[y].size() + out_pos_[g]];
  }

  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;
  // As find_*, but throw InputError naming the missing id.
  ObjId object_id(std::string_view name) const;
  MorId morphism_id(std::string_view name) const;

  // Two-sided inverse of f, if one exists.
  std::optional<MorId> inverse(MorId f) const;
  bool is_iso(MorId f) const { return inverse(f).has_value(); }

  // Bit-exact structural equality: names, endpoints, identities, table.
  bool operator==(const FinCat& other) const;

 private:
  std::vector<std::string> object_names_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identity_;
  std::vector<std::vector<MorId>> out_;
  std::vector<std::vector<MorId>> in_;
  std::vector<std::int32_t> out_pos_;
  std::vector<std::int32_t> in_pos_;
  // table_[y][in_pos(f) * |out(y)| + out_pos(g)] = g o f.
  std::vector<std::vector<MorId>> table_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;
};

class FinCat::Builder {
 public:
  ObjId add_object(std::string name);
  MorId add_morphism(std::string name, ObjId src, ObjId dst);
  // Adds a morphism x -> x and records it as the identity of x.
  MorId add_identity(ObjId x, std::string name);
  void set_identity(ObjId x, MorId f);
  void set_compose(MorId g, MorId f, MorId gf);
  // Fills every composable pair (g, f) with fn(g, f).
  void fill_compose(const std::function<MorId(MorId, MorId)>& fn);

  int num_objects() const { return static_cast<int>(cat_.object_names_.size()); }
  int num_morphisms() const { return static_cast<int>(cat_.morphisms_.size()); }
  ObjId src(MorId f) const { return cat_.morphisms_[f].src; }
  ObjId dst(MorId f) const { return cat_.morphisms_[f].dst; }

  // Throws InputError on duplicate names, dangling ids or missing identities.
  // Composition-law violations are left for validate_category to report.
  FinCat build() &&;
  CatPtr build_shared() &&;

 private:
  void index();

  FinCat cat_;
  std::vector<std::tuple<MorId, MorId, MorId>> entries_;
  bool indexed_ = false;
};

bool same_category(const CatPtr& a, const CatPtr& b);

struct Functor {
  CatPtr domain;
  CatPtr codomain;
  std::vector<ObjId> on_objects;
  std::vector<MorId> on_morphisms;

  ObjId obj(ObjId x) const { return on_objects[x]; }
  MorId mor(MorId f) const { return on_morphisms[f]; }
};
bool operator==(const Functor& a, const Functor& b);

struct NatTransform {
  Functor source;
  Functor target;
  std::vector<MorId> components;

  MorId at(ObjId x) const { return components[x]; }
};
bool operator==(const NatTransform& a, const NatTransform& b);

Functor identity_functor(const CatPtr& c);
// g o f.
Functor compose(const Functor& g, const Functor& f);
std::optional<Functor> inverse_functor(const Functor& f);
bool is_isomorphism(const Functor& f);

NatTransform identity_nat(const Functor& f);
// b o a (vertical).
NatTransform vcompose(const NatTransform& b, const NatTransform& a);
// g a : g f => g f'.
NatTransform whisker_left(const Functor& g, const NatTransform& a);
// a f : g f => g' f.
NatTransform whisker_right(const NatTransform& a, const Functor& f);
// b * a = (b f') o (g a) for a: f => f', b: g => g'.
NatTransform hcompose(const NatTransform& b, const NatTransform& a);
std::optional<NatTransform> inverse(const NatTransform& a);
bool is_invertible(const NatTransform& a);

Report validate_category(const FinCat& c);
Report validate_functor(const Functor& f);
Report validate_nat(const NatTransform& a);

// All functors c -> d in a deterministic order.
std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d,
                                        const Caps& caps = {});
// All natural transformations f => g (only invertible ones if requested).
std::vector<NatTransform> enumerate_nats(const Functor& f, const Functor& g,
                                         bool invertible_only = false,
                                         const Caps& caps = {});

struct FunctorCategory {
  CatPtr cat;
  std::vector<Functor> functors;        // indexed by object id of cat
  std::vector<NatTransform> transforms;  // indexed by morphism id of cat

  std::optional<ObjId> find(const Functor& f) const;
  std::optional<MorId> find(const NatTransform& a) const;

  std::unordered_map<std::string, ObjId> functor_index;
  std::unordered_map<std::string, MorId> transform_index;
};
FunctorCategory functor_category(const CatPtr& c, const CatPtr& d,
                                 const Caps& caps = {});

struct EquivalenceWitness {
  Functor inverse;
  NatTransform unit;    // 1 => G F
  NatTransform counit;  // F G => 1
};
struct EquivalenceResult {
  std::optional<EquivalenceWitness> witness;
  // When refused: a short reason naming the first failing objects.
  std::string failure;

  explicit operator bool() const { return witness.has_value(); }
};
EquivalenceResult is_equivalence_functor(const Functor& f);

// One representative per isomorphism class, ordered by object id; each
// representative is the smallest id in its class.
std::vector<ObjId> iso_classes(const FinCat& c);
// Class index of every object (parallel to object ids).
std::vector<int> iso_class_labels(const FinCat& c);

FinCat full_subcategory(const FinCat& c, std::span<const ObjId> objects);
CatPtr product(const CatPtr& a, const CatPtr& b);

// Key used to index functors / transforms by their tables.
std::string table_key(std::span<const std::int32_t> a,
                      std::span<const std::int32_t> b = {});

}  // namespace exodus

#endif  // EXODUS_FINCAT_H_
