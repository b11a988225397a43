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

// Finitely presented strict (2,1)-categories: objects, 1-generators (some
// invertible), invertible 2-generators between 1-cell words, and relations
// between pasting expressions. Words are kept freely reduced: g g^-1 cancels.

#ifndef EXODUS_PRESENTATION_H_
#define EXODUS_PRESENTATION_H_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exodus/fincat.h"

namespace exodus {

struct Letter {
  int gen;
  bool inverse = false;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

// A 1-cell word src -> dst. Letters are listed in application order: the
// first letter is applied first (the rightmost factor of the composite).
struct Word {
  ObjId src = 0;
  ObjId dst = 0;
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

class PastingExpr {
 public:
  enum class Kind { kGen, kInv, kId, kVComp, kHComp };

  static PastingExpr gen(int s);
  static PastingExpr inv(PastingExpr e);
  static PastingExpr id(Word w);
  // outer o inner.
  static PastingExpr vcomp(PastingExpr outer, PastingExpr inner);
  // left * right, with right applied first (right: x -> y, left: y -> z).
  static PastingExpr hcomp(PastingExpr left, PastingExpr right);

  Kind kind() const { return node_->kind; }
  int gen_index() const { return node_->gen; }
  const Word& word() const { return node_->word; }
  const PastingExpr& first() const { return *node_->a; }
  const PastingExpr& second() const { return *node_->b; }

  int depth() const;
  bool operator==(const PastingExpr& other) const;

 private:
  struct Node {
    Kind kind;
    int gen = -1;
    Word word;
    std::shared_ptr<const PastingExpr> a;
    std::shared_ptr<const PastingExpr> b;
  };
  explicit PastingExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Gen1 {
  std::string name;
  ObjId src;
  ObjId dst;
  bool invertible = false;
  bool operator==(const Gen1&) const = default;
};

struct Gen2 {
  std::string name;
  Word src;
  Word dst;
  bool operator==(const Gen2&) const = default;
};

struct Rel2 {
  PastingExpr lhs;
  PastingExpr rhs;
  bool operator==(const Rel2&) const = default;
};

struct Pres2Cat {
  std::vector<std::string> objects;
  std::vector<Gen1> gen1;
  std::vector<Gen2> gen2;
  std::vector<Rel2> rel2;

  int num_objects() const { return static_cast<int>(objects.size()); }
  std::optional<ObjId> find_object(const std::string& name) const;
  std::optional<int> find_gen1(const std::string& name) const;
  std::optional<int> find_gen2(const std::string& name) const;

  ObjId add_object(std::string name);
  int add_gen1(std::string name, ObjId src, ObjId dst, bool invertible);
  int add_gen2(std::string name, Word src, Word dst);

  bool operator==(const Pres2Cat&) const = default;
};

// --- Words -------------------------------------------------------------

Word empty_word(ObjId x);
// The one-letter word g or g^-1; throws if g^-1 is requested for a
// non-invertible generator.
Word letter_word(const Pres2Cat& p, int gen, bool inverse = false);
// first, then second (i.e. second o first), freely reduced.
Word append(const Pres2Cat& p, const Word& first, const Word& second);
// Builds a word from letters in application order, checking endpoints.
Word make_word(const Pres2Cat& p, ObjId src, const std::vector<Letter>& letters);
bool is_invertible_word(const Pres2Cat& p, const Word& w);
Word inverse_word(const Pres2Cat& p, const Word& w);
// Composition order, e.g. "beta o a_x", "beta^-1", "1_x".
std::string word_string(const Pres2Cat& p, const Word& w);

// --- Pasting expressions -------------------------------------------------

struct Type2 {
  Word src;
  Word dst;
};
// Source and target words; throws InputError when ill-typed.
Type2 type_of(const Pres2Cat& p, const PastingExpr& e);
std::string expr_string(const Pres2Cat& p, const PastingExpr& e);

// Endpoint checks for every generator and both sides of every relation.
Report validate_presentation(const Pres2Cat& p);

// Adds an apex with a 1-generator a_l: apex -> l for each object l, an
// invertible 2-generator c_g: g o a_l => a_l' for each 1-generator g: l -> l',
// and for each 2-generator s: w => w' the relation C_w' o (s * a) = C_w, where
// C_w is the pasting of c's along w. Existing generators keep their indices.
Pres2Cat cone_presentation(const Pres2Cat& p, const std::string& apex = "*");

// The pasting C_w: w o a_src => a_dst of c-cells along a link word w, in
// cone = cone_presentation(link).
PastingExpr cone_pasting(const Pres2Cat& cone, const Pres2Cat& link,
                         const Word& w);

// A presented 1-category: generators and word relations, no normal forms.
struct Pres1Cat {
  std::vector<std::string> objects;
  std::vector<Gen1> gen1;
  std::vector<std::pair<Word, Word>> relations;
};
// 1-cells modulo src_word = dst_word for every 2-generator.
Pres1Cat truncate_to_1(const Pres2Cat& p);

// A functor from a presented 1-category to a finite category, given on
// generators.
struct Pres1Functor {
  std::vector<ObjId> objects;
  std::vector<MorId> gen1;
  bool operator==(const Pres1Functor&) const = default;
};
// Value of a word; inverse letters use the inverse morphism.
MorId evaluate_word(const Pres1Cat& p, const FinCat& d, const Pres1Functor& f,
                    const Word& w);
// All functors (invertible generators to isomorphisms, relations holding).
std::vector<Pres1Functor> enumerate_pres1_functors(const Pres1Cat& p,
                                                   const CatPtr& d,
                                                   const Caps& caps = {});
// Functors as objects, natural transformations as morphisms.
struct Pres1FunctorCategory {
  CatPtr cat;
  std::vector<Pres1Functor> functors;
};
Pres1FunctorCategory pres1_functor_category(const Pres1Cat& p, const CatPtr& d,
                                            const Caps& caps = {});

// --- Morphisms of presentations -------------------------------------------

// Generator-level map: objects to objects, 1-generators to words, 2-generators
// to pasting expressions in the target.
struct PresMorphism {
  std::vector<ObjId> objects;
  std::vector<Word> gen1;
  std::vector<PastingExpr> gen2;
};
PresMorphism identity_morphism(const Pres2Cat& p);
Word map_word(const Pres2Cat& dst, const PresMorphism& m, const Word& w);
PastingExpr map_expr(const Pres2Cat& dst, const PresMorphism& m,
                     const PastingExpr& e);
// Images are well-typed, invertible generators go to invertible words, and
// 2-generators land between the images of their words.
Report validate_morphism(const Pres2Cat& src, const Pres2Cat& dst,
                         const PresMorphism& m);
// n o m.
PresMorphism compose(const Pres2Cat& dst, const PresMorphism& n,
                     const PresMorphism& m);
// Equal on objects and on the words of every 1-generator.
bool same_on_1cells(const PresMorphism& a, const PresMorphism& b);

}  // namespace exodus

#endif  // EXODUS_PRESENTATION_H_
