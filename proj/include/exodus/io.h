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

// JSON reading and writing for every input the command-line tool accepts.
// The schemas are documented in docs/formats.md.

#ifndef EXODUS_IO_H_
#define EXODUS_IO_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exodus/descent.h"
#include "exodus/exitpath.h"
#include "exodus/fincat.h"
#include "exodus/presentation.h"
#include "exodus/rep.h"
#include "exodus/twocat.h"
#include "json.hpp"

namespace exodus::io {

using Json = nlohmann::ordered_json;

// Remembers how categories were specified, so that writers can refer to a
// builder instead of spelling out its tables, and reports can name them.
class CatRegistry {
 public:
  void add(const CatPtr& c, std::string label, Json spec);
  // "finset(2)", "deligne(2,1)", a name from a "categories" block, or
  // "category" when unknown.
  std::string label(const CatPtr& c) const;
  std::optional<Json> spec(const CatPtr& c) const;

 private:
  struct Entry {
    CatPtr cat;
    std::string label;
    Json spec;
  };
  std::vector<Entry> entries_;
};

// Parses documents. Any value may instead be a string naming a JSON file,
// resolved relative to the directory of the file being read. Throws
// InputError on malformed input.
class Loader {
 public:
  explicit Loader(Caps caps = {}, std::filesystem::path base = {});

  Json read_file(const std::filesystem::path& path);
  Json resolve(const Json& v);

  // Explicit tables must pass validate_category; builders are trusted.
  CatPtr category(const Json& j);
  // As category(), without validating explicit tables (for check-cat).
  CatPtr unchecked_category(const Json& j);
  Concrete2Cat two_category(const Json& j);
  // A presentation, or a space whose exit presentation is taken.
  Pres2Cat presentation(const Json& j);
  SpaceExpr space(const Json& j);
  Word word(const Pres2Cat& p, const Json& j);
  PastingExpr expr(const Pres2Cat& p, const Json& j);
  PresMorphism morphism(const Pres2Cat& src, const Pres2Cat& dst, const Json& j);
  Functor functor(const CatPtr& c, const CatPtr& d, const Json& j);
  NatTransform nat(const Functor& f, const Functor& g, const Json& j);
  // pres overrides the document's "presentation" (used inside data).
  Rep rep(const Json& j, PresPtr pres = nullptr);
  std::vector<CatPtr> universe(const Json& j);
  DCover cover(const Json& j);
  // The datum and, when its cover came from a glued space, that cover.
  struct LoadedDatum {
    DescentDatum datum;
    std::optional<Glue2Cover> glue2;
  };
  LoadedDatum datum(const Json& j);
  TriangulatedSquare square(const Json& j);
  StratSimpComplex complex(const Json& j);

  const CatRegistry& registry() const { return registry_; }
  const Caps& caps() const { return caps_; }

 private:
  CatPtr named_category(const Json& j);
  CatPtr builder_category(const Json& j);

  Caps caps_;
  std::filesystem::path base_;
  CatRegistry registry_;
  std::map<std::string, CatPtr> by_spec_;
  std::vector<std::map<std::string, CatPtr>> scopes_;
};

// --- Writers -----------------------------------------------------------------

Json category_json(const FinCat& c);
Json presentation_json(const Pres2Cat& p);
Json word_json(const Pres2Cat& p, const Word& w);
Json expr_json(const Pres2Cat& p, const PastingExpr& e);
Json morphism_json(const Pres2Cat& src, const Pres2Cat& dst, const PresMorphism& m);
Json space_json(const SpaceExpr& x);
Json functor_json(const Functor& f);
Json nat_json(const NatTransform& a);
// Categories known to the registry are written as their builder specs.
Json rep_json(const Rep& r, const CatRegistry& reg, bool with_presentation = true);
Json cover_json(const DCover& c);
Json datum_json(const DescentDatum& d, const CatRegistry& reg);

}  // namespace exodus::io

#endif  // EXODUS_IO_H_
