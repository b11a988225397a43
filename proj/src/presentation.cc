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

#include "exodus/presentation.h"

#include <functional>
#include <map>

namespace exodus {

// ---------------------------------------------------------------------------
// PastingExpr

PastingExpr PastingExpr::gen(int s) {
  return PastingExpr(std::make_shared<Node>(Node{Kind::kGen, s, {}, nullptr, nullptr}));
}

PastingExpr PastingExpr::inv(PastingExpr e) {
  return PastingExpr(std::make_shared<Node>(
      Node{Kind::kInv, -1, {}, std::make_shared<PastingExpr>(std::move(e)), nullptr}));
}

PastingExpr PastingExpr::id(Word w) {
  return PastingExpr(std::make_shared<Node>(Node{Kind::kId, -1, std::move(w), nullptr, nullptr}));
}

PastingExpr PastingExpr::vcomp(PastingExpr outer, PastingExpr inner) {
  return PastingExpr(std::make_shared<Node>(
      Node{Kind::kVComp, -1, {}, std::make_shared<PastingExpr>(std::move(outer)),
           std::make_shared<PastingExpr>(std::move(inner))}));
}

PastingExpr PastingExpr::hcomp(PastingExpr left, PastingExpr right) {
  return PastingExpr(std::make_shared<Node>(
      Node{Kind::kHComp, -1, {}, std::make_shared<PastingExpr>(std::move(left)),
           std::make_shared<PastingExpr>(std::move(right))}));
}

int PastingExpr::depth() const {
  switch (kind()) {
    case Kind::kGen:
    case Kind::kId:
      return 1;
    case Kind::kInv:
      return 1 + first().depth();
    default:
      return 1 + std::max(first().depth(), second().depth());
  }
}

bool PastingExpr::operator==(const PastingExpr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::kGen:
      return gen_index() == other.gen_index();
    case Kind::kId:
      return word() == other.word();
    case Kind::kInv:
      return first() == other.first();
    default:
      return first() == other.first() && second() == other.second();
  }
}

// ---------------------------------------------------------------------------
// Pres2Cat

std::optional<ObjId> Pres2Cat::find_object(const std::string& name) const {
  for (ObjId x = 0; x < num_objects(); ++x)
    if (objects[x] == name) return x;
  return std::nullopt;
}

std::optional<int> Pres2Cat::find_gen1(const std::string& name) const {
  for (std::size_t i = 0; i < gen1.size(); ++i)
    if (gen1[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Pres2Cat::find_gen2(const std::string& name) const {
  for (std::size_t i = 0; i < gen2.size(); ++i)
    if (gen2[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

ObjId Pres2Cat::add_object(std::string name) {
  objects.push_back(std::move(name));
  return num_objects() - 1;
}

int Pres2Cat::add_gen1(std::string name, ObjId src, ObjId dst, bool invertible) {
  gen1.push_back({std::move(name), src, dst, invertible});
  return static_cast<int>(gen1.size()) - 1;
}

int Pres2Cat::add_gen2(std::string name, Word src, Word dst) {
  gen2.push_back({std::move(name), std::move(src), std::move(dst)});
  return static_cast<int>(gen2.size()) - 1;
}

// ---------------------------------------------------------------------------
// Words

namespace {

ObjId letter_src(const Pres2Cat& p, const Letter& l) {
  const Gen1& g = p.gen1.at(l.gen);
  return l.inverse ? g.dst : g.src;
}

ObjId letter_dst(const Pres2Cat& p, const Letter& l) {
  const Gen1& g = p.gen1.at(l.gen);
  return l.inverse ? g.src : g.dst;
}

void push_reduced(std::vector<Letter>& letters, const Letter& l) {
  if (!letters.empty() && letters.back().gen == l.gen &&
      letters.back().inverse != l.inverse)
    letters.pop_back();
  else
    letters.push_back(l);
}

}  // namespace

Word empty_word(ObjId x) { return {x, x, {}}; }

Word letter_word(const Pres2Cat& p, int gen, bool inverse) {
  if (gen < 0 || gen >= static_cast<int>(p.gen1.size()))
    throw InputError("unknown 1-generator index " + std::to_string(gen));
  if (inverse && !p.gen1[gen].invertible)
    throw InputError("1-generator '" + p.gen1[gen].name + "' is not invertible");
  Letter l{gen, inverse};
  return {letter_src(p, l), letter_dst(p, l), {l}};
}

Word append(const Pres2Cat& p, const Word& first, const Word& second) {
  if (first.dst != second.src)
    throw InputError("words " + word_string(p, first) + " and " + word_string(p, second) +
                     " are not composable");
  Word w = first;
  for (const Letter& l : second.letters) push_reduced(w.letters, l);
  w.dst = second.dst;
  return w;
}

Word make_word(const Pres2Cat& p, ObjId src, const std::vector<Letter>& letters) {
  if (src < 0 || src >= p.num_objects()) throw InputError("word starts at unknown object");
  Word w = empty_word(src);
  for (const Letter& l : letters) w = append(p, w, letter_word(p, l.gen, l.inverse));
  return w;
}

bool is_invertible_word(const Pres2Cat& p, const Word& w) {
  for (const Letter& l : w.letters)
    if (!p.gen1.at(l.gen).invertible) return false;
  return true;
}

Word inverse_word(const Pres2Cat& p, const Word& w) {
  if (!is_invertible_word(p, w))
    throw InputError("word " + word_string(p, w) + " is not invertible");
  Word r{w.dst, w.src, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->gen, !it->inverse});
  return r;
}

std::string word_string(const Pres2Cat& p, const Word& w) {
  if (w.empty()) {
    const std::string name =
        w.src >= 0 && w.src < p.num_objects() ? p.objects[w.src] : std::to_string(w.src);
    return "1_" + name;
  }
  std::string s;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (!s.empty()) s += " o ";
    s += p.gen1.at(it->gen).name;
    if (it->inverse) s += "^-1";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Typing

namespace {

Word checked(const Pres2Cat& p, const Word& w) {
  Word r = make_word(p, w.src, w.letters);
  if (r.dst != w.dst)
    throw InputError("word " + word_string(p, w) + " has inconsistent endpoints");
  return r;
}

}  // namespace

Type2 type_of(const Pres2Cat& p, const PastingExpr& e) {
  using Kind = PastingExpr::Kind;
  switch (e.kind()) {
    case Kind::kGen: {
      if (e.gen_index() < 0 || e.gen_index() >= static_cast<int>(p.gen2.size()))
        throw InputError("unknown 2-generator index " + std::to_string(e.gen_index()));
      const Gen2& s = p.gen2[e.gen_index()];
      return {checked(p, s.src), checked(p, s.dst)};
    }
    case Kind::kInv: {
      Type2 t = type_of(p, e.first());
      return {t.dst, t.src};
    }
    case Kind::kId: {
      Word w = checked(p, e.word());
      return {w, w};
    }
    case Kind::kVComp: {
      Type2 outer = type_of(p, e.first());
      Type2 inner = type_of(p, e.second());
      if (!(outer.src == inner.dst))
        throw InputError("vertical composite " + expr_string(p, e) + ": " +
                         word_string(p, inner.dst) + " != " + word_string(p, outer.src));
      return {inner.src, outer.dst};
    }
    case Kind::kHComp: {
      Type2 left = type_of(p, e.first());
      Type2 right = type_of(p, e.second());
      if (right.src.dst != left.src.src)
        throw InputError("horizontal composite " + expr_string(p, e) +
                         " has mismatched objects");
      return {append(p, right.src, left.src), append(p, right.dst, left.dst)};
    }
  }
  throw InputError("bad pasting expression");
}

std::string expr_string(const Pres2Cat& p, const PastingExpr& e) {
  using Kind = PastingExpr::Kind;
  switch (e.kind()) {
    case Kind::kGen:
      return e.gen_index() >= 0 && e.gen_index() < static_cast<int>(p.gen2.size())
                 ? p.gen2[e.gen_index()].name
                 : "?" + std::to_string(e.gen_index());
    case Kind::kInv:
      return "(" + expr_string(p, e.first()) + ")^-1";
    case Kind::kId:
      return "id[" + word_string(p, e.word()) + "]";
    case Kind::kVComp:
      return "(" + expr_string(p, e.first()) + " o " + expr_string(p, e.second()) + ")";
    case Kind::kHComp:
      return "(" + expr_string(p, e.first()) + " * " + expr_string(p, e.second()) + ")";
  }
  return "?";
}

Report validate_presentation(const Pres2Cat& p) {
  Report r;
  for (const Gen1& g : p.gen1)
    if (g.src < 0 || g.src >= p.num_objects() || g.dst < 0 || g.dst >= p.num_objects())
      r.add("1-generator '" + g.name + "' has an unknown endpoint");
  if (!r.ok()) return r;
  for (const Gen2& s : p.gen2) {
    try {
      Word a = checked(p, s.src);
      Word b = checked(p, s.dst);
      if (a.src != b.src || a.dst != b.dst)
        r.add("2-generator '" + s.name + "' joins non-parallel words " +
              word_string(p, a) + " and " + word_string(p, b));
    } catch (const InputError& e) {
      r.add("2-generator '" + s.name + "': " + e.what());
    }
  }
  for (std::size_t i = 0; i < p.rel2.size(); ++i) {
    try {
      Type2 a = type_of(p, p.rel2[i].lhs);
      Type2 b = type_of(p, p.rel2[i].rhs);
      if (!(a.src == b.src) || !(a.dst == b.dst))
        r.add("relation " + std::to_string(i) + " has non-parallel sides");
    } catch (const InputError& e) {
      r.add("relation " + std::to_string(i) + ": " + e.what());
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Cone

PastingExpr cone_pasting(const Pres2Cat& cone, const Pres2Cat& link, const Word& w) {
  const int n1 = static_cast<int>(link.gen1.size());
  const int n2 = static_cast<int>(link.gen2.size());
  auto a_word = [&](ObjId l) { return letter_word(cone, n1 + l); };
  PastingExpr c = PastingExpr::id(a_word(w.src));
  for (const Letter& l : w.letters) {
    const Word lw = letter_word(cone, l.gen, l.inverse);
    const PastingExpr cg = PastingExpr::gen(n2 + l.gen);
    PastingExpr step = l.inverse ? PastingExpr::hcomp(PastingExpr::id(lw), PastingExpr::inv(cg))
                                 : cg;
    c = PastingExpr::vcomp(step, PastingExpr::hcomp(PastingExpr::id(lw), c));
  }
  return c;
}

Pres2Cat cone_presentation(const Pres2Cat& p, const std::string& apex) {
  Pres2Cat c = p;
  const ObjId star = c.add_object(apex);
  for (ObjId l = 0; l < p.num_objects(); ++l) c.add_gen1("a_" + p.objects[l], star, l, false);
  const int n1 = static_cast<int>(p.gen1.size());
  for (int g = 0; g < n1; ++g) {
    const Gen1& gen = p.gen1[g];
    c.add_gen2("c_" + gen.name,
               append(c, letter_word(c, n1 + gen.src), letter_word(c, g)),
               letter_word(c, n1 + gen.dst));
  }
  for (std::size_t s = 0; s < p.gen2.size(); ++s) {
    const Gen2& gen = p.gen2[s];
    const Word src = checked(p, gen.src);
    const Word dst = checked(p, gen.dst);
    PastingExpr lhs = PastingExpr::vcomp(
        cone_pasting(c, p, dst),
        PastingExpr::hcomp(PastingExpr::gen(static_cast<int>(s)),
                           PastingExpr::id(letter_word(c, n1 + src.src))));
    c.rel2.push_back({std::move(lhs), cone_pasting(c, p, src)});
  }
  return c;
}

// ---------------------------------------------------------------------------
// 1-truncation and its functors

Pres1Cat truncate_to_1(const Pres2Cat& p) {
  Pres1Cat t{p.objects, p.gen1, {}};
  for (const Gen2& s : p.gen2) t.relations.emplace_back(s.src, s.dst);
  return t;
}

MorId evaluate_word(const Pres1Cat& p, const FinCat& d, const Pres1Functor& f,
                    const Word& w) {
  MorId m = d.identity(f.objects.at(w.src));
  for (const Letter& l : w.letters) {
    MorId v = f.gen1.at(l.gen);
    if (l.inverse) {
      auto inv = d.inverse(v);
      if (!inv) throw InputError("generator '" + p.gen1[l.gen].name + "' maps to a non-iso");
      v = *inv;
    }
    m = d.compose(v, m);
  }
  return m;
}

std::vector<Pres1Functor> enumerate_pres1_functors(const Pres1Cat& p, const CatPtr& dp,
                                                   const Caps& caps) {
  const FinCat& d = *dp;
  const int n = static_cast<int>(p.objects.size());
  const int m = static_cast<int>(p.gen1.size());
  // Relations checked once every generator in them is assigned.
  std::vector<std::vector<int>> checks(m + 1);
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    int last = -1;
    for (const Word* w : {&p.relations[r].first, &p.relations[r].second})
      for (const Letter& l : w->letters) last = std::max(last, l.gen);
    checks[last + 1].push_back(static_cast<int>(r));
  }
  std::vector<Pres1Functor> out;
  Pres1Functor cur{std::vector<ObjId>(n, 0), std::vector<MorId>(m, kNoMorphism)};
  std::function<void(int)> gens = [&](int g) {
    for (int r : checks[g]) {
      const auto& [a, b] = p.relations[r];
      if (evaluate_word(p, d, cur, a) != evaluate_word(p, d, cur, b)) return;
    }
    if (g == m) {
      if (out.size() >= caps.max_objects) throw_cap("presented functor count", caps.max_objects);
      out.push_back(cur);
      return;
    }
    for (MorId f : d.hom(cur.objects[p.gen1[g].src], cur.objects[p.gen1[g].dst])) {
      if (p.gen1[g].invertible && !d.is_iso(f)) continue;
      cur.gen1[g] = f;
      gens(g + 1);
    }
    cur.gen1[g] = kNoMorphism;
  };
  std::function<void(int)> objs = [&](int x) {
    if (x == n) {
      gens(0);
      return;
    }
    for (ObjId y = 0; y < d.num_objects(); ++y) {
      cur.objects[x] = y;
      objs(x + 1);
    }
  };
  objs(0);
  return out;
}

Pres1FunctorCategory pres1_functor_category(const Pres1Cat& p, const CatPtr& dp,
                                            const Caps& caps) {
  const FinCat& d = *dp;
  Pres1FunctorCategory out;
  out.functors = enumerate_pres1_functors(p, dp, caps);
  const int nf = static_cast<int>(out.functors.size());
  const int n = static_cast<int>(p.objects.size());
  FinCat::Builder b;
  for (int i = 0; i < nf; ++i) b.add_object("F" + std::to_string(i));
  std::map<std::tuple<int, int, std::vector<MorId>>, MorId> ids;
  std::vector<std::vector<MorId>> comps;
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nf; ++j) {
      const auto& f = out.functors[i];
      const auto& g = out.functors[j];
      std::vector<MorId> eta(n, kNoMorphism);
      int k = 0;
      std::function<void(int)> rec = [&](int x) {
        if (x == n) {
          const MorId id = b.add_morphism(
              "F" + std::to_string(i) + "=>F" + std::to_string(j) + "#" + std::to_string(k++), i, j);
          if (static_cast<std::size_t>(id) >= caps.max_morphisms)
            throw_cap("presented functor category morphisms", caps.max_morphisms);
          ids[{i, j, eta}] = id;
          comps.push_back(eta);
          bool identity = i == j;
          for (int y = 0; y < n && identity; ++y) identity = eta[y] == d.identity(f.objects[y]);
          if (identity) b.set_identity(i, id);
          return;
        }
        for (MorId m : d.hom(f.objects[x], g.objects[x])) {
          eta[x] = m;
          bool ok = true;
          for (std::size_t gi = 0; gi < p.gen1.size() && ok; ++gi) {
            const Gen1& gen = p.gen1[gi];
            if (std::max(gen.src, gen.dst) != x) continue;
            ok = d.compose(g.gen1[gi], eta[gen.src]) == d.compose(eta[gen.dst], f.gen1[gi]);
          }
          if (ok) rec(x + 1);
        }
        eta[x] = kNoMorphism;
      };
      rec(0);
    }
  b.fill_compose([&](MorId g, MorId f) {
    std::vector<MorId> c(n);
    for (int x = 0; x < n; ++x) c[x] = d.compose(comps[g][x], comps[f][x]);
    return ids.at({b.src(f), b.dst(g), c});
  });
  out.cat = std::move(b).build_shared();
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms of presentations

PresMorphism identity_morphism(const Pres2Cat& p) {
  PresMorphism m;
  for (ObjId x = 0; x < p.num_objects(); ++x) m.objects.push_back(x);
  for (std::size_t g = 0; g < p.gen1.size(); ++g)
    m.gen1.push_back(letter_word(p, static_cast<int>(g)));
  for (std::size_t s = 0; s < p.gen2.size(); ++s)
    m.gen2.push_back(PastingExpr::gen(static_cast<int>(s)));
  return m;
}

Word map_word(const Pres2Cat& dst, const PresMorphism& m, const Word& w) {
  Word r = empty_word(m.objects.at(w.src));
  for (const Letter& l : w.letters) {
    const Word& img = m.gen1.at(l.gen);
    r = append(dst, r, l.inverse ? inverse_word(dst, img) : img);
  }
  return r;
}

PastingExpr map_expr(const Pres2Cat& dst, const PresMorphism& m, const PastingExpr& e) {
  using Kind = PastingExpr::Kind;
  switch (e.kind()) {
    case Kind::kGen:
      return m.gen2.at(e.gen_index());
    case Kind::kInv:
      return PastingExpr::inv(map_expr(dst, m, e.first()));
    case Kind::kId:
      return PastingExpr::id(map_word(dst, m, e.word()));
    case Kind::kVComp:
      return PastingExpr::vcomp(map_expr(dst, m, e.first()), map_expr(dst, m, e.second()));
    case Kind::kHComp:
      return PastingExpr::hcomp(map_expr(dst, m, e.first()), map_expr(dst, m, e.second()));
  }
  throw InputError("bad pasting expression");
}

Report validate_morphism(const Pres2Cat& src, const Pres2Cat& dst, const PresMorphism& m) {
  Report r;
  if (m.objects.size() != src.objects.size() || m.gen1.size() != src.gen1.size() ||
      m.gen2.size() != src.gen2.size()) {
    r.add("morphism tables do not match the source presentation");
    return r;
  }
  for (ObjId x : m.objects)
    if (x < 0 || x >= dst.num_objects()) r.add("object image out of range");
  if (!r.ok()) return r;
  for (std::size_t g = 0; g < src.gen1.size(); ++g) {
    const Gen1& gen = src.gen1[g];
    const Word& w = m.gen1[g];
    try {
      Word c = checked(dst, w);
      if (c.src != m.objects[gen.src] || c.dst != m.objects[gen.dst])
        r.add("image of '" + gen.name + "' has the wrong endpoints");
      if (gen.invertible && !is_invertible_word(dst, c))
        r.add("invertible '" + gen.name + "' maps to a non-invertible word");
    } catch (const InputError& e) {
      r.add("image of '" + gen.name + "': " + e.what());
    }
  }
  if (!r.ok()) return r;
  for (std::size_t s = 0; s < src.gen2.size(); ++s) {
    try {
      Type2 t = type_of(dst, m.gen2[s]);
      if (!(t.src == map_word(dst, m, checked(src, src.gen2[s].src))) ||
          !(t.dst == map_word(dst, m, checked(src, src.gen2[s].dst))))
        r.add("image of 2-generator '" + src.gen2[s].name + "' has the wrong boundary");
    } catch (const InputError& e) {
      r.add("image of 2-generator '" + src.gen2[s].name + "': " + e.what());
    }
  }
  return r;
}

PresMorphism compose(const Pres2Cat& dst, const PresMorphism& n, const PresMorphism& m) {
  PresMorphism c;
  for (ObjId x : m.objects) c.objects.push_back(n.objects.at(x));
  for (const Word& w : m.gen1) c.gen1.push_back(map_word(dst, n, w));
  for (const PastingExpr& e : m.gen2) c.gen2.push_back(map_expr(dst, n, e));
  return c;
}

bool same_on_1cells(const PresMorphism& a, const PresMorphism& b) {
  return a.objects == b.objects && a.gen1 == b.gen1;
}

}  // namespace exodus
