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

#include "exodus/rep.h"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace exodus {

namespace {

bool same_source(const PresPtr& a, const PresPtr& b) {
  return a.get() == b.get() || (a && b && *a == *b);
}

const Pres2Cat& pres(const Rep& r) {
  if (!r.source) throw InputError("rep has no source presentation");
  return *r.source;
}

std::string key3(std::int32_t a, std::int32_t b, const std::vector<std::int32_t>& rest) {
  const std::int32_t ends[2] = {a, b};
  return table_key(ends, rest);
}

}  // namespace

bool operator==(const Rep& a, const Rep& b) {
  if (!same_source(a.source, b.source) || a.objects.size() != b.objects.size())
    return false;
  for (std::size_t o = 0; o < a.objects.size(); ++o)
    if (!same_category(a.objects[o], b.objects[o])) return false;
  return a.gen1 == b.gen1 && a.gen2 == b.gen2;
}

Rep constant_rep(const PresPtr& p, const CatPtr& c) {
  Rep r{p, std::vector<CatPtr>(p->objects.size(), c), {}, {}};
  const Functor id = identity_functor(c);
  r.gen1.assign(p->gen1.size(), id);
  r.gen2.assign(p->gen2.size(), identity_nat(id));
  return r;
}

Assignment<CatModel> rep_assignment(const Rep& r) {
  const Pres2Cat& p = pres(r);
  if (r.objects.size() != p.objects.size() || r.gen1.size() != p.gen1.size() ||
      r.gen2.size() != p.gen2.size())
    throw InputError("rep sizes do not match its presentation");
  Assignment<CatModel> a{r.objects, r.gen1, {}, r.gen2};
  for (std::size_t g = 0; g < p.gen1.size(); ++g) {
    const Gen1& gen = p.gen1[g];
    const Functor& f = r.gen1[g];
    if (!same_category(f.domain, r.objects[gen.src]) ||
        !same_category(f.codomain, r.objects[gen.dst]))
      throw InputError("value of '" + gen.name + "' has the wrong endpoints");
    a.gen1_inverse.push_back(gen.invertible ? inverse_functor(f) : std::nullopt);
    if (gen.invertible && !a.gen1_inverse.back())
      throw InputError("invertible '" + gen.name +
                       "' is not sent to an isomorphism of categories");
  }
  return a;
}

Functor evaluate_word(const Rep& r, const Word& w) {
  return evaluate_word(CatModel{}, rep_assignment(r), w);
}

NatTransform evaluate_pasting(const Rep& r, const PastingExpr& e) {
  return evaluate_pasting(CatModel{}, pres(r), rep_assignment(r), e);
}

Report validate_rep(const Rep& r) {
  const Pres2Cat& p = pres(r);
  Report rep;
  if (r.objects.size() != p.objects.size() || r.gen1.size() != p.gen1.size() ||
      r.gen2.size() != p.gen2.size())
    throw InputError("rep sizes do not match its presentation");
  for (std::size_t g = 0; g < p.gen1.size(); ++g) {
    const Gen1& gen = p.gen1[g];
    if (!same_category(r.gen1[g].domain, r.objects[gen.src]) ||
        !same_category(r.gen1[g].codomain, r.objects[gen.dst]))
      throw InputError("value of '" + gen.name + "' has the wrong endpoints");
    rep.merge(validate_functor(r.gen1[g]), gen.name + ": ");
    if (gen.invertible && !is_isomorphism(r.gen1[g]))
      rep.add("invertible '" + gen.name + "' is not sent to an isomorphism");
  }
  if (!rep.ok()) return rep;
  const auto a = rep_assignment(r);
  const CatModel m;
  for (std::size_t s = 0; s < p.gen2.size(); ++s) {
    const Gen2& gen = p.gen2[s];
    const NatTransform& v = r.gen2[s];
    if (!(v.source == evaluate_word(m, a, gen.src)) ||
        !(v.target == evaluate_word(m, a, gen.dst))) {
      rep.add("value of 2-generator '" + gen.name + "' has the wrong boundary");
      continue;
    }
    rep.merge(validate_nat(v), gen.name + ": ");
    if (!is_invertible(v)) rep.add("value of '" + gen.name + "' is not invertible");
  }
  if (!rep.ok()) return rep;
  for (std::size_t k = 0; k < p.rel2.size(); ++k) {
    const auto lhs = evaluate_pasting(m, p, a, p.rel2[k].lhs);
    const auto rhs = evaluate_pasting(m, p, a, p.rel2[k].rhs);
    if (!(lhs == rhs))
      rep.add("relation " + std::to_string(k) + " fails: " +
              expr_string(p, p.rel2[k].lhs) + " = " + expr_string(p, p.rel2[k].rhs));
  }
  return rep;
}

Rep restrict_rep(const Rep& r, const PresPtr& sub, const PresMorphism& m) {
  const auto a = rep_assignment(r);
  const CatModel model;
  Rep out{sub, {}, {}, {}};
  for (ObjId o : m.objects) out.objects.push_back(r.objects.at(o));
  for (const Word& w : m.gen1) out.gen1.push_back(evaluate_word(model, a, w));
  for (const PastingExpr& e : m.gen2)
    out.gen2.push_back(evaluate_pasting(model, pres(r), a, e));
  return out;
}

// ---------------------------------------------------------------------------
// 2-natural transformations

bool operator==(const TwoNatRep& a, const TwoNatRep& b) {
  return a.components == b.components && a.naturality == b.naturality &&
         a.source == b.source && a.target == b.target;
}

bool operator==(const ModificationRep& a, const ModificationRep& b) {
  return a.components == b.components && a.source == b.source && a.target == b.target;
}

namespace {

struct NatContext {
  const Pres2Cat& p;
  Assignment<CatModel> a1;
  Assignment<CatModel> a2;
};

NatContext context(const TwoNatRep& n) {
  if (!same_source(n.source.source, n.target.source))
    throw InputError("2-natural transformation between reps of different presentations");
  return {pres(n.source), rep_assignment(n.source), rep_assignment(n.target)};
}

NatTransform along(const NatContext& c, const std::vector<Functor>& comps,
                   const std::vector<NatTransform>& nat, const Word& w) {
  const CatModel m;
  NatTransform cell = identity_nat(comps.at(w.src));
  Functor r1 = identity_functor(c.a1.objects.at(w.src));
  for (const Letter& l : w.letters) {
    const Gen1& g = c.p.gen1[l.gen];
    NatTransform step;
    Functor r1_letter;
    if (!l.inverse) {
      step = nat.at(l.gen);
      r1_letter = c.a1.gen1[l.gen];
    } else {
      r1_letter = *c.a1.gen1_inverse[l.gen];
      auto inv = inverse(nat.at(l.gen));
      if (!inv) throw InputError("naturality cell of '" + g.name + "' is not invertible");
      step = whisker_left(*c.a2.gen1_inverse[l.gen], whisker_right(*inv, r1_letter));
    }
    const Functor& r2_letter = l.inverse ? *c.a2.gen1_inverse[l.gen] : c.a2.gen1[l.gen];
    cell = exodus::vcompose(whisker_right(step, r1), whisker_left(r2_letter, cell));
    r1 = m.compose1(r1_letter, r1);
  }
  return cell;
}

bool two_gen_holds(const NatContext& c, const std::vector<Functor>& comps,
                   const std::vector<NatTransform>& nat, int s) {
  const Gen2& gen = c.p.gen2[s];
  const ObjId o = gen.src.src, o2 = gen.src.dst;
  const NatTransform lhs = exodus::vcompose(along(c, comps, nat, gen.dst),
                                            whisker_right(c.a2.gen2[s], comps[o]));
  const NatTransform rhs = exodus::vcompose(whisker_left(comps[o2], c.a1.gen2[s]),
                                            along(c, comps, nat, gen.src));
  return lhs == rhs;
}

int max_letter(const Word& w) {
  int m = -1;
  for (const Letter& l : w.letters) m = std::max(m, l.gen);
  return m;
}

}  // namespace

NatTransform naturality_along(const TwoNatRep& n, const Word& w) {
  return along(context(n), n.components, n.naturality, w);
}

Report validate_two_nat(const TwoNatRep& n) {
  const NatContext c = context(n);
  Report r;
  if (n.components.size() != c.p.objects.size() || n.naturality.size() != c.p.gen1.size())
    throw InputError("2-natural transformation sizes do not match the presentation");
  for (std::size_t o = 0; o < n.components.size(); ++o)
    if (!same_category(n.components[o].domain, c.a1.objects[o]) ||
        !same_category(n.components[o].codomain, c.a2.objects[o]))
      throw InputError("component at '" + c.p.objects[o] + "' has the wrong endpoints");
  for (std::size_t g = 0; g < c.p.gen1.size(); ++g) {
    const Gen1& gen = c.p.gen1[g];
    const NatTransform& v = n.naturality[g];
    if (!(v.source == compose(c.a2.gen1[g], n.components[gen.src])) ||
        !(v.target == compose(n.components[gen.dst], c.a1.gen1[g]))) {
      r.add("naturality cell of '" + gen.name + "' has the wrong boundary");
      continue;
    }
    r.merge(validate_nat(v), gen.name + ": ");
    if (!is_invertible(v)) r.add("naturality cell of '" + gen.name + "' is not invertible");
  }
  if (!r.ok()) return r;
  for (std::size_t s = 0; s < c.p.gen2.size(); ++s)
    if (!two_gen_holds(c, n.components, n.naturality, static_cast<int>(s)))
      r.add("naturality fails on 2-generator '" + c.p.gen2[s].name + "'");
  return r;
}

Report validate_modification(const ModificationRep& m) {
  const NatContext c = context(m.source);
  Report r;
  if (!(m.source.source == m.target.source) || !(m.source.target == m.target.target))
    throw InputError("modification between non-parallel transformations");
  if (m.components.size() != c.p.objects.size())
    throw InputError("modification sizes do not match the presentation");
  for (std::size_t o = 0; o < m.components.size(); ++o)
    if (!(m.components[o].source == m.source.components[o]) ||
        !(m.components[o].target == m.target.components[o]))
      r.add("component at '" + c.p.objects[o] + "' has the wrong boundary");
  if (!r.ok()) return r;
  for (std::size_t g = 0; g < c.p.gen1.size(); ++g) {
    const Gen1& gen = c.p.gen1[g];
    const auto lhs = exodus::vcompose(m.target.naturality[g],
                                      whisker_left(c.a2.gen1[g], m.components[gen.src]));
    const auto rhs = exodus::vcompose(whisker_right(m.components[gen.dst], c.a1.gen1[g]),
                                      m.source.naturality[g]);
    if (!(lhs == rhs)) r.add("modification square fails at '" + gen.name + "'");
  }
  return r;
}

TwoNatRep identity_two_nat(const Rep& r) {
  TwoNatRep n{r, r, {}, {}};
  for (const CatPtr& c : r.objects) n.components.push_back(identity_functor(c));
  for (const Functor& f : r.gen1) n.naturality.push_back(identity_nat(f));
  return n;
}

TwoNatRep compose(const TwoNatRep& m, const TwoNatRep& n) {
  if (!(n.target == m.source)) throw InputError("2-natural transformations do not compose");
  const Pres2Cat& p = pres(n.source);
  TwoNatRep out{n.source, m.target, {}, {}};
  for (std::size_t o = 0; o < n.components.size(); ++o)
    out.components.push_back(compose(m.components[o], n.components[o]));
  for (std::size_t g = 0; g < p.gen1.size(); ++g) {
    const Gen1& gen = p.gen1[g];
    out.naturality.push_back(
        exodus::vcompose(whisker_left(m.components[gen.dst], n.naturality[g]),
                         whisker_right(m.naturality[g], n.components[gen.src])));
  }
  return out;
}

std::optional<TwoNatRep> inverse(const TwoNatRep& n) {
  const Pres2Cat& p = pres(n.source);
  TwoNatRep out{n.target, n.source, {}, {}};
  for (const Functor& f : n.components) {
    auto inv = inverse_functor(f);
    if (!inv) return std::nullopt;
    out.components.push_back(std::move(*inv));
  }
  for (std::size_t g = 0; g < p.gen1.size(); ++g) {
    const Gen1& gen = p.gen1[g];
    auto inv = inverse(n.naturality[g]);
    if (!inv) return std::nullopt;
    out.naturality.push_back(whisker_left(
        out.components[gen.dst], whisker_right(*inv, out.components[gen.src])));
  }
  return out;
}

TwoNatRep restrict_two_nat(const TwoNatRep& n, const PresPtr& sub,
                           const PresMorphism& m) {
  const NatContext c = context(n);
  TwoNatRep out{restrict_rep(n.source, sub, m), restrict_rep(n.target, sub, m), {}, {}};
  for (ObjId o : m.objects) out.components.push_back(n.components.at(o));
  for (const Word& w : m.gen1) out.naturality.push_back(along(c, n.components, n.naturality, w));
  return out;
}

ModificationRep restrict_modification(const ModificationRep& a, const PresPtr& sub,
                                      const PresMorphism& m) {
  ModificationRep out{restrict_two_nat(a.source, sub, m), restrict_two_nat(a.target, sub, m), {}};
  for (ObjId o : m.objects) out.components.push_back(a.components.at(o));
  return out;
}

ModificationRep identity_modification(const TwoNatRep& n) {
  ModificationRep m{n, n, {}};
  for (const Functor& f : n.components) m.components.push_back(identity_nat(f));
  return m;
}

ModificationRep vcompose(const ModificationRep& b, const ModificationRep& a) {
  if (!(a.target == b.source)) throw InputError("modifications are not composable");
  ModificationRep out{a.source, b.target, {}};
  for (std::size_t o = 0; o < a.components.size(); ++o)
    out.components.push_back(exodus::vcompose(b.components[o], a.components[o]));
  return out;
}

ModificationRep hcompose(const ModificationRep& b, const ModificationRep& a) {
  ModificationRep out{compose(b.source, a.source), compose(b.target, a.target), {}};
  for (std::size_t o = 0; o < a.components.size(); ++o)
    out.components.push_back(exodus::hcompose(b.components[o], a.components[o]));
  return out;
}

std::optional<ModificationRep> inverse(const ModificationRep& a) {
  ModificationRep out{a.target, a.source, {}};
  for (const NatTransform& t : a.components) {
    auto inv = inverse(t);
    if (!inv) return std::nullopt;
    out.components.push_back(std::move(*inv));
  }
  return out;
}

std::string RepModel::describe(const ModificationRep& a) const {
  std::string s = "{";
  for (std::size_t o = 0; o < a.components.size(); ++o) {
    if (o) s += "; ";
    s += CatModel{}.describe(a.components[o]);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Enumeration of transformations and modifications

std::vector<TwoNatRep> enumerate_two_nats(
    const Rep& r1, const Rep& r2, const Caps& caps,
    const std::function<bool(const Functor&)>& accept, std::size_t limit) {
  const TwoNatRep shell{r1, r2, {}, {}};
  const NatContext c = context(shell);
  const int n = c.p.num_objects();
  const int m = static_cast<int>(c.p.gen1.size());
  std::vector<std::vector<Functor>> cands(n);
  for (int o = 0; o < n; ++o) {
    for (auto& f : enumerate_functors(r1.objects[o], r2.objects[o], caps))
      if (!accept || accept(f)) cands[o].push_back(std::move(f));
    if (cands[o].empty()) return {};
  }
  // 2-generators are checked once every letter of both words is assigned.
  std::vector<std::vector<int>> checks(m + 1);
  for (std::size_t s = 0; s < c.p.gen2.size(); ++s) {
    const int last = std::max(max_letter(c.p.gen2[s].src), max_letter(c.p.gen2[s].dst));
    checks[last + 1].push_back(static_cast<int>(s));
  }
  std::vector<TwoNatRep> out;
  std::vector<Functor> comps(n);
  std::vector<NatTransform> nat(m);
  bool done = false;
  std::function<void(int)> gens = [&](int g) {
    for (int s : checks[g])
      if (!two_gen_holds(c, comps, nat, s)) return;
    if (g == m) {
      if (out.size() >= caps.max_objects) throw_cap("2-natural transformation count", caps.max_objects);
      out.push_back({r1, r2, comps, nat});
      if (limit && out.size() >= limit) done = true;
      return;
    }
    const Gen1& gen = c.p.gen1[g];
    const auto choices = enumerate_nats(compose(c.a2.gen1[g], comps[gen.src]),
                                        compose(comps[gen.dst], c.a1.gen1[g]), true, caps);
    for (const auto& v : choices) {
      nat[g] = v;
      gens(g + 1);
      if (done) return;
    }
  };
  std::function<void(int)> objs = [&](int o) {
    if (o == n) {
      gens(0);
      return;
    }
    for (const Functor& f : cands[o]) {
      comps[o] = f;
      objs(o + 1);
      if (done) return;
    }
  };
  objs(0);
  return out;
}

std::vector<ModificationRep> enumerate_modifications(const TwoNatRep& a,
                                                     const TwoNatRep& b,
                                                     const Caps& caps) {
  const NatContext c = context(a);
  const int n = c.p.num_objects();
  std::vector<std::vector<NatTransform>> cands(n);
  for (int o = 0; o < n; ++o) {
    cands[o] = enumerate_nats(a.components[o], b.components[o], false, caps);
    if (cands[o].empty()) return {};
  }
  std::vector<std::vector<int>> checks(n);
  for (std::size_t g = 0; g < c.p.gen1.size(); ++g)
    checks[std::max(c.p.gen1[g].src, c.p.gen1[g].dst)].push_back(static_cast<int>(g));
  std::vector<ModificationRep> out;
  std::vector<NatTransform> comps(n);
  std::function<void(int)> rec = [&](int o) {
    if (o == n) {
      if (out.size() >= caps.max_morphisms) throw_cap("modification count", caps.max_morphisms);
      out.push_back({a, b, comps});
      return;
    }
    for (const NatTransform& t : cands[o]) {
      comps[o] = t;
      bool ok = true;
      for (int g : checks[o]) {
        const Gen1& gen = c.p.gen1[g];
        const auto lhs = exodus::vcompose(b.naturality[g],
                                          whisker_left(c.a2.gen1[g], comps[gen.src]));
        const auto rhs = exodus::vcompose(whisker_right(comps[gen.dst], c.a1.gen1[g]),
                                          a.naturality[g]);
        if (!(lhs == rhs)) {
          ok = false;
          break;
        }
      }
      if (ok) rec(o + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

std::vector<std::int32_t> flat_components(const ModificationRep& m) {
  std::vector<std::int32_t> v;
  for (const NatTransform& t : m.components)
    v.insert(v.end(), t.components.begin(), t.components.end());
  return v;
}

}  // namespace

RepHomCategory rep_hom_category(const Rep& r1, const Rep& r2, const Caps& caps) {
  RepHomCategory h;
  h.transformations = enumerate_two_nats(r1, r2, caps);
  const int n = static_cast<int>(h.transformations.size());
  FinCat::Builder b;
  for (int i = 0; i < n; ++i) b.add_object("n" + std::to_string(i));
  std::unordered_map<std::string, MorId> index;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = 0;
      for (auto& m : enumerate_modifications(h.transformations[i], h.transformations[j], caps)) {
        if (h.modifications.size() >= caps.max_morphisms)
          throw_cap("modification count", caps.max_morphisms);
        const MorId id = b.add_morphism(
            "n" + std::to_string(i) + "=>n" + std::to_string(j) + "#" + std::to_string(k++), i, j);
        index.emplace(key3(i, j, flat_components(m)), id);
        h.modifications.push_back(std::move(m));
      }
    }
  for (int i = 0; i < n; ++i)
    b.set_identity(i, index.at(key3(i, i, flat_components(
                                              identity_modification(h.transformations[i])))));
  b.fill_compose([&](MorId g, MorId f) {
    const auto& a = h.modifications[f];
    const auto& bb = h.modifications[g];
    ModificationRep c{a.source, bb.target, {}};
    for (std::size_t o = 0; o < a.components.size(); ++o)
      c.components.push_back(exodus::vcompose(bb.components[o], a.components[o]));
    return index.at(key3(b.src(f), b.dst(g), flat_components(c)));
  });
  h.cat = std::move(b).build_shared();
  return h;
}

std::optional<TwoNatRep> find_rep_equivalence(const Rep& r1, const Rep& r2,
                                              const Caps& caps) {
  if (!same_source(r1.source, r2.source)) return std::nullopt;
  auto found = enumerate_two_nats(
      r1, r2, caps, [](const Functor& f) { return static_cast<bool>(is_equivalence_functor(f)); },
      1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

// ---------------------------------------------------------------------------
// 2-limits

namespace {

struct LimitSearch {
  const Pres2Cat& p;
  const Rep& r;
  Assignment<CatModel> a;
  std::vector<Functor> src_words, dst_words;  // R(w), R(w') per 2-generator

  // Phi_w: R(w)(x_src) -> x_dst.
  MorId transport(const std::vector<ObjId>& x, const std::vector<MorId>& phi,
                  const Word& w) const {
    MorId cur = r.objects[w.src]->identity(x[w.src]);
    for (const Letter& l : w.letters) {
      const Gen1& g = p.gen1[l.gen];
      if (!l.inverse) {
        const FinCat& d = *r.objects[g.dst];
        cur = d.compose(phi[l.gen], a.gen1[l.gen].mor(cur));
      } else {
        const FinCat& d = *r.objects[g.src];
        const Functor& ginv = *a.gen1_inverse[l.gen];
        const MorId back = *r.objects[g.dst]->inverse(phi[l.gen]);
        cur = d.compose(ginv.mor(back), ginv.mor(cur));
      }
    }
    return cur;
  }

  bool holds(const std::vector<ObjId>& x, const std::vector<MorId>& phi, int s) const {
    const Gen2& gen = p.gen2[s];
    const FinCat& d = *r.objects[gen.src.dst];
    const MorId sigma = r.gen2[s].at(x[gen.src.src]);
    return d.compose(transport(x, phi, gen.dst), sigma) == transport(x, phi, gen.src);
  }
};

}  // namespace

TwoLimit two_limit(const Rep& r, const Caps& caps) {
  const Pres2Cat& p = pres(r);
  LimitSearch ls{p, r, rep_assignment(r), {}, {}};
  const int n = p.num_objects();
  const int m = static_cast<int>(p.gen1.size());
  std::vector<std::vector<int>> checks(m + 1);
  for (std::size_t s = 0; s < p.gen2.size(); ++s) {
    const int last = std::max(max_letter(p.gen2[s].src), max_letter(p.gen2[s].dst));
    checks[last + 1].push_back(static_cast<int>(s));
  }

  TwoLimit lim;
  std::vector<ObjId> x(n);
  std::vector<MorId> phi(m, kNoMorphism);
  std::function<void(int)> gens = [&](int g) {
    for (int s : checks[g])
      if (!ls.holds(x, phi, s)) return;
    if (g == m) {
      if (lim.families.size() >= caps.max_objects) throw_cap("2-limit object count", caps.max_objects);
      lim.families.push_back(x);
      lim.isos.push_back(phi);
      return;
    }
    const Gen1& gen = p.gen1[g];
    const FinCat& d = *r.objects[gen.dst];
    for (MorId f : d.hom(r.gen1[g].obj(x[gen.src]), x[gen.dst])) {
      if (!d.is_iso(f)) continue;
      phi[g] = f;
      gens(g + 1);
    }
    phi[g] = kNoMorphism;
  };
  std::function<void(int)> objs = [&](int o) {
    if (o == n) {
      gens(0);
      return;
    }
    for (ObjId t = 0; t < r.objects[o]->num_objects(); ++t) {
      x[o] = t;
      objs(o + 1);
    }
  };
  objs(0);

  const int count = static_cast<int>(lim.families.size());
  FinCat::Builder b;
  for (int i = 0; i < count; ++i) b.add_object("L" + std::to_string(i));
  std::vector<std::vector<MorId>> comps;
  std::unordered_map<std::string, MorId> index;
  std::vector<std::vector<int>> gen_checks(n);
  for (int g = 0; g < m; ++g) gen_checks[std::max(p.gen1[g].src, p.gen1[g].dst)].push_back(g);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      const auto& xs = lim.families[i];
      const auto& ys = lim.families[j];
      std::vector<MorId> u(n);
      std::function<void(int)> rec = [&](int o) {
        if (o == n) {
          if (comps.size() >= caps.max_morphisms) throw_cap("2-limit morphism count", caps.max_morphisms);
          std::string name = "L" + std::to_string(i) + "->L" + std::to_string(j) + ":[";
          for (int k = 0; k < n; ++k)
            name += (k ? "," : "") + r.objects[k]->morphism_name(u[k]);
          const MorId id = b.add_morphism(name + "]", i, j);
          index.emplace(key3(i, j, u), id);
          comps.push_back(u);
          return;
        }
        for (MorId f : r.objects[o]->hom(xs[o], ys[o])) {
          u[o] = f;
          bool ok = true;
          for (int g : gen_checks[o]) {
            const Gen1& gen = p.gen1[g];
            const FinCat& d = *r.objects[gen.dst];
            if (d.compose(u[gen.dst], lim.isos[i][g]) !=
                d.compose(lim.isos[j][g], r.gen1[g].mor(u[gen.src]))) {
              ok = false;
              break;
            }
          }
          if (ok) rec(o + 1);
        }
      };
      rec(0);
    }
  for (int i = 0; i < count; ++i) {
    std::vector<MorId> ids(n);
    for (int o = 0; o < n; ++o) ids[o] = r.objects[o]->identity(lim.families[i][o]);
    b.set_identity(i, index.at(key3(i, i, ids)));
  }
  b.fill_compose([&](MorId g, MorId f) {
    std::vector<MorId> c(n);
    for (int o = 0; o < n; ++o) c[o] = r.objects[o]->compose(comps[g][o], comps[f][o]);
    return index.at(key3(b.src(f), b.dst(g), c));
  });
  lim.cat = std::move(b).build_shared();
  for (int o = 0; o < n; ++o) {
    Functor pr{lim.cat, r.objects[o], {}, {}};
    for (int i = 0; i < count; ++i) pr.on_objects.push_back(lim.families[i][o]);
    for (const auto& c : comps) pr.on_morphisms.push_back(c[o]);
    lim.projections.push_back(std::move(pr));
  }
  return lim;
}

MorId limit_transport(const Rep& r, const std::vector<ObjId>& x,
                      const std::vector<MorId>& phi, const Word& w) {
  LimitSearch ls{pres(r), r, rep_assignment(r), {}, {}};
  return ls.transport(x, phi, w);
}

ChainColimit filtered_two_colimit(const std::vector<CatPtr>& stages,
                                  const std::vector<Functor>& maps) {
  if (stages.empty()) throw InputError("filtered colimit of an empty chain");
  if (maps.size() + 1 != stages.size())
    throw InputError("a chain of k stages needs k - 1 maps");
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!same_category(maps[i].domain, stages[i]) ||
        !same_category(maps[i].codomain, stages[i + 1]))
      throw InputError("chain map " + std::to_string(i) + " has the wrong endpoints");
  const std::size_t k = stages.size();
  const FinCat& top = *stages.back();
  std::vector<Functor> to_top(k);
  to_top[k - 1] = identity_functor(stages.back());
  for (std::size_t i = k - 1; i-- > 0;) to_top[i] = compose(to_top[i + 1], maps[i]);

  // Objects (stage, x) flattened; image in the top stage.
  std::vector<std::pair<int, ObjId>> objs;
  std::vector<std::vector<ObjId>> flat(k);
  FinCat::Builder b;
  for (std::size_t i = 0; i < k; ++i)
    for (ObjId x = 0; x < stages[i]->num_objects(); ++x) {
      flat[i].push_back(b.add_object(std::to_string(i) + ":" + stages[i]->object_name(x)));
      objs.emplace_back(static_cast<int>(i), x);
    }
  const int n = static_cast<int>(objs.size());
  auto image = [&](int v) { return to_top[objs[v].first].obj(objs[v].second); };
  std::vector<MorId> top_of;
  std::map<std::tuple<int, int, MorId>, MorId> index;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      for (MorId h : top.hom(image(v), image(w))) {
        const MorId id = b.add_morphism(
            std::to_string(v) + "->" + std::to_string(w) + ":" + top.morphism_name(h),
            v, w);
        index.emplace(std::make_tuple(v, w, h), id);
        top_of.push_back(h);
      }
  for (int v = 0; v < n; ++v) b.set_identity(v, index.at({v, v, top.identity(image(v))}));
  b.fill_compose([&](MorId g, MorId f) {
    return index.at({b.src(f), b.dst(g), top.compose(top_of[g], top_of[f])});
  });
  ChainColimit out;
  out.cat = std::move(b).build_shared();
  for (std::size_t i = 0; i < k; ++i) {
    const FinCat& s = *stages[i];
    Functor inc{stages[i], out.cat, flat[i], {}};
    for (MorId f = 0; f < s.num_morphisms(); ++f)
      inc.on_morphisms.push_back(
          index.at({flat[i][s.src(f)], flat[i][s.dst(f)], to_top[i].mor(f)}));
    out.inclusions.push_back(std::move(inc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of reps

RepEnumeration enumerate_reps(const PresPtr& p, const std::vector<CatPtr>& universe,
                              const Caps& caps) {
  RepEnumeration res;
  const int n = p->num_objects();
  const int m = static_cast<int>(p->gen1.size());
  const int k = static_cast<int>(p->gen2.size());
  const int u = static_cast<int>(universe.size());

  std::map<std::tuple<int, int, bool>, std::vector<Functor>> functor_cache;
  auto functors = [&](int a, int b, bool iso) -> const std::vector<Functor>& {
    auto key = std::make_tuple(a, b, iso);
    auto it = functor_cache.find(key);
    if (it != functor_cache.end()) return it->second;
    std::vector<Functor> fs;
    for (auto& f : enumerate_functors(universe[a], universe[b], caps))
      if (!iso || is_isomorphism(f)) fs.push_back(std::move(f));
    return functor_cache.emplace(key, std::move(fs)).first->second;
  };
  // Pairs of universe entries that admit an equivalence at all.
  std::vector<std::vector<int>> equivalent(u, std::vector<int>(u, -1));
  auto may_be_equivalent = [&](int a, int b) {
    int& e = equivalent[a][b];
    if (e < 0) {
      e = 0;
      for (const auto& f : functors(a, b, false))
        if (is_equivalence_functor(f)) {
          e = 1;
          break;
        }
    }
    return e == 1;
  };

  std::vector<std::vector<int>> kept_objects;
  std::vector<int> choice(n);
  Rep cur{p, std::vector<CatPtr>(n), std::vector<Functor>(m), std::vector<NatTransform>(k)};
  bool stop = false;

  auto consider = [&]() {
    Assignment<CatModel> a = rep_assignment(cur);
    const CatModel model;
    for (const Rel2& rel : p->rel2)
      if (!(evaluate_pasting(model, *p, a, rel.lhs) == evaluate_pasting(model, *p, a, rel.rhs)))
        return;
    if (++res.candidates > caps.max_reps) {
      res.truncated = true;
      stop = true;
      return;
    }
    for (std::size_t i = 0; i < res.reps.size(); ++i) {
      bool possible = true;
      for (int o = 0; o < n && possible; ++o)
        possible = may_be_equivalent(choice[o], kept_objects[i][o]);
      if (!possible) continue;
      try {
        if (find_rep_equivalence(cur, res.reps[i], caps)) return;
      } catch (const CapExceeded&) {
        res.undecided = true;
      }
    }
    res.reps.push_back(cur);
    kept_objects.push_back(choice);
  };
  std::function<void(int)> twos = [&](int s) {
    if (stop) return;
    if (s == k) {
      consider();
      return;
    }
    const Gen2& gen = p->gen2[s];
    const auto a = rep_assignment(cur);
    const CatModel model;
    const Functor from = evaluate_word(model, a, gen.src);
    const Functor to = evaluate_word(model, a, gen.dst);
    for (auto& v : enumerate_nats(from, to, true, caps)) {
      cur.gen2[s] = std::move(v);
      twos(s + 1);
      if (stop) return;
    }
  };
  std::function<void(int)> ones = [&](int g) {
    if (stop) return;
    if (g == m) {
      twos(0);
      return;
    }
    const Gen1& gen = p->gen1[g];
    for (const Functor& f : functors(choice[gen.src], choice[gen.dst], gen.invertible)) {
      cur.gen1[g] = f;
      ones(g + 1);
      if (stop) return;
    }
  };
  std::function<void(int)> objs = [&](int o) {
    if (stop) return;
    if (o == n) {
      ones(0);
      return;
    }
    for (int i = 0; i < u; ++i) {
      choice[o] = i;
      cur.objects[o] = universe[i];
      objs(o + 1);
      if (stop) return;
    }
  };
  objs(0);
  return res;
}

}  // namespace exodus
