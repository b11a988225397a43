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


#include "exodus/descent.h"

#include <functional>
#include <memory>
#include <unordered_map>

namespace exodus {

namespace {

std::string pair_name(const DCover& c, int j, int i) {
  return c.charts[j] + " < " + c.charts[i];
}

std::string chain_name(const DCover& c, std::initializer_list<int> ids) {
  std::string s;
  for (int x : ids) s += (s.empty() ? "" : " < ") + c.charts[x];
  return s;
}

const PresMorphism& incl_at(const DCover& c, int j, int i) {
  auto it = c.incl.find({j, i});
  if (it == c.incl.end())
    throw InputError("no inclusion " + pair_name(c, j, i));
  return it->second;
}

TwoNatRep restrict_nat_to(const DCover& c, const TwoNatRep& n, int k, int j) {
  return restrict_two_nat(n, c.pres[k], incl_at(c, k, j));
}

bool accept_equivalence(const Functor& f) {
  return static_cast<bool>(is_equivalence_functor(f));
}

int single_letter(const Word& w) {
  if (w.letters.size() != 1 || w.letters[0].inverse)
    throw InputError("glued presentation does not map generators to generators");
  return w.letters[0].gen;
}

int single_gen(const PastingExpr& e) {
  if (e.kind() != PastingExpr::Kind::kGen)
    throw InputError("glued presentation does not map generators to generators");
  return e.gen_index();
}

void require_injective(const std::vector<ObjId>& m, const char* what) {
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (m[a] == m[b])
        throw InputError(std::string(what) + " identifies two objects; glue_reps needs it injective");
}

}  // namespace

// ---------------------------------------------------------------------------
// Covers

std::vector<std::tuple<int, int, int>> DCover::chains3() const {
  std::vector<std::tuple<int, int, int>> out;
  const int n = size();
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (less(k, j) && less(j, i)) out.emplace_back(k, j, i);
  return out;
}

std::vector<std::array<int, 4>> DCover::chains4() const {
  std::vector<std::array<int, 4>> out;
  for (auto [k, j, i] : chains3())
    for (int l = 0; l < size(); ++l)
      if (less(l, k)) out.push_back({l, k, j, i});
  return out;
}

Report validate_cover(const DCover& c) {
  if (c.pres.size() != c.charts.size())
    throw InputError("a cover needs one presentation per chart");
  for (const auto& p : c.pres)
    if (!p) throw InputError("a chart has no presentation");
  Report r;
  const int n = c.size();
  for (const auto& [key, m] : c.incl) {
    const auto [j, i] = key;
    if (j < 0 || i < 0 || j >= n || i >= n)
      throw InputError("inclusion between unknown charts");
    if (j == i) {
      r.add("chart " + c.charts[j] + " is below itself");
      continue;
    }
    if (c.less(i, j)) r.add(pair_name(c, j, i) + " and its reverse are both declared");
    r.merge(validate_morphism(*c.pres[j], *c.pres[i], m), pair_name(c, j, i) + ": ");
  }
  if (!r.ok()) return r;
  for (const auto& [key, m] : c.incl) {
    const auto [j, i] = key;
    for (int k = 0; k < n; ++k) {
      if (!c.less(k, j)) continue;
      if (!c.less(k, i)) {
        r.add("not transitive: " + chain_name(c, {k, j, i}) + " but not " +
              pair_name(c, k, i));
        continue;
      }
      const PresMorphism via = compose(*c.pres[i], m, c.incl.at({k, j}));
      const PresMorphism& direct = c.incl.at({k, i});
      if (!same_on_1cells(via, direct))
        r.add("inclusions along " + chain_name(c, {k, j, i}) + " differ on 1-cells");
      else if (!(via.gen2 == direct.gen2))
        r.add("inclusions along " + chain_name(c, {k, j, i}) + " differ on 2-generators");
    }
  }
  return r;
}

Rep restrict_to(const DCover& c, const Rep& r, int j, int i) {
  return restrict_rep(r, c.pres[j], incl_at(c, j, i));
}

// ---------------------------------------------------------------------------
// Checking

Report check_descent_datum(const DescentDatum& d) {
  const DCover& c = d.cover;
  Report r = validate_cover(c);
  if (!r.ok()) return r;
  const int n = c.size();
  if (static_cast<int>(d.reps.size()) != n)
    throw InputError("descent datum needs one rep per chart");
  for (int i = 0; i < n; ++i) {
    if (!d.reps[i].source || !(*d.reps[i].source == *c.pres[i]))
      throw InputError("rep on chart " + c.charts[i] + " is on another presentation");
    r.merge(validate_rep(d.reps[i]), "chart " + c.charts[i] + ": ");
  }
  if (!r.ok()) return r;

  std::map<std::pair<int, int>, bool> equiv_ok;
  for (const auto& [key, m] : c.incl) {
    const auto [j, i] = key;
    const std::string pfx = "equivalence " + pair_name(c, j, i) + ": ";
    equiv_ok[key] = false;
    auto it = d.equiv.find(key);
    if (it == d.equiv.end()) {
      r.add(pfx + "missing");
      continue;
    }
    const TwoNatRep& e = it->second;
    bool ok = true;
    if (!(e.source == restrict_to(c, d.reps[i], j, i))) {
      r.add(pfx + "source is not the restricted chart rep");
      ok = false;
    }
    if (!(e.target == d.reps[j])) {
      r.add(pfx + "target is not the chart rep");
      ok = false;
    }
    if (!ok) continue;
    Report v;
    try {
      v = validate_two_nat(e);
    } catch (const InputError& err) {
      v.add(err.what());
    }
    for (std::size_t o = 0; o < e.components.size() && v.ok(); ++o) {
      const auto eq = is_equivalence_functor(e.components[o]);
      if (!eq)
        v.add("component at " + c.pres[j]->objects[o] + " is not an equivalence (" +
              eq.failure + ")");
    }
    r.merge(v, pfx);
    equiv_ok[key] = v.ok();
  }
  for (const auto& [key, e] : d.equiv)
    if (!c.incl.count(key)) r.add("equivalence given for charts that are not included");

  std::map<std::tuple<int, int, int>, bool> theta_ok;
  for (auto chain : c.chains3()) {
    const auto [k, j, i] = chain;
    const std::string pfx = "coherence " + chain_name(c, {k, j, i}) + ": ";
    theta_ok[chain] = false;
    auto it = d.coherence.find(chain);
    if (it == d.coherence.end()) {
      r.add(pfx + "missing");
      continue;
    }
    if (!equiv_ok[{k, j}] || !equiv_ok[{j, i}] || !equiv_ok[{k, i}]) continue;
    const ModificationRep& th = it->second;
    const TwoNatRep src = compose(d.equiv.at({k, j}), restrict_nat_to(c, d.equiv.at({j, i}), k, j));
    bool ok = true;
    if (!(th.source == src)) {
      r.add(pfx + "source is not the composite equivalence");
      ok = false;
    }
    if (!(th.target == d.equiv.at({k, i}))) {
      r.add(pfx + "target is not the direct equivalence");
      ok = false;
    }
    if (!ok) continue;
    Report v;
    try {
      v = validate_modification(th);
    } catch (const InputError& err) {
      v.add(err.what());
    }
    if (v.ok() && !inverse(th)) v.add("not invertible");
    r.merge(v, pfx);
    theta_ok[chain] = v.ok();
  }
  for (const auto& [key, th] : d.coherence)
    if (!theta_ok.count(key)) r.add("coherence cell given for a non-chain");

  // Tetrahedra in the 2-category of reps on the smallest chart.
  const RepModel model;
  for (const auto& ch : c.chains4()) {
    const auto [l, k, j, i] = ch;
    if (!theta_ok[{k, j, i}] || !theta_ok[{l, k, j}] || !theta_ok[{l, j, i}] ||
        !theta_ok[{l, k, i}])
      continue;
    Tetrahedron<RepModel> t{
        restrict_nat_to(c, d.equiv.at({j, i}), l, j),
        restrict_nat_to(c, d.equiv.at({k, j}), l, k),
        d.equiv.at({l, k}),
        restrict_nat_to(c, d.equiv.at({k, i}), l, k),
        d.equiv.at({l, j}),
        d.equiv.at({l, i}),
        restrict_modification(d.coherence.at({k, j, i}), c.pres[l], c.incl.at({l, k})),
        d.coherence.at({l, k, j}),
        d.coherence.at({l, j, i}),
        d.coherence.at({l, k, i})};
    const std::string pfx = "tetrahedron " + chain_name(c, {l, k, j, i}) + ": ";
    try {
      r.merge(check_tetrahedron(model, t), pfx);
    } catch (const InputError& err) {
      r.add(pfx + err.what());
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Two-chart covers

Glue2Cover glue2_cover(const Pres2Cat& a, const Pres2Cat& b, const Pres2Cat& overlap,
                       const PresMorphism& incl_a, const PresMorphism& incl_b) {
  Glue2Cover g;
  g.pieces = glue_presentations(a, b, overlap, incl_a, incl_b);
  g.glued = std::make_shared<const Pres2Cat>(g.pieces.pres);
  g.cover.charts = {"a", "b", "overlap"};
  g.cover.pres = {std::make_shared<const Pres2Cat>(a), std::make_shared<const Pres2Cat>(b),
                  std::make_shared<const Pres2Cat>(overlap)};
  g.cover.incl[{2, 0}] = incl_a;
  g.cover.incl[{2, 1}] = incl_b;
  return g;
}

Glue2Cover glue2_cover(const SpaceExpr& x) {
  if (x.kind() != SpaceExpr::Kind::kGlue2)
    throw InputError("a two-chart cover needs a glued space");
  return glue2_cover(exit_presentation(x.child(0)), exit_presentation(x.child(1)),
                     exit_presentation(x.child(2)), x.incl_a(), x.incl_b());
}

DescentDatum res_rep(const Rep& r, const Glue2Cover& c) {
  if (!r.source || !(*r.source == *c.glued))
    throw InputError("rep is not on the glued presentation");
  const DCover& cov = c.cover;
  DescentDatum d;
  d.cover = cov;
  Rep fa = restrict_rep(r, cov.pres[0], c.pieces.from_a);
  Rep fb = restrict_rep(r, cov.pres[1], c.pieces.from_b);
  Rep fo = restrict_to(cov, fa, 2, 0);
  TwoNatRep eb{restrict_to(cov, fb, 2, 1), fo, {}, {}};
  for (const CatPtr& x : fo.objects) eb.components.push_back(identity_functor(x));
  for (int s : c.pieces.glue_gen2) eb.naturality.push_back(r.gen2.at(s));
  d.equiv[{2, 0}] = identity_two_nat(fo);
  d.equiv[{2, 1}] = std::move(eb);
  d.reps = {std::move(fa), std::move(fb), std::move(fo)};
  return d;
}

Rep glue_reps(const DescentDatum& d, const Glue2Cover& c) {
  const Report check = check_descent_datum(d);
  if (!check.ok())
    throw InputError("descent datum fails its check: " + check.violations.front());
  const DCover& cov = c.cover;
  if (cov.size() != 3 || !(d.cover.charts == cov.charts))
    throw InputError("descent datum is not over the two-chart cover");
  const Pres2Cat& g = *c.glued;
  const Pres2Cat& pa = *cov.pres[0];
  const Pres2Cat& pb = *cov.pres[1];
  const Pres2Cat& po = *cov.pres[2];
  const PresMorphism& ib = cov.incl.at({2, 1});
  const PresMorphism& from_a = c.pieces.from_a;
  const PresMorphism& from_b = c.pieces.from_b;
  require_injective(from_a.objects, "chart a's map into the glued presentation");
  require_injective(ib.objects, "the overlap's inclusion into chart b");

  const Rep& fa = d.reps[0];
  const Rep& fb = d.reps[1];
  const TwoNatRep& ea = d.equiv.at({2, 0});
  const TwoNatRep& eb = d.equiv.at({2, 1});
  std::vector<Functor> ea_inv, eb_inv;
  for (int o = 0; o < po.num_objects(); ++o) {
    auto ai = inverse_functor(ea.components[o]);
    auto bi = inverse_functor(eb.components[o]);
    if (!ai || !bi)
      throw InputError("glue_reps needs isomorphism components; the one at " + po.objects[o] +
                       " is not");
    ea_inv.push_back(std::move(*ai));
    eb_inv.push_back(std::move(*bi));
  }

  // T_b: F_b(b) -> R(b), conjugating chart b's data onto chart a's categories.
  std::vector<Functor> t, t_inv;
  for (const CatPtr& x : fb.objects) {
    t.push_back(identity_functor(x));
    t_inv.push_back(identity_functor(x));
  }
  for (int o = 0; o < po.num_objects(); ++o) {
    const ObjId b = ib.objects[o];
    t[b] = compose(ea_inv[o], eb.components[o]);
    t_inv[b] = compose(eb_inv[o], ea.components[o]);
  }

  Rep out{c.glued, std::vector<CatPtr>(g.num_objects()), std::vector<Functor>(g.gen1.size()),
          std::vector<NatTransform>(g.gen2.size())};
  std::vector<bool> placed(g.num_objects(), false);
  for (int a = 0; a < pa.num_objects(); ++a) {
    out.objects[from_a.objects[a]] = fa.objects[a];
    placed[from_a.objects[a]] = true;
  }
  for (int b = 0; b < pb.num_objects(); ++b)
    if (!placed[from_b.objects[b]]) out.objects[from_b.objects[b]] = fb.objects[b];
  for (std::size_t k = 0; k < pa.gen1.size(); ++k)
    out.gen1[single_letter(from_a.gen1[k])] = fa.gen1[k];
  for (std::size_t k = 0; k < pb.gen1.size(); ++k) {
    const Gen1& gen = pb.gen1[k];
    out.gen1[single_letter(from_b.gen1[k])] =
        compose(t[gen.dst], compose(fb.gen1[k], t_inv[gen.src]));
  }
  for (std::size_t s = 0; s < pa.gen2.size(); ++s)
    out.gen2[single_gen(from_a.gen2[s])] = fa.gen2[s];
  for (std::size_t s = 0; s < pb.gen2.size(); ++s) {
    const Gen2& gen = pb.gen2[s];
    out.gen2[single_gen(from_b.gen2[s])] =
        whisker_left(t[gen.src.dst], whisker_right(fb.gen2[s], t_inv[gen.src.src]));
  }
  for (std::size_t k = 0; k < po.gen1.size(); ++k) {
    const ObjId s = po.gen1[k].src;
    const ObjId u = po.gen1[k].dst;
    auto na_inv = inverse(ea.naturality[k]);
    if (!na_inv) throw InputError("naturality cell of an overlap equivalence is not invertible");
    out.gen2[c.pieces.glue_gen2[k]] = vcompose(
        whisker_left(ea_inv[u],
                     whisker_right(eb.naturality[k], compose(eb_inv[s], ea.components[s]))),
        whisker_left(ea_inv[u], *na_inv));
  }
  const Report v = validate_rep(out);
  if (!v.ok()) throw InputError("glued rep fails validation: " + v.violations.front());
  return out;
}

bool data_equivalent(const DescentDatum& a, const DescentDatum& b, const Caps& caps) {
  const DCover& c = a.cover;
  const int n = c.size();
  if (b.cover.size() != n) return false;
  std::vector<std::vector<TwoNatRep>> cands(n);
  for (int i = 0; i < n; ++i) {
    cands[i] = enumerate_two_nats(a.reps[i], b.reps[i], caps, accept_equivalence);
    if (cands[i].empty()) return false;
  }
  std::vector<const TwoNatRep*> u(n, nullptr);
  auto square = [&](int j, int i) {
    const TwoNatRep lhs = compose(b.equiv.at({j, i}), restrict_nat_to(c, *u[i], j, i));
    const TwoNatRep rhs = compose(*u[j], a.equiv.at({j, i}));
    for (const auto& m : enumerate_modifications(lhs, rhs, caps))
      if (inverse(m)) return true;
    return false;
  };
  std::function<bool(int)> rec = [&](int i) {
    if (i == n) return true;
    for (const TwoNatRep& cand : cands[i]) {
      u[i] = &cand;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (c.less(j, i)) ok = square(j, i);
        if (ok && c.less(i, j)) ok = square(i, j);
      }
      if (ok && rec(i + 1)) return true;
    }
    u[i] = nullptr;
    return false;
  };
  return rec(0);
}

DatumEnumeration enumerate_descent_data(const DCover& cover,
                                        const std::vector<CatPtr>& universe,
                                        const Caps& caps) {
  const Report vr = validate_cover(cover);
  if (!vr.ok()) throw InputError("invalid cover: " + vr.violations.front());
  if (!cover.chains3().empty())
    throw InputError("descent data enumeration supports covers without chains of three charts");
  const int n = cover.size();
  DatumEnumeration out;
  std::vector<std::vector<Rep>> chart_reps(n);
  for (int i = 0; i < n; ++i) {
    auto e = enumerate_reps(cover.pres[i], universe, caps);
    out.truncated = out.truncated || e.truncated;
    chart_reps[i] = std::move(e.reps);
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [key, m] : cover.incl) pairs.push_back(key);

  DescentDatum cur;
  cur.cover = cover;
  cur.reps.resize(n);
  bool stop = false;
  // Chart reps are class representatives, so equivalent data share them;
  // deduplication only compares data within one choice of chart reps.
  std::vector<DescentDatum> group;
  std::function<void(std::size_t)> edges = [&](std::size_t p) {
    if (stop) return;
    if (p == pairs.size()) {
      if (!check_descent_datum(cur).ok()) return;
      for (const auto& prev : group)
        if (data_equivalent(cur, prev, caps)) return;
      if (out.data.size() >= caps.max_reps) {
        out.truncated = true;
        stop = true;
        return;
      }
      group.push_back(cur);
      out.data.push_back(cur);
      return;
    }
    const auto [j, i] = pairs[p];
    const Rep src = restrict_to(cover, cur.reps[i], j, i);
    for (auto& e : enumerate_two_nats(src, cur.reps[j], caps, accept_equivalence)) {
      cur.equiv[{j, i}] = std::move(e);
      edges(p + 1);
    }
    cur.equiv.erase({j, i});
  };
  std::function<void(int)> charts = [&](int i) {
    if (stop) return;
    if (i == n) {
      group.clear();
      edges(0);
      return;
    }
    for (const Rep& r : chart_reps[i]) {
      cur.reps[i] = r;
      charts(i + 1);
    }
  };
  charts(0);
  return out;
}

// ---------------------------------------------------------------------------
// Sections

namespace {

struct SectionIndex {
  const TwoLimit& lim;
  std::unordered_map<std::string, ObjId> objects;

  explicit SectionIndex(const TwoLimit& l) : lim(l) {
    for (std::size_t x = 0; x < l.families.size(); ++x)
      objects.emplace(table_key(l.families[x], l.isos[x]), static_cast<ObjId>(x));
  }
  ObjId object(const std::vector<ObjId>& x, const std::vector<MorId>& phi) const {
    auto it = objects.find(table_key(x, phi));
    if (it == objects.end()) throw InputError("transported family is not a section");
    return it->second;
  }
  MorId morphism(ObjId a, ObjId b, const std::vector<MorId>& comps) const {
    for (MorId f : lim.cat->hom(a, b)) {
      bool match = true;
      for (std::size_t o = 0; o < comps.size() && match; ++o)
        match = lim.projections[o].mor(f) == comps[o];
      if (match) return f;
    }
    throw InputError("transported map is not a map of sections");
  }
};

// Sections of F_i restricted along U_j < U_i and pushed through e_ji.
Functor restriction_functor(const DescentDatum& d, const std::vector<TwoLimit>& lims,
                            const std::vector<SectionIndex>& idx, int j, int i) {
  const DCover& c = d.cover;
  const PresMorphism& m = c.incl.at({j, i});
  const Pres2Cat& pj = *c.pres[j];
  const Rep& fi = d.reps[i];
  const Rep& fj = d.reps[j];
  const TwoNatRep& e = d.equiv.at({j, i});
  const TwoLimit& si = lims[i];
  Functor f{si.cat, lims[j].cat, {}, {}};
  for (std::size_t x = 0; x < si.families.size(); ++x) {
    const auto& fam = si.families[x];
    std::vector<ObjId> z(pj.num_objects());
    std::vector<MorId> psi(pj.gen1.size());
    for (int o = 0; o < pj.num_objects(); ++o)
      z[o] = e.components[o].obj(fam[m.objects[o]]);
    for (std::size_t g = 0; g < pj.gen1.size(); ++g) {
      const Gen1& gen = pj.gen1[g];
      const MorId phi = limit_transport(fi, fam, si.isos[x], m.gen1[g]);
      const MorId nat = e.naturality[g].at(fam[m.objects[gen.src]]);
      psi[g] = fj.objects[gen.dst]->compose(e.components[gen.dst].mor(phi), nat);
    }
    f.on_objects.push_back(idx[j].object(z, psi));
  }
  for (MorId mu = 0; mu < si.cat->num_morphisms(); ++mu) {
    std::vector<MorId> v(pj.num_objects());
    for (int o = 0; o < pj.num_objects(); ++o)
      v[o] = e.components[o].mor(si.projections[m.objects[o]].mor(mu));
    f.on_morphisms.push_back(
        idx[j].morphism(f.obj(si.cat->src(mu)), f.obj(si.cat->dst(mu)), v));
  }
  return f;
}

}  // namespace

GluedSections glue_sections(const DescentDatum& d, const Caps& caps) {
  const Report check = check_descent_datum(d);
  if (!check.ok())
    throw InputError("descent datum fails its check: " + check.violations.front());
  const DCover& c = d.cover;
  const int n = c.size();
  if (n == 0) throw InputError("sections over an empty cover");
  GluedSections out;
  std::vector<TwoLimit> lims;
  for (const Rep& r : d.reps) {
    lims.push_back(two_limit(r, caps));
    out.chart_sections.push_back(lims.back().cat);
  }
  std::vector<SectionIndex> idx;
  for (const auto& l : lims) idx.emplace_back(l);

  // The stack on the cover poset: r_ji: i -> j, t_kji: r_kj r_ji => r_ki.
  auto q = std::make_shared<Pres2Cat>();
  for (const auto& name : c.charts) q->add_object(name);
  std::map<std::pair<int, int>, int> r_index;
  for (const auto& [key, m] : c.incl) {
    const auto [j, i] = key;
    r_index[key] = q->add_gen1("r_" + c.charts[j] + "_" + c.charts[i], i, j, false);
  }
  Rep stack{nullptr, out.chart_sections, {}, {}};
  std::map<std::pair<int, int>, Functor> rho;
  for (const auto& [key, m] : c.incl) {
    rho.emplace(key, restriction_functor(d, lims, idx, key.first, key.second));
    stack.gen1.push_back(rho.at(key));
  }
  for (const auto& [k, j, i] : c.chains3()) {
    const Word via = append(*q, letter_word(*q, r_index.at({j, i})),
                            letter_word(*q, r_index.at({k, j})));
    q->add_gen2("t_" + c.charts[k] + "_" + c.charts[j] + "_" + c.charts[i], via,
                letter_word(*q, r_index.at({k, i})));
    const ModificationRep& th = d.coherence.at({k, j, i});
    const PresMorphism& mki = c.incl.at({k, i});
    const Functor src = compose(rho.at({k, j}), rho.at({j, i}));
    NatTransform tau{src, rho.at({k, i}), {}};
    for (std::size_t x = 0; x < lims[i].families.size(); ++x) {
      std::vector<MorId> v(c.pres[k]->num_objects());
      for (std::size_t o = 0; o < v.size(); ++o)
        v[o] = th.components[o].at(lims[i].families[x][mki.objects[o]]);
      tau.components.push_back(idx[k].morphism(src.obj(x), tau.target.obj(x), v));
    }
    stack.gen2.push_back(std::move(tau));
  }
  stack.source = q;
  out.stack = stack;
  out.cat = n == 1 ? lims[0].cat : two_limit(stack, caps).cat;
  return out;
}

// ---------------------------------------------------------------------------
// Cones

Rep cone_classify(const PresPtr& cone, const ConeTriple& t) {
  if (!cone || !t.link.source) throw InputError("cone classification needs presentations");
  const Pres2Cat& link = *t.link.source;
  if (cone->objects.empty() || !(*cone == cone_presentation(link, cone->objects.back())))
    throw InputError("presentation is not the cone of the link");
  if (!(t.phi.source == constant_rep(t.link.source, t.apex)))
    throw InputError("phi must start at the constant rep on the apex category");
  if (!(t.phi.target == t.link)) throw InputError("phi must end at the link rep");
  const Report v = validate_two_nat(t.phi);
  if (!v.ok()) throw InputError("phi is not 2-natural: " + v.violations.front());
  Rep r{cone, t.link.objects, t.link.gen1, t.link.gen2};
  r.objects.push_back(t.apex);
  r.gen1.insert(r.gen1.end(), t.phi.components.begin(), t.phi.components.end());
  r.gen2.insert(r.gen2.end(), t.phi.naturality.begin(), t.phi.naturality.end());
  return r;
}

ConeTriple cone_unclassify(const PresPtr& link, const Rep& r) {
  if (!link || !r.source) throw InputError("cone classification needs presentations");
  const Pres2Cat& cp = *r.source;
  if (cp.objects.empty() || !(cp == cone_presentation(*link, cp.objects.back())))
    throw InputError("rep is not on the cone of the link");
  const std::size_t n = link->num_objects();
  const std::size_t n1 = link->gen1.size();
  const std::size_t n2 = link->gen2.size();
  if (r.objects.size() != n + 1 || r.gen1.size() != n1 + n || r.gen2.size() != n2 + n1)
    throw InputError("rep does not match its presentation");
  ConeTriple t;
  t.apex = r.objects.back();
  t.link = Rep{link, {r.objects.begin(), r.objects.begin() + n},
               {r.gen1.begin(), r.gen1.begin() + n1}, {r.gen2.begin(), r.gen2.begin() + n2}};
  t.phi = TwoNatRep{constant_rep(link, t.apex), t.link,
                    {r.gen1.begin() + n1, r.gen1.end()},
                    {r.gen2.begin() + n2, r.gen2.end()}};
  return t;
}

}  // namespace exodus
