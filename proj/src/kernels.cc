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

#include "exodus/kernels.h"

#include <atomic>
#include <functional>

#include "exodus/twocat.h"

namespace exodus::kernels {

// ---------------------------------------------------------------------------
// Associativity

namespace {

void associativity_at(const FinCat& c, MorId g, std::vector<Triple>& out) {
  const ObjId x = c.src(g), y = c.dst(g);
  for (MorId f : c.in(x)) {
    const MorId gf = c.compose_unchecked(g, f);
    for (MorId h : c.out(y)) {
      const MorId hg = c.compose_unchecked(h, g);
      if (c.compose_unchecked(h, gf) != c.compose_unchecked(hg, f))
        out.push_back({h, g, f});
    }
  }
}

}  // namespace

std::vector<Triple> associativity_failures_serial(const FinCat& c) {
  std::vector<Triple> out;
  for (MorId g = 0; g < c.num_morphisms(); ++g) associativity_at(c, g, out);
  return out;
}

std::vector<Triple> associativity_failures_parallel(const FinCat& c) {
  const int m = c.num_morphisms();
  std::vector<std::vector<Triple>> per(m);
#pragma omp parallel for schedule(dynamic, 16)
  for (MorId g = 0; g < m; ++g) associativity_at(c, g, per[g]);
  std::vector<Triple> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

// ---------------------------------------------------------------------------
// Functor enumeration
//
// Object maps are enumerated first (pruned by non-empty hom-sets); for each
// object map the non-identity morphisms are assigned in a fixed order in which
// a morphism that is a composite of earlier ones is forced.

namespace {

struct FunctorPlan {
  std::vector<MorId> order;
  // forced_by[p] = (g, f) when order[p] = g o f with g, f earlier.
  std::vector<std::pair<MorId, MorId>> forced_by;
  // constraints (g, f, gf) checked once position p is assigned.
  std::vector<std::vector<std::tuple<MorId, MorId, MorId>>> checks;
  // Non-identity morphisms that constrain an object map (x -> y needs a
  // non-empty hom), checked once max(x, y) is assigned.
  std::vector<std::vector<MorId>> object_checks;
};

FunctorPlan make_plan(const FinCat& c) {
  FunctorPlan plan;
  const int m = c.num_morphisms();
  std::vector<int> pos(m, -2);
  for (ObjId x = 0; x < c.num_objects(); ++x) pos[c.identity(x)] = -1;
  std::vector<std::tuple<MorId, MorId, MorId>> constraints;
  for (ObjId y = 0; y < c.num_objects(); ++y)
    for (MorId f : c.in(y))
      for (MorId g : c.out(y)) {
        if (c.is_identity(f) || c.is_identity(g)) continue;
        constraints.emplace_back(g, f, c.compose_unchecked(g, f));
      }
  auto place = [&](MorId h, std::pair<MorId, MorId> by) {
    pos[h] = static_cast<int>(plan.order.size());
    plan.order.push_back(h);
    plan.forced_by.push_back(by);
  };
  for (MorId h = 0; h < m; ++h) {
    if (pos[h] != -2) continue;
    place(h, {kNoMorphism, kNoMorphism});
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [g, f, gf] : constraints) {
        if (gf == kNoMorphism || pos[gf] != -2) continue;
        if (pos[g] == -2 || pos[f] == -2) continue;
        place(gf, {g, f});
        changed = true;
      }
    }
  }
  plan.checks.assign(plan.order.size(), {});
  for (auto [g, f, gf] : constraints) {
    if (gf == kNoMorphism) continue;
    const int p = std::max({pos[g], pos[f], pos[gf]});
    if (p >= 0) plan.checks[p].emplace_back(g, f, gf);
  }
  plan.object_checks.assign(c.num_objects(), {});
  for (MorId f = 0; f < m; ++f)
    if (!c.is_identity(f))
      plan.object_checks[std::max(c.src(f), c.dst(f))].push_back(f);
  return plan;
}

std::vector<std::vector<ObjId>> object_maps(const FinCat& c, const FinCat& d,
                                            const FunctorPlan& plan,
                                            const Caps& caps) {
  std::vector<std::vector<ObjId>> maps;
  const int n = c.num_objects();
  std::vector<ObjId> cur(n, -1);
  std::function<void(ObjId)> rec = [&](ObjId x) {
    if (x == n) {
      if (maps.size() >= caps.max_objects)
        throw_cap("object-map search", caps.max_objects);
      maps.push_back(cur);
      return;
    }
    for (ObjId t = 0; t < d.num_objects(); ++t) {
      cur[x] = t;
      bool ok = true;
      for (MorId f : plan.object_checks[x])
        if (d.hom(cur[c.src(f)], cur[c.dst(f)]).empty()) {
          ok = false;
          break;
        }
      if (ok) rec(x + 1);
    }
  };
  rec(0);
  return maps;
}

// Appends every functor with the given object map; returns false if the
// shared counter passed the cap.
bool functors_over(const CatPtr& cp, const CatPtr& dp, const FunctorPlan& plan,
                   const std::vector<ObjId>& objs, std::vector<Functor>& out,
                   std::atomic<std::size_t>& total, std::size_t cap) {
  const FinCat& c = *cp;
  const FinCat& d = *dp;
  std::vector<MorId> vals(c.num_morphisms(), kNoMorphism);
  for (ObjId x = 0; x < c.num_objects(); ++x)
    vals[c.identity(x)] = d.identity(objs[x]);
  const std::size_t depth = plan.order.size();
  bool within_cap = true;
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (!within_cap) return;
    if (p == depth) {
      if (total.fetch_add(1) + 1 > cap) {
        within_cap = false;
        return;
      }
      out.push_back({cp, dp, objs, vals});
      return;
    }
    const MorId h = plan.order[p];
    auto check = [&]() {
      for (auto [g, f, gf] : plan.checks[p])
        if (vals[gf] != d.compose_unchecked(vals[g], vals[f])) return false;
      return true;
    };
    const auto [fg, ff] = plan.forced_by[p];
    if (fg != kNoMorphism) {
      vals[h] = d.compose_unchecked(vals[fg], vals[ff]);
      if (vals[h] != kNoMorphism && check()) rec(p + 1);
    } else {
      for (MorId cand : d.hom(objs[c.src(h)], objs[c.dst(h)])) {
        vals[h] = cand;
        if (check()) rec(p + 1);
        if (!within_cap) return;
      }
    }
    vals[h] = kNoMorphism;
  };
  rec(0);
  return within_cap;
}

}  // namespace

std::vector<Functor> enumerate_functors_serial(const CatPtr& c,
                                               const CatPtr& d,
                                               const Caps& caps) {
  const auto plan = make_plan(*c);
  const auto maps = object_maps(*c, *d, plan, caps);
  std::vector<Functor> out;
  std::atomic<std::size_t> total{0};
  for (const auto& objs : maps)
    if (!functors_over(c, d, plan, objs, out, total, caps.max_objects))
      throw_cap("functor count", caps.max_objects);
  return out;
}

std::vector<Functor> enumerate_functors_parallel(const CatPtr& c,
                                                 const CatPtr& d,
                                                 const Caps& caps) {
  const auto plan = make_plan(*c);
  const auto maps = object_maps(*c, *d, plan, caps);
  const long n = static_cast<long>(maps.size());
  std::vector<std::vector<Functor>> per(maps.size());
  std::atomic<std::size_t> total{0};
  std::atomic<bool> over{false};
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    if (over.load()) continue;
    if (!functors_over(c, d, plan, maps[i], per[i], total, caps.max_objects))
      over.store(true);
  }
  if (over.load()) throw_cap("functor count", caps.max_objects);
  std::vector<Functor> out;
  out.reserve(total.load());
  for (auto& v : per)
    for (auto& f : v) out.push_back(std::move(f));
  return out;
}

// ---------------------------------------------------------------------------
// Interchange

namespace {

struct InterchangeSlice {
  ObjId x, y, z;
  MorId f;
};

std::vector<InterchangeSlice> interchange_slices(const Concrete2Cat& c) {
  std::vector<InterchangeSlice> s;
  const int n = c.num_objects();
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z)
        for (MorId f = 0; f < c.hom(x, y)->num_morphisms(); ++f)
          s.push_back({x, y, z, f});
  return s;
}

void interchange_at(const Concrete2Cat& c, const InterchangeSlice& s,
                    std::vector<Quadruple>& out) {
  const FinCat& a = *c.hom(s.x, s.y);
  const FinCat& b = *c.hom(s.y, s.z);
  const FinCat& t = *c.hom(s.x, s.z);
  const Functor& comp = c.comp(s.x, s.y, s.z);
  const int am = a.num_morphisms();
  auto star = [&](MorId right, MorId left) { return comp.mor(right * am + left); };
  const MorId f = s.f;
  for (MorId g : a.out(a.dst(f))) {
    const MorId gf = a.compose_unchecked(g, f);
    for (MorId h = 0; h < b.num_morphisms(); ++h) {
      for (MorId k : b.out(b.dst(h))) {
        const MorId lhs = t.compose_unchecked(star(k, g), star(h, f));
        const MorId rhs = star(b.compose_unchecked(k, h), gf);
        if (lhs != rhs) out.push_back({s.x, s.y, s.z, f, g, h, k});
      }
    }
  }
}

}  // namespace

std::vector<Quadruple> interchange_failures_serial(const Concrete2Cat& c) {
  std::vector<Quadruple> out;
  for (const auto& s : interchange_slices(c)) interchange_at(c, s, out);
  return out;
}

std::vector<Quadruple> interchange_failures_parallel(const Concrete2Cat& c) {
  const auto slices = interchange_slices(c);
  const long n = static_cast<long>(slices.size());
  std::vector<std::vector<Quadruple>> per(slices.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) interchange_at(c, slices[i], per[i]);
  std::vector<Quadruple> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::size_t count_quadruples(const Concrete2Cat& c) {
  std::size_t total = 0;
  const int n = c.num_objects();
  auto pairs = [](const FinCat& h) {
    std::size_t p = 0;
    for (MorId f = 0; f < h.num_morphisms(); ++f) p += h.out(h.dst(f)).size();
    return p;
  };
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z)
        total += pairs(*c.hom(x, y)) * pairs(*c.hom(y, z));
  return total;
}

}  // namespace exodus::kernels
