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

#include "exodus/builders.h"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "exodus/finite_field.h"

namespace exodus {

namespace {

void check_dims(int q, int dmax) {
  FiniteField k(q);  // validates q
  if (dmax < 0 || dmax > 3)
    throw InputError("dmax must be in 0..3, got " + std::to_string(dmax));
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Values of a map {0..s-1} -> {0..t-1} encoded in base t.
std::vector<int> map_from_code(std::int64_t code, int t, int s) {
  std::vector<int> v(s);
  for (int i = s - 1; i >= 0; --i) {
    v[i] = static_cast<int>(code % t);
    code /= t;
  }
  return v;
}

std::int64_t map_code(const std::vector<int>& v, int t) {
  std::int64_t c = 0;
  for (int x : v) c = c * t + x;
  return c;
}

std::vector<int> compose_maps(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

std::vector<int> identity_map(int s) {
  std::vector<int> v(s);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::string map_digits(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += static_cast<char>('0' + x);
  return s;
}

bool is_bijection(const std::vector<int>& v) {
  std::vector<bool> seen(v.size(), false);
  for (int x : v) {
    if (x >= static_cast<int>(v.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

// Maps between the sets {0..k-1}, k <= n; bijections only if requested.
CatPtr build_finset(int n, bool bijections, const Caps& caps) {
  if (n < 0) throw InputError("finset: negative bound");
  std::int64_t total = 0;
  for (int s = 0; s <= n; ++s)
    for (int t = 0; t <= n; ++t) total += ipow(t, s);
  if (!bijections && static_cast<std::size_t>(total) > caps.max_morphisms)
    throw_cap("finset morphisms", caps.max_morphisms);
  FinCat::Builder b;
  for (int s = 0; s <= n; ++s) b.add_object(std::to_string(s));
  std::map<std::pair<int, std::int64_t>, MorId> ids;  // (src, dst-code) key
  std::vector<std::vector<int>> vals;
  for (int s = 0; s <= n; ++s)
    for (int t = 0; t <= n; ++t) {
      if (bijections && s != t) continue;
      for (std::int64_t c = 0; c < ipow(t, s); ++c) {
        auto v = map_from_code(c, t, s);
        if (bijections && !is_bijection(v)) continue;
        const MorId f = b.add_morphism(
            std::to_string(s) + "->" + std::to_string(t) + ":" + map_digits(v), s, t);
        ids[{s * (n + 1) + t, c}] = f;
        vals.push_back(std::move(v));
        if (s == t && vals.back() == identity_map(s)) b.set_identity(s, f);
      }
    }
  b.fill_compose([&](MorId g, MorId f) {
    const int s = b.src(f), t = b.dst(g);
    return ids.at({s * (n + 1) + t, map_code(compose_maps(vals[g], vals[f]), t)});
  });
  return std::move(b).build_shared();
}

struct DeligneObject {
  int a, b;  // dim V, dim W
  Matrix m;  // b x a
  Matrix n;  // a x b
};

struct DeligneData {
  CatPtr cat;
  std::vector<DeligneObject> objects;
  std::vector<std::pair<Matrix, Matrix>> morphisms;  // (f, g)
};

DeligneData build_deligne(int q, int dmax, const Caps& caps) {
  check_dims(q, dmax);
  const FiniteField k(q);
  DeligneData d;
  for (int a = 0; a <= dmax; ++a)
    for (int bd = 0; bd <= dmax; ++bd)
      for (std::int64_t mc = 0; mc < ipow(q, a * bd); ++mc)
        for (std::int64_t nc = 0; nc < ipow(q, a * bd); ++nc) {
          DeligneObject o{a, bd, matrix_from_code(k, bd, a, mc),
                          matrix_from_code(k, a, bd, nc)};
          if (!is_invertible(k, matsub(k, identity_matrix(bd), matmul(k, o.m, o.n))))
            continue;
          d.objects.push_back(std::move(o));
          if (d.objects.size() > caps.max_objects)
            throw_cap("deligne objects", caps.max_objects);
        }
  FinCat::Builder b;
  for (const auto& o : d.objects)
    b.add_object("(" + std::to_string(o.a) + "," + std::to_string(o.b) +
                 "|m=" + matrix_digits(o.m) + "|n=" + matrix_digits(o.n) + ")");
  const int no = static_cast<int>(d.objects.size());
  std::map<std::array<std::int64_t, 4>, MorId> ids;
  for (int x = 0; x < no; ++x)
    for (int y = 0; y < no; ++y) {
      const auto& s = d.objects[x];
      const auto& t = d.objects[y];
      for (std::int64_t fc = 0; fc < ipow(q, s.a * t.a); ++fc) {
        const Matrix f = matrix_from_code(k, t.a, s.a, fc);
        const Matrix nf = matmul(k, f, s.n);
        for (std::int64_t gc = 0; gc < ipow(q, s.b * t.b); ++gc) {
          const Matrix g = matrix_from_code(k, t.b, s.b, gc);
          if (!(matmul(k, t.m, f) == matmul(k, g, s.m))) continue;
          if (!(matmul(k, t.n, g) == nf)) continue;
          const MorId id = b.add_morphism(std::to_string(x) + "->" + std::to_string(y) +
                                              ":f=" + matrix_digits(f) +
                                              ",g=" + matrix_digits(g),
                                          x, y);
          if (static_cast<std::size_t>(id) >= caps.max_morphisms)
            throw_cap("deligne morphisms", caps.max_morphisms);
          ids[{x, y, fc, gc}] = id;
          d.morphisms.emplace_back(f, g);
          if (x == y && f == identity_matrix(s.a) && g == identity_matrix(s.b))
            b.set_identity(x, id);
        }
      }
    }
  b.fill_compose([&](MorId g, MorId f) {
    const auto& [f1, g1] = d.morphisms[f];
    const auto& [f2, g2] = d.morphisms[g];
    return ids.at({b.src(f), b.dst(g), matrix_code(k, matmul(k, f2, f1)),
                   matrix_code(k, matmul(k, g2, g1))});
  });
  d.cat = std::move(b).build_shared();
  return d;
}

}  // namespace

CatPtr build_fin_vect(int q, int dmax, const Caps& caps) {
  check_dims(q, dmax);
  const FiniteField k(q);
  std::int64_t total = 0;
  for (int s = 0; s <= dmax; ++s)
    for (int t = 0; t <= dmax; ++t) total += ipow(q, s * t);
  if (static_cast<std::size_t>(total) > caps.max_morphisms)
    throw_cap("finvect morphisms", caps.max_morphisms);
  FinCat::Builder b;
  for (int d = 0; d <= dmax; ++d) b.add_object(std::to_string(d));
  // offset[s][t] = first id of hom(s, t); ids follow the matrix code.
  std::vector<std::vector<MorId>> offset(dmax + 1, std::vector<MorId>(dmax + 1));
  for (int s = 0; s <= dmax; ++s)
    for (int t = 0; t <= dmax; ++t) {
      offset[s][t] = b.num_morphisms();
      for (std::int64_t c = 0; c < ipow(q, s * t); ++c)
        b.add_morphism(std::to_string(s) + "->" + std::to_string(t) + ":" +
                           matrix_digits(matrix_from_code(k, t, s, c)),
                       s, t);
    }
  for (int d = 0; d <= dmax; ++d)
    b.set_identity(d, offset[d][d] + static_cast<MorId>(matrix_code(k, identity_matrix(d))));
  b.fill_compose([&](MorId g, MorId f) {
    const int s = b.src(f), m = b.dst(f), t = b.dst(g);
    const Matrix fm = matrix_from_code(k, m, s, f - offset[s][m]);
    const Matrix gm = matrix_from_code(k, t, m, g - offset[m][t]);
    return offset[s][t] + static_cast<MorId>(matrix_code(k, matmul(k, gm, fm)));
  });
  return std::move(b).build_shared();
}

CatPtr build_deligne_cat(int q, int dmax, const Caps& caps) {
  return build_deligne(q, dmax, caps).cat;
}

PerverseDiskModel build_perverse_disk_model(int q, int dmax, const Caps& caps) {
  const FiniteField k(q);
  DeligneData d = build_deligne(q, dmax, caps);
  PerverseDiskModel model;
  model.deligne = d.cat;
  model.vect = build_fin_vect(q, dmax, caps);
  const FinCat& v = *model.vect;
  auto vect_mor = [&](int s, int t, const Matrix& m) {
    return v.morphism_id(std::to_string(s) + "->" + std::to_string(t) + ":" +
                         matrix_digits(m));
  };
  model.forget = {d.cat, model.vect, {}, {}};
  for (const auto& o : d.objects) model.forget.on_objects.push_back(o.b);
  for (MorId f = 0; f < d.cat->num_morphisms(); ++f) {
    const auto& s = d.objects[d.cat->src(f)];
    const auto& t = d.objects[d.cat->dst(f)];
    model.forget.on_morphisms.push_back(vect_mor(s.b, t.b, d.morphisms[f].second));
  }
  model.monodromy = {model.forget, model.forget, {}};
  for (const auto& o : d.objects)
    model.monodromy.components.push_back(
        vect_mor(o.b, o.b, matsub(k, identity_matrix(o.b), matmul(k, o.m, o.n))));
  return model;
}

CatPtr build_disk_sheaf_cat(int nmax, const Caps& caps) {
  if (nmax < 0 || nmax > 3)
    throw InputError("nmax must be in 0..3, got " + std::to_string(nmax));
  struct Obj {
    int s, t;
    std::vector<int> a, b;
  };
  std::vector<Obj> objs;
  for (int s = 0; s <= nmax; ++s)
    for (int t = 0; t <= nmax; ++t)
      for (std::int64_t ac = 0; ac < ipow(t, s); ++ac)
        for (std::int64_t bc = 0; bc < ipow(t, t); ++bc) {
          Obj o{s, t, map_from_code(ac, t, s), map_from_code(bc, t, t)};
          if (!is_bijection(o.b) || compose_maps(o.b, o.a) != o.a) continue;
          objs.push_back(std::move(o));
        }
  if (objs.size() > caps.max_objects) throw_cap("disk sheaf objects", caps.max_objects);
  FinCat::Builder b;
  for (const auto& o : objs)
    b.add_object("(" + std::to_string(o.s) + "," + std::to_string(o.t) +
                 "|a=" + map_digits(o.a) + "|b=" + map_digits(o.b) + ")");
  std::map<std::array<std::int64_t, 4>, MorId> ids;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> mors;
  const int n = static_cast<int>(objs.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& o = objs[x];
      const auto& p = objs[y];
      for (std::int64_t pc = 0; pc < ipow(p.s, o.s); ++pc) {
        const auto pv = map_from_code(pc, p.s, o.s);
        const auto apv = compose_maps(p.a, pv);
        for (std::int64_t rc = 0; rc < ipow(p.t, o.t); ++rc) {
          const auto rv = map_from_code(rc, p.t, o.t);
          if (apv != compose_maps(rv, o.a)) continue;
          if (compose_maps(p.b, rv) != compose_maps(rv, o.b)) continue;
          const MorId id = b.add_morphism(std::to_string(x) + "->" + std::to_string(y) +
                                              ":p=" + map_digits(pv) + ",r=" + map_digits(rv),
                                          x, y);
          if (static_cast<std::size_t>(id) >= caps.max_morphisms)
            throw_cap("disk sheaf morphisms", caps.max_morphisms);
          ids[{x, y, pc, rc}] = id;
          mors.emplace_back(pv, rv);
          if (x == y && pv == identity_map(o.s) && rv == identity_map(o.t))
            b.set_identity(x, id);
        }
      }
    }
  b.fill_compose([&](MorId g, MorId f) {
    const int x = b.src(f), z = b.dst(g);
    return ids.at({x, z, map_code(compose_maps(mors[g].first, mors[f].first), objs[z].s),
                   map_code(compose_maps(mors[g].second, mors[f].second), objs[z].t)});
  });
  return std::move(b).build_shared();
}

CatPtr finset(int n, const Caps& caps) { return build_finset(n, false, caps); }

CatPtr finset_bijections(int n) { return build_finset(n, true, Caps()); }

CatPtr terminal_category() { return discrete_category(1); }

CatPtr discrete_category(int n) {
  FinCat::Builder b;
  for (int i = 0; i < n; ++i) {
    const std::string name = n == 1 ? "*" : std::to_string(i);
    b.add_identity(b.add_object(name), "1_" + name);
  }
  b.fill_compose([](MorId g, MorId) { return g; });
  return std::move(b).build_shared();
}

CatPtr cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic_group: order must be positive");
  FinCat::Builder b;
  b.add_object("*");
  for (int i = 0; i < n; ++i)
    b.add_morphism(i == 0 ? "e" : i == 1 ? "s" : "s^" + std::to_string(i), 0, 0);
  b.set_identity(0, 0);
  b.fill_compose([n](MorId g, MorId f) { return (g + f) % n; });
  return std::move(b).build_shared();
}

CatPtr symmetric_group(int n) {
  if (n < 0 || n > 5) throw InputError("symmetric_group: n must be in 0..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FinCat::Builder b;
  b.add_object("*");
  std::map<std::vector<int>, MorId> ids;
  for (const auto& q : perms) {
    std::string name = "[";
    for (int i = 0; i < n; ++i) name += (i ? "," : "") + std::to_string(q[i]);
    ids[q] = b.add_morphism(name + "]", 0, 0);
  }
  b.set_identity(0, 0);
  b.fill_compose([&](MorId g, MorId f) { return ids.at(compose_maps(perms[g], perms[f])); });
  return std::move(b).build_shared();
}

CatPtr chain_category(int n) {
  FinCat::Builder b;
  for (int i = 0; i < n; ++i) b.add_object(std::to_string(i));
  std::map<std::pair<int, int>, MorId> ids;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      ids[{i, j}] = b.add_morphism(std::to_string(i) + "<=" + std::to_string(j), i, j);
  for (int i = 0; i < n; ++i) b.set_identity(i, ids[{i, i}]);
  b.fill_compose([&](MorId g, MorId f) { return ids.at({b.src(f), b.dst(g)}); });
  return std::move(b).build_shared();
}

}  // namespace exodus
