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

#include "exodus/exitpath.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace exodus {

// ---------------------------------------------------------------------------
// Space expressions

SpaceExpr SpaceExpr::point() {
  return SpaceExpr(std::make_shared<const Node>(Node{Kind::kPoint, {}, {}, 0, {}, {}, {}}));
}

SpaceExpr SpaceExpr::leaf(Pres2Cat p) {
  return SpaceExpr(
      std::make_shared<const Node>(Node{Kind::kLeaf, std::move(p), {}, 0, {}, {}, {}}));
}

SpaceExpr SpaceExpr::cone(SpaceExpr link, std::string apex) {
  return SpaceExpr(std::make_shared<const Node>(
      Node{Kind::kCone, {}, std::move(apex), 0, {std::move(link)}, {}, {}}));
}

SpaceExpr SpaceExpr::product_r(SpaceExpr base, int k) {
  if (k < 0) throw InputError("product with R^k needs k >= 0");
  return SpaceExpr(std::make_shared<const Node>(
      Node{Kind::kProductR, {}, {}, k, {std::move(base)}, {}, {}}));
}

SpaceExpr SpaceExpr::glue2(SpaceExpr a, SpaceExpr b, SpaceExpr overlap,
                           PresMorphism incl_a, PresMorphism incl_b) {
  return SpaceExpr(std::make_shared<const Node>(
      Node{Kind::kGlue2, {}, {}, 0, {std::move(a), std::move(b), std::move(overlap)},
           std::move(incl_a), std::move(incl_b)}));
}

// ---------------------------------------------------------------------------
// Gluing

namespace {

std::string fresh(std::string name, const std::set<std::string>& used) {
  while (used.count(name)) name += "'";
  return name;
}

void require_morphism(const Pres2Cat& src, const Pres2Cat& dst, const PresMorphism& m,
                      const char* which) {
  const Report r = validate_morphism(src, dst, m);
  if (!r.ok()) throw InputError(std::string(which) + ": " + r.violations.front());
}

}  // namespace

GluedPresentation glue_presentations(const Pres2Cat& a, const Pres2Cat& b,
                                     const Pres2Cat& overlap,
                                     const PresMorphism& incl_a,
                                     const PresMorphism& incl_b) {
  require_morphism(overlap, a, incl_a, "inclusion into chart a");
  require_morphism(overlap, b, incl_b, "inclusion into chart b");
  const int na = a.num_objects(), nb = b.num_objects();
  std::vector<int> parent(na + nb);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (std::size_t o = 0; o < overlap.objects.size(); ++o)
    parent[find(na + incl_b.objects[o])] = find(incl_a.objects[o]);

  GluedPresentation g;
  Pres2Cat& p = g.pres;
  std::set<std::string> names;
  std::map<int, ObjId> cls;
  std::vector<ObjId> node_obj(na + nb);
  for (int i = 0; i < na + nb; ++i) {
    const int root = find(i);
    auto it = cls.find(root);
    if (it == cls.end()) {
      const std::string& base = i < na ? a.objects[i] : b.objects[i - na];
      const std::string name = fresh(base, names);
      names.insert(name);
      it = cls.emplace(root, p.add_object(name)).first;
    }
    node_obj[i] = it->second;
  }
  names.clear();
  for (const Gen1& gen : a.gen1) {
    p.add_gen1(gen.name, node_obj[gen.src], node_obj[gen.dst], gen.invertible);
    names.insert(gen.name);
  }
  const int offset = static_cast<int>(a.gen1.size());
  for (const Gen1& gen : b.gen1) {
    const std::string name = fresh(gen.name, names);
    names.insert(name);
    p.add_gen1(name, node_obj[na + gen.src], node_obj[na + gen.dst], gen.invertible);
  }
  for (int x = 0; x < na; ++x) g.from_a.objects.push_back(node_obj[x]);
  for (int x = 0; x < nb; ++x) g.from_b.objects.push_back(node_obj[na + x]);
  for (std::size_t i = 0; i < a.gen1.size(); ++i)
    g.from_a.gen1.push_back(letter_word(p, static_cast<int>(i)));
  for (std::size_t i = 0; i < b.gen1.size(); ++i)
    g.from_b.gen1.push_back(letter_word(p, offset + static_cast<int>(i)));

  std::set<std::string> names2;
  for (const Gen2& gen : a.gen2) {
    g.from_a.gen2.push_back(PastingExpr::gen(static_cast<int>(p.gen2.size())));
    p.add_gen2(gen.name, map_word(p, g.from_a, gen.src), map_word(p, g.from_a, gen.dst));
    names2.insert(gen.name);
  }
  for (const Gen2& gen : b.gen2) {
    const std::string name = fresh(gen.name, names2);
    names2.insert(name);
    g.from_b.gen2.push_back(PastingExpr::gen(static_cast<int>(p.gen2.size())));
    p.add_gen2(name, map_word(p, g.from_b, gen.src), map_word(p, g.from_b, gen.dst));
  }
  for (const Rel2& r : a.rel2)
    p.rel2.push_back({map_expr(p, g.from_a, r.lhs), map_expr(p, g.from_a, r.rhs)});
  for (const Rel2& r : b.rel2)
    p.rel2.push_back({map_expr(p, g.from_b, r.lhs), map_expr(p, g.from_b, r.rhs)});

  const PresMorphism into_a = compose(p, g.from_a, incl_a);
  const PresMorphism into_b = compose(p, g.from_b, incl_b);
  for (const Gen1& gen : overlap.gen1) {
    const int idx = static_cast<int>(&gen - overlap.gen1.data());
    const std::string name = fresh("e_" + gen.name, names2);
    names2.insert(name);
    g.glue_gen2.push_back(
        p.add_gen2(name, into_a.gen1[idx], into_b.gen1[idx]));
  }
  for (std::size_t s = 0; s < overlap.gen2.size(); ++s) {
    const Gen2& gen = overlap.gen2[s];
    p.rel2.push_back(
        {PastingExpr::vcomp(glue_pasting(g, overlap, incl_a, incl_b, gen.dst), into_a.gen2[s]),
         PastingExpr::vcomp(into_b.gen2[s], glue_pasting(g, overlap, incl_a, incl_b, gen.src))});
  }
  const Report r = validate_presentation(p);
  if (!r.ok()) throw InputError("glued presentation is invalid: " + r.violations.front());
  return g;
}

PastingExpr glue_pasting(const GluedPresentation& g, const Pres2Cat& overlap,
                         const PresMorphism& incl_a, const PresMorphism& incl_b,
                         const Word& w) {
  const Pres2Cat& p = g.pres;
  const PresMorphism into_a = compose(p, g.from_a, incl_a);
  const PresMorphism into_b = compose(p, g.from_b, incl_b);
  PastingExpr e = PastingExpr::id(empty_word(into_a.objects.at(w.src)));
  for (const Letter& l : w.letters) {
    if (l.gen < 0 || l.gen >= static_cast<int>(overlap.gen1.size()))
      throw InputError("glue_pasting: letter out of range");
    const PastingExpr cell = PastingExpr::gen(g.glue_gen2[l.gen]);
    PastingExpr step = cell;
    if (l.inverse) {
      const Word ainv = inverse_word(p, into_a.gen1[l.gen]);
      const Word binv = inverse_word(p, into_b.gen1[l.gen]);
      step = PastingExpr::hcomp(PastingExpr::id(binv),
                                PastingExpr::hcomp(PastingExpr::inv(cell), PastingExpr::id(ainv)));
    }
    e = PastingExpr::hcomp(step, e);
  }
  return e;
}

Pres2Cat exit_presentation(const SpaceExpr& x) {
  using Kind = SpaceExpr::Kind;
  switch (x.kind()) {
    case Kind::kPoint: {
      Pres2Cat p;
      p.add_object("pt");
      return p;
    }
    case Kind::kLeaf: {
      const Report r = validate_presentation(x.leaf_presentation());
      if (!r.ok()) throw InputError("leaf presentation: " + r.violations.front());
      return x.leaf_presentation();
    }
    case Kind::kCone:
      if (x.child(0).kind() == Kind::kGlue2)
        throw InputError("the link of a cone must not be a glued space");
      return cone_presentation(exit_presentation(x.child(0)), x.apex());
    case Kind::kProductR:
      return exit_presentation(x.child(0));
    case Kind::kGlue2:
      return glue_presentations(exit_presentation(x.child(0)), exit_presentation(x.child(1)),
                                exit_presentation(x.child(2)), x.incl_a(), x.incl_b())
          .pres;
  }
  throw InputError("bad space expression");
}

Pres2Cat circle_leaf() {
  Pres2Cat p;
  p.add_object("x");
  p.add_gen1("beta", 0, 0, true);
  return p;
}

SpaceExpr disk_space() { return SpaceExpr::cone(SpaceExpr::leaf(circle_leaf()), "0"); }

SpaceExpr p1_space() {
  const SpaceExpr cone = SpaceExpr::cone(SpaceExpr::leaf(circle_leaf()), "inf");
  const Pres2Cat cp = exit_presentation(cone);
  const PresMorphism to_cone{{*cp.find_object("x")}, {letter_word(cp, *cp.find_gen1("beta"))}, {}};
  const PresMorphism to_plane{{0}, {empty_word(0)}, {}};
  return SpaceExpr::glue2(cone, SpaceExpr::product_r(SpaceExpr::point(), 2),
                          SpaceExpr::leaf(circle_leaf()), to_cone, to_plane);
}

// ---------------------------------------------------------------------------
// Simplicial complexes

namespace {

std::map<std::vector<int>, int> simplex_index(const StratSimpComplex& k) {
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < k.simplices.size(); ++i)
    idx.emplace(k.simplices[i], static_cast<int>(i));
  return idx;
}

}  // namespace

Report validate_complex(const StratSimpComplex& k) {
  Report r;
  if (k.stratum_dim.size() != k.simplices.size()) {
    r.add("stratum_dim must have one entry per simplex");
    return r;
  }
  for (const auto& s : k.simplices) {
    if (s.empty() || !std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end())
      r.add("simplices must be nonempty sorted vertex lists");
    for (int v : s)
      if (v < 0 || v >= k.num_vertices) r.add("simplex vertex out of range");
  }
  if (!r.ok()) return r;
  const auto idx = simplex_index(k);
  for (std::size_t i = 0; i < k.simplices.size(); ++i) {
    const auto& s = k.simplices[i];
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> face = s;
      face.erase(face.begin() + static_cast<long>(drop));
      auto it = idx.find(face);
      if (it == idx.end()) {
        r.add("missing face of simplex " + std::to_string(i));
      } else if (k.stratum_dim[it->second] > k.stratum_dim[i]) {
        r.add("stratum dimension decreases from a face to simplex " + std::to_string(i));
      }
    }
  }
  return r;
}

bool check_exit_path(const StratSimpComplex& k, const std::vector<int>& path) {
  if (path.empty()) throw InputError("empty path");
  const auto idx = simplex_index(k);
  auto dim_of = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    auto it = idx.find(s);
    if (it == idx.end()) throw InputError("path step is not carried by the complex");
    return k.stratum_dim[it->second];
  };
  std::vector<int> dims = {dim_of({path[0]})};
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i] == path[i - 1]) continue;
    dims.push_back(dim_of({path[i - 1], path[i]}));
    dims.push_back(dim_of({path[i]}));
  }
  return std::is_sorted(dims.begin(), dims.end());
}

StratSimpComplex stratified_disk_complex(int ring) {
  if (ring < 3) throw InputError("the disk complex needs a ring of at least 3 vertices");
  StratSimpComplex k;
  k.num_vertices = ring + 1;
  std::set<std::vector<int>> all;
  for (int i = 1; i <= ring; ++i) {
    const int j = i % ring + 1;
    std::vector<int> tri = {0, i, j};
    std::sort(tri.begin(), tri.end());
    for (int mask = 1; mask < 8; ++mask) {
      std::vector<int> s;
      for (int b = 0; b < 3; ++b)
        if (mask & (1 << b)) s.push_back(tri[b]);
      all.insert(s);
    }
  }
  for (const auto& s : all) {
    k.simplices.push_back(s);
    k.stratum_dim.push_back(s == std::vector<int>{0} ? 0 : 2);
  }
  return k;
}

// ---------------------------------------------------------------------------
// Triangulated squares

namespace {

using Edge = std::pair<int, int>;
Edge edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::map<Edge, std::vector<int>> edge_triangles(const TriangulatedSquare& t) {
  std::map<Edge, std::vector<int>> m;
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    const auto& tr = t.triangles[i];
    for (int a = 0; a < 3; ++a) m[edge(tr[a], tr[(a + 1) % 3])].push_back(static_cast<int>(i));
  }
  return m;
}

std::vector<int> boundary_cycle(const TriangulatedSquare& t) {
  std::vector<int> c = t.bottom;
  c.insert(c.end(), t.right.begin() + 1, t.right.end());
  c.insert(c.end(), t.top.rbegin() + 1, t.top.rend());
  c.insert(c.end(), t.left.rbegin() + 1, t.left.rend() - 1);
  return c;
}

}  // namespace

void validate_square(const TriangulatedSquare& t) {
  auto fail = [](const std::string& why) { throw InputError("not a combinatorial disk: " + why); };
  if (t.chart.size() != t.triangles.size()) throw InputError("every triangle needs a chart");
  if (t.triangles.empty()) fail("no triangles");
  for (const auto* p : {&t.left, &t.right, &t.bottom, &t.top})
    if (p->size() < 2) throw InputError("boundary paths need at least one edge");
  if (t.bottom.front() != t.left.front() || t.bottom.back() != t.right.front() ||
      t.top.front() != t.left.back() || t.top.back() != t.right.back())
    throw InputError("boundary paths do not meet at the corners");
  std::vector<int> used(t.num_vertices, 0);
  for (const auto& tr : t.triangles) {
    for (int v : tr) {
      if (v < 0 || v >= t.num_vertices) throw InputError("triangle vertex out of range");
      used[v] = 1;
    }
    if (tr[0] == tr[1] || tr[1] == tr[2] || tr[0] == tr[2]) fail("degenerate triangle");
  }
  if (std::count(used.begin(), used.end(), 0)) fail("unused vertex");
  const auto et = edge_triangles(t);
  std::set<Edge> boundary;
  for (const auto& [e, ts] : et) {
    if (ts.size() > 2) fail("edge in more than two triangles");
    if (ts.size() == 1) boundary.insert(e);
  }
  const auto cyc = boundary_cycle(t);
  if (std::set<int>(cyc.begin(), cyc.end()).size() != cyc.size()) fail("boundary is not a simple cycle");
  std::set<Edge> marked;
  for (std::size_t i = 0; i < cyc.size(); ++i) marked.insert(edge(cyc[i], cyc[(i + 1) % cyc.size()]));
  if (marked != boundary) fail("marked boundary differs from the boundary of the complex");
  const long chi = static_cast<long>(t.num_vertices) - static_cast<long>(et.size()) +
                   static_cast<long>(t.triangles.size());
  if (chi != 1) fail("Euler characteristic " + std::to_string(chi));
  // Vertex links must be connected (no pinched vertices).
  for (int v = 0; v < t.num_vertices; ++v) {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
    for (const auto& tr : t.triangles) {
      if (std::find(tr.begin(), tr.end(), v) == tr.end()) continue;
      std::vector<int> others;
      for (int u : tr)
        if (u != v) others.push_back(u);
      for (int u : others) parent.emplace(u, u);
      parent[find(others[0])] = find(others[1]);
    }
    std::set<int> roots;
    for (auto& [u, _] : parent) roots.insert(find(u));
    if (roots.size() > 1) fail("pinched vertex " + std::to_string(v));
  }
  // Connectedness through shared edges.
  std::vector<int> parent(t.triangles.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
  for (const auto& [e, ts] : et)
    if (ts.size() == 2) parent[find(ts[0])] = find(ts[1]);
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) != find(0)) fail("disconnected");
}

TriangulatedSquare grid_square(int rows, int cols, const std::vector<bool>& diag,
                               const std::vector<std::string>& charts) {
  if (rows < 1 || cols < 1) throw InputError("grid needs at least one cell");
  if (diag.size() != static_cast<std::size_t>(rows * cols))
    throw InputError("one diagonal bit per cell required");
  const std::size_t ntri = 2u * rows * cols;
  if (!charts.empty() && charts.size() != ntri) throw InputError("one chart per triangle required");
  TriangulatedSquare t;
  t.num_vertices = (rows + 1) * (cols + 1);
  auto id = [cols](int r, int c) { return r * (cols + 1) + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int a = id(r, c), b = id(r, c + 1), d = id(r + 1, c), e = id(r + 1, c + 1);
      if (!diag[r * cols + c]) {
        t.triangles.push_back({a, b, e});
        t.triangles.push_back({a, e, d});
      } else {
        t.triangles.push_back({a, b, d});
        t.triangles.push_back({b, e, d});
      }
    }
  t.chart = charts.empty() ? std::vector<std::string>(ntri, "u") : charts;
  for (int r = 0; r <= rows; ++r) {
    t.left.push_back(id(r, 0));
    t.right.push_back(id(r, cols));
  }
  for (int c = 0; c <= cols; ++c) {
    t.bottom.push_back(id(0, c));
    t.top.push_back(id(rows, c));
  }
  return t;
}

TriangulatedSquare barycentric_subdivide(const TriangulatedSquare& t) {
  validate_square(t);
  TriangulatedSquare s;
  int next = t.num_vertices;
  std::map<Edge, int> mid;
  for (const auto& tr : t.triangles)
    for (int a = 0; a < 3; ++a) {
      const Edge e = edge(tr[a], tr[(a + 1) % 3]);
      if (!mid.count(e)) mid.emplace(e, next++);
    }
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    const auto& tr = t.triangles[i];
    const int z = next++;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        s.triangles.push_back({tr[a], mid.at(edge(tr[a], tr[b])), z});
        s.chart.push_back(t.chart[i]);
      }
  }
  s.num_vertices = next;
  auto refine = [&](const std::vector<int>& p) {
    std::vector<int> out = {p[0]};
    for (std::size_t i = 1; i < p.size(); ++i) {
      out.push_back(mid.at(edge(p[i - 1], p[i])));
      out.push_back(p[i]);
    }
    return out;
  };
  s.left = refine(t.left);
  s.right = refine(t.right);
  s.bottom = refine(t.bottom);
  s.top = refine(t.top);
  return s;
}

std::vector<ElementaryMove> factor_elementary(const TriangulatedSquare& t) {
  validate_square(t);
  const auto et = edge_triangles(t);
  std::vector<bool> peeled(t.triangles.size(), false);
  std::vector<int> remaining(t.num_vertices, 0);
  for (const auto& tr : t.triangles)
    for (int v : tr) ++remaining[v];
  std::vector<bool> fixed(t.num_vertices, false);
  for (const auto* p : {&t.bottom, &t.right, &t.top})
    for (int v : *p) fixed[v] = true;

  std::vector<ElementaryMove> moves;
  std::vector<int> front = t.left;
  while (moves.size() < t.triangles.size()) {
    bool moved = false;
    for (std::size_t i = 0; i + 1 < front.size() && !moved; ++i) {
      const int u = front[i], v = front[i + 1];
      int tri = -1;
      for (int c : et.at(edge(u, v)))
        if (!peeled[c]) tri = c;
      if (tri < 0) continue;
      const auto& tr = t.triangles[tri];
      const int w = tr[0] + tr[1] + tr[2] - u - v;
      std::vector<int> next = front;
      if (i + 2 < front.size() && w == front[i + 2]) {
        if (fixed[v] || remaining[v] != 1) continue;
        next.erase(next.begin() + static_cast<long>(i) + 1);
      } else if (std::find(front.begin(), front.end(), w) == front.end()) {
        next.insert(next.begin() + static_cast<long>(i) + 1, w);
      } else {
        continue;
      }
      peeled[tri] = true;
      for (int x : tr) --remaining[x];
      moves.push_back({t.chart[tri], tri, front, next});
      front = std::move(next);
      moved = true;
    }
    if (!moved) throw InputError("no triangle can be peeled from the current front");
  }
  return moves;
}

std::vector<int> final_right_path(const TriangulatedSquare& t,
                                  const std::vector<ElementaryMove>& moves) {
  const std::vector<int>& front = moves.empty() ? t.left : moves.back().after;
  const std::size_t head = t.bottom.size() - 1, tail = t.top.size() - 1;
  if (front.size() < head + tail + 1) throw InputError("front is shorter than its fixed ends");
  return std::vector<int>(front.begin() + static_cast<long>(head),
                          front.end() - static_cast<long>(tail));
}

}  // namespace exodus
