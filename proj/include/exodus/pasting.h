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

// Evaluation of words and pasting expressions of a presentation in a model
// (a Concrete2Cat, or Cat itself) under an assignment of generators.

#ifndef EXODUS_PASTING_H_
#define EXODUS_PASTING_H_

#include <optional>
#include <string>
#include <vector>

#include "exodus/presentation.h"
#include "exodus/twocat.h"

namespace exodus {

template <class Model>
struct Assignment {
  std::vector<typename Model::Object> objects;
  std::vector<typename Model::Cell1> gen1;
  // Inverses of the invertible 1-generators' values (nullopt otherwise).
  std::vector<std::optional<typename Model::Cell1>> gen1_inverse;
  std::vector<typename Model::Cell2> gen2;
};

template <class Model>
typename Model::Cell1 evaluate_word(const Model& m, const Assignment<Model>& a,
                                    const Word& w) {
  auto cell = m.unit(a.objects.at(w.src));
  for (const Letter& l : w.letters) {
    if (l.inverse) {
      const auto& inv = a.gen1_inverse.at(l.gen);
      if (!inv) throw InputError("inverse letter on a generator with no inverse value");
      cell = m.compose1(*inv, cell);
    } else {
      cell = m.compose1(a.gen1.at(l.gen), cell);
    }
  }
  return cell;
}

namespace internal {

template <class Model>
typename Model::Cell2 evaluate_typed(const Model& m, const Assignment<Model>& a,
                                     const PastingExpr& e) {
  using Kind = PastingExpr::Kind;
  switch (e.kind()) {
    case Kind::kGen:
      return a.gen2.at(e.gen_index());
    case Kind::kInv: {
      auto inv = m.inverse2(evaluate_typed(m, a, e.first()));
      if (!inv) throw InputError("inverse of a non-invertible 2-cell");
      return *inv;
    }
    case Kind::kId:
      return m.id2(evaluate_word(m, a, e.word()));
    case Kind::kVComp:
      return m.vcompose(evaluate_typed(m, a, e.first()), evaluate_typed(m, a, e.second()));
    case Kind::kHComp:
      return m.hcompose(evaluate_typed(m, a, e.first()), evaluate_typed(m, a, e.second()));
  }
  throw InputError("bad pasting expression");
}

}  // namespace internal

// Throws InputError when e is ill-typed in p.
template <class Model>
typename Model::Cell2 evaluate_pasting(const Model& m, const Pres2Cat& p,
                                       const Assignment<Model>& a,
                                       const PastingExpr& e) {
  type_of(p, e);
  return internal::evaluate_typed(m, a, e);
}

// Endpoints of every generator value, inverses, and 2-generator boundaries.
template <class Model>
Report check_assignment(const Model& m, const Pres2Cat& p, const Assignment<Model>& a) {
  Report r;
  if (a.objects.size() != p.objects.size() || a.gen1.size() != p.gen1.size() ||
      a.gen1_inverse.size() != p.gen1.size() || a.gen2.size() != p.gen2.size()) {
    r.add("assignment sizes do not match the presentation");
    return r;
  }
  for (std::size_t g = 0; g < p.gen1.size(); ++g) {
    const Gen1& gen = p.gen1[g];
    if (!m.same_object(m.source(a.gen1[g]), a.objects[gen.src]) ||
        !m.same_object(m.target(a.gen1[g]), a.objects[gen.dst]))
      r.add("value of '" + gen.name + "' has the wrong endpoints");
    if (gen.invertible && !a.gen1_inverse[g])
      r.add("invertible '" + gen.name + "' has no inverse value");
  }
  if (!r.ok()) return r;
  for (std::size_t s = 0; s < p.gen2.size(); ++s) {
    const Gen2& gen = p.gen2[s];
    if (!(m.src2(a.gen2[s]) == evaluate_word(m, a, gen.src)) ||
        !(m.dst2(a.gen2[s]) == evaluate_word(m, a, gen.dst)))
      r.add("value of 2-generator '" + gen.name + "' has the wrong boundary");
  }
  return r;
}

inline Concrete2Cat::Cell2 evaluate_pasting(const Concrete2Cat& c, const Pres2Cat& p,
                                            const Assignment<ConcreteModel>& a,
                                            const PastingExpr& e) {
  return evaluate_pasting(ConcreteModel{c}, p, a, e);
}

}  // namespace exodus

#endif  // EXODUS_PASTING_H_
