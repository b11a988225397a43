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

// Exhaustive inner loops. Each kernel has an OpenMP version used by the
// library and a serial reference with identical output order; tests compare
// the two and bench/ times them.

#ifndef EXODUS_KERNELS_H_
#define EXODUS_KERNELS_H_

#include <vector>

#include "exodus/fincat.h"

namespace exodus {
class Concrete2Cat;
}

namespace exodus::kernels {

struct Triple {
  MorId h, g, f;
  bool operator==(const Triple&) const = default;
};

// Composable triples with h o (g o f) != (h o g) o f, ordered by g, then f,
// then h. Assumes the table is closed (no missing or mistyped entries).
std::vector<Triple> associativity_failures_serial(const FinCat& c);
std::vector<Triple> associativity_failures_parallel(const FinCat& c);

std::vector<Functor> enumerate_functors_serial(const CatPtr& c,
                                               const CatPtr& d,
                                               const Caps& caps);
std::vector<Functor> enumerate_functors_parallel(const CatPtr& c,
                                                 const CatPtr& d,
                                                 const Caps& caps);

struct Quadruple {
  ObjId x, y, z;
  MorId f, g, h, k;  // f, g in hom(x,y); h, k in hom(y,z)
  bool operator==(const Quadruple&) const = default;
};

// Every composable quadruple violating (k * g) o (h * f) = (k o h) * (g o f),
// in (x, y, z, f, g, h, k) lexicographic order.
std::vector<Quadruple> interchange_failures_serial(const Concrete2Cat& c);
std::vector<Quadruple> interchange_failures_parallel(const Concrete2Cat& c);

// Number of composable quadruples (the work the interchange kernels do).
std::size_t count_quadruples(const Concrete2Cat& c);

}  // namespace exodus::kernels

#endif  // EXODUS_KERNELS_H_
