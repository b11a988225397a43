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

// Concrete finite categories: finite sets, vector spaces over F_q, Deligne's
// category of (V, W, m, n), the sheaf data (V, W, a, b) on the stratified
// disk, groups and chains.

#ifndef EXODUS_BUILDERS_H_
#define EXODUS_BUILDERS_H_

#include "exodus/fincat.h"

namespace exodus {

// Objects "0".."dmax" (dimensions); morphisms "d1->d2:<entries>", one per
// d2 x d1 matrix over F_q, entries row-major. q in {2,3,4,5}, dmax <= 3.
CatPtr build_fin_vect(int q, int dmax, const Caps& caps = {});

// Objects (V, W, m: V -> W, n: W -> V) with 1_W - mn invertible; morphisms
// pairs (f, g) with m'f = gm and n'g = fn.
CatPtr build_deligne_cat(int q, int dmax, const Caps& caps = {});

// Objects (V, W, a: V -> W, b: W -> W) with |V|, |W| <= nmax, b bijective and
// b a = a; morphisms pairs of maps commuting with a and b. nmax <= 3.
CatPtr build_disk_sheaf_cat(int nmax, const Caps& caps = {});

// The data of the perverse rep on the disk: the forgetful functor
// (V, W, m, n) -> W and its automorphism with components 1_W - mn.
struct PerverseDiskModel {
  CatPtr deligne;
  CatPtr vect;
  Functor forget;
  NatTransform monodromy;
};
PerverseDiskModel build_perverse_disk_model(int q, int dmax,
                                            const Caps& caps = {});

// Sets {0..k-1} for k <= n and all maps between them; objects "0".."n",
// morphisms "k->l:<values>".
CatPtr finset(int n, const Caps& caps = {});
// Sets {0..k-1} for k <= n and bijections (a groupoid).
CatPtr finset_bijections(int n);

CatPtr terminal_category();
CatPtr discrete_category(int n);
// One object "*", morphisms "e", "s", "s^2", ... with s^i s^j = s^(i+j).
CatPtr cyclic_group(int n);
// One object "*", morphisms the permutations of {0..n-1} in lexicographic
// order (identity first), named by their one-line values "[1,2,0]".
CatPtr symmetric_group(int n);
// Objects "0".."n-1", one morphism "i<=j" for every i <= j.
CatPtr chain_category(int n);
// The walking arrow 0 -> 1.
inline CatPtr arrow_category() { return chain_category(2); }

}  // namespace exodus

#endif  // EXODUS_BUILDERS_H_
