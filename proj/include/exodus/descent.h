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

// Covers by charts, descent data for reps over a cover, restriction and
// gluing for two-chart covers, sections glued over a cover, and the
// classification of reps on a cone.

#ifndef EXODUS_DESCENT_H_
#define EXODUS_DESCENT_H_

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "exodus/exitpath.h"
#include "exodus/rep.h"

namespace exodus {

// A finite poset of charts. incl[{j, i}] (j < i, "U_j inside U_i") maps the
// presentation of chart j into that of chart i; inclusions must compose
// strictly along chains.
struct DCover {
  std::vector<std::string> charts;
  std::vector<PresPtr> pres;
  std::map<std::pair<int, int>, PresMorphism> incl;

  int size() const { return static_cast<int>(charts.size()); }
  bool less(int j, int i) const { return incl.count({j, i}) > 0; }
  // Chains k < j < i, in lexicographic order of (k, j, i).
  std::vector<std::tuple<int, int, int>> chains3() const;
  std::vector<std::array<int, 4>> chains4() const;
};
// Partial order (irreflexive, transitive), well-typed inclusions, strict
// composition along chains.
Report validate_cover(const DCover& c);

// F_i per chart; equivalences e_ji: F_i|_j -> F_j; modifications
// theta_kji: e_kj o (e_ji|_k) => e_ki.
struct DescentDatum {
  DCover cover;
  std::vector<Rep> reps;
  std::map<std::pair<int, int>, TwoNatRep> equiv;
  std::map<std::tuple<int, int, int>, ModificationRep> coherence;
};

Rep restrict_to(const DCover& c, const Rep& r, int j, int i);  // F|_j for F on chart i

// Reps, equivalence components, boundaries and invertibility of the
// coherence cells, and the tetrahedron for every chain l < k < j < i.
// Boundary mismatches are reported, not thrown.
Report check_descent_datum(const DescentDatum& d);

// --- Two-chart covers ------------------------------------------------------

// Charts a (0), b (1) and their overlap (2) below both, with the glued
// presentation of the whole space.
struct Glue2Cover {
  DCover cover;
  PresPtr glued;
  GluedPresentation pieces;
};
Glue2Cover glue2_cover(const Pres2Cat& a, const Pres2Cat& b, const Pres2Cat& overlap,
                       const PresMorphism& incl_a, const PresMorphism& incl_b);
// x must be a Glue2 expression.
Glue2Cover glue2_cover(const SpaceExpr& x);

// Chartwise restriction; e_{overlap,a} is the identity and e_{overlap,b} has
// identity components with the glue cells as naturality.
DescentDatum res_rep(const Rep& r, const Glue2Cover& c);
// Transports chart b's data along the overlap equivalences (which must have
// isomorphism-of-categories components; chart a and the overlap must map
// injectively on objects). Throws InputError when the datum fails its check.
Rep glue_reps(const DescentDatum& d, const Glue2Cover& c);

// Chartwise equivalences of reps with an invertible modification filling
// every inclusion square. Coherence cells are not compared.
bool data_equivalent(const DescentDatum& a, const DescentDatum& b, const Caps& caps = {});

// All descent data over the cover with chart reps drawn from `universe`,
// deduplicated up to data_equivalent. Covers with 3-chains are rejected.
struct DatumEnumeration {
  std::vector<DescentDatum> data;
  bool truncated = false;
};
DatumEnumeration enumerate_descent_data(const DCover& cover,
                                        const std::vector<CatPtr>& universe,
                                        const Caps& caps = {});

// --- Sections ----------------------------------------------------------------

// The category of compatible families of chartwise sections (objects of the
// 2-limits of the F_i) over the cover. A single chart gives its section
// category unchanged. Throws InputError when the datum fails its check.
struct GluedSections {
  CatPtr cat;
  std::vector<CatPtr> chart_sections;  // two_limit(F_i)
  Rep stack;                            // sections as a rep of the cover poset
};
GluedSections glue_sections(const DescentDatum& d, const Caps& caps = {});

// --- Cones -------------------------------------------------------------------

// A rep on the cone of a link: the apex category, the rep on the link and a
// 2-natural transformation from the constant rep at the apex category.
struct ConeTriple {
  CatPtr apex;
  Rep link;
  TwoNatRep phi;
};
// cone must be cone_presentation(*triple.link.source, ...).
Rep cone_classify(const PresPtr& cone, const ConeTriple& t);
// link must be the presentation r.source is the cone of.
ConeTriple cone_unclassify(const PresPtr& link, const Rep& r);

}  // namespace exodus

#endif  // EXODUS_DESCENT_H_
