// Copyright 2026 The Planes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Named HF-constructions: the 21-step superstability gadget, chains of
// gadgets coded by a binary string, the halving gadget c(n), and the binary
// tree digraph.

#ifndef PLANES_GADGETS_H_
#define PLANES_GADGETS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planes/free_completion.h"
#include "planes/incidence.h"
#include "planes/openness.h"

namespace planes {

struct Certificate {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GadgetResult {
  PartialPlane plane;
  ElementSet base;
  HfOrdering ordering;
  // The element every construction must end with (a_0, c(n)).
  ElementId last;
  std::vector<ElementId> table_rows;
  std::vector<ElementId> table_columns;
  std::string table;
  // Elements an isomorphism must fix when comparing gadgets.
  ElementSet constants;
  std::vector<Certificate> certificates;

  bool AllCertified() const;
};

// One application of the 21-step block inside `plane`: given base points
// p'_0..p'_3 and lines l'_0..l'_3 (pairwise non-incident), adds a_1 (or
// reuses `anchor`), lines l'_4..l'_15, points b_0..b_3, c_0..c_2 and a_0.
// New labels carry `suffix`; `anchor_label` and `out_label` name a_1 and a_0.
struct GadgetBlock {
  ElementId anchor;  // a_1
  ElementId out;     // a_0
  // Construction order of the new elements (a_1 first unless reused).
  std::vector<ElementId> added;
  // Table layout: p'_0..p'_3, a_1, b_0..b_3, c_0..c_2, a_0.
  std::vector<ElementId> rows;
  // l'_0..l'_15.
  std::vector<ElementId> columns;
};

// Throws kBaseNotIndependent.
GadgetBlock AddGadgetBlock(PartialPlane& plane,
                           const std::array<ElementId, 4>& points,
                           const std::array<ElementId, 4>& lines,
                           std::optional<ElementId> anchor,
                           const std::string& suffix,
                           const std::string& anchor_label,
                           const std::string& out_label);

// Fresh base p'_0..p'_3, l'_0..l'_3 plus one gadget block.
GadgetResult BuildSuperstabilityGadget();

// Reference incidence pattern of the gadget table: 13 point rows by 16 line
// columns.
const std::array<std::array<bool, 16>, 13>& Figure1Pattern();

// True iff P - A has at least two elements, every one except `designated`
// has at least three incidences in P, P is HF-constructible over A, and
// `samples` random HF-orderings over A all end with `designated`.
bool VerifyForcedLast(const PartialPlane& plane, const ElementSet& base,
                      ElementId designated, std::size_t samples = 64,
                      std::uint64_t seed = 1);
bool VerifyForcedLast(const GadgetResult& result);

struct CodedChainSpec {
  std::string eta;  // nonempty string over {0, 1}
};

// Base blocks Z0 = {p^0_j, l^0_j} and Z1 = {p^1_j, l^1_j}; a_n is added
// first and stage i builds a_i from a_{i+1} over Z_{eta[i]}, with a_{i+1}
// serving as the stage's a_1. Throws kBaseNotIndependent on a malformed eta.
GadgetResult BuildCodedChain(const CodedChainSpec& spec);

// 4^n independent base points halved 2n times by alternating joins and
// meets into the point c(n). Throws kInvalidDepth for n < 1 and
// kBudgetExceeded past `budget` elements.
GadgetResult BuildCGadget(int n, std::size_t budget = kDefaultElementBudget);

// Elements z_eta for binary strings of length <= depth; points at even
// length, incident with and pointed to by both children. Throws
// kInvalidDepth for depth < 1 and kBudgetExceeded past `budget` elements.
HfDigraph BuildTreeDigraph(int depth,
                           std::size_t budget = kDefaultElementBudget);

}  // namespace planes

#endif  // PLANES_GADGETS_H_
