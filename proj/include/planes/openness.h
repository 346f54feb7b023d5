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

// Openness, hyper-free (HF) orderings and HF-digraphs.
//
// An HF-ordering of a plane P over a base A lists P - A so that every
// element is incident with at most two elements that are in A or earlier in
// the list; that count is the element's t-type. Peeling (repeatedly deleting
// a non-base element with at most two remaining neighbours) produces such an
// ordering in reverse, and gets stuck exactly on the confined core: the
// largest set of non-base elements each incident with at least three
// elements of the core or the base.

#ifndef PLANES_OPENNESS_H_
#define PLANES_OPENNESS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "planes/incidence.h"

namespace planes {

struct PeelReport {
  std::vector<ElementId> order;
  std::vector<std::size_t> degrees_at_removal;
  ElementSet residual_core;

  bool empty_core() const { return residual_core.empty(); }
  std::string Trace(const PartialPlane& plane) const;
};

// Deterministic: always removes the lowest removable element.
// Throws kUnknownElement if `base` is not contained in the plane.
PeelReport ConfinedCore(const PartialPlane& plane, const ElementSet& base = {});

// Same peeling with a uniformly random choice among removable elements.
// Every HF-ordering over `base` is the reverse of some such run.
PeelReport RandomPeel(const PartialPlane& plane, const ElementSet& base,
                      std::mt19937_64& rng);

bool IsOpen(const PartialPlane& plane);

// A <=_HF B: B is HF-constructible from the subconfiguration on `base`.
bool IsHfOver(const PartialPlane& plane, const ElementSet& base);

struct HfOrdering {
  ElementSet base;
  std::vector<ElementId> sequence;
  std::vector<int> t_types;

  bool is_f_ordering() const;
  // Sum of (2 - t) over the sequence.
  long long Deficit() const;

  friend bool operator==(const HfOrdering&, const HfOrdering&) = default;
};

// t-type of each element: neighbours in `base` or earlier in `sequence`.
std::vector<int> TTypes(const PartialPlane& plane, const ElementSet& base,
                        const std::vector<ElementId>& sequence);

// Reverse of the deterministic peel order; nullopt on a nonempty core.
std::optional<HfOrdering> ExtractHfOrdering(const PartialPlane& plane,
                                            const ElementSet& base = {});

// Reverse of a random peel; nullopt on a nonempty core.
std::optional<HfOrdering> SampleHfOrdering(const PartialPlane& plane,
                                           const ElementSet& base,
                                           std::mt19937_64& rng);

// Throws kNotPermutation if `sequence` is not a permutation of P - A, and
// kHfViolation naming the first element with more than two earlier
// neighbours.
HfOrdering ValidateHfOrdering(const PartialPlane& plane, const ElementSet& base,
                              const std::vector<ElementId>& sequence);

// 2|P| - |I| - 4; ordering independent.
long long RankClosedForm(const PartialPlane& plane);

// Sum of (2 - t) - 4 over an HF-ordering from the empty set. Throws
// kNotOpen when the plane has a nonempty confined core.
long long Rank(const PartialPlane& plane);

using Edge = std::pair<ElementId, ElementId>;  // (from, to)

struct HfDigraph {
  PartialPlane plane;
  ElementSet base;
  std::set<Edge> edges;

  std::vector<ElementId> Predecessors(ElementId e) const;
  std::vector<ElementId> Successors(ElementId e) const;
  std::size_t InDegree(ElementId e) const { return Predecessors(e).size(); }
};

// Edge (a, b) iff b is outside the base, a and b are incident, and a is in
// the base or precedes b.
HfDigraph DigraphFromOrdering(const PartialPlane& plane,
                              const HfOrdering& ordering);

// Checks irreflexivity and antisymmetry, then: no edge into the base; every
// incidence at a non-base element is covered by an edge and every edge is an
// incidence; in-degree at most two. Throws kNotAntisymmetric,
// kEdgeIntoBase, kCoverageMismatch, kInDegreeExceeded or kUnknownElement.
HfDigraph ValidateHfDigraph(const PartialPlane& plane, const ElementSet& base,
                            const std::set<Edge>& edges);

struct CompatibleResult {
  std::optional<HfOrdering> ordering;
  // Directed cycle a0 -> a1 -> ... -> a0 (first element not repeated) when
  // no compatible linear order exists.
  std::vector<ElementId> cycle;
};

// Topological order of P - A, lowest available element first.
CompatibleResult CompatibleOrdering(const HfDigraph& digraph);

// Least superset of `seed` closed under taking predecessors.
// Throws kUnknownElement.
ElementSet ClClosure(const HfDigraph& digraph, const ElementSet& seed);

// Shortest directed path length; nullopt means no path. Distance from an
// element to itself is 0. Throws kUnknownElement.
std::optional<std::size_t> RDistance(const HfDigraph& digraph, ElementId from,
                                     ElementId to);

// The ordering with the members of `closed` moved to the front, relative
// order otherwise preserved. `closed` should be cl-closed for the result to
// be an HF-ordering with the same digraph.
std::vector<ElementId> MoveToFront(const HfOrdering& ordering,
                                   const ElementSet& closed);

}  // namespace planes

#endif  // PLANES_OPENNESS_H_
