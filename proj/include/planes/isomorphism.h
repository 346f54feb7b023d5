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

#ifndef PLANES_ISOMORPHISM_H_
#define PLANES_ISOMORPHISM_H_

#include <cstddef>
#include <map>
#include <optional>

#include "planes/incidence.h"

namespace planes {

using PinMap = std::map<ElementId, ElementId>;

struct IsoMap {
  // Total, sort-preserving, incidence-preserving in both directions.
  std::map<ElementId, ElementId> forward;
  PinMap pinned;

  ElementId operator()(ElementId e) const { return forward.at(e); }
};

struct IsoOptions {
  // Per-sort element ceiling; larger inputs raise kBudgetExceeded.
  std::size_t max_per_sort = 64;
};

// Colour refinement on the joint Levi graph (pins individualised), then
// backtracking over refined classes. Complete within the budget.
std::optional<IsoMap> IsomorphismSearch(const PartialPlane& a,
                                        const PartialPlane& b,
                                        const PinMap& pinned = {},
                                        IsoOptions options = {});

// True iff `map` is a sort-preserving bijection between the element sets
// that preserves incidence in both directions and extends `pinned`.
bool IsIsomorphism(const PartialPlane& a, const PartialPlane& b,
                   const std::map<ElementId, ElementId>& map,
                   const PinMap& pinned = {});

// Resolves a label-to-label map into element ids. Throws kUnknownElement.
PinMap PinsFromLabels(const PartialPlane& a, const PartialPlane& b,
                      const std::map<std::string, std::string>& labels);

}  // namespace planes

#endif  // PLANES_ISOMORPHISM_H_
