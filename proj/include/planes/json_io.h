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

// JSON forms. Elements are referenced by label everywhere.
//
//   plane:    {"points": [..], "lines": [..], "incidences": [[p, l], ..]}
//   staged:   plane fields + "provenance": {label: "base" | "join(a,b)" |
//             "meet(a,b)"} + "layers": [[labels of stage 1], ..]
//   ordering: {"base": [..], "sequence": [..], "t_types": [..]}
//   digraph:  {"plane": plane, "base": [..], "edges": [[from, to], ..]}

#ifndef PLANES_JSON_IO_H_
#define PLANES_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "planes/free_completion.h"
#include "planes/gadgets.h"
#include "planes/incidence.h"
#include "planes/openness.h"

namespace planes {

using Json = nlohmann::ordered_json;

// Two-space indented, trailing newline.
std::string Dump(const Json& json);

// Throws kParse on malformed text.
Json ParseJson(const std::string& text);

Json PlaneToJson(const PartialPlane& plane);
// Enforces the plane axioms; throws kParse, kDuplicateLabel,
// kUnknownEndpoint or kAxiomViolation.
PartialPlane PlaneFromJson(const Json& json);

Json StagedToJson(const StagedPlane& staged);
StagedPlane StagedFromJson(const Json& json);

Json LabelsToJson(const PartialPlane& plane, const ElementSet& set);
ElementSet LabelsFromJson(const PartialPlane& plane, const Json& json);

Json OrderingToJson(const PartialPlane& plane, const HfOrdering& ordering);
// Validates the ordering against `plane`.
HfOrdering OrderingFromJson(const PartialPlane& plane, const Json& json);

Json DigraphToJson(const HfDigraph& digraph);
// Validates the digraph conditions.
HfDigraph DigraphFromJson(const Json& json);

Json GadgetToJson(const GadgetResult& result);

}  // namespace planes

#endif  // PLANES_JSON_IO_H_
