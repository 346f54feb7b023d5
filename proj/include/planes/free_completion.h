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

// Staged free completion and amalgams.
//
// Stage 2k+1 adds a line p v q, incident with only p and q, for every pair
// of points not yet joined; stage 2k+2 adds a point l ^ m for every pair of
// parallel lines. Only elements present before the stage take part in it.

#ifndef PLANES_FREE_COMPLETION_H_
#define PLANES_FREE_COMPLETION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planes/incidence.h"

namespace planes {

inline constexpr std::size_t kDefaultElementBudget = 100000;

struct Term {
  enum class Kind { kBase, kJoin, kMeet };

  Kind kind = Kind::kBase;
  // Normalised: lhs < rhs. Unused for kBase.
  ElementId lhs;
  ElementId rhs;

  static Term Base() { return {}; }
  static Term Join(ElementId a, ElementId b);
  static Term Meet(ElementId a, ElementId b);

  // "base", "join(a,b)" or "meet(a,b)" with argument labels.
  std::string ToString(const PartialPlane& plane) const;

  friend bool operator==(const Term&, const Term&) = default;
};

class StagedPlane {
 public:
  StagedPlane() = default;
  explicit StagedPlane(PartialPlane base);

  const PartialPlane& plane() const { return plane_; }
  std::size_t stages() const { return layers_.size(); }
  // layers()[k] holds the elements created at stage k + 1.
  const std::vector<std::vector<ElementId>>& layers() const { return layers_; }
  std::size_t base_size() const { return base_size_; }
  const Term& Provenance(ElementId e) const;
  // 0 for base elements.
  std::size_t StageOf(ElementId e) const;
  // Elements present after `stage` stages.
  ElementSet ElementsUpTo(std::size_t stage) const;
  // True when the next stage adds lines.
  bool NextStageAddsLines() const { return stages() % 2 == 0; }

  // Appends one stage; the caller guarantees the terms are fresh and the
  // incidences are exactly the term arguments.
  void AppendLayer(Sort sort, const std::vector<Term>& terms);

  // Reassembles a staged plane from serialised parts, checking that every
  // non-base element is incident with exactly its term arguments, that the
  // arguments predate it, and that stage parity matches the sort.
  // Throws kParse.
  static StagedPlane FromParts(PartialPlane plane,
                               std::map<ElementId, Term> provenance,
                               std::vector<std::vector<ElementId>> layers);

  friend bool operator==(const StagedPlane&, const StagedPlane&) = default;

 private:
  PartialPlane plane_;
  std::size_t base_size_ = 0;
  std::vector<std::vector<ElementId>> layers_;
  std::map<ElementId, Term> provenance_;
  std::map<ElementId, std::size_t> stage_of_;
};

// Adds one stage. Throws kBudgetExceeded if the plane would grow past
// `budget` elements.
StagedPlane FreeExtensionStage(const StagedPlane& plane,
                               std::size_t budget = kDefaultElementBudget);

StagedPlane FreeComplete(const PartialPlane& plane, std::size_t stages,
                         std::size_t budget = kDefaultElementBudget);

// One line "l", points p1..p{n-2} on it and q1, q2 off it.
// Throws kInvalidRank for n < 4.
PartialPlane PiBase(int n);

struct ClosureResult {
  ElementSet elements;
  PartialPlane plane;
  // No two points of the closure are unjoined in the ambient plane and no
  // two of its lines are parallel there, so later completion stages cannot
  // enlarge it.
  bool stable = false;
};

// Least superset of `subset` closed under joins of points and meets of
// lines that exist in the ambient plane. Throws kUnknownElement and
// kBudgetExceeded.
ClosureResult GeneratedClosure(const PartialPlane& ambient,
                               const ElementSet& subset,
                               std::size_t budget = kDefaultElementBudget);
ClosureResult GeneratedClosure(const StagedPlane& ambient,
                               const ElementSet& subset,
                               std::size_t budget = kDefaultElementBudget);

struct AmalgamSpec {
  PartialPlane left;
  PartialPlane right;
  // (element of left, element of right) identifications.
  std::vector<std::pair<ElementId, ElementId>> shared;

  // Identifies the elements carrying each label in both planes.
  // Throws kUnknownElement.
  static AmalgamSpec ByLabels(PartialPlane left, PartialPlane right,
                              const std::vector<std::string>& labels);
};

struct Amalgam {
  PartialPlane plane;
  std::map<ElementId, ElementId> from_left;
  std::map<ElementId, ElementId> from_right;
};

// Union of both sides glued along the shared part, with no incidences
// beyond those of the two sides. Left elements keep their ids; the right
// side's own elements follow. Throws kOverlapMismatch or kAxiomViolation.
Amalgam FreeAmalgam(const AmalgamSpec& spec);

struct CanonicalAmalgam {
  StagedPlane staged;
  Amalgam amalgam;
  // Unmet HF hypotheses on the shared part.
  std::vector<std::string> warnings;
};

CanonicalAmalgam CanonicalAmalgamate(const AmalgamSpec& spec,
                                     std::size_t stages,
                                     std::size_t budget = kDefaultElementBudget);

struct PrimitiveAmalgam {
  ElementId new_element;         // the element of A outside C
  int incidences = 0;            // its incidences with C: 0, 1 or 2
  // A -> B over C when B already holds the meet (or join) being added.
  std::optional<std::map<ElementId, ElementId>> embedding;
  // Otherwise the free amalgam of A and B over C.
  std::optional<Amalgam> amalgam;
};

// `base` (C) is located inside `extension` (A = C + one element) and
// `host` (B) by label. Throws kNotPrimitive if A is not C plus one element
// incident with at most two elements of C, and kNotHfOver if C is not an
// induced subconfiguration of B with B HF-constructible over it.
PrimitiveAmalgam AmalgamatePrimitive(const PartialPlane& base,
                                     const PartialPlane& extension,
                                     const PartialPlane& host);

}  // namespace planes

#endif  // PLANES_FREE_COMPLETION_H_
