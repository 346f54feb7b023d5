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

// Finite partial planes: two-sorted incidence structures in which two
// distinct points share at most one line and two distinct lines share at
// most one point.

#ifndef PLANES_INCIDENCE_H_
#define PLANES_INCIDENCE_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace planes {

enum class Sort : std::uint8_t { kPoint = 0, kLine = 1 };

inline Sort Other(Sort s) {
  return s == Sort::kPoint ? Sort::kLine : Sort::kPoint;
}

// Identity of an element inside one plane. Ordering is points before lines,
// then by index; every deterministic tie-break in the library uses it.
struct ElementId {
  Sort sort = Sort::kPoint;
  std::uint32_t index = 0;

  static ElementId Point(std::uint32_t i) { return {Sort::kPoint, i}; }
  static ElementId Line(std::uint32_t i) { return {Sort::kLine, i}; }

  bool is_point() const { return sort == Sort::kPoint; }
  bool is_line() const { return sort == Sort::kLine; }

  friend auto operator<=>(const ElementId&, const ElementId&) = default;
  friend bool operator==(const ElementId&, const ElementId&) = default;
};

using ElementSet = std::set<ElementId>;
using Incidence = std::pair<ElementId, ElementId>;  // (point, line)

class PartialPlane {
 public:
  PartialPlane() = default;

  std::size_t num_points() const { return point_labels_.size(); }
  std::size_t num_lines() const { return line_labels_.size(); }
  std::size_t num_elements() const { return num_points() + num_lines(); }
  std::size_t num_incidences() const { return num_incidences_; }
  bool empty() const { return num_elements() == 0; }

  // An empty label is replaced by a generated one ("P3", "L0", ...).
  // Labels are unique across both sorts.
  ElementId AddPoint(std::string label = {});
  ElementId AddLine(std::string label = {});
  ElementId Add(Sort sort, std::string label = {});

  // Accepts the two endpoints in either order. Throws kAxiomViolation if
  // the new incidence would put two points on two common lines (axiom A)
  // or two lines through two common points (axiom B); the plane is left
  // unchanged in that case. Adding an existing incidence is a no-op.
  void AddIncidence(ElementId a, ElementId b);

  // Drops one incidence if present; used to build perturbed fixtures.
  void RemoveIncidence(ElementId a, ElementId b);

  bool Contains(ElementId e) const;
  bool Incident(ElementId a, ElementId b) const;

  // Indices of the elements of the other sort incident with `e`, ascending.
  std::span<const std::uint32_t> Neighbors(ElementId e) const;
  std::vector<ElementId> NeighborIds(ElementId e) const;
  std::size_t Degree(ElementId e) const { return Neighbors(e).size(); }

  const std::string& Label(ElementId e) const;
  std::optional<ElementId> Find(std::string_view label) const;
  // Throws kUnknownElement.
  ElementId At(std::string_view label) const;

  // Points first, then lines, each by index.
  std::vector<ElementId> Elements() const;
  std::vector<ElementId> Points() const;
  std::vector<ElementId> Lines() const;
  // Sorted (point, line) pairs.
  std::vector<Incidence> Incidences() const;

  // Dense numbering 0..num_elements()-1 consistent with ElementId order.
  std::size_t Slot(ElementId e) const {
    return e.is_point() ? e.index : num_points() + e.index;
  }
  ElementId AtSlot(std::size_t slot) const {
    return slot < num_points()
               ? ElementId::Point(static_cast<std::uint32_t>(slot))
               : ElementId::Line(
                     static_cast<std::uint32_t>(slot - num_points()));
  }

  // The common neighbour of two distinct same-sort elements, if any:
  // the line p v q of two points or the point l ^ m of two lines.
  std::optional<ElementId> Common(ElementId a, ElementId b) const;

  friend bool operator==(const PartialPlane&, const PartialPlane&) = default;

 private:
  std::vector<std::string>& Labels(Sort s) {
    return s == Sort::kPoint ? point_labels_ : line_labels_;
  }
  const std::vector<std::string>& Labels(Sort s) const {
    return s == Sort::kPoint ? point_labels_ : line_labels_;
  }
  std::vector<std::vector<std::uint32_t>>& Adj(Sort s) {
    return s == Sort::kPoint ? point_adj_ : line_adj_;
  }
  const std::vector<std::vector<std::uint32_t>>& Adj(Sort s) const {
    return s == Sort::kPoint ? point_adj_ : line_adj_;
  }
  void CheckContains(ElementId e) const;

  std::vector<std::string> point_labels_;
  std::vector<std::string> line_labels_;
  std::vector<std::vector<std::uint32_t>> point_adj_;
  std::vector<std::vector<std::uint32_t>> line_adj_;
  std::unordered_map<std::string, ElementId> by_label_;
  std::size_t num_incidences_ = 0;
};

// Validating constructor from labels. Throws kDuplicateLabel,
// kUnknownEndpoint or kAxiomViolation.
PartialPlane BuildPlane(
    const std::vector<std::string>& points,
    const std::vector<std::string>& lines,
    const std::vector<std::pair<std::string, std::string>>& incidences);

// Exhaustive O(n^2)-per-sort scan of axioms A and B; returns the first
// offending same-sort pair, if any.
std::optional<std::pair<ElementId, ElementId>> FindAxiomViolation(
    const PartialPlane& plane);

// Points become lines and lines become points; indices and labels are kept.
PartialPlane Dual(const PartialPlane& plane);

inline ElementId DualId(ElementId e) { return {Other(e.sort), e.index}; }

// The subconfiguration on `subset` with every incidence of `plane` between
// its members. Elements are renumbered in ElementId order; labels are kept.
// Throws kUnknownElement.
PartialPlane InducedSubconfiguration(const PartialPlane& plane,
                                     const ElementSet& subset);

// Lexicographically first (by point index) four points no three of which
// lie on a common line of the plane.
std::optional<std::array<ElementId, 4>> FindQuadrangle(
    const PartialPlane& plane);

// Pipe-separated grid with "1" at incident cells. Throws kUnknownElement.
std::string RenderIncidenceTable(const PartialPlane& plane,
                                 const std::vector<ElementId>& rows,
                                 const std::vector<ElementId>& columns);

// Whole-plane table: every point as a row, every line as a column.
std::string RenderIncidenceTable(const PartialPlane& plane);

// Fano plane on points 0..6 with lines {0,1,3} + i mod 7.
PartialPlane FanoPlane();

}  // namespace planes

#endif  // PLANES_INCIDENCE_H_
