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

#include "planes/incidence.h"

#include <algorithm>
#include <sstream>

#include "planes/error.h"

namespace planes {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorKind::kAxiomViolation: return "AxiomViolation";
    case ErrorKind::kUnknownElement: return "UnknownElement";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kInvalidRank: return "InvalidRank";
    case ErrorKind::kOverlapMismatch: return "OverlapMismatch";
    case ErrorKind::kNotPrimitive: return "NotPrimitive";
    case ErrorKind::kNotHfOver: return "NotHfOver";
    case ErrorKind::kNotPermutation: return "NotPermutation";
    case ErrorKind::kHfViolation: return "HfViolation";
    case ErrorKind::kNotOpen: return "NotOpen";
    case ErrorKind::kEdgeIntoBase: return "EdgeIntoBase";
    case ErrorKind::kCoverageMismatch: return "CoverageMismatch";
    case ErrorKind::kInDegreeExceeded: return "InDegreeExceeded";
    case ErrorKind::kNotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::kBaseNotIndependent: return "BaseNotIndependent";
    case ErrorKind::kInvalidDepth: return "InvalidDepth";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

ElementId PartialPlane::AddPoint(std::string label) {
  return Add(Sort::kPoint, std::move(label));
}

ElementId PartialPlane::AddLine(std::string label) {
  return Add(Sort::kLine, std::move(label));
}

ElementId PartialPlane::Add(Sort sort, std::string label) {
  auto& labels = Labels(sort);
  ElementId id{sort, static_cast<std::uint32_t>(labels.size())};
  if (label.empty()) {
    const char prefix = sort == Sort::kPoint ? 'P' : 'L';
    label = prefix + std::to_string(id.index);
    while (by_label_.contains(label)) label += '_';
  }
  if (by_label_.contains(label)) {
    throw Error(ErrorKind::kDuplicateLabel, label);
  }
  by_label_.emplace(label, id);
  labels.push_back(std::move(label));
  Adj(sort).emplace_back();
  return id;
}

void PartialPlane::CheckContains(ElementId e) const {
  if (!Contains(e)) {
    throw Error(ErrorKind::kUnknownElement,
                std::string(e.is_point() ? "point #" : "line #") +
                    std::to_string(e.index));
  }
}

bool PartialPlane::Contains(ElementId e) const {
  return e.index < Labels(e.sort).size();
}

bool PartialPlane::Incident(ElementId a, ElementId b) const {
  if (a.sort == b.sort || !Contains(a) || !Contains(b)) return false;
  const auto& adj = Adj(a.sort)[a.index];
  return std::binary_search(adj.begin(), adj.end(), b.index);
}

std::optional<ElementId> PartialPlane::Common(ElementId a, ElementId b) const {
  if (a.sort != b.sort || a == b) return std::nullopt;
  CheckContains(a);
  CheckContains(b);
  const auto& x = Adj(a.sort)[a.index];
  const auto& y = Adj(b.sort)[b.index];
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return ElementId{Other(a.sort), *i};
    }
  }
  return std::nullopt;
}

void PartialPlane::AddIncidence(ElementId a, ElementId b) {
  CheckContains(a);
  CheckContains(b);
  if (a.sort == b.sort) {
    throw Error(ErrorKind::kUnknownEndpoint,
                "incidence between two elements of the same sort: " +
                    Label(a) + ", " + Label(b));
  }
  if (Incident(a, b)) return;
  // With a new incidence a-b, any element c of a's sort already sharing b
  // now shares both b and (possibly) another neighbour with a.
  for (std::uint32_t c_index : Adj(b.sort)[b.index]) {
    ElementId c{a.sort, c_index};
    if (auto common = Common(a, c)) {
      const char axiom = a.is_point() ? 'A' : 'B';
      throw Error(ErrorKind::kAxiomViolation,
                  std::string(1, axiom) + " {" + Label(a) + ", " + Label(c) +
                      "}");
    }
  }
  auto insert_sorted = [](std::vector<std::uint32_t>& v, std::uint32_t x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  };
  insert_sorted(Adj(a.sort)[a.index], b.index);
  insert_sorted(Adj(b.sort)[b.index], a.index);
  ++num_incidences_;
}

void PartialPlane::RemoveIncidence(ElementId a, ElementId b) {
  if (!Incident(a, b)) return;
  auto erase = [](std::vector<std::uint32_t>& v, std::uint32_t x) {
    v.erase(std::lower_bound(v.begin(), v.end(), x));
  };
  erase(Adj(a.sort)[a.index], b.index);
  erase(Adj(b.sort)[b.index], a.index);
  --num_incidences_;
}

std::span<const std::uint32_t> PartialPlane::Neighbors(ElementId e) const {
  CheckContains(e);
  return Adj(e.sort)[e.index];
}

std::vector<ElementId> PartialPlane::NeighborIds(ElementId e) const {
  std::vector<ElementId> out;
  for (std::uint32_t i : Neighbors(e)) out.push_back({Other(e.sort), i});
  return out;
}

const std::string& PartialPlane::Label(ElementId e) const {
  CheckContains(e);
  return Labels(e.sort)[e.index];
}

std::optional<ElementId> PartialPlane::Find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

ElementId PartialPlane::At(std::string_view label) const {
  if (auto e = Find(label)) return *e;
  throw Error(ErrorKind::kUnknownElement, std::string(label));
}

std::vector<ElementId> PartialPlane::Points() const {
  std::vector<ElementId> out;
  out.reserve(num_points());
  for (std::uint32_t i = 0; i < num_points(); ++i) {
    out.push_back(ElementId::Point(i));
  }
  return out;
}

std::vector<ElementId> PartialPlane::Lines() const {
  std::vector<ElementId> out;
  out.reserve(num_lines());
  for (std::uint32_t i = 0; i < num_lines(); ++i) {
    out.push_back(ElementId::Line(i));
  }
  return out;
}

std::vector<ElementId> PartialPlane::Elements() const {
  std::vector<ElementId> out = Points();
  auto lines = Lines();
  out.insert(out.end(), lines.begin(), lines.end());
  return out;
}

std::vector<Incidence> PartialPlane::Incidences() const {
  std::vector<Incidence> out;
  out.reserve(num_incidences_);
  for (std::uint32_t p = 0; p < num_points(); ++p) {
    for (std::uint32_t l : point_adj_[p]) {
      out.emplace_back(ElementId::Point(p), ElementId::Line(l));
    }
  }
  return out;
}

PartialPlane BuildPlane(
    const std::vector<std::string>& points,
    const std::vector<std::string>& lines,
    const std::vector<std::pair<std::string, std::string>>& incidences) {
  PartialPlane plane;
  for (const auto& label : points) {
    if (label.empty()) throw Error(ErrorKind::kParse, "empty point label");
    plane.AddPoint(label);
  }
  for (const auto& label : lines) {
    if (label.empty()) throw Error(ErrorKind::kParse, "empty line label");
    plane.AddLine(label);
  }
  for (const auto& [p, l] : incidences) {
    auto pe = plane.Find(p);
    auto le = plane.Find(l);
    if (!pe || !pe->is_point()) {
      throw Error(ErrorKind::kUnknownEndpoint, "no point labelled " + p);
    }
    if (!le || !le->is_line()) {
      throw Error(ErrorKind::kUnknownEndpoint, "no line labelled " + l);
    }
    plane.AddIncidence(*pe, *le);
  }
  return plane;
}

std::optional<std::pair<ElementId, ElementId>> FindAxiomViolation(
    const PartialPlane& plane) {
  for (Sort sort : {Sort::kPoint, Sort::kLine}) {
    const std::size_t n =
        sort == Sort::kPoint ? plane.num_points() : plane.num_lines();
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        auto a = plane.Neighbors({sort, i});
        auto b = plane.Neighbors({sort, j});
        std::vector<std::uint32_t> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        if (common.size() > 1) {
          return std::make_pair(ElementId{sort, i}, ElementId{sort, j});
        }
      }
    }
  }
  return std::nullopt;
}

PartialPlane Dual(const PartialPlane& plane) {
  PartialPlane out;
  for (ElementId l : plane.Lines()) out.AddPoint(plane.Label(l));
  for (ElementId p : plane.Points()) out.AddLine(plane.Label(p));
  for (const auto& [p, l] : plane.Incidences()) {
    out.AddIncidence(DualId(l), DualId(p));
  }
  return out;
}

PartialPlane InducedSubconfiguration(const PartialPlane& plane,
                                     const ElementSet& subset) {
  PartialPlane out;
  std::unordered_map<std::size_t, ElementId> renumbered;
  for (ElementId e : subset) {
    if (!plane.Contains(e)) {
      throw Error(ErrorKind::kUnknownElement,
                  "element #" + std::to_string(e.index) + " not in plane");
    }
    renumbered.emplace(plane.Slot(e), out.Add(e.sort, plane.Label(e)));
  }
  for (ElementId p : subset) {
    if (!p.is_point()) continue;
    for (ElementId l : plane.NeighborIds(p)) {
      if (subset.contains(l)) {
        out.AddIncidence(renumbered.at(plane.Slot(p)),
                         renumbered.at(plane.Slot(l)));
      }
    }
  }
  return out;
}

std::optional<std::array<ElementId, 4>> FindQuadrangle(
    const PartialPlane& plane) {
  const auto n = static_cast<std::uint32_t>(plane.num_points());
  auto collinear = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    auto line = plane.Common(ElementId::Point(a), ElementId::Point(b));
    return line && plane.Incident(*line, ElementId::Point(c));
  };
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      for (std::uint32_t c = b + 1; c < n; ++c) {
        if (collinear(a, b, c)) continue;
        for (std::uint32_t d = c + 1; d < n; ++d) {
          if (collinear(a, b, d) || collinear(a, c, d) ||
              collinear(b, c, d)) {
            continue;
          }
          return std::array<ElementId, 4>{
              ElementId::Point(a), ElementId::Point(b), ElementId::Point(c),
              ElementId::Point(d)};
        }
      }
    }
  }
  return std::nullopt;
}

std::string RenderIncidenceTable(const PartialPlane& plane,
                                 const std::vector<ElementId>& rows,
                                 const std::vector<ElementId>& columns) {
  if (rows.empty() && columns.empty()) return {};
  std::size_t head_width = 0;
  for (ElementId r : rows) {
    head_width = std::max(head_width, plane.Label(r).size());
  }
  std::vector<std::size_t> widths;
  for (ElementId c : columns) {
    widths.push_back(std::max<std::size_t>(1, plane.Label(c).size()));
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - std::min(w, s.size()), ' ');
  };
  std::ostringstream out;
  out << "| " << std::string(head_width, ' ') << " |";
  for (std::size_t j = 0; j < columns.size(); ++j) {
    out << ' ' << pad(plane.Label(columns[j]), widths[j]) << " |";
  }
  out << '\n';
  for (ElementId r : rows) {
    out << "| " << pad(plane.Label(r), head_width) << " |";
    for (std::size_t j = 0; j < columns.size(); ++j) {
      out << ' ' << pad(plane.Incident(r, columns[j]) ? "1" : " ", widths[j])
          << " |";
    }
    out << '\n';
  }
  return out.str();
}

std::string RenderIncidenceTable(const PartialPlane& plane) {
  return RenderIncidenceTable(plane, plane.Points(), plane.Lines());
}

PartialPlane FanoPlane() {
  PartialPlane fano;
  for (int i = 0; i < 7; ++i) fano.AddPoint("p" + std::to_string(i));
  for (std::uint32_t i = 0; i < 7; ++i) {
    ElementId line = fano.AddLine("l" + std::to_string(i));
    for (std::uint32_t offset : {0u, 1u, 3u}) {
      fano.AddIncidence(ElementId::Point((i + offset) % 7), line);
    }
  }
  return fano;
}

}  // namespace planes
