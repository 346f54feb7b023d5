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

#include "planes/free_completion.h"

#include <algorithm>
#include <deque>
#include <set>

#include "planes/error.h"
#include "planes/openness.h"

namespace planes {
namespace {

std::string ArgLabel(const StagedPlane& staged, ElementId e) {
  const std::string& label = staged.plane().Label(e);
  return staged.Provenance(e).kind == Term::Kind::kBase ? label
                                                        : "(" + label + ")";
}

std::string DisplayLabel(const StagedPlane& staged, const Term& term) {
  const char* op = term.kind == Term::Kind::kJoin ? "∨" : "∧";
  std::string label =
      ArgLabel(staged, term.lhs) + op + ArgLabel(staged, term.rhs);
  while (staged.plane().Find(label)) label += '\'';
  return label;
}

void CheckSubset(const PartialPlane& plane, const ElementSet& subset) {
  for (ElementId e : subset) {
    if (!plane.Contains(e)) {
      throw Error(ErrorKind::kUnknownElement,
                  std::string(e.is_point() ? "point #" : "line #") +
                      std::to_string(e.index));
    }
  }
}

// Maps every element of `part` to the element with the same label and sort
// in `whole`, checking that incidence agrees in both directions.
std::optional<std::map<ElementId, ElementId>> LocateByLabel(
    const PartialPlane& part, const PartialPlane& whole, std::string* why) {
  std::map<ElementId, ElementId> map;
  for (ElementId e : part.Elements()) {
    auto f = whole.Find(part.Label(e));
    if (!f || f->sort != e.sort) {
      *why = "no element labelled " + part.Label(e);
      return std::nullopt;
    }
    map.emplace(e, *f);
  }
  for (ElementId p : part.Points()) {
    for (ElementId l : part.Lines()) {
      if (part.Incident(p, l) != whole.Incident(map.at(p), map.at(l))) {
        *why = "incidence " + part.Label(p) + " - " + part.Label(l) +
               " differs";
        return std::nullopt;
      }
    }
  }
  return map;
}

}  // namespace

Term Term::Join(ElementId a, ElementId b) {
  return {Kind::kJoin, std::min(a, b), std::max(a, b)};
}

Term Term::Meet(ElementId a, ElementId b) {
  return {Kind::kMeet, std::min(a, b), std::max(a, b)};
}

std::string Term::ToString(const PartialPlane& plane) const {
  switch (kind) {
    case Kind::kBase:
      return "base";
    case Kind::kJoin:
      return "join(" + plane.Label(lhs) + "," + plane.Label(rhs) + ")";
    case Kind::kMeet:
      return "meet(" + plane.Label(lhs) + "," + plane.Label(rhs) + ")";
  }
  return "base";
}

StagedPlane::StagedPlane(PartialPlane base)
    : plane_(std::move(base)), base_size_(plane_.num_elements()) {}

const Term& StagedPlane::Provenance(ElementId e) const {
  static const Term kBase = Term::Base();
  auto it = provenance_.find(e);
  return it == provenance_.end() ? kBase : it->second;
}

std::size_t StagedPlane::StageOf(ElementId e) const {
  auto it = stage_of_.find(e);
  return it == stage_of_.end() ? 0 : it->second;
}

ElementSet StagedPlane::ElementsUpTo(std::size_t stage) const {
  ElementSet out;
  for (ElementId e : plane_.Elements()) {
    if (StageOf(e) <= stage) out.insert(e);
  }
  return out;
}

void StagedPlane::AppendLayer(Sort sort, const std::vector<Term>& terms) {
  std::vector<ElementId> layer;
  layer.reserve(terms.size());
  const std::size_t stage = layers_.size() + 1;
  for (const Term& term : terms) {
    ElementId e = plane_.Add(sort, DisplayLabel(*this, term));
    plane_.AddIncidence(e, term.lhs);
    plane_.AddIncidence(e, term.rhs);
    provenance_.emplace(e, term);
    stage_of_.emplace(e, stage);
    layer.push_back(e);
  }
  layers_.push_back(std::move(layer));
}

StagedPlane StagedPlane::FromParts(PartialPlane plane,
                                   std::map<ElementId, Term> provenance,
                                   std::vector<std::vector<ElementId>> layers) {
  StagedPlane out;
  out.plane_ = std::move(plane);
  out.layers_ = std::move(layers);
  out.provenance_ = std::move(provenance);
  std::set<ElementId> layered;
  for (std::size_t k = 0; k < out.layers_.size(); ++k) {
    const Sort expected = k % 2 == 0 ? Sort::kLine : Sort::kPoint;
    for (ElementId e : out.layers_[k]) {
      if (!out.plane_.Contains(e) || e.sort != expected) {
        throw Error(ErrorKind::kParse, "stage " + std::to_string(k + 1) +
                                           " holds an element of wrong sort");
      }
      if (!layered.insert(e).second) {
        throw Error(ErrorKind::kParse, "element in two layers");
      }
      out.stage_of_[e] = k + 1;
    }
  }
  out.base_size_ = out.plane_.num_elements() - layered.size();
  std::erase_if(out.provenance_, [](const auto& entry) {
    return entry.second.kind == Term::Kind::kBase;
  });
  for (ElementId e : layered) {
    if (!out.provenance_.contains(e)) {
      throw Error(ErrorKind::kParse, out.plane_.Label(e) + " has no term");
    }
  }
  for (const auto& [e, term] : out.provenance_) {
    if (term.kind == Term::Kind::kBase) continue;
    if (!layered.contains(e)) {
      throw Error(ErrorKind::kParse, out.plane_.Label(e) + " has a term but no stage");
    }
    const Sort arg_sort = term.kind == Term::Kind::kJoin ? Sort::kPoint
                                                        : Sort::kLine;
    if (e.sort == arg_sort || term.lhs.sort != arg_sort ||
        term.rhs.sort != arg_sort || !(term.lhs < term.rhs) ||
        !out.plane_.Contains(term.lhs) || !out.plane_.Contains(term.rhs)) {
      throw Error(ErrorKind::kParse, "malformed term for " + out.plane_.Label(e));
    }
    if (out.StageOf(term.lhs) >= out.StageOf(e) ||
        out.StageOf(term.rhs) >= out.StageOf(e)) {
      throw Error(ErrorKind::kParse,
                  out.plane_.Label(e) + " references a later element");
    }
    if (out.plane_.Degree(e) < 2 || !out.plane_.Incident(e, term.lhs) ||
        !out.plane_.Incident(e, term.rhs)) {
      throw Error(ErrorKind::kParse,
                  out.plane_.Label(e) + " is not incident with its arguments");
    }
  }
  for (ElementId e : layered) {
    if (out.Provenance(e).kind == Term::Kind::kBase) {
      throw Error(ErrorKind::kParse, out.plane_.Label(e) + " has no term");
    }
    // At creation only the arguments are incident; later incidences come
    // from later elements.
    for (ElementId f : out.plane_.NeighborIds(e)) {
      const Term& t = out.Provenance(e);
      if (f != t.lhs && f != t.rhs && out.StageOf(f) <= out.StageOf(e)) {
        throw Error(ErrorKind::kParse,
                    out.plane_.Label(e) + " has an extra incidence at creation");
      }
    }
  }
  return out;
}

StagedPlane FreeExtensionStage(const StagedPlane& staged, std::size_t budget) {
  const PartialPlane& plane = staged.plane();
  const Sort arg_sort =
      staged.NextStageAddsLines() ? Sort::kPoint : Sort::kLine;
  const std::size_t n =
      arg_sort == Sort::kPoint ? plane.num_points() : plane.num_lines();

  std::vector<Term> terms;
  std::vector<bool> linked(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::fill(linked.begin(), linked.end(), false);
    ElementId a{arg_sort, i};
    for (std::uint32_t m : plane.Neighbors(a)) {
      for (std::uint32_t j : plane.Neighbors({Other(arg_sort), m})) {
        linked[j] = true;
      }
    }
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (linked[j]) continue;
      ElementId b{arg_sort, j};
      terms.push_back(arg_sort == Sort::kPoint ? Term::Join(a, b)
                                               : Term::Meet(a, b));
    }
    if (plane.num_elements() + terms.size() > budget) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "stage " + std::to_string(staged.stages() + 1) +
                      " exceeds the ceiling of " + std::to_string(budget) +
                      " elements");
    }
  }
  StagedPlane next = staged;
  next.AppendLayer(Other(arg_sort), terms);
  return next;
}

StagedPlane FreeComplete(const PartialPlane& plane, std::size_t stages,
                         std::size_t budget) {
  if (plane.num_elements() > budget) {
    throw Error(ErrorKind::kBudgetExceeded, "input exceeds the ceiling");
  }
  StagedPlane staged(plane);
  for (std::size_t k = 0; k < stages; ++k) {
    staged = FreeExtensionStage(staged, budget);
  }
  return staged;
}

PartialPlane PiBase(int n) {
  if (n < 4) {
    throw Error(ErrorKind::kInvalidRank,
                "rank must be at least 4, got " + std::to_string(n));
  }
  PartialPlane plane;
  ElementId line = plane.AddLine("l");
  for (int i = 1; i <= n - 2; ++i) {
    plane.AddIncidence(plane.AddPoint("p" + std::to_string(i)), line);
  }
  plane.AddPoint("q1");
  plane.AddPoint("q2");
  return plane;
}

ClosureResult GeneratedClosure(const PartialPlane& ambient,
                               const ElementSet& subset, std::size_t budget) {
  CheckSubset(ambient, subset);
  if (subset.size() > budget) {
    throw Error(ErrorKind::kBudgetExceeded, "seed exceeds the ceiling");
  }
  ElementSet closed = subset;
  std::deque<ElementId> queue(subset.begin(), subset.end());
  while (!queue.empty()) {
    ElementId x = queue.front();
    queue.pop_front();
    std::vector<ElementId> found;
    for (ElementId y : closed) {
      if (y.sort != x.sort || y == x) continue;
      auto c = ambient.Common(x, y);
      if (c && !closed.contains(*c)) found.push_back(*c);
    }
    for (ElementId c : found) {
      if (!closed.insert(c).second) continue;
      if (closed.size() > budget) {
        throw Error(ErrorKind::kBudgetExceeded,
                    "closure exceeds the ceiling of " +
                        std::to_string(budget) + " elements");
      }
      queue.push_back(c);
    }
  }
  ClosureResult result;
  result.stable = true;
  for (auto i = closed.begin(); i != closed.end() && result.stable; ++i) {
    for (auto j = std::next(i); j != closed.end(); ++j) {
      if (i->sort == j->sort && !ambient.Common(*i, *j)) {
        result.stable = false;
        break;
      }
    }
  }
  result.plane = InducedSubconfiguration(ambient, closed);
  result.elements = std::move(closed);
  return result;
}

ClosureResult GeneratedClosure(const StagedPlane& ambient,
                               const ElementSet& subset, std::size_t budget) {
  return GeneratedClosure(ambient.plane(), subset, budget);
}

AmalgamSpec AmalgamSpec::ByLabels(PartialPlane left, PartialPlane right,
                                  const std::vector<std::string>& labels) {
  AmalgamSpec spec;
  for (const std::string& label : labels) {
    spec.shared.emplace_back(left.At(label), right.At(label));
  }
  spec.left = std::move(left);
  spec.right = std::move(right);
  return spec;
}

Amalgam FreeAmalgam(const AmalgamSpec& spec) {
  const PartialPlane& left = spec.left;
  const PartialPlane& right = spec.right;
  std::map<ElementId, ElementId> right_to_left;
  std::set<ElementId> left_shared;
  for (const auto& [l, r] : spec.shared) {
    if (!left.Contains(l) || !right.Contains(r)) {
      throw Error(ErrorKind::kOverlapMismatch, "identification of unknown element");
    }
    if (l.sort != r.sort) {
      throw Error(ErrorKind::kOverlapMismatch,
                  left.Label(l) + " and " + right.Label(r) + " differ in sort");
    }
    if (!right_to_left.emplace(r, l).second || !left_shared.insert(l).second) {
      throw Error(ErrorKind::kOverlapMismatch,
                  "identification of " + left.Label(l) + " is not injective");
    }
  }
  for (const auto& [l1, r1] : spec.shared) {
    for (const auto& [l2, r2] : spec.shared) {
      if (left.Incident(l1, l2) != right.Incident(r1, r2)) {
        throw Error(ErrorKind::kOverlapMismatch,
                    "shared part differs at " + left.Label(l1) + " - " +
                        left.Label(l2));
      }
    }
  }

  Amalgam out;
  out.plane = left;
  for (ElementId e : left.Elements()) out.from_left.emplace(e, e);
  for (ElementId r : right.Elements()) {
    if (auto it = right_to_left.find(r); it != right_to_left.end()) {
      out.from_right.emplace(r, it->second);
      continue;
    }
    std::string label = right.Label(r);
    while (out.plane.Find(label)) label += '\'';
    out.from_right.emplace(r, out.plane.Add(r.sort, label));
  }
  for (const auto& [p, l] : right.Incidences()) {
    out.plane.AddIncidence(out.from_right.at(p), out.from_right.at(l));
  }
  return out;
}

CanonicalAmalgam CanonicalAmalgamate(const AmalgamSpec& spec,
                                     std::size_t stages, std::size_t budget) {
  CanonicalAmalgam out;
  ElementSet left_base;
  ElementSet right_base;
  for (const auto& [l, r] : spec.shared) {
    left_base.insert(l);
    right_base.insert(r);
  }
  out.amalgam = FreeAmalgam(spec);
  if (!IsHfOver(spec.left, left_base)) {
    out.warnings.push_back("left side is not HF-constructible over the shared part");
  }
  if (!IsHfOver(spec.right, right_base)) {
    out.warnings.push_back("right side is not HF-constructible over the shared part");
  }
  out.staged = FreeComplete(out.amalgam.plane, stages, budget);
  return out;
}

PrimitiveAmalgam AmalgamatePrimitive(const PartialPlane& base,
                                     const PartialPlane& extension,
                                     const PartialPlane& host) {
  std::string why;
  auto in_extension = LocateByLabel(base, extension, &why);
  if (!in_extension) throw Error(ErrorKind::kNotPrimitive, why);
  if (extension.num_elements() != base.num_elements() + 1) {
    throw Error(ErrorKind::kNotPrimitive,
                "extension must add exactly one element");
  }
  std::set<ElementId> image;
  for (const auto& [from, to] : *in_extension) image.insert(to);
  PrimitiveAmalgam result;
  for (ElementId e : extension.Elements()) {
    if (!image.contains(e)) result.new_element = e;
  }
  const ElementId a = result.new_element;
  result.incidences = static_cast<int>(extension.Degree(a));
  if (result.incidences > 2) {
    throw Error(ErrorKind::kNotPrimitive,
                extension.Label(a) + " is incident with " +
                    std::to_string(result.incidences) + " base elements");
  }

  auto in_host = LocateByLabel(base, host, &why);
  if (!in_host) throw Error(ErrorKind::kNotHfOver, why);
  ElementSet host_base;
  for (const auto& [from, to] : *in_host) host_base.insert(to);
  if (!IsHfOver(host, host_base)) {
    throw Error(ErrorKind::kNotHfOver,
                "host is not HF-constructible over the base");
  }

  // extension element -> host element for everything in C.
  std::map<ElementId, ElementId> over_base;
  for (const auto& [c, e] : *in_extension) over_base.emplace(e, in_host->at(c));

  if (result.incidences == 2) {
    auto args = extension.NeighborIds(a);
    if (auto b = host.Common(over_base.at(args[0]), over_base.at(args[1]))) {
      std::map<ElementId, ElementId> embedding = over_base;
      embedding.emplace(a, *b);
      result.embedding = std::move(embedding);
      return result;
    }
  }

  AmalgamSpec spec;
  spec.left = host;
  spec.right = extension;
  for (const auto& [e, h] : over_base) spec.shared.emplace_back(h, e);
  result.amalgam = FreeAmalgam(spec);
  return result;
}

}  // namespace planes
