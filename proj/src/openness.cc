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

#include "planes/openness.h"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "planes/error.h"

namespace planes {
namespace {

void CheckSubset(const PartialPlane& plane, const ElementSet& subset) {
  for (ElementId e : subset) {
    if (!plane.Contains(e)) {
      throw Error(ErrorKind::kUnknownElement,
                  std::string(e.is_point() ? "point #" : "line #") +
                      std::to_string(e.index));
    }
  }
}

std::string Describe(const PartialPlane& plane, ElementId e) {
  return plane.Contains(e) ? plane.Label(e)
                           : (e.is_point() ? "point #" : "line #") +
                                 std::to_string(e.index);
}

// Shared peeling loop. `pick` chooses one element out of the ordered set of
// currently removable elements.
template <typename Pick>
PeelReport Peel(const PartialPlane& plane, const ElementSet& base, Pick pick) {
  CheckSubset(plane, base);
  const std::size_t n = plane.num_elements();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  std::vector<bool> in_base(n, false);
  for (ElementId e : base) in_base[plane.Slot(e)] = true;

  ElementSet removable;
  for (ElementId e : plane.Elements()) {
    const std::size_t s = plane.Slot(e);
    degree[s] = plane.Degree(e);
    if (!in_base[s] && degree[s] <= 2) removable.insert(e);
  }

  PeelReport report;
  while (!removable.empty()) {
    ElementId e = pick(removable);
    removable.erase(e);
    const std::size_t s = plane.Slot(e);
    removed[s] = true;
    report.order.push_back(e);
    report.degrees_at_removal.push_back(degree[s]);
    for (ElementId f : plane.NeighborIds(e)) {
      const std::size_t t = plane.Slot(f);
      if (removed[t]) continue;
      --degree[t];
      if (!in_base[t] && degree[t] <= 2) removable.insert(f);
    }
  }
  for (ElementId e : plane.Elements()) {
    const std::size_t s = plane.Slot(e);
    if (!in_base[s] && !removed[s]) report.residual_core.insert(e);
  }
  return report;
}

std::optional<HfOrdering> OrderingFromPeel(const PartialPlane& plane,
                                           const ElementSet& base,
                                           const PeelReport& report) {
  if (!report.empty_core()) return std::nullopt;
  HfOrdering ordering;
  ordering.base = base;
  ordering.sequence.assign(report.order.rbegin(), report.order.rend());
  ordering.t_types = TTypes(plane, base, ordering.sequence);
  return ordering;
}

}  // namespace

std::string PeelReport::Trace(const PartialPlane& plane) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out << "remove " << plane.Label(order[i]) << " (degree "
        << degrees_at_removal[i] << ")\n";
  }
  out << "core:";
  for (ElementId e : residual_core) out << ' ' << plane.Label(e);
  out << '\n';
  return out.str();
}

PeelReport ConfinedCore(const PartialPlane& plane, const ElementSet& base) {
  return Peel(plane, base,
              [](const ElementSet& removable) { return *removable.begin(); });
}

PeelReport RandomPeel(const PartialPlane& plane, const ElementSet& base,
                      std::mt19937_64& rng) {
  return Peel(plane, base, [&rng](const ElementSet& removable) {
    std::uniform_int_distribution<std::size_t> dist(0, removable.size() - 1);
    return *std::next(removable.begin(),
                      static_cast<std::ptrdiff_t>(dist(rng)));
  });
}

bool IsOpen(const PartialPlane& plane) {
  return ConfinedCore(plane).empty_core();
}

bool IsHfOver(const PartialPlane& plane, const ElementSet& base) {
  return ConfinedCore(plane, base).empty_core();
}

bool HfOrdering::is_f_ordering() const {
  return std::all_of(t_types.begin(), t_types.end(),
                     [](int t) { return t == 2; });
}

long long HfOrdering::Deficit() const {
  long long sum = 0;
  for (int t : t_types) sum += 2 - t;
  return sum;
}

std::vector<int> TTypes(const PartialPlane& plane, const ElementSet& base,
                        const std::vector<ElementId>& sequence) {
  std::vector<bool> seen(plane.num_elements(), false);
  for (ElementId e : base) seen[plane.Slot(e)] = true;
  std::vector<int> out;
  out.reserve(sequence.size());
  for (ElementId e : sequence) {
    int t = 0;
    for (ElementId f : plane.NeighborIds(e)) {
      if (seen[plane.Slot(f)]) ++t;
    }
    out.push_back(t);
    seen[plane.Slot(e)] = true;
  }
  return out;
}

std::optional<HfOrdering> ExtractHfOrdering(const PartialPlane& plane,
                                            const ElementSet& base) {
  return OrderingFromPeel(plane, base, ConfinedCore(plane, base));
}

std::optional<HfOrdering> SampleHfOrdering(const PartialPlane& plane,
                                           const ElementSet& base,
                                           std::mt19937_64& rng) {
  return OrderingFromPeel(plane, base, RandomPeel(plane, base, rng));
}

HfOrdering ValidateHfOrdering(const PartialPlane& plane, const ElementSet& base,
                              const std::vector<ElementId>& sequence) {
  CheckSubset(plane, base);
  std::vector<bool> covered(plane.num_elements(), false);
  for (ElementId e : base) covered[plane.Slot(e)] = true;
  for (ElementId e : sequence) {
    if (!plane.Contains(e)) {
      throw Error(ErrorKind::kNotPermutation,
                  "unknown element " + Describe(plane, e));
    }
    if (covered[plane.Slot(e)]) {
      throw Error(ErrorKind::kNotPermutation,
                  Describe(plane, e) + " repeated or in the base");
    }
    covered[plane.Slot(e)] = true;
  }
  if (sequence.size() + base.size() != plane.num_elements()) {
    for (ElementId e : plane.Elements()) {
      if (!covered[plane.Slot(e)]) {
        throw Error(ErrorKind::kNotPermutation,
                    "missing " + plane.Label(e));
      }
    }
  }
  HfOrdering ordering;
  ordering.base = base;
  ordering.sequence = sequence;
  ordering.t_types = TTypes(plane, base, sequence);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (ordering.t_types[i] > 2) {
      throw Error(ErrorKind::kHfViolation,
                  plane.Label(sequence[i]) + " has " +
                      std::to_string(ordering.t_types[i]) +
                      " earlier neighbours");
    }
  }
  return ordering;
}

long long RankClosedForm(const PartialPlane& plane) {
  return 2 * static_cast<long long>(plane.num_elements()) -
         static_cast<long long>(plane.num_incidences()) - 4;
}

long long Rank(const PartialPlane& plane) {
  auto ordering = ExtractHfOrdering(plane);
  if (!ordering) {
    throw Error(ErrorKind::kNotOpen, "plane has a nonempty confined core");
  }
  return ordering->Deficit() - 4;
}

std::vector<ElementId> HfDigraph::Predecessors(ElementId e) const {
  std::vector<ElementId> out;
  for (const auto& [from, to] : edges) {
    if (to == e) out.push_back(from);
  }
  return out;
}

std::vector<ElementId> HfDigraph::Successors(ElementId e) const {
  std::vector<ElementId> out;
  auto it = edges.lower_bound({e, ElementId{Sort::kPoint, 0}});
  for (; it != edges.end() && it->first == e; ++it) out.push_back(it->second);
  return out;
}

HfDigraph DigraphFromOrdering(const PartialPlane& plane,
                              const HfOrdering& ordering) {
  HfDigraph digraph{plane, ordering.base, {}};
  std::vector<bool> placed(plane.num_elements(), false);
  for (ElementId e : ordering.base) placed[plane.Slot(e)] = true;
  for (ElementId b : ordering.sequence) {
    for (ElementId a : plane.NeighborIds(b)) {
      if (placed[plane.Slot(a)]) digraph.edges.emplace(a, b);
    }
    placed[plane.Slot(b)] = true;
  }
  return digraph;
}

HfDigraph ValidateHfDigraph(const PartialPlane& plane, const ElementSet& base,
                            const std::set<Edge>& edges) {
  CheckSubset(plane, base);
  std::vector<std::size_t> in_degree(plane.num_elements(), 0);
  for (const auto& [from, to] : edges) {
    if (!plane.Contains(from) || !plane.Contains(to)) {
      throw Error(ErrorKind::kUnknownElement,
                  "edge endpoint " +
                      Describe(plane, plane.Contains(from) ? to : from));
    }
    if (from == to || edges.contains({to, from})) {
      throw Error(ErrorKind::kNotAntisymmetric,
                  plane.Label(from) + " <-> " + plane.Label(to));
    }
    if (base.contains(to)) {
      throw Error(ErrorKind::kEdgeIntoBase,
                  plane.Label(from) + " -> " + plane.Label(to));
    }
    if (!plane.Incident(from, to)) {
      throw Error(ErrorKind::kCoverageMismatch,
                  "edge " + plane.Label(from) + " -> " + plane.Label(to) +
                      " is not an incidence");
    }
    ++in_degree[plane.Slot(to)];
  }
  for (ElementId a : plane.Elements()) {
    if (base.contains(a)) continue;
    for (ElementId b : plane.NeighborIds(a)) {
      if (!edges.contains({a, b}) && !edges.contains({b, a})) {
        throw Error(ErrorKind::kCoverageMismatch,
                    "incidence " + plane.Label(a) + " - " + plane.Label(b) +
                        " has no edge");
      }
    }
  }
  for (ElementId e : plane.Elements()) {
    if (in_degree[plane.Slot(e)] > 2) {
      throw Error(ErrorKind::kInDegreeExceeded,
                  plane.Label(e) + " has in-degree " +
                      std::to_string(in_degree[plane.Slot(e)]));
    }
  }
  return HfDigraph{plane, base, edges};
}

CompatibleResult CompatibleOrdering(const HfDigraph& digraph) {
  const PartialPlane& plane = digraph.plane;
  const std::size_t n = plane.num_elements();
  std::vector<std::vector<ElementId>> preds(n);
  std::vector<std::vector<ElementId>> succs(n);
  std::vector<std::size_t> pending(n, 0);
  for (const auto& [from, to] : digraph.edges) {
    preds[plane.Slot(to)].push_back(from);
    succs[plane.Slot(from)].push_back(to);
    if (!digraph.base.contains(from)) ++pending[plane.Slot(to)];
  }

  // Kahn's algorithm; edges out of the base never constrain the order.
  ElementSet available;
  for (ElementId e : plane.Elements()) {
    if (!digraph.base.contains(e) && pending[plane.Slot(e)] == 0) {
      available.insert(e);
    }
  }
  std::vector<ElementId> sequence;
  std::vector<bool> done(n, false);
  while (!available.empty()) {
    ElementId e = *available.begin();
    available.erase(available.begin());
    done[plane.Slot(e)] = true;
    sequence.push_back(e);
    for (ElementId f : succs[plane.Slot(e)]) {
      if (--pending[plane.Slot(f)] == 0) available.insert(f);
    }
  }

  CompatibleResult result;
  if (sequence.size() + digraph.base.size() == n) {
    HfOrdering ordering;
    ordering.base = digraph.base;
    ordering.sequence = std::move(sequence);
    ordering.t_types = TTypes(plane, ordering.base, ordering.sequence);
    result.ordering = std::move(ordering);
    return result;
  }

  // Every stuck element has a stuck predecessor; walk backwards until an
  // element repeats.
  ElementId start{};
  for (ElementId e : plane.Elements()) {
    if (!digraph.base.contains(e) && !done[plane.Slot(e)]) {
      start = e;
      break;
    }
  }
  std::map<ElementId, std::size_t> position;
  std::vector<ElementId> walk;
  ElementId cur = start;
  while (!position.contains(cur)) {
    position[cur] = walk.size();
    walk.push_back(cur);
    ElementId next{};
    bool found = false;
    auto candidates = preds[plane.Slot(cur)];
    std::sort(candidates.begin(), candidates.end());
    for (ElementId p : candidates) {
      if (!digraph.base.contains(p) && !done[plane.Slot(p)]) {
        next = p;
        found = true;
        break;
      }
    }
    if (!found) break;
    cur = next;
  }
  std::vector<ElementId> backwards(
      walk.begin() + static_cast<std::ptrdiff_t>(position[cur]), walk.end());
  result.cycle.assign(backwards.rbegin(), backwards.rend());
  return result;
}

ElementSet ClClosure(const HfDigraph& digraph, const ElementSet& seed) {
  CheckSubset(digraph.plane, seed);
  std::map<ElementId, std::vector<ElementId>> preds;
  for (const auto& [from, to] : digraph.edges) preds[to].push_back(from);
  ElementSet closed = seed;
  std::deque<ElementId> queue(seed.begin(), seed.end());
  while (!queue.empty()) {
    ElementId e = queue.front();
    queue.pop_front();
    auto it = preds.find(e);
    if (it == preds.end()) continue;
    for (ElementId p : it->second) {
      if (closed.insert(p).second) queue.push_back(p);
    }
  }
  return closed;
}

std::optional<std::size_t> RDistance(const HfDigraph& digraph, ElementId from,
                                     ElementId to) {
  CheckSubset(digraph.plane, {from, to});
  if (from == to) return 0;
  std::map<ElementId, std::vector<ElementId>> succs;
  for (const auto& [a, b] : digraph.edges) succs[a].push_back(b);
  std::map<ElementId, std::size_t> dist{{from, 0}};
  std::deque<ElementId> queue{from};
  while (!queue.empty()) {
    ElementId e = queue.front();
    queue.pop_front();
    for (ElementId f : succs[e]) {
      if (dist.contains(f)) continue;
      dist[f] = dist[e] + 1;
      if (f == to) return dist[f];
      queue.push_back(f);
    }
  }
  return std::nullopt;
}

std::vector<ElementId> MoveToFront(const HfOrdering& ordering,
                                   const ElementSet& closed) {
  std::vector<ElementId> front;
  std::vector<ElementId> back;
  for (ElementId e : ordering.sequence) {
    (closed.contains(e) ? front : back).push_back(e);
  }
  front.insert(front.end(), back.begin(), back.end());
  return front;
}

}  // namespace planes
