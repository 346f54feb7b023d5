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

#include "planes/isomorphism.h"

#include <algorithm>
#include <tuple>

#include "planes/error.h"

namespace planes {
namespace {

// Disjoint union of the two Levi graphs; vertices [0, left) come from the
// first plane, [left, left + right) from the second.
class JointGraph {
 public:
  JointGraph(const PartialPlane& a, const PartialPlane& b)
      : a_(a), b_(b), left_(a.num_elements()) {
    adj_.resize(a.num_elements() + b.num_elements());
    for (ElementId e : a.Elements()) {
      for (ElementId f : a.NeighborIds(e)) {
        adj_[a.Slot(e)].push_back(static_cast<int>(a.Slot(f)));
      }
    }
    for (ElementId e : b.Elements()) {
      for (ElementId f : b.NeighborIds(e)) {
        adj_[left_ + b.Slot(e)].push_back(
            static_cast<int>(left_ + b.Slot(f)));
      }
    }
  }

  std::size_t size() const { return adj_.size(); }
  std::size_t left() const { return left_; }
  bool is_left(std::size_t v) const { return v < left_; }

  ElementId Element(std::size_t v) const {
    return v < left_ ? a_.AtSlot(v) : b_.AtSlot(v - left_);
  }

  // Iterated degree refinement until the number of classes is stable.
  // Class ids are assigned from sorted signatures so that they mean the
  // same thing on both sides.
  std::vector<int> Refine(std::vector<int> colors) const {
    std::size_t classes = CountClasses(colors);
    while (true) {
      std::vector<std::pair<int, std::vector<int>>> sigs(size());
      for (std::size_t v = 0; v < size(); ++v) {
        sigs[v].first = colors[v];
        for (int w : adj_[v]) sigs[v].second.push_back(colors[w]);
        std::sort(sigs[v].second.begin(), sigs[v].second.end());
      }
      std::vector<std::pair<int, std::vector<int>>> distinct = sigs;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()),
                     distinct.end());
      std::vector<int> next(size());
      for (std::size_t v = 0; v < size(); ++v) {
        next[v] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), sigs[v]) -
            distinct.begin());
      }
      const std::size_t next_classes = distinct.size();
      colors = std::move(next);
      if (next_classes == classes) return colors;
      classes = next_classes;
    }
  }

  // Every class has equally many members on both sides.
  bool Balanced(const std::vector<int>& colors) const {
    std::vector<int> balance(size() + 1, 0);
    for (std::size_t v = 0; v < size(); ++v) {
      balance[colors[v]] += is_left(v) ? 1 : -1;
    }
    return std::all_of(balance.begin(), balance.end(),
                       [](int x) { return x == 0; });
  }

 private:
  static std::size_t CountClasses(const std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(
        std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  const PartialPlane& a_;
  const PartialPlane& b_;
  std::size_t left_;
  std::vector<std::vector<int>> adj_;
};

class Searcher {
 public:
  Searcher(const PartialPlane& a, const PartialPlane& b, const PinMap& pinned)
      : a_(a), b_(b), pinned_(pinned), graph_(a, b) {}

  std::optional<IsoMap> Run(std::vector<int> colors) {
    colors = graph_.Refine(std::move(colors));
    if (!graph_.Balanced(colors)) return std::nullopt;
    return Descend(colors);
  }

 private:
  std::optional<IsoMap> Descend(const std::vector<int>& colors) {
    // Smallest class with more than one left member.
    std::vector<int> count(graph_.size() + 1, 0);
    for (std::size_t v = 0; v < graph_.left(); ++v) ++count[colors[v]];
    int target = -1;
    for (std::size_t v = 0; v < graph_.left(); ++v) {
      int c = colors[v];
      if (count[c] > 1 && (target < 0 || count[c] < count[target])) {
        target = c;
      }
    }
    if (target < 0) return Extract(colors);

    std::size_t v = 0;
    while (colors[v] != target) ++v;
    const int fresh = *std::max_element(colors.begin(), colors.end()) + 1;
    for (std::size_t w = graph_.left(); w < graph_.size(); ++w) {
      if (colors[w] != target) continue;
      std::vector<int> next = colors;
      next[v] = fresh;
      next[w] = fresh;
      next = graph_.Refine(std::move(next));
      if (!graph_.Balanced(next)) continue;
      if (auto found = Descend(next)) return found;
    }
    return std::nullopt;
  }

  std::optional<IsoMap> Extract(const std::vector<int>& colors) {
    std::vector<std::size_t> right_of(graph_.size() + 1, 0);
    for (std::size_t w = graph_.left(); w < graph_.size(); ++w) {
      right_of[colors[w]] = w;
    }
    IsoMap iso;
    iso.pinned = pinned_;
    for (std::size_t v = 0; v < graph_.left(); ++v) {
      iso.forward.emplace(graph_.Element(v),
                          graph_.Element(right_of[colors[v]]));
    }
    if (!IsIsomorphism(a_, b_, iso.forward, pinned_)) return std::nullopt;
    return iso;
  }

  const PartialPlane& a_;
  const PartialPlane& b_;
  const PinMap& pinned_;
  JointGraph graph_;
};

}  // namespace

bool IsIsomorphism(const PartialPlane& a, const PartialPlane& b,
                   const std::map<ElementId, ElementId>& map,
                   const PinMap& pinned) {
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) {
    return false;
  }
  if (map.size() != a.num_elements()) return false;
  std::set<ElementId> image;
  for (const auto& [from, to] : map) {
    if (!a.Contains(from) || !b.Contains(to) || from.sort != to.sort) {
      return false;
    }
    image.insert(to);
  }
  if (image.size() != map.size()) return false;
  for (const auto& [from, to] : pinned) {
    auto it = map.find(from);
    if (it == map.end() || it->second != to) return false;
  }
  if (a.num_incidences() != b.num_incidences()) return false;
  for (const auto& [p, l] : a.Incidences()) {
    if (!b.Incident(map.at(p), map.at(l))) return false;
  }
  return true;
}

std::optional<IsoMap> IsomorphismSearch(const PartialPlane& a,
                                        const PartialPlane& b,
                                        const PinMap& pinned,
                                        IsoOptions options) {
  for (const PartialPlane* p : {&a, &b}) {
    if (p->num_points() > options.max_per_sort ||
        p->num_lines() > options.max_per_sort) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "isomorphism search limited to " +
                      std::to_string(options.max_per_sort) +
                      " elements per sort");
    }
  }
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines() ||
      a.num_incidences() != b.num_incidences()) {
    return std::nullopt;
  }
  std::set<ElementId> pinned_targets;
  for (const auto& [from, to] : pinned) {
    if (!a.Contains(from) || !b.Contains(to) || from.sort != to.sort) {
      return std::nullopt;
    }
    pinned_targets.insert(to);
  }
  if (pinned_targets.size() != pinned.size()) return std::nullopt;

  // Initial colour: (sort, degree, pin rank), with pin rank 0 for free
  // elements and i + 1 for the i-th pinned pair on both sides.
  using Key = std::tuple<int, std::size_t, std::size_t>;
  std::vector<Key> keys;
  std::map<ElementId, std::size_t> pin_rank_a;
  std::map<ElementId, std::size_t> pin_rank_b;
  std::size_t rank = 0;
  for (const auto& [from, to] : pinned) {
    ++rank;
    pin_rank_a[from] = rank;
    pin_rank_b[to] = rank;
  }
  auto key_of = [](const PartialPlane& p,
                   const std::map<ElementId, std::size_t>& pins, ElementId e) {
    auto it = pins.find(e);
    return Key{static_cast<int>(e.sort), p.Degree(e),
               it == pins.end() ? 0 : it->second};
  };
  for (ElementId e : a.Elements()) keys.push_back(key_of(a, pin_rank_a, e));
  for (ElementId e : b.Elements()) keys.push_back(key_of(b, pin_rank_b, e));
  std::vector<Key> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::vector<int> colors;
  colors.reserve(keys.size());
  for (const Key& k : keys) {
    colors.push_back(static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), k) -
        distinct.begin()));
  }
  return Searcher(a, b, pinned).Run(std::move(colors));
}

PinMap PinsFromLabels(const PartialPlane& a, const PartialPlane& b,
                      const std::map<std::string, std::string>& labels) {
  PinMap out;
  for (const auto& [from, to] : labels) out.emplace(a.At(from), b.At(to));
  return out;
}

}  // namespace planes
