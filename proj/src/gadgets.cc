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

#include "planes/gadgets.h"

#include <algorithm>
#include <random>

#include "planes/error.h"

namespace planes {
namespace {

std::array<std::array<bool, 16>, 13> MakePattern() {
  const std::vector<std::vector<int>> rows = {
      {4},                  // p'_0
      {5},                  // p'_1
      {6},                  // p'_2
      {7},                  // p'_3
      {4, 5, 6, 7, 14},     // a_1
      {0, 4, 8, 10, 13},    // b_0
      {1, 5, 8, 11, 12},    // b_1
      {2, 6, 9, 10, 12},    // b_2
      {3, 7, 9, 11, 13},    // b_3
      {8, 9, 14},           // c_0
      {10, 11, 15},         // c_1
      {12, 13, 15},         // c_2
      {14, 15},             // a_0
  };
  std::array<std::array<bool, 16>, 13> pattern{};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c : rows[r]) pattern[r][static_cast<std::size_t>(c)] = true;
  }
  return pattern;
}

void Certify(GadgetResult& result, std::string name, bool passed,
             std::string detail = {}) {
  result.certificates.push_back(
      {std::move(name), passed, std::move(detail)});
}

// Certificates shared by every gadget.
void CertifyCommon(GadgetResult& result) {
  Certify(result, "open", IsOpen(result.plane));
  bool valid = true;
  std::string detail;
  try {
    ValidateHfOrdering(result.plane, result.base, result.ordering.sequence);
  } catch (const Error& e) {
    valid = false;
    detail = e.what();
  }
  Certify(result, "hf_ordering", valid, detail);
}

}  // namespace

bool GadgetResult::AllCertified() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.passed; });
}

const std::array<std::array<bool, 16>, 13>& Figure1Pattern() {
  static const auto pattern = MakePattern();
  return pattern;
}

GadgetBlock AddGadgetBlock(PartialPlane& plane,
                           const std::array<ElementId, 4>& points,
                           const std::array<ElementId, 4>& lines,
                           std::optional<ElementId> anchor,
                           const std::string& suffix,
                           const std::string& anchor_label,
                           const std::string& out_label) {
  ElementSet distinct;
  for (ElementId p : points) {
    if (!plane.Contains(p) || !p.is_point()) {
      throw Error(ErrorKind::kBaseNotIndependent, "base point missing");
    }
    distinct.insert(p);
  }
  for (ElementId l : lines) {
    if (!plane.Contains(l) || !l.is_line()) {
      throw Error(ErrorKind::kBaseNotIndependent, "base line missing");
    }
    distinct.insert(l);
  }
  if (distinct.size() != 8) {
    throw Error(ErrorKind::kBaseNotIndependent, "base elements not distinct");
  }
  for (ElementId p : points) {
    for (ElementId l : lines) {
      if (plane.Incident(p, l)) {
        throw Error(ErrorKind::kBaseNotIndependent,
                    plane.Label(p) + " lies on " + plane.Label(l));
      }
    }
  }
  if (anchor) {
    if (!plane.Contains(*anchor) || !anchor->is_point()) {
      throw Error(ErrorKind::kBaseNotIndependent, "anchor must be a point");
    }
    for (ElementId l : lines) {
      if (plane.Incident(*anchor, l)) {
        throw Error(ErrorKind::kBaseNotIndependent,
                    "anchor lies on " + plane.Label(l));
      }
    }
  }

  GadgetBlock block;
  auto point = [&](const std::string& label) {
    ElementId e = plane.AddPoint(label);
    block.added.push_back(e);
    return e;
  };
  auto line = [&](const std::string& label) {
    ElementId e = plane.AddLine(label);
    block.added.push_back(e);
    return e;
  };
  auto join = [&](const std::string& label, ElementId a, ElementId b) {
    ElementId e = line(label);
    plane.AddIncidence(a, e);
    plane.AddIncidence(b, e);
    return e;
  };
  auto meet = [&](const std::string& label, ElementId a, ElementId b) {
    ElementId e = point(label);
    plane.AddIncidence(e, a);
    plane.AddIncidence(e, b);
    return e;
  };
  auto name = [&](const std::string& stem) { return stem + suffix; };

  const ElementId a1 = anchor ? *anchor : point(anchor_label);
  std::array<ElementId, 16> l{};
  std::copy(lines.begin(), lines.end(), l.begin());
  std::array<ElementId, 4> b{};
  for (int j = 0; j < 4; ++j) {
    l[4 + j] = join(name("l'_" + std::to_string(4 + j)), points[j], a1);
    b[j] = meet(name("b_" + std::to_string(j)), l[j], l[4 + j]);
  }
  l[8] = join(name("l'_8"), b[0], b[1]);
  l[9] = join(name("l'_9"), b[2], b[3]);
  const ElementId c0 = meet(name("c_0"), l[8], l[9]);
  l[10] = join(name("l'_10"), b[0], b[2]);
  l[11] = join(name("l'_11"), b[1], b[3]);
  const ElementId c1 = meet(name("c_1"), l[10], l[11]);
  l[12] = join(name("l'_12"), b[1], b[2]);
  l[13] = join(name("l'_13"), b[0], b[3]);
  const ElementId c2 = meet(name("c_2"), l[12], l[13]);
  l[14] = join(name("l'_14"), a1, c0);
  l[15] = join(name("l'_15"), c1, c2);
  const ElementId a0 = meet(out_label, l[14], l[15]);

  block.anchor = a1;
  block.out = a0;
  block.rows = {points[0], points[1], points[2], points[3], a1,
                b[0],      b[1],      b[2],      b[3],      c0,
                c1,        c2,        a0};
  block.columns.assign(l.begin(), l.end());
  return block;
}

GadgetResult BuildSuperstabilityGadget() {
  GadgetResult result;
  std::array<ElementId, 4> points{};
  std::array<ElementId, 4> lines{};
  for (int j = 0; j < 4; ++j) {
    points[j] = result.plane.AddPoint("p'_" + std::to_string(j));
  }
  for (int j = 0; j < 4; ++j) {
    lines[j] = result.plane.AddLine("l'_" + std::to_string(j));
  }
  result.base.insert(points.begin(), points.end());
  result.base.insert(lines.begin(), lines.end());
  GadgetBlock block = AddGadgetBlock(result.plane, points, lines, std::nullopt,
                                     "", "a_1", "a_0");
  result.ordering =
      ValidateHfOrdering(result.plane, result.base, block.added);
  result.last = block.out;
  result.table_rows = block.rows;
  result.table_columns = block.columns;
  result.table = RenderIncidenceTable(result.plane, block.rows, block.columns);
  result.constants = result.base;
  result.constants.insert(block.out);

  CertifyCommon(result);
  bool figure = true;
  const auto& pattern = Figure1Pattern();
  for (std::size_t r = 0; r < 13; ++r) {
    for (std::size_t c = 0; c < 16; ++c) {
      if (result.plane.Incident(block.rows[r], block.columns[c]) !=
          pattern[r][c]) {
        figure = false;
      }
    }
  }
  Certify(result, "figure1", figure && result.plane.num_incidences() == 40);
  Certify(result, "forced_last", VerifyForcedLast(result));
  const long long rank = RankClosedForm(result.plane);
  Certify(result, "rank", rank == 14 && Rank(result.plane) == rank,
          std::to_string(rank));
  return result;
}

bool VerifyForcedLast(const PartialPlane& plane, const ElementSet& base,
                      ElementId designated, std::size_t samples,
                      std::uint64_t seed) {
  if (!plane.Contains(designated) || base.contains(designated)) return false;
  if (plane.num_elements() < base.size() + 2) return false;
  for (ElementId e : plane.Elements()) {
    if (base.contains(e) || e == designated) continue;
    if (plane.Degree(e) < 3) return false;
  }
  if (!IsHfOver(plane, base)) return false;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    auto ordering = SampleHfOrdering(plane, base, rng);
    if (!ordering || ordering->sequence.back() != designated) return false;
  }
  return true;
}

bool VerifyForcedLast(const GadgetResult& result) {
  return VerifyForcedLast(result.plane, result.base, result.last);
}

GadgetResult BuildCodedChain(const CodedChainSpec& spec) {
  if (spec.eta.empty() ||
      spec.eta.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorKind::kBaseNotIndependent,
                "eta must be a nonempty binary string");
  }
  GadgetResult result;
  std::array<std::array<ElementId, 4>, 2> points{};
  std::array<std::array<ElementId, 4>, 2> lines{};
  for (int z = 0; z < 2; ++z) {
    for (int j = 0; j < 4; ++j) {
      points[z][j] = result.plane.AddPoint("p^" + std::to_string(z) + "_" +
                                           std::to_string(j));
    }
  }
  for (int z = 0; z < 2; ++z) {
    for (int j = 0; j < 4; ++j) {
      lines[z][j] = result.plane.AddLine("l^" + std::to_string(z) + "_" +
                                         std::to_string(j));
    }
  }
  for (int z = 0; z < 2; ++z) {
    result.base.insert(points[z].begin(), points[z].end());
    result.base.insert(lines[z].begin(), lines[z].end());
  }

  const std::size_t n = spec.eta.size();
  std::vector<ElementId> sequence;
  ElementId carried = result.plane.AddPoint("a_" + std::to_string(n));
  sequence.push_back(carried);
  for (std::size_t i = n; i-- > 0;) {
    const int z = spec.eta[i] - '0';
    GadgetBlock block = AddGadgetBlock(
        result.plane, points[z], lines[z], carried,
        "[" + std::to_string(i) + "]", "", "a_" + std::to_string(i));
    sequence.insert(sequence.end(), block.added.begin(), block.added.end());
    carried = block.out;
  }
  result.ordering = ValidateHfOrdering(result.plane, result.base, sequence);
  result.last = carried;
  result.table_rows = result.plane.Points();
  result.table_columns = result.plane.Lines();
  result.table = RenderIncidenceTable(result.plane);
  result.constants = result.base;
  result.constants.insert(carried);

  CertifyCommon(result);
  Certify(result, "forced_last", VerifyForcedLast(result));
  Certify(result, "size",
          result.plane.num_elements() == 16 + 20 * n + 1,
          std::to_string(result.plane.num_elements() - 16) + " new elements");
  return result;
}

GadgetResult BuildCGadget(int n, std::size_t budget) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidDepth,
                "c(n) needs n >= 1, got " + std::to_string(n));
  }
  // 4^n base points plus 4^n - 1 halving elements.
  if (2 * n + 1 >= 63 || (std::size_t{1} << (2 * n + 1)) - 1 > budget) {
    throw Error(ErrorKind::kBudgetExceeded,
                "c(" + std::to_string(n) + ") exceeds the element ceiling");
  }
  GadgetResult result;
  const std::size_t width = std::size_t{1} << (2 * n);
  std::vector<ElementId> level;
  for (std::size_t i = 0; i < width; ++i) {
    level.push_back(result.plane.AddPoint("x_" + std::to_string(i)));
  }
  result.base.insert(level.begin(), level.end());

  std::vector<ElementId> sequence;
  for (int depth = 1; depth <= 2 * n; ++depth) {
    std::vector<ElementId> next;
    const bool adds_lines = level.front().is_point();
    for (std::size_t j = 0; j + 1 < level.size(); j += 2) {
      std::string label;
      if (level.size() == 2) {
        label = "c(" + std::to_string(n) + ")";
      } else {
        label = (adds_lines ? "m" : "y") + std::to_string(depth) + "_" +
                std::to_string(j / 2);
      }
      ElementId e = adds_lines ? result.plane.AddLine(label)
                               : result.plane.AddPoint(label);
      result.plane.AddIncidence(e, level[j]);
      result.plane.AddIncidence(e, level[j + 1]);
      next.push_back(e);
      sequence.push_back(e);
    }
    level = std::move(next);
  }
  result.ordering = ValidateHfOrdering(result.plane, result.base, sequence);
  result.last = level.front();
  result.table_rows = result.plane.Points();
  result.table_columns = result.plane.Lines();
  result.table = RenderIncidenceTable(result.plane);
  result.constants = result.base;

  CertifyCommon(result);
  Certify(result, "f_ordering", result.ordering.is_f_ordering());
  HfDigraph digraph = DigraphFromOrdering(result.plane, result.ordering);
  bool distances = true;
  for (ElementId x : result.base) {
    auto d = RDistance(digraph, x, result.last);
    if (!d || *d != static_cast<std::size_t>(2 * n)) distances = false;
  }
  Certify(result, "distance", distances, "2n = " + std::to_string(2 * n));
  return result;
}

HfDigraph BuildTreeDigraph(int depth, std::size_t budget) {
  if (depth < 1) {
    throw Error(ErrorKind::kInvalidDepth,
                "tree depth must be >= 1, got " + std::to_string(depth));
  }
  if (depth >= 62 || (std::size_t{1} << (depth + 1)) - 1 > budget) {
    throw Error(ErrorKind::kBudgetExceeded,
                "tree of depth " + std::to_string(depth) +
                    " exceeds the element ceiling");
  }
  HfDigraph digraph;
  std::vector<std::pair<std::string, ElementId>> level{
      {"", digraph.plane.AddPoint("z")}};
  for (int d = 1; d <= depth; ++d) {
    std::vector<std::pair<std::string, ElementId>> next;
    const Sort sort = d % 2 == 0 ? Sort::kPoint : Sort::kLine;
    for (const auto& [eta, parent] : level) {
      for (char bit : {'0', '1'}) {
        std::string child_eta = eta + bit;
        ElementId child = digraph.plane.Add(sort, "z" + child_eta);
        digraph.plane.AddIncidence(child, parent);
        digraph.edges.emplace(child, parent);
        next.emplace_back(std::move(child_eta), child);
      }
    }
    level = std::move(next);
  }
  return ValidateHfDigraph(digraph.plane, digraph.base, digraph.edges);
}

}  // namespace planes
