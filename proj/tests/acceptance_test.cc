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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.h"
#include "planes/cli.h"
#include "planes/error.h"
#include "planes/free_completion.h"
#include "planes/gadgets.h"
#include "planes/incidence.h"
#include "planes/isomorphism.h"
#include "planes/openness.h"

namespace planes {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
  void Check(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Maps elements of `from` to elements of `to` carrying the same label.
ElementSet ByLabel(const PartialPlane& from, const ElementSet& set,
                   const PartialPlane& to) {
  ElementSet out;
  for (ElementId e : set) out.insert(to.At(from.Label(e)));
  return out;
}

// Total, injective, sort-preserving, and incidence-preserving both ways.
bool IsEmbedding(const PartialPlane& from, const PartialPlane& to,
                 const std::map<ElementId, ElementId>& map) {
  ElementSet image;
  for (ElementId e : from.Elements()) {
    auto it = map.find(e);
    if (it == map.end() || it->second.sort != e.sort || !to.Contains(it->second))
      return false;
    image.insert(it->second);
  }
  if (image.size() != from.num_elements()) return false;
  for (ElementId p : from.Points()) {
    for (ElementId l : from.Lines()) {
      if (from.Incident(p, l) != to.Incident(map.at(p), map.at(l))) return false;
    }
  }
  return true;
}

ElementSet AllOf(const PartialPlane& p) {
  auto all = p.Elements();
  return {all.begin(), all.end()};
}

Outcome FigureOne() {
  Outcome o;
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli({"gadget", "superstab", "--emit-table"}, in, out, err);
  const std::string golden =
      ReadFile(std::string(PLANES_FIXTURE_DIR) + "/figure1.txt");
  o.Check(code == kExitOk, "exit code " + std::to_string(code));
  o.Check(!golden.empty() && out.str() == golden, "table differs from golden");
  o.Check(std::count(golden.begin(), golden.end(), '\n') == 14,
          "golden is not header + 13 rows");
  std::size_t marks = 0;
  for (std::size_t at = golden.find("| 1 "); at != std::string::npos;
       at = golden.find("| 1 ", at + 1)) {
    ++marks;
  }
  o.Check(marks == 40, "golden holds " + std::to_string(marks) + " marks");
  const auto& pattern = Figure1Pattern();
  int ones = 0;
  for (const auto& row : pattern) ones += std::count(row.begin(), row.end(), true);
  o.Check(pattern.size() == 13 && pattern[0].size() == 16 && ones == 40,
          "pattern shape");
  o.detail = o.passed ? "13x16, 40 marks, byte-identical" : o.detail;
  return o;
}

Outcome ForcedLast() {
  Outcome o;
  GadgetResult g = BuildSuperstabilityGadget();
  testing::OrderingCensus census = testing::EnumerateHfOrderings(g.plane, g.base);
  o.Check(census.count > 0, "no orderings");
  o.Check(census.last_slots == std::set<std::size_t>{g.plane.Slot(g.last)},
          std::to_string(census.last_slots.size()) + " distinct last elements");
  o.Check(g.plane.Label(g.last) == "a_0", "designated element is not a_0");
  o.Check(VerifyForcedLast(g), "degree criterion disagrees");
  if (o.passed) {
    o.detail = std::to_string(static_cast<unsigned long long>(census.count)) +
               " orderings over " + std::to_string(census.reachable_states) +
               " reachable states, all end with a_0";
  }
  return o;
}

Outcome OpennessOracle() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> density(0.3, 0.9);
  int closed = 0;
  int relative_closed = 0;
  for (int i = 0; i < 1000; ++i) {
    PartialPlane p = testing::RandomPartialPlane(rng, 12, density(rng));
    const bool brute = testing::BruteConfinedSubset(p) == 0;
    const bool peel = IsOpen(p);
    o.Check(brute == peel, "disagreement on plane " + std::to_string(i));
    closed += !brute;
    // The same plane over a random base, where confinement is reachable at
    // this size.
    ElementSet base;
    std::bernoulli_distribution coin(0.4);
    for (ElementId e : p.Elements()) {
      if (coin(rng)) base.insert(e);
    }
    const bool brute_rel = testing::BruteConfinedSubset(p, base) == 0;
    o.Check(brute_rel == ConfinedCore(p, base).empty_core(),
            "relative disagreement on plane " + std::to_string(i));
    relative_closed += !brute_rel;
  }
  if (o.passed) {
    o.detail = "1000/1000 agree (" + std::to_string(closed) +
               " not open); relative: 1000/1000 agree (" +
               std::to_string(relative_closed) + " not HF over base)";
  }
  return o;
}

Outcome RankInvariants() {
  Outcome o;
  for (int n = 4; n <= 8; ++n) {
    PartialPlane p = PiBase(n);
    o.Check(Rank(p) == n, "rank(pi_base(" + std::to_string(n) + "))");
    for (int k = 0; k <= 2; ++k) {
      try {
        o.Check(Rank(FreeComplete(p, k).plane()) == n,
                "rank changed by completion of pi_base(" + std::to_string(n) +
                    ")");
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kBudgetExceeded) throw;
      }
    }
  }
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    PartialPlane p = testing::RandomOpenPlane(rng, 0, 24);
    auto a = SampleHfOrdering(p, {}, rng);
    auto b = SampleHfOrdering(p, {}, rng);
    o.Check(a && b, "sampling failed on an open plane");
    if (!a || !b) continue;
    ValidateHfOrdering(p, {}, a->sequence);
    ValidateHfOrdering(p, {}, b->sequence);
    o.Check(a->Deficit() == b->Deficit(), "orderings disagree on sum");
    o.Check(a->Deficit() - 4 == RankClosedForm(p), "closed form disagrees");
    const long long r = Rank(p);
    for (int k = 1; k <= 2; ++k) {
      try {
        o.Check(Rank(FreeComplete(p, k, 20000).plane()) == r,
                "rank changed by completion");
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kBudgetExceeded) throw;
      }
    }
  }
  if (o.passed) o.detail = "pi_base 4..8, stages 0..2, 300 random planes";
  return o;
}

Outcome CompletionCounts() {
  Outcome o;
  PartialPlane base = PiBase(4);
  StagedPlane s1 = FreeComplete(base, 1);
  o.Check(s1.layers().size() == 1 && s1.layers()[0].size() == 5 &&
              s1.layers()[0][0].is_line() &&
              s1.plane().num_lines() == base.num_lines() + 5 &&
              s1.plane().num_points() == base.num_points(),
          "stage 1 does not add exactly 5 lines");
  StagedPlane s2 = FreeComplete(base, 2);
  o.Check(s2.plane().num_points() == 7 && s2.plane().num_lines() == 6,
          "stage 2 is " + std::to_string(s2.plane().num_points()) +
              " points, " + std::to_string(s2.plane().num_lines()) + " lines");
  if (o.passed) o.detail = "stage 1: +5 lines; stage 2: 7 points, 6 lines";
  return o;
}

Outcome CGadgetDistances() {
  Outcome o;
  for (int n = 1; n <= 2; ++n) {
    GadgetResult g = BuildCGadget(n);
    HfDigraph d = DigraphFromOrdering(g.plane, g.ordering);
    o.Check(g.base.size() == (std::size_t{1} << (2 * n)), "base size");
    for (ElementId x : g.base) {
      auto dist = RDistance(d, x, g.last);
      o.Check(dist && *dist == static_cast<std::size_t>(2 * n),
              "d(" + g.plane.Label(x) + ", c(" + std::to_string(n) + "))");
    }
  }
  if (o.passed) o.detail = "n=1: 4 points at d=2; n=2: 16 points at d=4";
  return o;
}

Outcome CodedChains() {
  Outcome o;
  const std::vector<std::string> codes{"00", "01", "10", "11"};
  std::vector<GadgetResult> chains;
  for (const auto& c : codes) chains.push_back(BuildCodedChain({c}));
  int none = 0;
  int identity = 0;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = 0; j < codes.size(); ++j) {
      const GadgetResult& a = chains[i];
      const GadgetResult& b = chains[j];
      PinMap pins;
      for (ElementId e : a.constants) pins[e] = b.plane.At(a.plane.Label(e));
      auto iso = IsomorphismSearch(a.plane, b.plane, pins);
      if (i == j) {
        bool is_identity = iso.has_value();
        if (iso) {
          for (const auto& [x, y] : iso->forward) is_identity &= x == y;
        }
        o.Check(is_identity, "no identity for " + codes[i]);
        identity += is_identity;
      } else {
        o.Check(!iso.has_value(), codes[i] + " ~ " + codes[j]);
        none += !iso.has_value();
      }
    }
  }
  if (o.passed) {
    o.detail = std::to_string(none) + " distinct pairs: none; " +
               std::to_string(identity) + " equal pairs: identity";
  }
  return o;
}

Outcome Duality() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    PartialPlane p = testing::RandomOpenPlane(rng, 0, 30);
    PartialPlane d = Dual(p);
    o.Check(IsOpen(p) && IsOpen(d), "dual lost openness");
    o.Check(Dual(d) == p, "dual is not an involution");
    auto ord = SampleHfOrdering(p, {}, rng);
    if (!ord) {
      o.Check(false, "no ordering");
      continue;
    }
    std::vector<ElementId> seq;
    for (ElementId e : ord->sequence) seq.push_back(DualId(e));
    try {
      HfOrdering dual_ord = ValidateHfOrdering(d, {}, seq);
      o.Check(dual_ord.t_types == ord->t_types, "t-types changed");
    } catch (const Error& e) {
      o.Check(false, std::string("ordering rejected on dual: ") + e.what());
    }
  }
  if (o.passed) o.detail = "500/500";
  return o;
}

// Adds `count` random HF one-point extensions to `plane`.
void ExtendHf(PartialPlane& plane, std::size_t count, const std::string& tag,
              std::mt19937_64& rng) {
  std::bernoulli_distribution is_point(0.5);
  std::uniform_int_distribution<int> links(0, 2);
  for (std::size_t i = 0; i < count; ++i) {
    ElementId e = plane.Add(is_point(rng) ? Sort::kPoint : Sort::kLine,
                            tag + std::to_string(i));
    const std::size_t others =
        e.is_point() ? plane.num_lines() : plane.num_points();
    if (others == 0) continue;
    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(others - 1));
    const int k = links(rng);
    for (int j = 0; j < k; ++j) {
      try {
        plane.AddIncidence(e, ElementId{Other(e.sort), pick(rng)});
      } catch (const Error&) {
      }
    }
  }
}

Outcome AmalgamationClass() {
  Outcome o;
  std::mt19937_64 rng(9);
  int cases[3] = {0, 0, 0};
  int embeddings = 0;
  int instances = 0;
  while (instances < 200) {
    PartialPlane c = testing::RandomOpenPlane(rng, 1, 7);
    // A = C plus one element with up to two incidences into C.
    PartialPlane a = c;
    std::bernoulli_distribution is_point(0.5);
    ElementId x = a.Add(is_point(rng) ? Sort::kPoint : Sort::kLine, "new");
    std::vector<ElementId> targets =
        x.is_point() ? c.Lines() : c.Points();
    std::shuffle(targets.begin(), targets.end(), rng);
    std::uniform_int_distribution<int> links(0, 2);
    const int want = std::min<int>(links(rng), targets.size());
    int placed = 0;
    for (std::size_t j = 0; j < targets.size() && placed < want; ++j) {
      try {
        a.AddIncidence(x, targets[j]);
        std::swap(targets[placed++], targets[j]);
      } catch (const Error&) {
      }
    }
    if (placed != want) continue;
    // B = C plus HF one-point extensions; sometimes it already holds the
    // join or meet that A adds.
    PartialPlane b = c;
    std::bernoulli_distribution preload(0.5);
    if (want == 2 && preload(rng) && !c.Common(targets[0], targets[1])) {
      ElementId y = b.Add(x.sort, "host");
      b.AddIncidence(y, targets[0]);
      b.AddIncidence(y, targets[1]);
    }
    std::uniform_int_distribution<std::size_t> extra(0, 19 - a.num_elements());
    ExtendHf(b, std::min<std::size_t>(extra(rng), 20 - b.num_elements()), "b",
             rng);
    if (a.num_elements() > 20 || b.num_elements() > 20) continue;
    const ElementSet c_in_a = ByLabel(c, AllOf(c), a);
    const ElementSet c_in_b = ByLabel(c, AllOf(c), b);
    if (!IsHfOver(b, c_in_b) || !IsOpen(a) || !IsOpen(b)) continue;
    ++instances;

    // Class axioms on C, A and B.
    for (const PartialPlane* p : {&c, &a, &b}) {
      o.Check(IsHfOver(*p, AllOf(*p)), "reflexivity");
      o.Check(IsHfOver(*p, {}) == IsOpen(*p), "empty-set minimality");
      o.Check(IsHfOver(*p, {}), "empty set not <= open plane");
    }
    o.Check(IsHfOver(a, c_in_a), "C not <= A");
    {
      // Intersection: C <= B and S a subset of B give C n S <= S.
      ElementSet s;
      std::bernoulli_distribution coin(0.6);
      for (ElementId e : b.Elements()) {
        if (coin(rng)) s.insert(e);
      }
      PartialPlane sub = InducedSubconfiguration(b, s);
      ElementSet meet;
      for (ElementId e : c_in_b) {
        if (s.contains(e)) meet.insert(sub.At(b.Label(e)));
      }
      o.Check(IsHfOver(sub, meet), "intersection axiom");
    }

    PrimitiveAmalgam r = AmalgamatePrimitive(c, a, b);
    o.Check(r.incidences == want, "case analysis: wrong incidence count");
    ++cases[r.incidences];
    const bool has_common =
        want == 2 && b.Common(b.At(c.Label(targets[0])),
                              b.At(c.Label(targets[1])))
                         .has_value();
    o.Check(r.embedding.has_value() == has_common,
            "case analysis: embedding iff the element already exists");
    o.Check(r.embedding.has_value() != r.amalgam.has_value(),
            "exactly one outcome");
    if (r.embedding) {
      ++embeddings;
      o.Check(IsEmbedding(a, b, *r.embedding),
              "embedding does not preserve incidence");
      for (ElementId e : c_in_a) {
        o.Check(b.Label(r.embedding->at(e)) == a.Label(e),
                "embedding moves C");
      }
    }
    if (r.amalgam) {
      const PartialPlane& m = r.amalgam->plane;
      o.Check(m.num_elements() == b.num_elements() + 1, "amalgam size");
      o.Check(FindAxiomViolation(m) == std::nullopt, "amalgam axioms");
      o.Check(IsOpen(m), "amalgam not open");
      ElementSet b_image;
      for (const auto& [k, v] : r.amalgam->from_left) b_image.insert(v);
      ElementSet c_image;
      for (ElementId e : c_in_b) c_image.insert(r.amalgam->from_left.at(e));
      o.Check(IsHfOver(m, b_image), "B not <= amalgam");
      // Transitivity: C <= B <= amalgam.
      o.Check(IsHfOver(m, c_image), "transitivity");
    }
  }
  if (o.passed) {
    o.detail = "200/200 (cases 0/1/2: " + std::to_string(cases[0]) + "/" +
               std::to_string(cases[1]) + "/" + std::to_string(cases[2]) +
               ", embeddings " + std::to_string(embeddings) + ")";
  }
  return o;
}

Outcome ClosureLaws() {
  Outcome o;
  std::mt19937_64 rng(10);
  for (int i = 0; i < 500; ++i) {
    PartialPlane p = testing::RandomOpenPlane(rng, 1, 24);
    ElementSet base;
    if (i % 2 == 1) {
      // A base that is an initial segment of some ordering.
      auto ord = SampleHfOrdering(p, {}, rng);
      std::uniform_int_distribution<std::size_t> cut(0, ord->sequence.size());
      base.insert(ord->sequence.begin(), ord->sequence.begin() + cut(rng));
    }
    auto ordering = SampleHfOrdering(p, base, rng);
    if (!ordering) {
      o.Check(false, "no ordering over an initial segment");
      continue;
    }
    HfDigraph g = DigraphFromOrdering(p, *ordering);
    std::bernoulli_distribution coin(0.25);
    ElementSet x;
    ElementSet y;
    for (ElementId e : p.Elements()) {
      if (coin(rng)) x.insert(e);
      if (coin(rng)) y.insert(e);
    }
    y.insert(x.begin(), x.end());
    const ElementSet cx = ClClosure(g, x);
    const ElementSet cy = ClClosure(g, y);
    o.Check(std::includes(cx.begin(), cx.end(), x.begin(), x.end()),
            "extensivity");
    o.Check(std::includes(cy.begin(), cy.end(), cx.begin(), cx.end()),
            "monotonicity");
    o.Check(ClClosure(g, cx) == cx, "idempotence");

    std::vector<ElementId> moved = MoveToFront(*ordering, cx);
    try {
      HfOrdering reordered = ValidateHfOrdering(p, base, moved);
      HfDigraph h = DigraphFromOrdering(p, reordered);
      o.Check(h.edges == g.edges, "initial segment changed the digraph");
    } catch (const Error& e) {
      o.Check(false, std::string("initial segment invalid: ") + e.what());
    }
  }
  if (o.passed) o.detail = "500/500";
  return o;
}

Outcome Fano() {
  Outcome o;
  PartialPlane fano = FanoPlane();
  PeelReport core = ConfinedCore(fano);
  o.Check(!IsOpen(fano) && core.residual_core.size() == 14, "core size");
  o.Check(FindQuadrangle(fano).has_value(), "no quadrangle");
  o.Check(testing::BruteQuadrangle(fano).has_value(), "oracle: no quadrangle");
  PartialPlane dual = Dual(fano);
  auto iso = IsomorphismSearch(dual, fano);
  o.Check(iso && IsIsomorphism(dual, fano, iso->forward), "dual not iso");
  o.Check(testing::BruteIsomorphic(dual, fano), "oracle: dual not iso");
  if (o.passed) o.detail = "core 14, quadrangle found, dual(Fano) ~ Fano";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = no bound
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace planes

int main() {
  using planes::Criterion;
  const std::vector<Criterion> criteria{
      {1, "Figure 1 reproduction", 1.0, planes::FigureOne},
      {2, "Forced-last by exhaustive enumeration", 60.0, planes::ForcedLast},
      {3, "Openness oracle equivalence", 300.0, planes::OpennessOracle},
      {4, "Rank invariants", 60.0, planes::RankInvariants},
      {5, "Free completion counts", 0.0, planes::CompletionCounts},
      {6, "c-gadget distances", 0.0, planes::CGadgetDistances},
      {7, "Coded-chain non-isomorphism", 600.0, planes::CodedChains},
      {8, "Duality suite", 0.0, planes::Duality},
      {9, "Amalgamation class", 0.0, planes::AmalgamationClass},
      {10, "Closure laws", 0.0, planes::ClosureLaws},
      {11, "Fano fixtures", 0.0, planes::Fano},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = planes::Clock::now();
    planes::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(planes::Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      outcome.passed = false;
      outcome.detail += " (over time limit)";
    }
    failures += !outcome.passed;
    std::printf("%s  %2d  %-40s %8.3fs  %s\n", outcome.passed ? "PASS" : "FAIL",
                c.id, c.name, seconds, outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
