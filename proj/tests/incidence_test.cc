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

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "planes/error.h"
#include "planes/free_completion.h"

namespace planes {
namespace {

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kParse;
}

TEST(BuildPlaneTest, PiFourBase) {
  PartialPlane p = BuildPlane({"p1", "p2", "q1", "q2"}, {"l"},
                              {{"p1", "l"}, {"p2", "l"}});
  EXPECT_EQ(p.num_elements(), 5u);
  EXPECT_EQ(p.num_incidences(), 2u);
  EXPECT_TRUE(p.Incident(p.At("l"), p.At("p1")));
  EXPECT_FALSE(p.Incident(p.At("q1"), p.At("l")));
}

TEST(BuildPlaneTest, Empty) {
  PartialPlane p = BuildPlane({}, {}, {});
  EXPECT_TRUE(p.empty());
  EXPECT_EQ(p, PartialPlane());
}

TEST(BuildPlaneTest, TwoLinesThroughTwoPoints) {
  try {
    BuildPlane({"a", "b"}, {"m", "m'"},
               {{"a", "m"}, {"b", "m"}, {"a", "m'"}, {"b", "m'"}});
    FAIL() << "expected axiom violation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAxiomViolation);
    EXPECT_NE(std::string(e.what()).find("A"), std::string::npos);
  }
}

TEST(BuildPlaneTest, RejectsBadInput) {
  EXPECT_EQ(KindOf([] { BuildPlane({"a", "a"}, {}, {}); }),
            ErrorKind::kDuplicateLabel);
  EXPECT_EQ(KindOf([] { BuildPlane({"a"}, {"a"}, {}); }),
            ErrorKind::kDuplicateLabel);
  EXPECT_EQ(KindOf([] { BuildPlane({"a"}, {"m"}, {{"a", "z"}}); }),
            ErrorKind::kUnknownEndpoint);
}

TEST(PartialPlaneTest, AxiomViolationLeavesPlaneUnchanged) {
  PartialPlane p = BuildPlane({"a", "b"}, {"m", "n"},
                              {{"a", "m"}, {"b", "m"}, {"a", "n"}});
  const PartialPlane before = p;
  EXPECT_THROW(p.AddIncidence(p.At("b"), p.At("n")), Error);
  EXPECT_EQ(p, before);
  p.AddIncidence(p.At("a"), p.At("m"));
  EXPECT_EQ(p, before);
}

TEST(PartialPlaneTest, CommonNeighbour) {
  PartialPlane p = PiBase(4);
  EXPECT_EQ(p.Common(p.At("p1"), p.At("p2")), p.At("l"));
  EXPECT_EQ(p.Common(p.At("p1"), p.At("q1")), std::nullopt);
}

TEST(DualTest, Involution) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    PartialPlane p = testing::RandomPartialPlane(rng, 16);
    PartialPlane d = Dual(p);
    EXPECT_EQ(d.num_points(), p.num_lines());
    EXPECT_EQ(FindAxiomViolation(d), std::nullopt);
    EXPECT_EQ(Dual(d), p);
  }
}

TEST(DualTest, PiFourBase) {
  PartialPlane d = Dual(PiBase(4));
  EXPECT_EQ(d.num_points(), 1u);
  EXPECT_EQ(d.num_lines(), 4u);
  EXPECT_EQ(d.num_incidences(), 2u);
}

TEST(InducedTest, Examples) {
  PartialPlane fano = FanoPlane();
  const auto all = fano.Elements();
  EXPECT_EQ(InducedSubconfiguration(fano, {all.begin(), all.end()}), fano);
  EXPECT_TRUE(InducedSubconfiguration(fano, {}).empty());

  ElementId line = ElementId::Line(0);
  ElementSet subset{line};
  for (ElementId q : fano.NeighborIds(line)) subset.insert(q);
  PartialPlane sub = InducedSubconfiguration(fano, subset);
  EXPECT_EQ(sub.num_elements(), 4u);
  EXPECT_EQ(sub.num_incidences(), 3u);
}

TEST(InducedTest, Monotone) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    PartialPlane p = testing::RandomPartialPlane(rng, 14);
    ElementSet s;
    ElementSet t;
    std::bernoulli_distribution coin(0.5);
    for (ElementId e : p.Elements()) {
      if (coin(rng)) {
        t.insert(e);
        if (coin(rng)) s.insert(e);
      }
    }
    PartialPlane pt = InducedSubconfiguration(p, t);
    ElementSet s_in_t;
    for (ElementId e : s) s_in_t.insert(pt.At(p.Label(e)));
    EXPECT_EQ(InducedSubconfiguration(pt, s_in_t),
              InducedSubconfiguration(p, s));
  }
}

TEST(QuadrangleTest, Examples) {
  PartialPlane pi4 = PiBase(4);
  auto q = FindQuadrangle(pi4);
  ASSERT_TRUE(q.has_value());
  std::vector<std::string> labels;
  for (ElementId e : *q) labels.push_back(pi4.Label(e));
  EXPECT_EQ(labels, (std::vector<std::string>{"p1", "p2", "q1", "q2"}));

  EXPECT_EQ(FindQuadrangle(BuildPlane({"a", "b", "c"}, {}, {})), std::nullopt);

  PartialPlane fano = FanoPlane();
  auto fq = FindQuadrangle(fano);
  auto brute = testing::BruteQuadrangle(fano);
  ASSERT_TRUE(fq.has_value());
  ASSERT_TRUE(brute.has_value());
  for (int i = 0; i < 4; ++i) EXPECT_EQ((*fq)[i].index, (*brute)[i]);
}

TEST(QuadrangleTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    PartialPlane p = testing::RandomPartialPlane(rng, 16, 0.6);
    auto fast = FindQuadrangle(p);
    auto brute = testing::BruteQuadrangle(p);
    ASSERT_EQ(fast.has_value(), brute.has_value());
    if (fast) {
      for (int k = 0; k < 4; ++k) EXPECT_EQ((*fast)[k].index, (*brute)[k]);
    }
  }
}

TEST(AxiomTest, ConstructedPlanesSatisfyAxioms) {
  EXPECT_EQ(FindAxiomViolation(FanoPlane()), std::nullopt);
  EXPECT_EQ(FindAxiomViolation(FreeComplete(PiBase(5), 3).plane()),
            std::nullopt);
}

TEST(TableTest, EmptyPlane) {
  EXPECT_EQ(RenderIncidenceTable(PartialPlane()), "");
}

TEST(TableTest, SmallLayout) {
  PartialPlane p = BuildPlane({"a", "bb"}, {"m", "n"}, {{"a", "n"}});
  EXPECT_EQ(RenderIncidenceTable(p),
            "|    | m | n |\n"
            "| a  |   | 1 |\n"
            "| bb |   |   |\n");
}

}  // namespace
}  // namespace planes
