// Copyright 2026 The CLMAT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clmat/topology.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

namespace clmat {
namespace {

TEST(AddVertexTest, FirstInsertion) {
  NetworkGraph g;
  g.AddVertex("A", 5.0);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.id(0), "A");
  EXPECT_EQ(g.energy(0), 5.0);
}

TEST(AddVertexTest, DuplicateRejected) {
  NetworkGraph g;
  g.AddVertex("A", 5.0);
  EXPECT_ERROR_KIND(g.AddVertex("A", 3.0), ErrorKind::kDuplicateVertex);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.energy(0), 5.0);
}

TEST(AddVertexTest, IndependentInsertionHasNoLinks) {
  NetworkGraph g;
  g.AddVertex("A", 5.0);
  g.AddVertex("B", 4.0);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.link_count(), 0u);
}

TEST(AddVertexTest, NonPositiveEnergy) {
  NetworkGraph g;
  EXPECT_ERROR_KIND(g.AddVertex("A", 0.0), ErrorKind::kInvalidEnergy);
  EXPECT_ERROR_KIND(g.AddVertex("A", -1.0), ErrorKind::kInvalidEnergy);
  EXPECT_ERROR_KIND(g.AddVertex("A", NAN), ErrorKind::kInvalidEnergy);
}

TEST(AddEdgeTest, LinkEnergyIsMinEndpoint) {
  NetworkGraph g;
  g.AddVertex("u", 5.0);
  g.AddVertex("v", 3.0);
  g.AddEdge("u", "v", 2.0);
  EXPECT_EQ(g.StoredLinkEnergy(0, 1), 3.0);
  EXPECT_EQ(g.LinkEnergy(0, 1), 3.0);
  ASSERT_EQ(g.Links().size(), 1u);
  EXPECT_EQ(g.Links()[0].link_energy, 3.0);
}

TEST(AddEdgeTest, SymmetricEnergies) {
  NetworkGraph g;
  g.AddVertex("u", 4.0);
  g.AddVertex("v", 4.0);
  g.AddEdge("u", "v", 1.0);
  EXPECT_EQ(g.StoredLinkEnergy(0, 1), 4.0);
}

TEST(AddEdgeTest, Errors) {
  NetworkGraph g;
  g.AddVertex("A", 1.0);
  g.AddVertex("B", 1.0);
  EXPECT_ERROR_KIND(g.AddEdge("A", "Z", 1.0), ErrorKind::kUnknownVertex);
  EXPECT_ERROR_KIND(g.AddEdge("Z", "A", 1.0), ErrorKind::kUnknownVertex);
  EXPECT_ERROR_KIND(g.AddEdge("A", "A", 1.0), ErrorKind::kSelfLoop);
  EXPECT_ERROR_KIND(g.AddEdge("A", "B", 0.0), ErrorKind::kNonPositiveDistance);
  EXPECT_ERROR_KIND(g.AddEdge("A", "B", -2.0), ErrorKind::kNonPositiveDistance);
  EXPECT_FALSE(g.EdgeExists());
}

TEST(AddEdgeTest, UndirectedWritesBothEntries) {
  NetworkGraph g;
  g.AddVertex("A", 1.0);
  g.AddVertex("B", 1.0);
  g.AddEdge("A", "B", 7.0);
  EXPECT_EQ(g.Distance(0, 1), 7.0);
  EXPECT_EQ(g.Distance(1, 0), 7.0);
  EXPECT_EQ(g.link_count(), 1u);
}

TEST(AddEdgeTest, DirectedWritesOneEntry) {
  NetworkGraph g(LinkMode::kDirected);
  g.AddVertex("A", 1.0);
  g.AddVertex("B", 1.0);
  g.AddEdge("A", "B", 7.0);
  EXPECT_EQ(g.Distance(0, 1), 7.0);
  EXPECT_EQ(g.Distance(1, 0), kInfinity);
}

TEST(AddEdgeTest, CachedLinkEnergyGoesStale) {
  NetworkGraph g;
  g.AddVertex("A", 5.0);
  g.AddVertex("B", 4.0);
  g.AddEdge("A", "B", 1.0);
  g.SetEnergy(1, 2.0);
  EXPECT_EQ(g.StoredLinkEnergy(0, 1), 4.0);
  EXPECT_EQ(g.LinkEnergy(0, 1), 2.0);
}

TEST(EdgeExistsTest, Cases) {
  NetworkGraph empty;
  EXPECT_FALSE(empty.EdgeExists());
  NetworkGraph isolated;
  for (const char* id : {"a", "b", "c"}) isolated.AddVertex(id, 1.0);
  EXPECT_FALSE(isolated.EdgeExists());
  isolated.AddEdge("a", "c", 2.0);
  EXPECT_TRUE(isolated.EdgeExists());
}

TEST(GetIndexTest, InsertionOrder) {
  NetworkGraph g;
  g.AddVertex("A", 1.0);
  g.AddVertex("B", 1.0);
  EXPECT_EQ(g.GetIndex("A"), 0u);
  EXPECT_EQ(g.GetIndex("B"), 1u);
  EXPECT_EQ(g.GetIndex("Q"), std::nullopt);
}

TEST(MatrixSemanticsTest, DiagonalZeroAbsentInfinite) {
  NetworkGraph g = testing::F4();
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g.Distance(i, i), 0.0);
  EXPECT_EQ(g.Distance(0, 3), kInfinity);
}

TEST(RandomTopologyTest, SingleNodeHasNoLinks) {
  RandomTopologyParams p;
  p.n = 1;
  NetworkGraph g = RandomTopology(p);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.link_count(), 0u);
}

TEST(RandomTopologyTest, SameSeedSameExport) {
  RandomTopologyParams p;
  p.n = 30;
  p.seed = 42;
  EXPECT_EQ(ExportTopologyJson(RandomTopology(p)),
            ExportTopologyJson(RandomTopology(p)));
  RandomTopologyParams q = p;
  q.seed = 43;
  EXPECT_NE(ExportTopologyJson(RandomTopology(p)),
            ExportTopologyJson(RandomTopology(q)));
}

TEST(RandomTopologyTest, RangeCoveringDiagonalGivesCompleteGraph) {
  RandomTopologyParams p;
  p.n = 3;
  p.side = 10.0;
  p.range = 10.0 * std::sqrt(2.0) + 1e-9;
  NetworkGraph g = RandomTopology(p);
  EXPECT_EQ(g.link_count(), 3u);
}

TEST(RandomTopologyTest, LinksAreExactlyPairsWithinRange) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomTopologyParams p;
    p.n = 25;
    p.side = 100.0;
    p.range = 35.0;
    p.energy_lo = 0.5;
    p.energy_hi = 1.5;
    p.seed = seed;
    NetworkGraph g = RandomTopology(p);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto& e = g.energy(i);
      EXPECT_GE(e, 0.5);
      EXPECT_LE(e, 1.5);
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i == j) continue;
        const Position a = *g.node(i).position;
        const Position b = *g.node(j).position;
        const double d = std::hypot(a.x - b.x, a.y - b.y);
        if (d <= p.range) {
          EXPECT_EQ(g.Distance(i, j), d);
        } else {
          EXPECT_EQ(g.Distance(i, j), kInfinity);
        }
      }
    }
  }
}

TEST(LoadTopologyTest, MinimalDocument) {
  NetworkGraph g = LoadTopology(R"({"nodes":[{"id":"a","energy":2},
      {"id":"b","energy":3,"x":1,"y":2}],
      "edges":[{"u":"a","v":"b","distance":4}]})");
  EXPECT_EQ(g.mode(), LinkMode::kUndirected);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_FALSE(g.node(0).position.has_value());
  EXPECT_EQ(g.node(1).position, (Position{1, 2}));
  EXPECT_EQ(g.Distance(1, 0), 4.0);
}

TEST(LoadTopologyTest, LinkEnergyNeverReadFromFile) {
  NetworkGraph g = LoadTopology(R"({"nodes":[{"id":"a","energy":2},
      {"id":"b","energy":3}],
      "edges":[{"u":"a","v":"b","distance":4,"link_energy":99}]})");
  EXPECT_EQ(g.StoredLinkEnergy(0, 1), 2.0);
}

TEST(LoadTopologyTest, Errors) {
  EXPECT_ERROR_KIND(LoadTopology("{nope"), ErrorKind::kParseError);
  EXPECT_ERROR_KIND(LoadTopology("[]"), ErrorKind::kParseError);
  EXPECT_ERROR_KIND(LoadTopology(R"({"nodes":[]})"), ErrorKind::kParseError);
  EXPECT_ERROR_KIND(LoadTopology(R"({"mode":"sideways","nodes":[],"edges":[]})"),
                    ErrorKind::kParseError);
  EXPECT_ERROR_KIND(
      LoadTopology(R"({"nodes":[{"id":"a","energy":"x"}],"edges":[]})"),
      ErrorKind::kParseError);
  EXPECT_ERROR_KIND(
      LoadTopology(R"({"nodes":[{"id":"a","energy":1}],
          "edges":[{"u":"a","v":"X","distance":1}]})"),
      ErrorKind::kSemanticError);
  EXPECT_ERROR_KIND(
      LoadTopology(R"({"nodes":[{"id":"a","energy":1},{"id":"a","energy":2}],
          "edges":[]})"),
      ErrorKind::kSemanticError);
  EXPECT_ERROR_KIND(
      LoadTopology(R"({"nodes":[{"id":"a","energy":0}],"edges":[]})"),
      ErrorKind::kSemanticError);
  EXPECT_ERROR_KIND(
      LoadTopology(R"({"nodes":[{"id":"a","energy":1},{"id":"b","energy":1}],
          "edges":[{"u":"a","v":"b","distance":-1}]})"),
      ErrorKind::kSemanticError);
}

TEST(LoadTopologyTest, ExportLoadRoundTripOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    testing::RandomGraphOptions opt;
    opt.integer_energies = trial % 2 == 0;
    NetworkGraph g = testing::RandomConnectedGraph(rng, opt);
    std::string text = ExportTopologyJson(g);
    NetworkGraph back = LoadTopology(text);
    EXPECT_TRUE(SameStructure(g, back));
    EXPECT_EQ(ExportTopologyJson(back), text);
  }
  RandomTopologyParams p;
  p.mode = LinkMode::kDirected;
  NetworkGraph directed = RandomTopology(p);
  EXPECT_TRUE(SameStructure(directed, LoadTopology(ExportTopologyJson(directed))));
}

TEST(LoadTopologyCsvTest, EdgeAndNodeTables) {
  NetworkGraph g = LoadTopologyCsv("u,v,distance\nA,B,2\nB,C, 1.5\n",
                                   "id,energy,x,y\nA,5,0,0\nB,4,1,1\nC,3,2,2\n");
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.Distance(2, 1), 1.5);
  EXPECT_EQ(g.node(2).position, (Position{2, 2}));
  EXPECT_ERROR_KIND(LoadTopologyCsv("u,v,distance\nA,Q,1\n", "id,energy\nA,1\n"),
                    ErrorKind::kSemanticError);
  EXPECT_ERROR_KIND(LoadTopologyCsv("u,v,distance\nA,B,x\n",
                                    "id,energy\nA,1\nB,1\n"),
                    ErrorKind::kParseError);
  EXPECT_ERROR_KIND(LoadTopologyCsv("", "id,energy\nA,1\n"),
                    ErrorKind::kParseError);
}

TEST(InducedTest, KeepsOnlySurvivingLinks) {
  NetworkGraph g = testing::F4();
  NetworkGraph sub = g.Induced({true, false, true, true});
  ASSERT_EQ(sub.size(), 3u);
  EXPECT_EQ(sub.id(1), "C");
  EXPECT_EQ(sub.link_count(), 2u);  // A-C, C-D
}

}  // namespace
}  // namespace clmat
