// Copyright 2026 The isoweight Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isoweight/normalize.h"

#include <random>

#include <gtest/gtest.h>

#include "isoweight/error.h"
#include "isoweight/generator.h"
#include "isoweight/oracle.h"

namespace isoweight {
namespace {

Multigraph FromPairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  Multigraph g;
  for (int v = 1; v <= n; ++v) g.AddVertex(v);
  EdgeId id = 1;
  for (auto [a, b] : pairs) g.AddEdge(id++, a, b);
  return g;
}

// `copies` K5s sharing the edge 1-2.
Multigraph K5Fan(int copies) {
  std::vector<std::pair<int, int>> pairs{{1, 2}};
  int next = 3;
  for (int c = 0; c < copies; ++c) {
    std::vector<int> vs{1, 2, next, next + 1, next + 2};
    next += 3;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        if (i + j > 1) pairs.push_back({vs[i], vs[j]});
      }
    }
  }
  return FromPairs(next - 1, pairs);
}

std::vector<Multigraph> GeneratedGraphs(int count, int max_vertices,
                                        std::uint64_t first_seed) {
  std::vector<Multigraph> out;
  for (int i = 0; i < count; ++i) {
    GeneratorSpec spec;
    spec.mode = static_cast<GeneratorMode>(i % 3);
    spec.seed = first_seed + i;
    spec.max_vertices = max_vertices;
    spec.max_pieces = 5;
    spec.bipartite = i % 2 == 0;
    out.push_back(Generate(spec).graph);
  }
  return out;
}

Mode ModeFor(int i) { return i % 3 == 1 ? Mode::kK5 : Mode::kK33; }

TEST(VertexSplitTest, PreservesMatchingCount) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Multigraph g = RandomPlanarMultigraph(8, seed, false, true);
    VertexId v = 1 + static_cast<int>(rng() % 8);
    std::vector<EdgeId> x1, x2;
    for (EdgeId e : g.IncidentEdges(v)) (rng() % 2 ? x1 : x2).push_back(e);
    IdAllocator ids{g.MaxVertexId() + 1, g.MaxEdgeId() + 1};
    auto [split, record] = VertexSplit(g, v, x1, x2, &ids);
    EXPECT_EQ(CountPerfectMatchings(split), CountPerfectMatchings(g)) << seed;
    EXPECT_EQ(split.num_vertices(), g.num_vertices() + 2);
    Multigraph again = g;
    ApplyVertexSplit(record, &again);
    EXPECT_EQ(again, split);
  }
}

TEST(VertexSplitTest, RejectsBadPartitions) {
  Multigraph g = MakeCycle(4);
  IdAllocator ids{5, 5};
  EXPECT_THROW(VertexSplit(g, 1, {1}, {}, &ids), PreconditionError);
  EXPECT_THROW(VertexSplit(g, 1, {1, 4}, {4}, &ids), PreconditionError);
  EXPECT_THROW(VertexSplit(g, 1, {1, 2}, {4}, &ids), PreconditionError);
  g.AddEdge(9, 1, 1);
  EXPECT_THROW(VertexSplit(g, 1, {1, 9}, {4}, &ids), PreconditionError);
}

TEST(RemoveThreeBondsTest, MergesIntoSmallestNeighbour) {
  ComponentForest f;
  ComponentTree t;
  ComponentNode a, b, c;
  a.id = 1;
  a.graph = FromPairs(3, {{2, 3}, {3, 1}});
  a.graph.AddEdge(20, 1, 2, EdgeTag::kVirtual);
  a.cliques = {{1, {1, 2}, {20}}};
  b.id = 2;
  for (VertexId v : {1, 2}) b.graph.AddVertex(v);
  b.graph.AddEdge(9, 1, 2);
  b.graph.AddEdge(21, 1, 2, EdgeTag::kVirtual);
  b.graph.AddEdge(22, 1, 2, EdgeTag::kVirtual);
  b.cliques = {{2, {1, 2}, {21}}, {3, {1, 2}, {22}}};
  c.id = 3;
  for (VertexId v : {1, 2, 4}) c.graph.AddVertex(v);
  c.graph.AddEdge(5, 2, 4);
  c.graph.AddEdge(6, 4, 1);
  c.graph.AddEdge(23, 1, 2, EdgeTag::kVirtual);
  c.cliques = {{4, {1, 2}, {23}}};
  t.nodes = {{1, a}, {2, b}, {3, c}};
  t.edges[1] = {1, {1, 2}, {1, 2}};
  t.edges[2] = {2, {2, 3}, {3, 4}};
  f.trees.push_back(t);
  Multigraph before = Glue(f);
  RemoveThreeBonds(&f);
  const ComponentTree& out = f.trees[0];
  EXPECT_EQ(out.nodes.size(), 2u);
  EXPECT_TRUE(out.nodes.at(1).graph.HasEdge(9));
  ASSERT_EQ(out.edges.size(), 1u);
  EXPECT_EQ(out.edges.begin()->second.nodes, (std::array<int, 2>{1, 3}));
  EXPECT_NO_THROW(ValidateTree(out));
  EXPECT_EQ(Glue(f), before);
  ASSERT_EQ(f.log.size(), 1u);
  EXPECT_EQ(std::get<ThreeBondMergeRecord>(f.log[0]).host_node, 1);
}

TEST(DedupTest, ThreeSharersGetOneGadget) {
  Multigraph g = K5Fan(3);
  ComponentForest f = Decompose(g, Mode::kK33);
  ComponentForest n = Normalize(f);
  int gadgets = 0;
  for (const auto& [id, node] : n.trees[0].nodes) {
    if (!node.gadget) continue;
    ++gadgets;
    EXPECT_EQ(node.CountNonVirtualEdges(), 8);
    EXPECT_EQ(node.cliques.size(), 3u);
  }
  EXPECT_EQ(gadgets, 1);
  EXPECT_TRUE(CheckStructure(n).ok());
  EXPECT_EQ(CountPerfectMatchings(Glue(n)), CountPerfectMatchings(g));
}

TEST(DedupTest, GadgetRecordShape) {
  ComponentForest n = Normalize(Decompose(K5Fan(5), Mode::kK33));
  int records = 0;
  for (const TransformRecord& r : n.log) {
    if (const auto* gr = std::get_if<GadgetRecord>(&r)) {
      ++records;
      // Five sharers: a root sharer, three gadgets and four leaves, two
      // splits per set vertex per gadget.
      EXPECT_EQ(gr->set.size(), 2u);
      EXPECT_EQ(gr->gadgets.size(), 3u);
      EXPECT_EQ(gr->leaves.size(), 4u);
      EXPECT_EQ(gr->splits.size(), 2u * 2u * 3u);
    }
  }
  EXPECT_EQ(records, 1);
  EXPECT_TRUE(CheckStructure(n).ok());
}

TEST(DedupTest, SharedTriangleGadget) {
  // Three apexes over the triangle 1-2-3: a 3-sum of three K4s.
  std::vector<std::pair<int, int>> pairs{{1, 2}, {2, 3}, {1, 3}};
  for (int apex = 4; apex <= 6; ++apex) {
    for (int v = 1; v <= 3; ++v) pairs.push_back({v, apex});
  }
  Multigraph g = FromPairs(6, pairs);
  ComponentForest n = Normalize(Decompose(g, Mode::kK5));
  int gadgets = 0;
  for (const auto& [id, node] : n.trees[0].nodes) {
    if (!node.gadget) continue;
    ++gadgets;
    EXPECT_EQ(node.CountNonVirtualEdges(), 12);
  }
  EXPECT_EQ(gadgets, 1);
  StructureReport report = CheckStructure(n);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.max_gadget_edges, 12);
  Multigraph glued = Glue(n);
  EXPECT_EQ(CountPerfectMatchings(glued), CountPerfectMatchings(g));
  EXPECT_EQ(ReplayForward(g, n.log), glued);
}

TEST(SplitTripletFacesTest, SeparatingTriangleIsSplit) {
  // Planar node: virtual triangle 1-2-3 with apexes 4 and 5 on both sides,
  // attached to a K4 node on 1-2-3-6.
  ComponentForest f;
  f.mode = Mode::kK5;
  ComponentTree t;
  ComponentNode p, k;
  p.id = 1;
  p.graph = FromPairs(5, {{4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {5, 3}});
  p.graph.AddEdge(20, 1, 2, EdgeTag::kVirtual);
  p.graph.AddEdge(21, 2, 3, EdgeTag::kVirtual);
  p.graph.AddEdge(22, 1, 3, EdgeTag::kVirtual);
  p.cliques = {{1, {1, 2, 3}, {20, 21, 22}}};
  k.id = 2;
  for (VertexId v : {1, 2, 3, 6}) k.graph.AddVertex(v);
  k.graph.AddEdge(7, 6, 1);
  k.graph.AddEdge(8, 6, 2);
  k.graph.AddEdge(9, 6, 3);
  k.graph.AddEdge(23, 1, 2, EdgeTag::kVirtual);
  k.graph.AddEdge(24, 2, 3, EdgeTag::kVirtual);
  k.graph.AddEdge(25, 1, 3, EdgeTag::kVirtual);
  k.cliques = {{2, {1, 2, 3}, {23, 24, 25}}};
  t.nodes = {{1, p}, {2, k}};
  t.edges[1] = {1, {1, 2}, {1, 2}};
  f.trees.push_back(t);
  f.vertices = {1, 2, 3, 4, 5, 6};
  f.ids = IdAllocator{7, 30, 3, 3, 2};
  Multigraph before = Glue(f);
  SplitTripletFaces(&f);
  EXPECT_EQ(f.trees[0].nodes.size(), 3u);
  EXPECT_NO_THROW(ValidateTree(f.trees[0]));
  EXPECT_EQ(Glue(f), before);
  ComponentForest n = Normalize(f);
  EXPECT_TRUE(CheckStructure(n).ok());
  EXPECT_EQ(CountPerfectMatchings(Glue(n)), CountPerfectMatchings(before));
}

// Each pass, applied cumulatively, keeps the exact matching count.
TEST(NormalizeTest, EveryPassPreservesMatchingCount) {
  auto graphs = GeneratedGraphs(45, 14, 100);
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Multigraph& g = graphs[i];
    std::int64_t want = CountPerfectMatchings(g);
    ComponentForest f = Decompose(g, ModeFor(i));
    EXPECT_EQ(CountPerfectMatchings(Glue(f)), want) << i;
    RemoveThreeBonds(&f);
    EXPECT_EQ(CountPerfectMatchings(Glue(f)), want) << i;
    SplitTripletFaces(&f);
    EXPECT_EQ(CountPerfectMatchings(Glue(f)), want) << i;
    DedupSeparatingSets(&f);
    EXPECT_EQ(CountPerfectMatchings(Glue(f)), want) << i;
    StarSplit(&f);
    EXPECT_EQ(CountPerfectMatchings(Glue(f)), want) << i;
  }
}

TEST(NormalizeTest, StructureAndReplay) {
  auto graphs = GeneratedGraphs(60, 16, 300);
  for (size_t i = 0; i < graphs.size(); ++i) {
    ComponentForest n = Normalize(Decompose(graphs[i], ModeFor(i)));
    StructureReport report = CheckStructure(n);
    EXPECT_TRUE(report.ok()) << i << ": "
                             << (report.ok() ? "" : report.violations.front());
    EXPECT_LE(report.max_constant_edges, ModeFor(i) == Mode::kK33 ? 50 : 60);
    EXPECT_LE(report.max_gadget_edges, 12);
    Multigraph replay = ReplayForward(graphs[i], n.log);
    EXPECT_EQ(replay, Glue(n)) << i;
  }
}

TEST(MapMatchingBackTest, EveryMatchingMapsToADistinctOne) {
  auto graphs = GeneratedGraphs(30, 12, 500);
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Multigraph& g = graphs[i];
    ComponentForest n = Normalize(Decompose(g, ModeFor(i)));
    Multigraph glued = Glue(n);
    std::set<Matching> images;
    std::int64_t count = EnumeratePerfectMatchings(glued, [&](const Matching& m) {
      Matching back = MapMatchingBack(glued, m, n.log, g);
      EXPECT_TRUE(IsPerfectMatching(g, back));
      images.insert(back);
      return true;
    });
    EXPECT_EQ(static_cast<std::int64_t>(images.size()), count) << i;
  }
}

TEST(MapMatchingBackTest, RejectsNonPerfect) {
  Multigraph g = MakeCycle(4);
  ComponentForest n = Normalize(Decompose(g, Mode::kK33));
  EXPECT_THROW(MapMatchingBack(Glue(n), {1}, n.log, g), PreconditionError);
}

}  // namespace
}  // namespace isoweight
