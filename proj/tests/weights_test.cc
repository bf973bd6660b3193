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

#include "isoweight/weights.h"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "isoweight/error.h"
#include "isoweight/generator.h"
#include "isoweight/normalize.h"
#include "isoweight/pipeline.h"

namespace isoweight {
namespace {

Integer Pow(const Integer& b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Multigraph FromPairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  Multigraph g;
  for (int v = 1; v <= n; ++v) g.AddVertex(v);
  EdgeId id = 1;
  for (auto [a, b] : pairs) g.AddEdge(id++, a, b);
  return g;
}

// Working tree with `root` above leaf children `kids`, each attached through
// clique `cliques[i]`.
WorkingTree Star(int root, const std::vector<int>& kids,
                 const std::vector<int>& cliques) {
  WorkingTree wt;
  wt.root = root;
  wt.nodes[root].id = root;
  for (size_t i = 0; i < kids.size(); ++i) {
    wt.nodes[root].children.push_back(
        {kids[i], static_cast<int>(i) + 1, cliques[i]});
    wt.nodes[kids[i]].id = kids[i];
    wt.nodes[kids[i]].parent = root;
  }
  Annotate(&wt);
  return wt;
}

TEST(ChooseParamsTest, Examples) {
  ComponentForest grid = Normalize(Decompose(MakeGrid(4, 4), Mode::kK33));
  SchemeParams p = ChooseParams(grid, BuildWorkingTrees(grid));
  EXPECT_EQ(p.m_const, 0);
  EXPECT_EQ(p.K, 8);
  EXPECT_EQ(p.L, 1);

  ComponentForest k5 = Normalize(Decompose(MakeK5(), Mode::kK33));
  p = ChooseParams(k5, BuildWorkingTrees(k5));
  EXPECT_EQ(p.m_const, 10);
  EXPECT_EQ(p.K, Integer(1) << 13);
  EXPECT_GT(p.K, Integer(1) << (p.m_const + 2));
}

TEST(WeightConstantNodeTest, PowersOfTwo) {
  ComponentForest f = Decompose(MakeK5(), Mode::kK33);
  const ComponentNode& node = f.trees[0].nodes.begin()->second;
  WorkingTreeNode leaf;
  leaf.id = node.id;
  leaf.height = 1;
  leaf.leaves = 1;
  const Integer K = Integer(1) << 13;
  WeightAssignment w = WeightConstantNode(node, leaf, K);
  ASSERT_EQ(w.size(), 10);
  int j = 1;
  Integer sum = 0;
  for (const auto& [id, e] : node.graph.edges()) {
    EXPECT_EQ(w.Canonical(e), Integer(1) << j) << id;
    sum += w.Canonical(e);
    ++j;
  }
  EXPECT_LT(sum, K);

  WorkingTreeNode inner = leaf;
  inner.height = 3;
  inner.leaves = 5;
  WeightAssignment scaled = WeightConstantNode(node, inner, K);
  const Edge& first = node.graph.edges().begin()->second;
  EXPECT_EQ(scaled.Canonical(first), 2 * K * K * 5);

  ComponentNode empty;
  empty.kind = NodeKind::kConstant;
  for (VertexId v : {1, 2}) empty.graph.AddVertex(v);
  empty.graph.AddEdge(1, 1, 2, EdgeTag::kVirtual);
  EXPECT_EQ(WeightConstantNode(empty, leaf, K).size(), 0);
}

TEST(PlanFaceCirculationsTest, LeafGetsNothing) {
  ComponentNode node;
  node.id = 1;
  node.graph = MakeGrid(3, 3);
  node.embedding = Embed(node.graph);
  WorkingTree wt = Star(1, {}, {});
  EXPECT_TRUE(PlanFaceCirculations(node, wt, 8).empty());
}

TEST(PlanFaceCirculationsTest, VirtualEdgeFaces) {
  // Square 1-2-3-4 with virtual diagonal 1-3 leading to a leaf child.
  ComponentNode node;
  node.id = 1;
  node.graph = FromPairs(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  node.graph.AddEdge(10, 1, 3, EdgeTag::kVirtual);
  node.cliques = {{1, {1, 3}, {10}}};
  node.embedding = Embed(node.graph);
  WorkingTree wt = Star(1, {2}, {1});
  const Integer K = 8;
  FacePlan plan = PlanFaceCirculations(node, wt, K);
  const Embedding& emb = *node.embedding;
  std::set<int> expected;
  for (bool fwd : {true, false}) expected.insert(emb.FaceOf(Dart{10, fwd}));
  expected.erase(emb.outer_face());
  ASSERT_EQ(plan.size(), expected.size());
  for (int f : expected) EXPECT_EQ(plan.at(f), 2 * K);
}

TEST(PlanFaceCirculationsTest, SharedFaceSums) {
  // Pentagon with virtual chords 1-3 and 1-4; face 1-3-4 touches both.
  ComponentNode node;
  node.id = 1;
  node.graph = FromPairs(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  node.graph.AddEdge(10, 1, 3, EdgeTag::kVirtual);
  node.graph.AddEdge(11, 1, 4, EdgeTag::kVirtual);
  node.cliques = {{1, {1, 3}, {10}}, {2, {1, 4}, {11}}};
  node.embedding = Embed(node.graph);
  WorkingTree wt = Star(1, {2, 3}, {1, 2});
  const Integer K = 8;
  FacePlan plan = PlanFaceCirculations(node, wt, K);
  const Embedding& emb = *node.embedding;
  int middle = FindFaceWithEdges(emb, {3, 10, 11});
  ASSERT_GE(middle, 0);
  if (middle != emb.outer_face()) {
    EXPECT_EQ(plan.at(middle), 4 * K);
  }
}

TEST(FaceToEdgeTest, Examples) {
  Embedding tri = Embed(MakeCycle(3));
  int inner = tri.outer_face() == 0 ? 1 : 0;
  WeightAssignment w = FaceToEdge(tri, {{inner, 5}});
  EXPECT_EQ(tri.FaceCirculation(inner, w), 5);
  EXPECT_EQ(tri.FaceCirculation(tri.outer_face(), w), -5);

  Embedding k4 = Embed(MakeComplete(4));
  FacePlan plan;
  Integer value = 1;
  for (const Face& f : k4.faces()) {
    if (f.id != k4.outer_face()) plan[f.id] = value++;
  }
  ASSERT_EQ(plan.size(), 3u);
  w = FaceToEdge(k4, plan);
  for (const auto& [f, target] : plan) EXPECT_EQ(k4.FaceCirculation(f, w), target);

  FacePlan zero;
  for (const Face& f : k4.faces()) {
    if (f.id != k4.outer_face()) zero[f.id] = 0;
  }
  EXPECT_EQ(FaceToEdge(k4, zero).AbsSum(), 0);
  EXPECT_THROW(FaceToEdge(k4, {{k4.outer_face(), 1}}), PreconditionError);
}

TEST(FaceToEdgeTest, RandomPlansWithLoopsAndParallels) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Multigraph g = RandomPlanarMultigraph(2 + static_cast<int>(seed % 20),
                                          seed, true, true);
    Embedding emb = Embed(g);
    FacePlan plan;
    for (const Face& f : emb.faces()) {
      if (f.id == emb.outer_face()) continue;
      plan[f.id] = static_cast<std::int64_t>(rng() % 2001) - 1000;
    }
    WeightAssignment w = FaceToEdge(emb, plan);
    EXPECT_EQ(w.size(), g.num_edges());
    for (const auto& [f, target] : plan) {
      EXPECT_EQ(emb.FaceCirculation(f, w), target) << seed;
    }
  }
}

TEST(BuildW1Test, UnitFaces) {
  ComponentForest f = Normalize(Decompose(MakeGrid(3, 4), Mode::kK33));
  WeightAssignment w1 = BuildW1(f);
  const ComponentNode& node = f.trees[0].nodes.begin()->second;
  ASSERT_TRUE(node.embedding.has_value());
  for (const Face& face : node.embedding->faces()) {
    if (face.id == node.embedding->outer_face()) continue;
    EXPECT_EQ(node.embedding->FaceCirculation(face.id, w1), 1);
  }
}

TEST(ComputeWeightsTest, CombinesAndCovers) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorSpec spec;
    spec.mode = static_cast<GeneratorMode>(seed % 3);
    spec.seed = seed;
    Multigraph g = Generate(spec).graph;
    PipelineOptions opt;
    opt.mode = spec.mode == GeneratorMode::kK5 ? Mode::kK5 : Mode::kK33;
    PipelineResult r = RunPipeline(g, opt);
    const SchemeWeights& s = r.weights;
    EXPECT_EQ(s.scale, 1 + 2 * s.w1.AbsSum());
    EXPECT_EQ(s.final, Combine(s.w0, s.w1, s.scale));
    EXPECT_EQ(s.final.size(), r.normalized_graph.num_edges());
    for (const auto& [id, e] : r.normalized_graph.edges()) {
      EXPECT_TRUE(s.final.Has(id)) << seed << " edge " << id;
    }
    // Polynomial bound on the largest weight.
    Integer U = GlobalCirculationBound(r.working_trees, s.params.K);
    EXPECT_LE(s.final.MaxAbs(), s.scale * U + s.w1.MaxAbs()) << seed;
  }
}

TEST(CirculationBoundTest, Formula) {
  WorkingTree wt = Star(1, {2, 3, 4}, {0, 0, 0});
  EXPECT_EQ(CirculationBound(wt, 1, 8), Pow(8, 2) * 3);
  EXPECT_EQ(CirculationBound(wt, 3, 8), 8);
  EXPECT_EQ(GlobalCirculationBound({wt}, 8), Pow(8, 2) * 3);
}

}  // namespace
}  // namespace isoweight
