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

#include "isoweight/oracle.h"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "isoweight/generator.h"
#include "isoweight/normalize.h"

namespace isoweight {
namespace {

Multigraph FromPairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  Multigraph g;
  for (int v = 1; v <= n; ++v) g.AddVertex(v);
  EdgeId id = 1;
  for (auto [a, b] : pairs) g.AddEdge(id++, a, b);
  return g;
}

std::int64_t CountCycles(const Multigraph& g) {
  return EnumerateCycles(g, 1 << 30, [](const Cycle&) { return true; }).count;
}

TEST(EnumerateCyclesTest, Counts) {
  EXPECT_EQ(CountCycles(MakeComplete(4)), 7);
  EXPECT_EQ(CountCycles(MakeComplete(5)), 37);
  EXPECT_EQ(CountCycles(MakeK33()), 15);
  EXPECT_EQ(CountCycles(FromPairs(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}})), 0);
  // A loop, a double edge and a triangle through the double edge.
  Multigraph g = FromPairs(3, {{1, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 1}});
  EXPECT_EQ(CountCycles(g), 1 + 1 + 2);
}

TEST(EnumerateCyclesTest, CyclesAreValidAndDistinct) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Multigraph g = RandomPlanarMultigraph(7, seed, true, true);
    std::set<std::set<EdgeId>> seen;
    EnumerateCycles(g, 1 << 30, [&](const Cycle& c) {
      EXPECT_NO_THROW(ValidateCycle(g, c));
      std::set<EdgeId> edges;
      for (const Dart& d : c) edges.insert(d.edge);
      EXPECT_TRUE(seen.insert(edges).second);
      return true;
    });
  }
}

TEST(EnumerateCyclesTest, Cap) {
  EnumerationResult r =
      EnumerateCycles(MakeComplete(6), 10, [](const Cycle&) { return true; });
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.count, 10);
}

TEST(CirculationTest, DetectsZeroCycle) {
  Multigraph c4 = MakeCycle(4);
  WeightAssignment w;
  for (int e = 1; e <= 4; ++e) w.Set(e, 0);
  CirculationReport r = CheckNonzeroCirculation(c4, w, 100);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness.size(), 4u);
  w.Set(2, 1);
  EXPECT_TRUE(CheckNonzeroCirculation(c4, w, 100).ok);
}

TEST(PerfectMatchingTest, Counts) {
  EXPECT_EQ(CountPerfectMatchings(MakeCycle(4)), 2);
  EXPECT_EQ(CountPerfectMatchings(MakeComplete(4)), 3);
  EXPECT_EQ(CountPerfectMatchings(MakeComplete(6)), 15);
  EXPECT_EQ(CountPerfectMatchings(MakeK33()), 6);
  EXPECT_EQ(CountPerfectMatchings(MakeCycle(5)), 0);
  EXPECT_EQ(CountPerfectMatchings(MakeGrid(2, 3)), 3);
  EXPECT_EQ(CountPerfectMatchings(MakeGrid(4, 4)), 36);
  // Parallel edges multiply.
  EXPECT_EQ(CountPerfectMatchings(FromPairs(2, {{1, 2}, {1, 2}, {1, 1}})), 2);
}

TEST(PerfectMatchingTest, EnumeratedAreDistinctAndPerfect) {
  Multigraph g = MakeGrid(4, 4);
  std::set<Matching> seen;
  EnumeratePerfectMatchings(g, [&](const Matching& m) {
    EXPECT_TRUE(IsPerfectMatching(g, m));
    EXPECT_TRUE(seen.insert(m).second);
    return true;
  });
  EXPECT_EQ(seen.size(), 36u);
}

TEST(TwoColoringTest, Basic) {
  auto c = TwoColoring(MakeCycle(4));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->at(1), 0);
  EXPECT_EQ(c->at(2), 1);
  EXPECT_EQ(c->at(3), 0);
  EXPECT_FALSE(TwoColoring(MakeCycle(5)).has_value());
}

TEST(IsolationTest, Verdicts) {
  Multigraph c4 = MakeCycle(4);
  WeightAssignment zero;
  for (int e = 1; e <= 4; ++e) zero.Set(e, 0);
  IsolationReport tie = CheckIsolation(c4, zero);
  EXPECT_EQ(tie.verdict, IsolationVerdict::kTie);
  EXPECT_EQ(tie.matchings, 2);
  EXPECT_NE(tie.best, tie.tied);

  WeightAssignment w = zero;
  w.Set(1, 1);
  IsolationReport unique = CheckIsolation(c4, w);
  EXPECT_EQ(unique.verdict, IsolationVerdict::kUniqueMin);
  EXPECT_EQ(unique.min_weight, 0);
  EXPECT_EQ(unique.best, (Matching{2, 4}));

  EXPECT_EQ(CheckIsolation(MakeCycle(5), WeightAssignment()).verdict,
            IsolationVerdict::kNotBipartite);
  Multigraph odd_path = FromPairs(3, {{1, 2}, {2, 3}});
  WeightAssignment two;
  two.Set(1, 0);
  two.Set(2, 0);
  EXPECT_EQ(CheckIsolation(odd_path, two).verdict,
            IsolationVerdict::kNoPerfectMatching);
  EXPECT_STREQ(IsolationVerdictName(IsolationVerdict::kUniqueMin), "unique-min");
}

// Circulation of a glued cycle is the sum of its per-node projections when
// virtual edges weigh 0.
TEST(ProjectCycleTest, CirculationSplits) {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorSpec spec;
    spec.mode = static_cast<GeneratorMode>(seed % 2);
    spec.seed = seed;
    spec.max_pieces = 4;
    Multigraph g = Generate(spec).graph;
    ComponentForest f = Decompose(g, spec.mode == GeneratorMode::kK5
                                         ? Mode::kK5
                                         : Mode::kK33);
    Multigraph glued = Glue(f);
    WeightAssignment w;
    for (const auto& [id, e] : glued.edges()) {
      w.Set(id, static_cast<std::int64_t>(rng() % 1000) - 500);
    }
    WeightAssignment wz = WithZeroVirtual(f, w);
    EnumerateCycles(glued, 20000, [&](const Cycle& c) {
      Integer sum = 0;
      for (const ComponentTree& tree : f.trees) {
        if (tree.NodeOfEdge(c.front().edge) == 0) continue;
        for (const auto& [node, proj] : ProjectCycle(tree, glued, c)) {
          EXPECT_NO_THROW(ValidateCycle(tree.nodes.at(node).graph, proj));
          sum += Circulation(proj, wz);
        }
      }
      EXPECT_EQ(sum, Circulation(c, w)) << seed;
      return true;
    });
  }
}

}  // namespace
}  // namespace isoweight
