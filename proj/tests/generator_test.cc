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

#include "isoweight/generator.h"

#include <set>

#include <gtest/gtest.h>

#include "isoweight/decompose.h"
#include "isoweight/error.h"
#include "isoweight/oracle.h"
#include "isoweight/planarity.h"

namespace isoweight {
namespace {

bool Connected(const Multigraph& g) {
  return ComponentsWithout(g, {}).size() <= 1;
}

void ExpectDenseIds(const Multigraph& g) {
  int v = 1;
  for (VertexId x : g.vertices()) EXPECT_EQ(x, v++);
  int e = 1;
  for (const auto& [id, edge] : g.edges()) EXPECT_EQ(id, e++);
}

TEST(NamedGraphsTest, Sizes) {
  EXPECT_EQ(MakeK5().num_edges(), 10);
  EXPECT_EQ(MakeK33().num_edges(), 9);
  EXPECT_TRUE(TwoColoring(MakeK33()).has_value());
  EXPECT_EQ(MakeV8().num_vertices(), 8);
  EXPECT_EQ(MakeV8().num_edges(), 12);
  EXPECT_TRUE(IsV8(MakeV8()));
  EXPECT_FALSE(IsPlanar(MakeV8()));
  EXPECT_EQ(MakeCycle(6).num_edges(), 6);
  EXPECT_EQ(MakeGrid(3, 4).num_edges(), 17);
  EXPECT_EQ(MakeComplete(6).num_edges(), 15);
}

TEST(ModeNameTest, RoundTrip) {
  for (GeneratorMode m :
       {GeneratorMode::kK33, GeneratorMode::kK5, GeneratorMode::kPlanarOnly}) {
    EXPECT_EQ(ParseGeneratorMode(GeneratorModeName(m)), m);
  }
  EXPECT_THROW(ParseGeneratorMode("k7"), ParseError);
}

TEST(GenerateTest, Deterministic) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorSpec spec;
    spec.mode = static_cast<GeneratorMode>(seed % 3);
    spec.seed = seed;
    spec.bipartite = seed % 2 == 0;
    GeneratedInstance a = Generate(spec);
    GeneratedInstance b = Generate(spec);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(a.pieces.size(), b.pieces.size());
  }
}

TEST(GenerateTest, RespectsModeAndSize) {
  std::set<std::string> kinds_k33, kinds_k5;
  for (std::uint64_t seed = 1; seed <= 90; ++seed) {
    GeneratorSpec spec;
    spec.mode = static_cast<GeneratorMode>(seed % 3);
    spec.seed = seed;
    spec.max_pieces = 4;
    spec.max_vertices = 16;
    GeneratedInstance inst = Generate(spec);
    const Multigraph& g = inst.graph;
    EXPECT_LE(g.num_vertices(), 16);
    EXPECT_TRUE(Connected(g)) << seed;
    ExpectDenseIds(g);
    EXPECT_EQ(inst.sums.size() + 1, inst.pieces.size());
    for (const GroundTruthPiece& p : inst.pieces) {
      if (spec.mode == GeneratorMode::kK33) kinds_k33.insert(p.kind);
      if (spec.mode == GeneratorMode::kK5) kinds_k5.insert(p.kind);
      if (spec.mode == GeneratorMode::kPlanarOnly) {
        EXPECT_EQ(p.kind, "planar");
      }
    }
    switch (spec.mode) {
      case GeneratorMode::kPlanarOnly:
        EXPECT_TRUE(IsPlanar(g)) << seed;
        break;
      case GeneratorMode::kK33:
        EXPECT_NO_THROW(Decompose(g, Mode::kK33)) << seed;
        break;
      case GeneratorMode::kK5:
        EXPECT_NO_THROW(Decompose(g, Mode::kK5)) << seed;
        break;
    }
  }
  EXPECT_TRUE(kinds_k33.count("k5"));
  EXPECT_TRUE(kinds_k5.count("v8"));
}

TEST(GenerateTest, BipartiteHasPerfectMatching) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorSpec spec;
    spec.mode = static_cast<GeneratorMode>(seed % 3);
    spec.seed = seed;
    spec.bipartite = true;
    spec.max_vertices = 20;
    Multigraph g = Generate(spec).graph;
    EXPECT_LE(g.num_vertices(), 20);
    EXPECT_TRUE(TwoColoring(g).has_value()) << seed;
    EXPECT_GT(CountPerfectMatchings(g), 0) << seed;
  }
}

TEST(GenerateTest, RejectsEmptySpec) {
  GeneratorSpec spec;
  spec.max_vertices = 2;
  EXPECT_THROW(Generate(spec), PreconditionError);
}

TEST(RandomPlanarMultigraphTest, PlanarAndConnected) {
  bool saw_loop = false, saw_parallel = false;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    int n = 1 + static_cast<int>(seed % 30);
    Multigraph g = RandomPlanarMultigraph(n, seed, true, true);
    EXPECT_EQ(g.num_vertices(), n);
    EXPECT_TRUE(IsPlanar(g));
    EXPECT_TRUE(Connected(g));
    std::set<std::pair<VertexId, VertexId>> ends;
    for (const auto& [id, e] : g.edges()) {
      saw_loop |= e.is_loop();
      saw_parallel |= !ends.insert(std::minmax(e.u, e.v)).second;
    }
  }
  EXPECT_TRUE(saw_loop);
  EXPECT_TRUE(saw_parallel);
}

TEST(RandomTreeTest, ParentsPrecedeChildren) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto links = RandomTree(100, seed);
    ASSERT_EQ(links.size(), 99u);
    for (size_t i = 0; i < links.size(); ++i) {
      EXPECT_EQ(links[i].first, static_cast<int>(i) + 2);
      EXPECT_GE(links[i].second, 1);
      EXPECT_LT(links[i].second, links[i].first);
    }
  }
}

}  // namespace
}  // namespace isoweight
