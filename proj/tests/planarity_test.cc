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

#include "isoweight/planarity.h"

#include <random>

#include <gtest/gtest.h>

#include "isoweight/error.h"
#include "isoweight/generator.h"
#include "isoweight/oracle.h"

namespace isoweight {
namespace {

void ExpectEuler(const Embedding& emb) {
  const Multigraph& g = emb.graph();
  EXPECT_EQ(g.num_vertices() - g.num_edges() + emb.num_faces(), 2);
  size_t darts = 0;
  for (const Face& f : emb.faces()) darts += f.boundary.size();
  EXPECT_EQ(darts, 2u * g.num_edges());
}

WeightAssignment RandomWeights(const Multigraph& g, std::mt19937_64* rng) {
  WeightAssignment w;
  for (const auto& [id, e] : g.edges()) w.Set(id, static_cast<int>((*rng)() % 41) - 20);
  return w;
}

TEST(EmbedTest, SmallGraphs) {
  for (const Multigraph& g : {MakeComplete(4), MakeCycle(5), MakeGrid(3, 4)}) {
    Embedding emb = Embed(g);
    ExpectEuler(emb);
  }
  EXPECT_EQ(Embed(MakeComplete(4)).num_faces(), 4);
  EXPECT_EQ(Embed(MakeGrid(3, 3)).num_faces(), 5);
}

TEST(EmbedTest, MultigraphsWithLoopsAndParallels) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Multigraph g = RandomPlanarMultigraph(3 + seed % 10, seed, true, true);
    ExpectEuler(Embed(g));
  }
}

TEST(EmbedTest, SingleVertex) {
  Multigraph g;
  g.AddVertex(1);
  EXPECT_EQ(Embed(g).num_faces(), 1);
}

TEST(EmbedTest, Deterministic) {
  Multigraph g = RandomPlanarMultigraph(12, 5, true, true);
  EXPECT_EQ(Embed(g).rotation(), Embed(g).rotation());
}

TEST(EmbedTest, NonPlanarCertificates) {
  for (const Multigraph& g : {MakeK5(), MakeK33(), MakeV8()}) {
    EXPECT_FALSE(IsPlanar(g));
    try {
      Embed(g);
      FAIL();
    } catch (const NonPlanarError& e) {
      EXPECT_GE(e.certificate_edges().size(), 9u);
      for (EdgeId id : e.certificate_edges()) EXPECT_TRUE(g.HasEdge(id));
    }
  }
}

TEST(EmbedTest, RejectsDisconnected) {
  Multigraph g;
  g.AddVertex(1);
  g.AddVertex(2);
  EXPECT_THROW(Embed(g), PreconditionError);
}

TEST(EmbeddingTest, RejectsBadRotation) {
  Multigraph g = MakeCycle(3);
  std::map<VertexId, std::vector<Dart>> rot{
      {1, {{1, true}, {3, false}}}, {2, {{2, true}}}, {3, {{3, true}, {2, false}}}};
  EXPECT_THROW(Embedding(g, rot), PreconditionError);
}

TEST(EmbeddingTest, OuterFacePrefersNonVirtualBoundary) {
  Multigraph g = MakeCycle(3);
  Embedding emb = Embed(g);
  EXPECT_FALSE(emb.faces()[emb.outer_face()].inner);
  int other = 1 - emb.outer_face();
  emb.SetOuterFace(other);
  EXPECT_EQ(emb.outer_face(), other);
}

TEST(FacialTrianglesTest, TrianglesBecomeFaces) {
  // Octahedron: every triangle through vertex 1 can be asked to be a face.
  Multigraph g;
  for (int v = 1; v <= 6; ++v) g.AddVertex(v);
  std::vector<std::pair<int, int>> edges{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {6, 2}, {6, 3},
                                         {6, 4}, {6, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 2}};
  EdgeId id = 1;
  for (auto [a, b] : edges) g.AddEdge(id++, a, b);
  Embedding emb = EmbedWithFacialTriangles(g, {{{1, 2, 9}}});
  EXPECT_GE(FindFaceWithEdges(emb, {1, 2, 9}), 0);
}

TEST(FacialTrianglesTest, SeparatingTriangleIsRejected) {
  // Vertex 5 inside triangle 1-2-3, vertex 4 outside: 1-2-3 separates.
  Multigraph g;
  for (int v = 1; v <= 5; ++v) g.AddVertex(v);
  std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {1, 3}, {4, 1}, {4, 2},
                                         {4, 3}, {5, 1}, {5, 2}, {5, 3}};
  EdgeId id = 1;
  for (auto [a, b] : edges) g.AddEdge(id++, a, b);
  EXPECT_THROW(EmbedWithFacialTriangles(g, {{{1, 2, 3}}}), PreconditionError);
}

TEST(DualTest, Sizes) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Multigraph g = RandomPlanarMultigraph(8, seed, true, true);
    Embedding emb = Embed(g);
    Multigraph d = Dual(emb);
    EXPECT_EQ(d.num_vertices(), emb.num_faces());
    EXPECT_EQ(d.num_edges(), g.num_edges());
  }
}

TEST(FaceCirculationTest, FacesSumToZero) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Multigraph g = RandomPlanarMultigraph(9, seed, true, true);
    Embedding emb = Embed(g);
    WeightAssignment w = RandomWeights(g, &rng);
    Integer total = 0;
    for (const Face& f : emb.faces()) total += emb.FaceCirculation(f.id, w);
    EXPECT_EQ(total, 0);
  }
}

// Clockwise circulation of a cycle equals the sum over the faces inside.
TEST(CirculationFacesTest, EveryCycle) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Multigraph g = RandomPlanarMultigraph(7, seed, false, true);
    Embedding emb = Embed(g);
    WeightAssignment w = RandomWeights(g, &rng);
    EnumerateCycles(g, 100000, [&](const Cycle& c) {
      Cycle cw = ClockwiseOrientation(emb, c);
      Integer sum = 0;
      for (int f : FacesInside(emb, c)) sum += emb.FaceCirculation(f, w);
      EXPECT_EQ(Circulation(cw, w), sum);
      return true;
    });
  }
}

TEST(ContractVirtualTest, TriangleAndPair) {
  // Square 1-2-3-4 with a pendant triangle 4-5-6 made of virtual edges.
  Multigraph g;
  for (int v = 1; v <= 6; ++v) g.AddVertex(v);
  g.AddEdge(1, 1, 2);
  g.AddEdge(2, 2, 3);
  g.AddEdge(3, 3, 4);
  g.AddEdge(4, 4, 1);
  g.AddEdge(5, 4, 5, EdgeTag::kVirtual);
  g.AddEdge(6, 5, 6, EdgeTag::kVirtual);
  g.AddEdge(7, 4, 6, EdgeTag::kVirtual);
  g.AddEdge(8, 5, 1);
  g.AddEdge(9, 1, 3, EdgeTag::kVirtual);
  Embedding emb = EmbedWithFacialTriangles(g, {{{5, 6, 7}}});
  Contraction con = ContractVirtual(emb);
  EXPECT_EQ(con.embedding.graph().num_edges(), 5);
  EXPECT_EQ(con.embedding.graph().CountEdges(EdgeTag::kVirtual), 0);
  ExpectEuler(con.embedding);
  EXPECT_EQ(con.face_map.at(emb.outer_face()), con.embedding.outer_face());
  int tri = FindFaceWithEdges(emb, {5, 6, 7});
  EXPECT_EQ(con.face_map.count(tri), 0u);
}

}  // namespace
}  // namespace isoweight
