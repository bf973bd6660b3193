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

#include "isoweight/serialize.h"

#include <gtest/gtest.h>

#include "isoweight/error.h"
#include "isoweight/generator.h"
#include "isoweight/pipeline.h"

namespace isoweight {
namespace {

PipelineResult Sample(std::uint64_t seed) {
  GeneratorSpec spec;
  spec.mode = static_cast<GeneratorMode>(seed % 3);
  spec.seed = seed;
  spec.max_pieces = 4;
  spec.bipartite = seed % 2 == 0;
  PipelineOptions opt;
  opt.mode = spec.mode == GeneratorMode::kK5 ? Mode::kK5 : Mode::kK33;
  return RunPipeline(Generate(spec).graph, opt);
}

TEST(SerializeTest, ForestRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    PipelineResult r = Sample(seed);
    for (const ComponentForest* f : {&r.decomposed, &r.normalized}) {
      std::string text = ForestToJson(*f);
      ComponentForest back = ForestFromJson(text);
      EXPECT_EQ(ForestToJson(back), text);
      EXPECT_EQ(Glue(back), Glue(*f));
      EXPECT_EQ(back.log, f->log);
      EXPECT_EQ(back.ids, f->ids);
    }
  }
}

TEST(SerializeTest, EmbeddingSurvives) {
  PipelineResult r = Sample(3);
  ComponentForest back = ForestFromJson(ForestToJson(r.normalized));
  for (size_t t = 0; t < back.trees.size(); ++t) {
    for (const auto& [id, node] : back.trees[t].nodes) {
      const ComponentNode& orig = r.normalized.trees[t].nodes.at(id);
      ASSERT_EQ(node.embedding.has_value(), orig.embedding.has_value());
      if (!node.embedding) continue;
      EXPECT_EQ(node.embedding->rotation(), orig.embedding->rotation());
      EXPECT_EQ(node.embedding->outer_face(), orig.embedding->outer_face());
    }
  }
}

TEST(SerializeTest, WorkingTreesRoundTrip) {
  PipelineResult r = Sample(5);
  std::string text = WorkingTreesToJson(r.working_trees);
  EXPECT_EQ(WorkingTreesToJson(WorkingTreesFromJson(text)), text);
}

TEST(SerializeTest, LogRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    PipelineResult r = Sample(seed);
    EXPECT_EQ(LogFromJson(LogToJson(r.normalized.log)), r.normalized.log);
  }
}

TEST(SerializeTest, RotationRoundTrip) {
  Multigraph g = RandomPlanarMultigraph(9, 4, true, true);
  Embedding emb = Embed(g);
  auto rotation = RotationFromJson(g, RotationToJson(emb));
  EXPECT_EQ(rotation, emb.rotation());
}

TEST(SerializeTest, WeightsRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    PipelineResult r = Sample(seed);
    std::string text =
        WeightsToJson(r.weights, r.normalized_graph, r.normalized.log);
    WeightsFile back = WeightsFromJson(text);
    EXPECT_EQ(back.params.K, r.weights.params.K);
    EXPECT_EQ(back.params.m_const, r.weights.params.m_const);
    EXPECT_EQ(back.scale, r.weights.scale);
    EXPECT_EQ(back.log, r.normalized.log);
    ASSERT_EQ(back.graph.num_edges(), r.normalized_graph.num_edges());
    for (const auto& [id, e] : back.graph.edges()) {
      EXPECT_LE(e.u, e.v);
      const Edge& orig = r.normalized_graph.edge(id);
      EXPECT_EQ(back.weights.Canonical(e), r.weights.final.Canonical(orig));
    }
  }
}

TEST(SerializeTest, MatchingRoundTrip) {
  Matching m{3, 8, 11};
  EXPECT_EQ(MatchingFromJson(MatchingToJson(m)), m);
}

TEST(SerializeTest, MalformedInputs) {
  EXPECT_THROW(ForestFromJson("{"), ParseError);
  EXPECT_THROW(ForestFromJson("[]"), ParseError);
  EXPECT_THROW(WeightsFromJson("{\"params\": 3}"), ParseError);
  EXPECT_THROW(LogFromJson("[{\"type\": \"nope\"}]"), ParseError);
  EXPECT_THROW(MatchingFromJson("{\"matching\": [\"a\"]}"), ParseError);
}

}  // namespace
}  // namespace isoweight
