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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "isoweight/decompose.h"
#include "isoweight/generator.h"
#include "isoweight/normalize.h"
#include "isoweight/oracle.h"
#include "isoweight/pipeline.h"
#include "isoweight/planarity.h"
#include "isoweight/weights.h"
#include "isoweight/working_tree.h"

namespace isoweight {
namespace {

Multigraph Instance(GeneratorMode mode, int max_vertices, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.mode = mode;
  spec.seed = seed;
  spec.max_vertices = max_vertices;
  spec.max_pieces = max_vertices / 3;
  return Generate(spec).graph;
}

void BM_Embed(benchmark::State& state) {
  Multigraph g = RandomPlanarMultigraph(static_cast<int>(state.range(0)), 1,
                                        false, false);
  for (auto _ : state) benchmark::DoNotOptimize(Embed(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Embed)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_FaceToEdge(benchmark::State& state) {
  Embedding emb = Embed(RandomPlanarMultigraph(static_cast<int>(state.range(0)),
                                               2, true, true));
  std::mt19937_64 rng(2);
  FacePlan plan;
  for (const Face& f : emb.faces()) {
    if (f.id != emb.outer_face()) plan[f.id] = static_cast<std::int64_t>(rng() % 1000);
  }
  for (auto _ : state) benchmark::DoNotOptimize(FaceToEdge(emb, plan));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FaceToEdge)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_WorkingTree(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<int> nodes;
  for (int v = 1; v <= n; ++v) nodes.push_back(v);
  std::vector<TreeLink> links;
  int id = 1;
  for (auto [c, p] : RandomTree(n, 3)) links.push_back({id++, c, p});
  for (auto _ : state) benchmark::DoNotOptimize(BuildWorkingTree(nodes, links));
  state.SetComplexityN(n);
}
BENCHMARK(BM_WorkingTree)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Decompose(benchmark::State& state) {
  Multigraph g = Instance(GeneratorMode::kK5, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(Decompose(g, Mode::kK5));
}
BENCHMARK(BM_Decompose)->Arg(16)->Arg(32)->Arg(64);

void BM_Normalize(benchmark::State& state) {
  ComponentForest f = Decompose(
      Instance(GeneratorMode::kK33, static_cast<int>(state.range(0)), 5), Mode::kK33);
  for (auto _ : state) benchmark::DoNotOptimize(Normalize(f));
}
BENCHMARK(BM_Normalize)->Arg(16)->Arg(32)->Arg(64);

void BM_Pipeline(benchmark::State& state) {
  Multigraph g = Instance(GeneratorMode::kK33, static_cast<int>(state.range(0)), 6);
  PipelineOptions opt;
  for (auto _ : state) benchmark::DoNotOptimize(RunPipeline(g, opt));
}
BENCHMARK(BM_Pipeline)->Arg(16)->Arg(32)->Arg(64);

void BM_CountPerfectMatchings(benchmark::State& state) {
  Multigraph g = MakeGrid(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(CountPerfectMatchings(g));
}
BENCHMARK(BM_CountPerfectMatchings)->DenseRange(2, 6, 2);

void BM_CheckCirculation(benchmark::State& state) {
  Multigraph g = Instance(GeneratorMode::kK33, static_cast<int>(state.range(0)), 7);
  PipelineResult r = RunPipeline(g, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        CheckNonzeroCirculation(r.normalized_graph, r.weights.final, 1000000));
  }
}
BENCHMARK(BM_CheckCirculation)->Arg(10)->Arg(14);

}  // namespace
}  // namespace isoweight

BENCHMARK_MAIN();
