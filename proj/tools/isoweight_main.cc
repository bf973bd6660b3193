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

// Command-line front end. Exit codes: 0 ok, 1 other error, 2 parse error,
// 3 input outside the graph class, 4 verification failed, 5 no perfect
// matching with --require-pm.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "isoweight/decompose.h"
#include "isoweight/error.h"
#include "isoweight/generator.h"
#include "isoweight/io.h"
#include "isoweight/normalize.h"
#include "isoweight/pipeline.h"
#include "isoweight/serialize.h"

namespace {

using namespace isoweight;  // NOLINT(build/namespaces)

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitOutOfClass = 3;
constexpr int kExitVerify = 4;
constexpr int kExitNoPm = 5;

std::int64_t DefaultCycleCap() {
  if (const char* env = std::getenv("ISOWEIGHT_CYCLE_CAP")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw ParseError("ISOWEIGHT_CYCLE_CAP is not an integer", 0);
    }
  }
  return 1000000;
}

struct Args {
  std::string mode = "k33";
  std::string in;
  std::string out;
  std::string log;
  std::string working_tree;
  std::string dump_tree;
  std::string embedding;
  std::string dump_embedding;
  std::string weights;
  std::string matching;
  std::string report;
  std::uint64_t seed = 1;
  GeneratorSpec gen;
  std::optional<std::int64_t> cycle_cap;
  bool params = false;
  bool require_pm = false;
  bool verify = false;
  bool no_isolation = false;
};

int RunGenerate(const Args& a) {
  GeneratorSpec spec = a.gen;
  spec.mode = ParseGeneratorMode(a.mode);
  spec.seed = a.seed;
  GeneratedInstance inst = Generate(spec);
  WriteFile(a.out, GraphToString(inst.graph));
  return kExitOk;
}

int RunDecompose(const Args& a) {
  Multigraph g = ReadGraphFile(a.in);
  ComponentForest forest = Decompose(g, ParseMode(a.mode));
  WriteFile(a.out, ForestToJson(forest));
  if (!a.working_tree.empty()) {
    WriteFile(a.working_tree, WorkingTreesToJson(BuildWorkingTrees(forest)));
  }
  return kExitOk;
}

int RunNormalize(const Args& a) {
  ComponentForest forest = Normalize(ForestFromJson(ReadFile(a.in)));
  WriteFile(a.out, ForestToJson(forest));
  if (!a.log.empty()) WriteFile(a.log, LogToJson(forest.log));
  if (!a.working_tree.empty()) {
    WriteFile(a.working_tree, WorkingTreesToJson(BuildWorkingTrees(forest)));
  }
  return kExitOk;
}

int PrintReport(const VerifyReport& report, const std::string& path) {
  std::string text = report.ToJson();
  if (!path.empty()) WriteFile(path, text);
  std::cout << text;
  return report.ok() ? kExitOk : kExitVerify;
}

int RunWeights(const Args& a) {
  Multigraph g = ReadGraphFile(a.in);
  PipelineOptions options;
  options.mode = ParseMode(a.mode);
  if (!a.embedding.empty()) {
    options.rotation = RotationFromJson(g, ReadFile(a.embedding));
  }
  PipelineResult r = RunPipeline(g, options);
  if (a.require_pm && r.normalized.no_perfect_matching) {
    std::cerr << "isoweight: the input has no perfect matching\n";
    return kExitNoPm;
  }
  std::string text = WeightsToJson(r.weights, r.normalized_graph, r.normalized.log);
  WriteFile(a.out, text);
  if (!a.dump_tree.empty()) WriteFile(a.dump_tree, ForestToJson(r.normalized));
  if (!a.working_tree.empty()) {
    WriteFile(a.working_tree, WorkingTreesToJson(r.working_trees));
  }
  if (!a.log.empty()) WriteFile(a.log, LogToJson(r.normalized.log));
  if (!a.dump_embedding.empty()) {
    if (r.normalized.trees.size() != 1 || r.normalized.trees[0].nodes.size() != 1 ||
        !r.normalized.trees[0].nodes.begin()->second.embedding) {
      throw PreconditionError("--dump-embedding needs a biconnected planar input");
    }
    WriteFile(a.dump_embedding,
              RotationToJson(*r.normalized.trees[0].nodes.begin()->second.embedding));
  }
  if (a.params) {
    std::cout << "m_const " << r.weights.params.m_const << "\nK " << r.weights.params.K
              << "\nL " << r.weights.params.L << "\nscale " << r.weights.scale << "\n";
  }
  if (a.verify) {
    VerifyOptions vo;
    vo.cycle_cap = a.cycle_cap.value_or(DefaultCycleCap());
    vo.isolation = !a.no_isolation;
    return PrintReport(Verify(g, WeightsFromJson(text), vo), a.report);
  }
  return kExitOk;
}

int RunVerify(const Args& a) {
  Multigraph g = ReadGraphFile(a.in);
  VerifyOptions vo;
  vo.cycle_cap = a.cycle_cap.value_or(DefaultCycleCap());
  vo.isolation = !a.no_isolation;
  return PrintReport(Verify(g, WeightsFromJson(ReadFile(a.weights)), vo), a.report);
}

int RunMapMatching(const Args& a) {
  Multigraph g = ReadGraphFile(a.in);
  WeightsFile w = WeightsFromJson(ReadFile(a.weights));
  Matching m = MatchingFromJson(ReadFile(a.matching));
  WriteFile(a.out, MatchingToJson(MapMatchingBack(w.graph, m, w.log, g)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isolating weights for K3,3-free and K5-free graphs"};
  app.require_subcommand(1);
  Args a;
  const std::set<std::string> modes{"k33", "k5"};

  auto* gen = app.add_subcommand("generate", "Write a random in-class graph");
  gen->add_option("--mode", a.mode, "k33, k5 or planar")
      ->check(CLI::IsMember({"k33", "k5", "planar"}));
  gen->add_option("--seed", a.seed, "Generator seed");
  gen->add_option("--out", a.out, "Output graph file")->required();
  gen->add_option("--min-pieces", a.gen.min_pieces);
  gen->add_option("--max-pieces", a.gen.max_pieces);
  gen->add_option("--min-piece-size", a.gen.min_piece_size);
  gen->add_option("--max-piece-size", a.gen.max_piece_size);
  gen->add_option("--max-vertices", a.gen.max_vertices);
  gen->add_flag("--bipartite", a.gen.bipartite, "Bipartite with a perfect matching");

  auto* dec = app.add_subcommand("decompose", "Build the component forest");
  dec->add_option("--mode", a.mode)->check(CLI::IsMember(modes));
  dec->add_option("--in", a.in, "Input graph file")->required();
  dec->add_option("--out", a.out, "Forest JSON")->required();
  dec->add_option("--dump-working-tree", a.working_tree, "Working trees JSON");

  auto* norm = app.add_subcommand("normalize", "Normalize a component forest");
  norm->add_option("--in", a.in, "Forest JSON")->required();
  norm->add_option("--out", a.out, "Normalized forest JSON")->required();
  norm->add_option("--log", a.log, "Transform log JSON");
  norm->add_option("--dump-working-tree", a.working_tree, "Working trees JSON");

  auto* wts = app.add_subcommand("weights", "Compute isolating weights");
  wts->add_option("--mode", a.mode)->check(CLI::IsMember(modes));
  wts->add_option("--in", a.in, "Input graph file")->required();
  wts->add_option("--out", a.out, "Weights JSON")->required();
  wts->add_option("--dump-tree", a.dump_tree, "Normalized forest JSON");
  wts->add_option("--dump-working-tree", a.working_tree, "Working trees JSON");
  wts->add_option("--log", a.log, "Transform log JSON");
  wts->add_option("--embedding", a.embedding, "Rotation system override");
  wts->add_option("--dump-embedding", a.dump_embedding, "Rotation system JSON");
  wts->add_flag("--params", a.params, "Print m_const, K, L and scale");
  wts->add_flag("--require-pm", a.require_pm, "Fail when no perfect matching exists");
  wts->add_flag("--verify", a.verify, "Run the oracles on the result");
  wts->add_option("--cycles-cap", a.cycle_cap);
  wts->add_option("--report", a.report, "Verification report JSON");
  wts->add_flag("--no-isolation", a.no_isolation, "Skip the matching check");

  auto* ver = app.add_subcommand("verify", "Check weights with the oracles");
  ver->add_option("--in", a.in, "Input graph file")->required();
  ver->add_option("--weights", a.weights, "Weights JSON")->required();
  ver->add_option("--cycles-cap", a.cycle_cap, "Stop after this many cycles");
  ver->add_option("--report", a.report, "Verification report JSON");
  ver->add_flag("--no-isolation", a.no_isolation, "Skip the matching check");

  auto* map = app.add_subcommand("map-matching", "Carry a matching back to the input");
  map->add_option("--in", a.in, "Input graph file")->required();
  map->add_option("--weights", a.weights, "Weights JSON")->required();
  map->add_option("--matching", a.matching, "Matching JSON")->required();
  map->add_option("--out", a.out, "Output matching JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*gen) return RunGenerate(a);
    if (*dec) return RunDecompose(a);
    if (*norm) return RunNormalize(a);
    if (*wts) return RunWeights(a);
    if (*ver) return RunVerify(a);
    if (*map) return RunMapMatching(a);
  } catch (const ParseError& e) {
    std::cerr << "isoweight: " << e.what() << "\n";
    return kExitParse;
  } catch (const OutOfClassError& e) {
    std::cerr << "isoweight: " << e.what() << "\n  vertices:";
    for (VertexId v : e.vertices()) std::cerr << " " << v;
    std::cerr << "\n";
    return kExitOutOfClass;
  } catch (const VerificationError& e) {
    std::cerr << "isoweight: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "isoweight: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOther;
}
