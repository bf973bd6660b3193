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

#include "isoweight/pipeline.h"

#include <algorithm>
#include <json.hpp>

#include "isoweight/error.h"
#include "isoweight/normalize.h"

namespace isoweight {
namespace {

bool SameUndirected(const Multigraph& a, const Multigraph& b, std::string* why) {
  if (a.vertices() != b.vertices()) {
    *why = "vertex sets differ";
    return false;
  }
  if (a.num_edges() != b.num_edges()) {
    *why = "edge counts differ";
    return false;
  }
  for (const auto& [id, e] : a.edges()) {
    if (!b.HasEdge(id)) {
      *why = "edge " + std::to_string(id) + " is missing";
      return false;
    }
    const Edge& f = b.edge(id);
    if (std::minmax(e.u, e.v) != std::minmax(f.u, f.v) || e.tag != f.tag) {
      *why = "edge " + std::to_string(id) + " differs";
      return false;
    }
  }
  return true;
}

void ApplyRotation(ComponentForest* forest,
                   const std::map<VertexId, std::vector<Dart>>& rotation) {
  if (forest->trees.size() != 1 || forest->trees[0].nodes.size() != 1) {
    throw PreconditionError("an embedding override needs a biconnected planar input");
  }
  ComponentNode& node = forest->trees[0].nodes.begin()->second;
  if (node.kind != NodeKind::kPlanar) {
    throw PreconditionError("an embedding override needs a planar input");
  }
  node.embedding = Embedding(node.graph, rotation);
}

}  // namespace

std::vector<WorkingTree> BuildWorkingTrees(const ComponentForest& forest) {
  std::vector<WorkingTree> out;
  for (const ComponentTree& tree : forest.trees) out.push_back(BuildWorkingTree(tree));
  return out;
}

PipelineResult RunPipeline(const Multigraph& g, const PipelineOptions& options) {
  PipelineResult r;
  r.decomposed = Decompose(g, options.mode);
  r.normalized = Normalize(r.decomposed);
  if (options.rotation) ApplyRotation(&r.normalized, *options.rotation);
  r.working_trees = BuildWorkingTrees(r.normalized);
  r.weights = ComputeWeights(r.normalized, r.working_trees);
  r.normalized_graph = Glue(r.normalized);
  std::string why;
  if (!SameUndirected(ReplayForward(g, r.normalized.log), r.normalized_graph, &why)) {
    throw VerificationError("log replay disagrees with the normalized graph: " + why);
  }
  return r;
}

VerifyReport Verify(const Multigraph& original, const WeightsFile& weights,
                    const VerifyOptions& options) {
  VerifyReport report;
  std::string why;
  if (!SameUndirected(ReplayForward(original, weights.log), weights.graph, &why)) {
    report.failures.push_back("weighted graph is not the replayed input: " + why);
    return report;
  }
  for (const auto& [id, e] : weights.graph.edges()) {
    if (!weights.weights.Has(id)) {
      report.failures.push_back("edge " + std::to_string(id) + " has no weight");
      return report;
    }
  }
  report.circulation =
      CheckNonzeroCirculation(weights.graph, weights.weights, options.cycle_cap);
  if (!report.circulation.ok) {
    report.failures.push_back("a cycle has zero circulation");
  }
  if (options.isolation && TwoColoring(weights.graph)) {
    report.isolation = CheckIsolation(weights.graph, weights.weights);
    if (report.isolation->verdict == IsolationVerdict::kTie) {
      report.failures.push_back("two perfect matchings share the minimum weight");
    } else if (report.isolation->verdict == IsolationVerdict::kUniqueMin) {
      try {
        report.mapped = MapMatchingBack(weights.graph, report.isolation->best,
                                        weights.log, original);
      } catch (const Error& e) {
        report.failures.push_back(std::string("mapping back failed: ") + e.what());
      }
    }
  }
  return report;
}

std::string VerifyReport::ToJson() const {
  using Json = nlohmann::json;
  Json j{{"ok", ok()},
         {"failures", failures},
         {"cycles_checked", circulation.cycles},
         {"cycle_cap_reached", circulation.truncated}};
  if (!circulation.ok) {
    Json witness = Json::array();
    for (const Dart& d : circulation.witness) {
      witness.push_back({{"edge", d.edge}, {"forward", d.forward}});
    }
    j["zero_circulation_cycle"] = witness;
  }
  if (isolation) {
    Json iso{{"verdict", IsolationVerdictName(isolation->verdict)},
             {"matchings", isolation->matchings}};
    if (isolation->verdict != IsolationVerdict::kNoPerfectMatching) {
      iso["min_weight"] = isolation->min_weight.str();
      iso["best"] = isolation->best;
    }
    if (isolation->verdict == IsolationVerdict::kTie) iso["tied"] = isolation->tied;
    j["isolation"] = iso;
    if (isolation->verdict == IsolationVerdict::kUniqueMin) j["mapped_matching"] = mapped;
  }
  return j.dump(2) + "\n";
}

}  // namespace isoweight
