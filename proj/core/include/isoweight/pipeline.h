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

// End-to-end runs: decompose, normalize, re-root, weigh, and check the
// result against the brute-force oracles.

#ifndef ISOWEIGHT_PIPELINE_H_
#define ISOWEIGHT_PIPELINE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoweight/decompose.h"
#include "isoweight/oracle.h"
#include "isoweight/serialize.h"
#include "isoweight/weights.h"
#include "isoweight/working_tree.h"

namespace isoweight {

struct PipelineOptions {
  Mode mode = Mode::kK33;
  // Rotation system for a biconnected planar input, replacing the computed
  // embedding of its single node.
  std::optional<std::map<VertexId, std::vector<Dart>>> rotation;
};

struct PipelineResult {
  ComponentForest decomposed;
  ComponentForest normalized;
  std::vector<WorkingTree> working_trees;
  SchemeWeights weights;
  Multigraph normalized_graph;
};

std::vector<WorkingTree> BuildWorkingTrees(const ComponentForest& forest);

PipelineResult RunPipeline(const Multigraph& g, const PipelineOptions& options);

struct VerifyOptions {
  std::int64_t cycle_cap = 1000000;
  bool isolation = true;
};

struct VerifyReport {
  std::vector<std::string> failures;
  CirculationReport circulation;
  std::optional<IsolationReport> isolation;
  Matching mapped;  // minimum matching carried back to the input graph

  bool ok() const { return failures.empty(); }
  std::string ToJson() const;
};

// Replays the log on `original`, compares with the weighted graph, checks
// every cycle and, for bipartite graphs with a perfect matching, isolation
// and the mapping of the minimum matching back to `original`.
VerifyReport Verify(const Multigraph& original, const WeightsFile& weights,
                    const VerifyOptions& options);

}  // namespace isoweight

#endif  // ISOWEIGHT_PIPELINE_H_
