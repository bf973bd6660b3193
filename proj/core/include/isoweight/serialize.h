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

// JSON documents written and read by the command-line tool. Keys are sorted
// and output is indented, so equal inputs give byte-identical files.

#ifndef ISOWEIGHT_SERIALIZE_H_
#define ISOWEIGHT_SERIALIZE_H_

#include <map>
#include <string>
#include <vector>

#include "isoweight/decompose.h"
#include "isoweight/graph.h"
#include "isoweight/planarity.h"
#include "isoweight/transform_log.h"
#include "isoweight/weights.h"
#include "isoweight/working_tree.h"

namespace isoweight {

// All readers throw ParseError on malformed documents.

std::string ForestToJson(const ComponentForest& forest);
ComponentForest ForestFromJson(const std::string& text);

std::string WorkingTreesToJson(const std::vector<WorkingTree>& wts);
std::vector<WorkingTree> WorkingTreesFromJson(const std::string& text);

std::string LogToJson(const TransformLog& log);
TransformLog LogFromJson(const std::string& text);

// Vertex -> cyclic list of edge ids; a loop appears twice, forward first.
std::string RotationToJson(const Embedding& emb);
std::map<VertexId, std::vector<Dart>> RotationFromJson(const Multigraph& g,
                                                       const std::string& text);

struct WeightsFile {
  SchemeParams params;
  Integer scale;
  Multigraph graph;  // normalized graph, every edge stored smaller end first
  WeightAssignment weights;
  TransformLog log;
};

// Weights in the smaller-to-larger endpoint orientation of `graph`.
std::string WeightsToJson(const SchemeWeights& s, const Multigraph& graph,
                          const TransformLog& log);
WeightsFile WeightsFromJson(const std::string& text);

std::string MatchingToJson(const Matching& m);
Matching MatchingFromJson(const std::string& text);

}  // namespace isoweight

#endif  // ISOWEIGHT_SERIALIZE_H_
