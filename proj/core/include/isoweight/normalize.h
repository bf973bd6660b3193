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

// Matching-preserving rewrites that bring a component forest into the shape
// the weighting scheme needs:
//   (1) inside a node, every vertex lies in at most one virtual clique;
//   (2) every separating set is shared by exactly two nodes;
//   (3) every virtual triangle of a planar node bounds a face.

#ifndef ISOWEIGHT_NORMALIZE_H_
#define ISOWEIGHT_NORMALIZE_H_

#include <string>
#include <utility>
#include <vector>

#include "isoweight/decompose.h"
#include "isoweight/transform_log.h"

namespace isoweight {

// Splits v into v - v' - v'' and re-ends the edges of `x2` at v''. `x1` and
// `x2` must partition the non-loop edges at v.
std::pair<Multigraph, VertexSplitRecord> VertexSplit(
    const Multigraph& g, VertexId v, const std::vector<EdgeId>& x1,
    const std::vector<EdgeId>& x2, IdAllocator* ids);

// Applies one split record to `g` in place.
void ApplyVertexSplit(const VertexSplitRecord& r, Multigraph* g);

// Dissolves nodes made of one real edge plus parallel virtual edges. The
// real edge moves to the neighbour with the smallest id.
void RemoveThreeBonds(ComponentForest* forest);

// Splits planar nodes along virtual triangles that separate them.
void SplitTripletFaces(ComponentForest* forest);

// Replaces every separating set shared by m > 2 nodes with a binary tree of
// gadget nodes.
void DedupSeparatingSets(ComponentForest* forest);

// Splits each vertex lying in two or more cliques of one node, one length-2
// path per clique.
void StarSplit(ComponentForest* forest);

// Embeds every planar node with its virtual triangles as faces.
void EmbedPlanarNodes(ComponentForest* forest);

// All passes in order, then embedding and validation.
ComponentForest Normalize(const ComponentForest& forest);

struct StructureReport {
  std::vector<std::string> violations;
  int max_constant_edges = 0;  // non-gadget constant nodes
  int max_gadget_edges = 0;
  bool ok() const { return violations.empty(); }
};

// Structural assumptions (1)-(3) and the constant-node edge bounds
// (50 for k33, 60 for k5, 12 for gadgets).
StructureReport CheckStructure(const ComponentForest& forest);

// Replays the log on the input graph.
Multigraph ReplayForward(const Multigraph& original, const TransformLog& log);

// Maps a perfect matching of the normalized graph back to one of
// `original`. Throws PreconditionError when `m` is not perfect.
Matching MapMatchingBack(const Multigraph& normalized, const Matching& m,
                         const TransformLog& log, const Multigraph& original);

}  // namespace isoweight

#endif  // ISOWEIGHT_NORMALIZE_H_
