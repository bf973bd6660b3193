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

// Records of every rewrite between the input graph and the normalized one.

#ifndef ISOWEIGHT_TRANSFORM_LOG_H_
#define ISOWEIGHT_TRANSFORM_LOG_H_

#include <variant>
#include <vector>

#include "isoweight/graph.h"

namespace isoweight {

// Edge removed while reducing to biconnected pieces. Such an edge is in no
// perfect matching.
struct EdgeDeletionRecord {
  EdgeId edge = 0;
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const EdgeDeletionRecord&,
                         const EdgeDeletionRecord&) = default;
};

// v is split into the path v - mid - split. Edges in `moved` had their v end
// re-ended at `split`.
struct VertexSplitRecord {
  VertexId v = 0;
  VertexId mid = 0;
  VertexId split = 0;
  EdgeId aux_near = 0;  // v - mid
  EdgeId aux_far = 0;   // mid - split
  std::vector<EdgeId> moved;
  friend bool operator==(const VertexSplitRecord&,
                         const VertexSplitRecord&) = default;
};

// A shared separating set replaced by a binary tree of gadget nodes.
struct GadgetRecord {
  std::vector<VertexId> set;
  int root_sharer = 0;          // node attached above the root gadget
  std::vector<int> gadgets;     // gadget node ids, heap order
  std::vector<int> leaves;      // remaining sharers, heap order
  std::vector<VertexSplitRecord> splits;
  friend bool operator==(const GadgetRecord&, const GadgetRecord&) = default;
};

// A node holding one real edge and two or more parallel virtual edges was
// dissolved into `host`.
struct ThreeBondMergeRecord {
  int removed_node = 0;
  int host_node = 0;
  EdgeId edge = 0;
  friend bool operator==(const ThreeBondMergeRecord&,
                         const ThreeBondMergeRecord&) = default;
};

using TransformRecord = std::variant<EdgeDeletionRecord, VertexSplitRecord,
                                     GadgetRecord, ThreeBondMergeRecord>;
using TransformLog = std::vector<TransformRecord>;

}  // namespace isoweight

#endif  // ISOWEIGHT_TRANSFORM_LOG_H_
