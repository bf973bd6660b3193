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

// Skew-symmetric weights with nonzero circulation on every cycle of a
// normalized component forest.
//
// w0 separates cycles spanning two or more nodes: constant nodes get powers
// of two scaled by K^(h-1) l, and planar nodes get face circulations that
// dominate anything a child working subtree can produce. w1 puts +1 on every
// face of each planar node and settles cycles inside one node. The final
// assignment is scale * w0 + w1 with scale large enough that w1 never
// cancels a nonzero w0 circulation.

#ifndef ISOWEIGHT_WEIGHTS_H_
#define ISOWEIGHT_WEIGHTS_H_

#include <map>
#include <vector>

#include "isoweight/decompose.h"
#include "isoweight/graph.h"
#include "isoweight/planarity.h"
#include "isoweight/working_tree.h"

namespace isoweight {

struct SchemeParams {
  int m_const = 0;  // most non-virtual edges in one constant node
  Integer K = 8;    // 2^(m_const + 3)
  int L = 1;        // deepest working-tree level
};

SchemeParams ChooseParams(const ComponentForest& forest,
                          const std::vector<WorkingTree>& wts);

// Face id -> target circulation along the face boundary.
using FacePlan = std::map<int, Integer>;

// e_j (ascending id, j from 1) gets 2^j K^(h-1) l in the smaller-to-larger
// endpoint direction.
WeightAssignment WeightConstantNode(const ComponentNode& node,
                                    const WorkingTreeNode& wnode,
                                    const Integer& K);

// Faces of `node.embedding` next to the clique leading to each working-tree
// child T get 2 K^h(T) l(T). The outer face and the faces bounded by a
// virtual triangle get nothing.
FacePlan PlanFaceCirculations(const ComponentNode& node,
                              const WorkingTree& wt, const Integer& K);

// Weights on the edges of `emb` realizing `plan` on every inner face
// (faces missing from the plan get 0). Throws PreconditionError on a plan
// for the outer face and VerificationError if the result is off.
WeightAssignment FaceToEdge(const Embedding& emb, const FacePlan& plan);

// Contracts the virtual edges of the node's embedding, moves `plan` to the
// contracted faces and realizes it. Covers the non-virtual edges.
WeightAssignment PlanarNodeWeights(const ComponentNode& node,
                                   const FacePlan& plan);

// Both cover exactly the non-virtual edges of the glued forest.
WeightAssignment BuildW0(const ComponentForest& forest,
                         const std::vector<WorkingTree>& wts,
                         const SchemeParams& params);
WeightAssignment BuildW1(const ComponentForest& forest);

// K^h(root of T) * l(T) for the working subtree at `node`.
Integer CirculationBound(const WorkingTree& wt, int node, const Integer& K);
// Largest bound over the roots of all working trees.
Integer GlobalCirculationBound(const std::vector<WorkingTree>& wts,
                               const Integer& K);

struct SchemeWeights {
  SchemeParams params;
  WeightAssignment w0;
  WeightAssignment w1;
  Integer scale;
  WeightAssignment final;
};

// scale = 1 + 2 sum |w1(e)|.
SchemeWeights ComputeWeights(const ComponentForest& forest,
                             const std::vector<WorkingTree>& wts);

}  // namespace isoweight

#endif  // ISOWEIGHT_WEIGHTS_H_
