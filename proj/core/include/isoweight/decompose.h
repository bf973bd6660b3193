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

// Reduction to biconnected pieces and clique-sum component trees.
//
// Vertex ids are global: a copy of a vertex inside a component node carries
// the vertex's own id, so gluing is a plain union.

#ifndef ISOWEIGHT_DECOMPOSE_H_
#define ISOWEIGHT_DECOMPOSE_H_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isoweight/graph.h"
#include "isoweight/planarity.h"
#include "isoweight/transform_log.h"

namespace isoweight {

enum class Mode { kK33, kK5 };

const char* ModeName(Mode mode);
// Accepts "k33" and "k5".
Mode ParseMode(const std::string& name);

enum class NodeKind { kPlanar, kConstant };

// A separating pair (one virtual edge) or triplet (virtual triangle) as it
// appears inside one node.
struct VirtualClique {
  int id = 0;
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edges;       // sorted
  friend bool operator==(const VirtualClique&, const VirtualClique&) = default;
};

// Joins clique `cliques[k]` of node `nodes[k]`, k = 0, 1. Both cliques
// carry the same vertex set.
struct TreeEdge {
  int id = 0;
  std::array<int, 2> nodes{};
  std::array<int, 2> cliques{};

  int Other(int node) const { return nodes[0] == node ? nodes[1] : nodes[0]; }
  int CliqueAt(int node) const {
    return nodes[0] == node ? cliques[0] : cliques[1];
  }
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

struct ComponentNode {
  int id = 0;
  Multigraph graph;  // real, auxiliary and virtual edges
  NodeKind kind = NodeKind::kPlanar;
  bool gadget = false;
  std::vector<VirtualClique> cliques;  // sorted by id
  std::optional<Embedding> embedding;  // planar nodes after normalization

  const VirtualClique& clique(int id) const;
  VirtualClique& clique(int id);
  bool HasClique(int id) const;
  // Clique holding virtual edge `e`, or nullptr.
  const VirtualClique* CliqueOfEdge(EdgeId e) const;
  int CountNonVirtualEdges() const;
};

struct ComponentTree {
  std::map<int, ComponentNode> nodes;
  std::map<int, TreeEdge> edges;

  // Tree edges touching `node`, ascending.
  std::vector<int> EdgesAt(int node) const;
  // Tree edges attached to clique `clique` of `node`, ascending.
  std::vector<int> EdgesAtClique(int node, int clique) const;
  // Nodes on the far side of tree edge `edge` as seen from `node`.
  std::set<int> Region(int node, int edge) const;
  // Nodes containing a copy of `v`.
  std::vector<int> NodesWithVertex(VertexId v) const;
  // Node owning non-virtual edge `e`, or 0.
  int NodeOfEdge(EdgeId e) const;
};

struct ComponentForest {
  Mode mode = Mode::kK33;
  std::set<VertexId> vertices;       // every vertex, isolated ones included
  std::vector<ComponentTree> trees;  // one per biconnected block
  IdAllocator ids;
  TransformLog log;
  bool no_perfect_matching = false;
};

struct PreprocessResult {
  Multigraph graph;
  std::vector<EdgeDeletionRecord> deleted;
  bool no_perfect_matching = false;
};

// Drops loops, then repeatedly takes an articulation point whose removal
// leaves exactly one odd component and deletes its edges into the even
// ones. Any other parity pattern, or an odd connected component, sets the
// no-perfect-matching flag.
PreprocessResult Preprocess(const Multigraph& g);

// Biconnected blocks (bridges included), ordered by smallest edge id. Loops
// join the first block containing their vertex.
std::vector<Multigraph> Blocks(const Multigraph& g);

// Clique-sum component tree of a biconnected multigraph. New virtual edges,
// cliques, nodes and tree edges take ids from `ids`.
ComponentTree BuildComponentTree(const Multigraph& block, Mode mode,
                                 IdAllocator* ids);

// Preprocess, split into blocks, decompose each block.
ComponentForest Decompose(const Multigraph& g, Mode mode);

// Union of the non-virtual edges of every node.
Multigraph Glue(const ComponentTree& tree);
Multigraph Glue(const ComponentForest& forest);

// Throws VerificationError on a malformed tree.
void ValidateTree(const ComponentTree& tree);

// Separating-set searches, exposed for tests. Return an empty vector when
// nothing separates.
std::vector<VertexId> FindSeparatingPair(const Multigraph& g);
std::vector<VertexId> FindSeparatingTriplet(const Multigraph& g,
                                            bool require_clique,
                                            bool require_nontrivial);
bool IsK5(const Multigraph& g);
// Underlying simple graph is the four-rung Mobius ladder.
bool IsV8(const Multigraph& g);

// Connected components of `g` minus `removed`, each sorted, ordered by
// smallest vertex.
std::vector<std::vector<VertexId>> ComponentsWithout(
    const Multigraph& g, const std::set<VertexId>& removed);

}  // namespace isoweight

#endif  // ISOWEIGHT_DECOMPOSE_H_
