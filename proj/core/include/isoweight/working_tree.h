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

// Balanced re-rooting of a component tree by recursive centers.
//
// Root the tree at its smallest node id and write S(v) for the subtree at v.
// A piece is either S(v) or S(v) minus S(v') for a proper descendant v'. The
// center of a piece becomes a working-tree node and the pieces left by its
// removal are handled recursively as its children. Depth is O(log n).

#ifndef ISOWEIGHT_WORKING_TREE_H_
#define ISOWEIGHT_WORKING_TREE_H_

#include <map>
#include <vector>

#include "isoweight/decompose.h"

namespace isoweight {

struct TreeLink {
  int id = 0;
  int a = 0;
  int b = 0;
};

// A tree over positive node ids, rooted at the smallest one.
class RootedTree {
 public:
  // Throws PreconditionError unless nodes and links form a tree.
  RootedTree(const std::vector<int>& nodes, const std::vector<TreeLink>& links);

  int root() const { return root_; }
  int num_nodes() const { return static_cast<int>(parent_.size()); }
  bool Has(int v) const { return parent_.count(v) > 0; }
  int parent(int v) const { return parent_.at(v); }  // 0 at the root
  int parent_link(int v) const { return parent_link_.at(v); }
  const std::vector<int>& children(int v) const { return children_.at(v); }
  int size(int v) const { return size_.at(v); }
  bool IsAncestor(int a, int d) const;
  // Nodes of the subtree at v, preorder with ascending children.
  std::vector<int> Subtree(int v) const;

 private:
  int root_ = 0;
  std::map<int, int> parent_;
  std::map<int, int> parent_link_;
  std::map<int, std::vector<int>> children_;
  std::map<int, int> size_;
};

// Center of S(v) when v_prime == 0, otherwise of S(v) minus S(v_prime).
// Throws PreconditionError if v_prime is not a proper descendant of v.
int Center(const RootedTree& t, int v, int v_prime);

struct WorkingTreeChild {
  int node = 0;
  int link = 0;    // component-tree edge joining the child's piece to us
  int clique = 0;  // our clique on that edge (0 when built without cliques)
};

struct WorkingTreeNode {
  int id = 0;
  int parent = 0;  // 0 at the root
  int level = 0;   // root = 1
  int height = 0;  // max_level + 1 - level
  int leaves = 0;  // leaves of the working subtree at this node
  std::vector<WorkingTreeChild> children;
};

struct WorkingTree {
  int root = 0;
  int max_level = 0;
  std::map<int, WorkingTreeNode> nodes;

  // True when `a` is `d` or one of its working-tree ancestors.
  bool IsAncestor(int a, int d) const;
};

WorkingTree BuildWorkingTree(const std::vector<int>& nodes,
                             const std::vector<TreeLink>& links);
// Same, with child pointers naming the clique of the parent node.
WorkingTree BuildWorkingTree(const ComponentTree& tree);

// Fills level, height and leaves from the parent structure.
void Annotate(WorkingTree* wt);

}  // namespace isoweight

#endif  // ISOWEIGHT_WORKING_TREE_H_
