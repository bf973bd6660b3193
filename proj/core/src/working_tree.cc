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

#include "isoweight/working_tree.h"

#include <algorithm>
#include <deque>

#include "isoweight/error.h"

namespace isoweight {

RootedTree::RootedTree(const std::vector<int>& nodes,
                       const std::vector<TreeLink>& links) {
  if (nodes.empty()) throw PreconditionError("empty tree");
  std::map<int, std::vector<std::pair<int, int>>> adj;
  for (int v : nodes) {
    if (v <= 0) throw PreconditionError("node ids must be positive");
    adj[v];
  }
  if (adj.size() != nodes.size()) throw PreconditionError("duplicate node id");
  if (links.size() + 1 != nodes.size()) {
    throw PreconditionError("edge count does not match a tree");
  }
  for (const TreeLink& l : links) {
    if (!adj.count(l.a) || !adj.count(l.b) || l.a == l.b) {
      throw PreconditionError("bad tree edge " + std::to_string(l.id));
    }
    adj[l.a].push_back({l.b, l.id});
    adj[l.b].push_back({l.a, l.id});
  }
  root_ = adj.begin()->first;
  parent_[root_] = 0;
  parent_link_[root_] = 0;
  std::vector<int> order{root_};
  for (size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    children_[x];
    auto nbrs = adj[x];
    std::sort(nbrs.begin(), nbrs.end());
    for (const auto& [y, link] : nbrs) {
      if (y == parent_[x] && link == parent_link_[x]) continue;
      if (parent_.count(y)) throw PreconditionError("tree has a cycle");
      parent_[y] = x;
      parent_link_[y] = link;
      children_[x].push_back(y);
      order.push_back(y);
    }
  }
  if (order.size() != nodes.size()) throw PreconditionError("tree is disconnected");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int s = 1;
    for (int c : children_[*it]) s += size_[c];
    size_[*it] = s;
  }
}

bool RootedTree::IsAncestor(int a, int d) const {
  for (int x = d; x != 0; x = parent_.at(x)) {
    if (x == a) return true;
  }
  return false;
}

std::vector<int> RootedTree::Subtree(int v) const {
  std::vector<int> out;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    const auto& ch = children_.at(x);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

int Center(const RootedTree& t, int v, int v_prime) {
  if (!t.Has(v)) throw PreconditionError("no node " + std::to_string(v));
  if (v_prime == 0) {
    const int total = t.size(v);
    int best = 0;
    for (int c : t.Subtree(v)) {
      int largest = total - t.size(c);
      for (int ch : t.children(c)) largest = std::max(largest, t.size(ch));
      if (2 * largest <= total && (best == 0 || c < best)) best = c;
    }
    return best;
  }
  if (!t.Has(v_prime) || v_prime == v || !t.IsAncestor(v, v_prime)) {
    throw PreconditionError("node " + std::to_string(v_prime) +
                            " is not a proper descendant of " +
                            std::to_string(v));
  }
  std::vector<int> path;  // v = u_0, ..., u_k = v'
  for (int x = v_prime; x != v; x = t.parent(x)) path.push_back(x);
  path.push_back(v);
  std::reverse(path.begin(), path.end());
  const int total = t.size(v) - t.size(v_prime);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (2 * (t.size(path[i + 1]) - t.size(v_prime)) <= total) return path[i];
  }
  return path[path.size() - 2];
}

bool WorkingTree::IsAncestor(int a, int d) const {
  for (int x = d; x != 0; x = nodes.at(x).parent) {
    if (x == a) return true;
  }
  return false;
}

WorkingTree BuildWorkingTree(const std::vector<int>& nodes,
                             const std::vector<TreeLink>& links) {
  RootedTree t(nodes, links);
  WorkingTree wt;
  struct Piece {
    int v = 0;
    int v_prime = 0;
    int parent = 0;
    int link = 0;
  };
  std::vector<Piece> stack{{t.root(), 0, 0, 0}};
  while (!stack.empty()) {
    Piece p = stack.back();
    stack.pop_back();
    int c = Center(t, p.v, p.v_prime);
    WorkingTreeNode& node = wt.nodes[c];
    node.id = c;
    node.parent = p.parent;
    if (p.parent == 0) {
      wt.root = c;
    } else {
      wt.nodes.at(p.parent).children.push_back({c, p.link, 0});
    }
    std::vector<Piece> next;
    if (p.v_prime == 0) {
      for (int ch : t.children(c)) next.push_back({ch, 0, c, t.parent_link(ch)});
      if (c != p.v) next.push_back({p.v, c, c, t.parent_link(c)});
    } else {
      int on_path = 0;  // u_{i+1}
      for (int ch : t.children(c)) {
        if (t.IsAncestor(ch, p.v_prime)) {
          on_path = ch;
        } else {
          next.push_back({ch, 0, c, t.parent_link(ch)});
        }
      }
      if (on_path != p.v_prime) {
        next.push_back({on_path, p.v_prime, c, t.parent_link(on_path)});
      }
      if (c != p.v) next.push_back({p.v, c, c, t.parent_link(c)});
    }
    for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(*it);
  }
  for (auto& [id, node] : wt.nodes) {
    std::sort(node.children.begin(), node.children.end(),
              [](const auto& a, const auto& b) { return a.node < b.node; });
  }
  Annotate(&wt);
  return wt;
}

WorkingTree BuildWorkingTree(const ComponentTree& tree) {
  std::vector<int> nodes;
  for (const auto& [id, node] : tree.nodes) nodes.push_back(id);
  std::vector<TreeLink> links;
  for (const auto& [id, te] : tree.edges) links.push_back({id, te.nodes[0], te.nodes[1]});
  WorkingTree wt = BuildWorkingTree(nodes, links);
  for (auto& [id, node] : wt.nodes) {
    for (WorkingTreeChild& ch : node.children) {
      ch.clique = tree.edges.at(ch.link).CliqueAt(id);
    }
  }
  return wt;
}

void Annotate(WorkingTree* wt) {
  std::vector<int> order{wt->root};
  wt->nodes.at(wt->root).level = 1;
  wt->max_level = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    WorkingTreeNode& n = wt->nodes.at(order[i]);
    for (const WorkingTreeChild& ch : n.children) {
      wt->nodes.at(ch.node).level = n.level + 1;
      wt->max_level = std::max(wt->max_level, n.level + 1);
      order.push_back(ch.node);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    WorkingTreeNode& n = wt->nodes.at(*it);
    n.height = wt->max_level + 1 - n.level;
    n.leaves = n.children.empty() ? 1 : 0;
    for (const WorkingTreeChild& ch : n.children) n.leaves += wt->nodes.at(ch.node).leaves;
  }
}

}  // namespace isoweight
