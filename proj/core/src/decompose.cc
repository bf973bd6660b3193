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

#include "isoweight/decompose.h"

#include <algorithm>
#include <deque>
#include <functional>

#include "isoweight/error.h"

namespace isoweight {
namespace {

std::vector<VertexId> ComponentOf(const Multigraph& g, VertexId s) {
  std::vector<VertexId> comp{s};
  std::set<VertexId> seen{s};
  for (size_t i = 0; i < comp.size(); ++i) {
    for (VertexId y : g.Neighbors(comp[i])) {
      if (seen.insert(y).second) comp.push_back(y);
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

Multigraph Induced(const Multigraph& g, const std::vector<VertexId>& vs) {
  Multigraph out;
  std::set<VertexId> in(vs.begin(), vs.end());
  for (VertexId v : vs) out.AddVertex(v);
  for (const auto& [id, e] : g.edges()) {
    if (in.count(e.u) && in.count(e.v)) out.AddEdge(e);
  }
  return out;
}

bool Adjacent(const Multigraph& g, VertexId a, VertexId b) {
  for (EdgeId id : g.IncidentEdges(a)) {
    if (g.edge(id).Other(a) == b) return true;
  }
  return false;
}

struct Piece {
  Multigraph graph;
  std::vector<VirtualClique> cliques;
};

class TreeBuilder {
 public:
  TreeBuilder(Mode mode, IdAllocator* ids) : mode_(mode), ids_(ids) {}

  ComponentTree Build(const Multigraph& block) {
    Process(Piece{block, {}});
    std::map<int, int> node_of_clique;
    for (const auto& [id, node] : tree_.nodes) {
      for (const VirtualClique& c : node.cliques) node_of_clique[c.id] = id;
    }
    for (const auto& [a, b] : links_) {
      TreeEdge te;
      te.id = ids_->NewTreeEdge();
      te.nodes = {node_of_clique.at(a), node_of_clique.at(b)};
      te.cliques = {a, b};
      tree_.edges[te.id] = te;
    }
    return std::move(tree_);
  }

 private:
  void Emit(Piece piece, NodeKind kind) {
    ComponentNode node;
    node.id = ids_->NewNode();
    node.graph = std::move(piece.graph);
    node.kind = kind;
    node.cliques = std::move(piece.cliques);
    std::sort(node.cliques.begin(), node.cliques.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    tree_.nodes[node.id] = std::move(node);
  }

  void Process(Piece piece) {
    if (IsPlanar(piece.graph)) {
      Emit(std::move(piece), NodeKind::kPlanar);
      return;
    }
    std::vector<VertexId> set = FindSeparatingPair(piece.graph);
    if (set.empty() && mode_ == Mode::kK5) {
      set = FindSeparatingTriplet(piece.graph, /*require_clique=*/true,
                                  /*require_nontrivial=*/false);
      if (set.empty() && IsV8(piece.graph)) {
        Emit(std::move(piece), NodeKind::kConstant);
        return;
      }
      if (set.empty()) {
        set = FindSeparatingTriplet(piece.graph, /*require_clique=*/false,
                                    /*require_nontrivial=*/true);
      }
      if (set.empty()) {
        set = FindSeparatingTriplet(piece.graph, /*require_clique=*/false,
                                    /*require_nontrivial=*/false);
      }
    }
    if (set.empty()) {
      if (mode_ == Mode::kK33 && IsK5(piece.graph)) {
        Emit(std::move(piece), NodeKind::kConstant);
        return;
      }
      std::vector<VertexId> vs(piece.graph.vertices().begin(),
                               piece.graph.vertices().end());
      std::vector<EdgeId> es;
      for (const auto& [id, e] : piece.graph.edges()) es.push_back(id);
      throw OutOfClassError(
          std::string("non-planar piece without a separating set, not an "
                      "allowed constant graph (mode ") +
              ModeName(mode_) + ")",
          vs, es);
    }
    for (Piece& side : Split(piece, set)) Process(std::move(side));
  }

  std::vector<Piece> Split(const Piece& piece, const std::vector<VertexId>& set) {
    std::set<VertexId> s(set.begin(), set.end());
    auto comps = ComponentsWithout(piece.graph, s);
    std::map<VertexId, int> side_of;
    for (size_t i = 0; i < comps.size(); ++i) {
      for (VertexId v : comps[i]) side_of[v] = static_cast<int>(i);
    }
    std::vector<Piece> sides(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) {
      for (VertexId v : comps[i]) sides[i].graph.AddVertex(v);
      for (VertexId v : set) sides[i].graph.AddVertex(v);
    }
    std::map<EdgeId, int> clique_side;
    for (const VirtualClique& c : piece.cliques) {
      int side = 0;
      for (VertexId v : c.vertices) {
        if (!s.count(v)) side = side_of.at(v);
      }
      for (EdgeId e : c.edges) clique_side[e] = side;
      sides[side].cliques.push_back(c);
    }
    for (const auto& [id, e] : piece.graph.edges()) {
      int side = 0;
      if (e.tag == EdgeTag::kVirtual) {
        side = clique_side.at(id);
      } else if (!s.count(e.u)) {
        side = side_of.at(e.u);
      } else if (!s.count(e.v)) {
        side = side_of.at(e.v);
      }
      sides[side].graph.AddEdge(e);
    }
    std::vector<int> fresh;
    for (Piece& side : sides) {
      VirtualClique c;
      c.id = ids_->NewClique();
      c.vertices = set;
      for (size_t i = 0; i < set.size(); ++i) {
        for (size_t j = i + 1; j < set.size(); ++j) {
          EdgeId e = ids_->NewEdge();
          side.graph.AddEdge(e, set[i], set[j], EdgeTag::kVirtual);
          c.edges.push_back(e);
        }
      }
      fresh.push_back(c.id);
      side.cliques.push_back(std::move(c));
    }
    for (size_t i = 1; i < fresh.size(); ++i) links_.push_back({fresh[0], fresh[i]});
    return sides;
  }

  Mode mode_;
  IdAllocator* ids_;
  ComponentTree tree_;
  std::vector<std::pair<int, int>> links_;
};

}  // namespace

std::vector<std::vector<VertexId>> ComponentsWithout(
    const Multigraph& g, const std::set<VertexId>& removed) {
  std::vector<std::vector<VertexId>> out;
  std::set<VertexId> seen(removed.begin(), removed.end());
  for (VertexId s : g.vertices()) {
    if (seen.count(s)) continue;
    std::vector<VertexId> comp{s};
    seen.insert(s);
    for (size_t i = 0; i < comp.size(); ++i) {
      for (VertexId y : g.Neighbors(comp[i])) {
        if (seen.insert(y).second) comp.push_back(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

const char* ModeName(Mode mode) { return mode == Mode::kK33 ? "k33" : "k5"; }

Mode ParseMode(const std::string& name) {
  if (name == "k33") return Mode::kK33;
  if (name == "k5") return Mode::kK5;
  throw ParseError("unknown mode '" + name + "'", 0);
}

const VirtualClique& ComponentNode::clique(int id) const {
  for (const VirtualClique& c : cliques) {
    if (c.id == id) return c;
  }
  throw PreconditionError("node " + std::to_string(this->id) + " has no clique " +
                          std::to_string(id));
}

VirtualClique& ComponentNode::clique(int id) {
  return const_cast<VirtualClique&>(
      static_cast<const ComponentNode*>(this)->clique(id));
}

bool ComponentNode::HasClique(int id) const {
  for (const VirtualClique& c : cliques) {
    if (c.id == id) return true;
  }
  return false;
}

const VirtualClique* ComponentNode::CliqueOfEdge(EdgeId e) const {
  for (const VirtualClique& c : cliques) {
    if (std::binary_search(c.edges.begin(), c.edges.end(), e)) return &c;
  }
  return nullptr;
}

int ComponentNode::CountNonVirtualEdges() const {
  return graph.num_edges() - graph.CountEdges(EdgeTag::kVirtual);
}

std::vector<int> ComponentTree::EdgesAt(int node) const {
  std::vector<int> out;
  for (const auto& [id, te] : edges) {
    if (te.nodes[0] == node || te.nodes[1] == node) out.push_back(id);
  }
  return out;
}

std::vector<int> ComponentTree::EdgesAtClique(int node, int clique) const {
  std::vector<int> out;
  for (const auto& [id, te] : edges) {
    if ((te.nodes[0] == node && te.cliques[0] == clique) ||
        (te.nodes[1] == node && te.cliques[1] == clique)) {
      out.push_back(id);
    }
  }
  return out;
}

std::set<int> ComponentTree::Region(int node, int edge) const {
  std::set<int> region;
  std::deque<int> queue{edges.at(edge).Other(node)};
  region.insert(queue.front());
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int te : EdgesAt(x)) {
      if (te == edge) continue;
      int y = edges.at(te).Other(x);
      if (region.insert(y).second) queue.push_back(y);
    }
  }
  return region;
}

std::vector<int> ComponentTree::NodesWithVertex(VertexId v) const {
  std::vector<int> out;
  for (const auto& [id, node] : nodes) {
    if (node.graph.HasVertex(v)) out.push_back(id);
  }
  return out;
}

int ComponentTree::NodeOfEdge(EdgeId e) const {
  for (const auto& [id, node] : nodes) {
    if (node.graph.HasEdge(e) &&
        node.graph.edge(e).tag != EdgeTag::kVirtual) {
      return id;
    }
  }
  return 0;
}

PreprocessResult Preprocess(const Multigraph& input) {
  PreprocessResult out;
  out.graph = input;
  Multigraph& g = out.graph;
  for (const auto& [id, e] : input.edges()) {
    if (e.is_loop()) {
      g.RemoveEdge(id);
      out.deleted.push_back({id, e.u, e.v});
    }
  }
  for (const auto& comp : ComponentsWithout(g, {})) {
    if (comp.size() % 2 == 1) out.no_perfect_matching = true;
  }
  std::set<VertexId> obstructed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId a : g.vertices()) {
      if (obstructed.count(a)) continue;
      Multigraph local = Induced(g, ComponentOf(g, a));
      auto parts = ComponentsWithout(local, {a});
      if (parts.size() < 2) continue;
      int odd = 0;
      for (const auto& p : parts) odd += p.size() % 2;
      if (odd != 1) {
        obstructed.insert(a);
        out.no_perfect_matching = true;
        continue;
      }
      for (const auto& p : parts) {
        if (p.size() % 2 == 1) continue;
        std::set<VertexId> even(p.begin(), p.end());
        for (EdgeId id : g.IncidentEdges(a)) {
          const Edge& e = g.edge(id);
          if (even.count(e.Other(a))) {
            out.deleted.push_back({id, e.u, e.v});
            g.RemoveEdge(id);
          }
        }
      }
      changed = true;
      break;
    }
  }
  return out;
}

std::vector<Multigraph> Blocks(const Multigraph& g) {
  std::map<VertexId, int> disc;
  std::map<VertexId, int> low;
  std::vector<EdgeId> stack;
  std::vector<std::vector<EdgeId>> groups;
  int clock = 0;
  std::function<void(VertexId, EdgeId)> dfs = [&](VertexId u, EdgeId via) {
    disc[u] = low[u] = ++clock;
    for (EdgeId id : g.IncidentEdges(u)) {
      const Edge& e = g.edge(id);
      if (e.is_loop() || id == via) continue;
      VertexId w = e.Other(u);
      if (!disc.count(w)) {
        stack.push_back(id);
        dfs(w, id);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<EdgeId> group;
          while (true) {
            EdgeId top = stack.back();
            stack.pop_back();
            group.push_back(top);
            if (top == id) break;
          }
          groups.push_back(std::move(group));
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back(id);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (VertexId v : g.vertices()) {
    if (!disc.count(v)) dfs(v, 0);
  }
  std::vector<Multigraph> blocks;
  for (const auto& group : groups) {
    Multigraph b;
    for (EdgeId id : group) {
      b.AddVertex(g.edge(id).u);
      b.AddVertex(g.edge(id).v);
    }
    std::vector<EdgeId> sorted = group;
    std::sort(sorted.begin(), sorted.end());
    for (EdgeId id : sorted) b.AddEdge(g.edge(id));
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return a.edges().begin()->first < b.edges().begin()->first;
  });
  for (const auto& [id, e] : g.edges()) {
    if (!e.is_loop()) continue;
    Multigraph* home = nullptr;
    for (Multigraph& b : blocks) {
      if (b.HasVertex(e.u)) {
        home = &b;
        break;
      }
    }
    if (home == nullptr) {
      blocks.emplace_back();
      home = &blocks.back();
      home->AddVertex(e.u);
    }
    home->AddEdge(e);
  }
  return blocks;
}

std::vector<VertexId> FindSeparatingPair(const Multigraph& g) {
  std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  if (vs.size() < 4) return {};
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (ComponentsWithout(g, {vs[i], vs[j]}).size() >= 2) {
        return {vs[i], vs[j]};
      }
    }
  }
  return {};
}

std::vector<VertexId> FindSeparatingTriplet(const Multigraph& g,
                                            bool require_clique,
                                            bool require_nontrivial) {
  std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  if (vs.size() < 5) return {};
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (require_clique && !Adjacent(g, vs[i], vs[j])) continue;
      for (size_t k = j + 1; k < vs.size(); ++k) {
        if (require_clique &&
            (!Adjacent(g, vs[i], vs[k]) || !Adjacent(g, vs[j], vs[k]))) {
          continue;
        }
        auto comps = ComponentsWithout(g, {vs[i], vs[j], vs[k]});
        if (comps.size() < 2) continue;
        if (require_nontrivial &&
            std::any_of(comps.begin(), comps.end(),
                        [](const auto& c) { return c.size() < 2; })) {
          continue;
        }
        return {vs[i], vs[j], vs[k]};
      }
    }
  }
  return {};
}

bool IsV8(const Multigraph& g) {
  if (g.num_vertices() != 8) return false;
  std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  std::map<VertexId, std::set<VertexId>> adj;
  for (VertexId v : vs) {
    auto n = g.Neighbors(v);
    if (n.size() != 3) return false;
    adj[v] = {n.begin(), n.end()};
  }
  // Position i of the ladder is adjacent to i +- 1 and i + 4 (mod 8).
  auto linked = [](int i, int j) {
    int d = (i - j + 8) % 8;
    return d == 1 || d == 7 || d == 4;
  };
  std::vector<VertexId> at(8, 0);
  std::set<VertexId> used;
  std::function<bool(int)> place = [&](int i) {
    if (i == 8) return true;
    for (VertexId v : vs) {
      if (used.count(v)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        ok = linked(i, j) == (adj[v].count(at[j]) > 0);
      }
      if (!ok) continue;
      at[i] = v;
      used.insert(v);
      if (place(i + 1)) return true;
      used.erase(v);
    }
    return false;
  };
  return place(0);
}

bool IsK5(const Multigraph& g) {
  if (g.num_vertices() != 5) return false;
  for (VertexId v : g.vertices()) {
    if (g.Neighbors(v).size() != 4) return false;
  }
  return true;
}

ComponentTree BuildComponentTree(const Multigraph& block, Mode mode,
                                 IdAllocator* ids) {
  return TreeBuilder(mode, ids).Build(block);
}

ComponentForest Decompose(const Multigraph& g, Mode mode) {
  ComponentForest forest;
  forest.mode = mode;
  forest.vertices = g.vertices();
  forest.ids.next_vertex = g.MaxVertexId() + 1;
  forest.ids.next_edge = g.MaxEdgeId() + 1;
  PreprocessResult pre = Preprocess(g);
  forest.no_perfect_matching = pre.no_perfect_matching;
  for (const EdgeDeletionRecord& r : pre.deleted) forest.log.push_back(r);
  for (const Multigraph& block : Blocks(pre.graph)) {
    forest.trees.push_back(BuildComponentTree(block, mode, &forest.ids));
  }
  return forest;
}

Multigraph Glue(const ComponentTree& tree) {
  Multigraph out;
  for (const auto& [id, node] : tree.nodes) {
    for (VertexId v : node.graph.vertices()) out.AddVertex(v);
  }
  for (const auto& [id, node] : tree.nodes) {
    for (const auto& [eid, e] : node.graph.edges()) {
      if (e.tag != EdgeTag::kVirtual) out.AddEdge(e);
    }
  }
  return out;
}

Multigraph Glue(const ComponentForest& forest) {
  Multigraph out;
  for (VertexId v : forest.vertices) out.AddVertex(v);
  for (const ComponentTree& tree : forest.trees) {
    Multigraph part = Glue(tree);
    for (VertexId v : part.vertices()) out.AddVertex(v);
    for (const auto& [id, e] : part.edges()) out.AddEdge(e);
  }
  return out;
}

void ValidateTree(const ComponentTree& tree) {
  auto fail = [](const std::string& what) { throw VerificationError(what); };
  if (tree.nodes.empty()) fail("empty component tree");
  if (tree.edges.size() + 1 != tree.nodes.size()) {
    fail("tree edge count is not node count minus one");
  }
  std::set<int> reached{tree.nodes.begin()->first};
  std::deque<int> queue{tree.nodes.begin()->first};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int te : tree.EdgesAt(x)) {
      if (reached.insert(tree.edges.at(te).Other(x)).second) {
        queue.push_back(tree.edges.at(te).Other(x));
      }
    }
  }
  if (reached.size() != tree.nodes.size()) fail("component tree is not connected");
  for (const auto& [id, te] : tree.edges) {
    const VirtualClique* sides[2];
    for (int k = 0; k < 2; ++k) {
      auto it = tree.nodes.find(te.nodes[k]);
      if (it == tree.nodes.end() || !it->second.HasClique(te.cliques[k])) {
        fail("tree edge " + std::to_string(id) + " names a missing clique");
      }
      sides[k] = &it->second.clique(te.cliques[k]);
    }
    if (sides[0]->vertices != sides[1]->vertices) {
      fail("tree edge " + std::to_string(id) + " joins different sets");
    }
  }
  for (const auto& [id, node] : tree.nodes) {
    std::map<EdgeId, int> owner;
    for (const VirtualClique& c : node.cliques) {
      size_t t = c.vertices.size();
      if ((t != 2 && t != 3) || c.edges.size() != (t == 2 ? 1u : 3u)) {
        fail("clique " + std::to_string(c.id) + " has the wrong shape");
      }
      for (EdgeId e : c.edges) {
        if (!node.graph.HasEdge(e) ||
            node.graph.edge(e).tag != EdgeTag::kVirtual) {
          fail("clique " + std::to_string(c.id) + " lists a non-virtual edge");
        }
        const Edge& ed = node.graph.edge(e);
        if (!std::binary_search(c.vertices.begin(), c.vertices.end(), ed.u) ||
            !std::binary_search(c.vertices.begin(), c.vertices.end(), ed.v) ||
            ed.is_loop()) {
          fail("virtual edge " + std::to_string(e) + " leaves its clique");
        }
        if (!owner.emplace(e, c.id).second) {
          fail("virtual edge " + std::to_string(e) + " in two cliques");
        }
      }
    }
    for (const auto& [eid, e] : node.graph.edges()) {
      if (e.tag == EdgeTag::kVirtual && !owner.count(eid)) {
        fail("virtual edge " + std::to_string(eid) + " has no clique");
      }
    }
  }
}

}  // namespace isoweight
