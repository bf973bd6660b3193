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

#include "isoweight/normalize.h"

#include <algorithm>
#include <deque>
#include <functional>

#include "isoweight/error.h"

namespace isoweight {
namespace {

void SortClique(VirtualClique* c) {
  std::sort(c->vertices.begin(), c->vertices.end());
  std::sort(c->edges.begin(), c->edges.end());
}

// Renames `from` to `to` in the graph and cliques of `node`.
void RenameInNode(ComponentNode* node, VertexId from, VertexId to) {
  if (!node->graph.HasVertex(from)) return;
  node->graph.RenameVertex(from, to);
  for (VirtualClique& c : node->cliques) {
    std::replace(c.vertices.begin(), c.vertices.end(), from, to);
    SortClique(&c);
  }
  node->embedding.reset();
}

// Non-virtual edges at `v` inside the given nodes, ascending.
std::vector<EdgeId> NonVirtualAt(const ComponentTree& tree,
                                 const std::set<int>& region, VertexId v) {
  std::vector<EdgeId> out;
  for (int id : region) {
    const Multigraph& g = tree.nodes.at(id).graph;
    if (!g.HasVertex(v)) continue;
    for (EdgeId e : g.IncidentEdges(v)) {
      if (g.edge(e).tag != EdgeTag::kVirtual) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VirtualClique AddClique(ComponentNode* node, const std::vector<VertexId>& vs,
                        IdAllocator* ids) {
  VirtualClique c;
  c.id = ids->NewClique();
  c.vertices = vs;
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      EdgeId e = ids->NewEdge();
      node->graph.AddEdge(e, vs[i], vs[j], EdgeTag::kVirtual);
      c.edges.push_back(e);
    }
  }
  SortClique(&c);
  node->cliques.push_back(c);
  std::sort(node->cliques.begin(), node->cliques.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  return c;
}

void AddTreeEdge(ComponentTree* tree, int node_a, int clique_a, int node_b,
                 int clique_b, IdAllocator* ids) {
  TreeEdge te;
  te.id = ids->NewTreeEdge();
  te.nodes = {node_a, node_b};
  te.cliques = {clique_a, clique_b};
  tree->edges[te.id] = te;
}

// Splits planar node `nid` along triangle clique `tau`, whose removal leaves
// the components `comps`.
void SplitNodeAtClique(ComponentTree* tree, int nid, int tau,
                       const std::vector<std::vector<VertexId>>& comps,
                       IdAllocator* ids) {
  ComponentNode old = std::move(tree->nodes.at(nid));
  const VirtualClique& t = old.clique(tau);
  std::set<VertexId> in_tau(t.vertices.begin(), t.vertices.end());
  std::map<VertexId, int> side_of;
  for (size_t i = 0; i < comps.size(); ++i) {
    for (VertexId v : comps[i]) side_of[v] = static_cast<int>(i);
  }
  std::vector<ComponentNode> sides(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) {
    sides[i].id = i == 0 ? nid : ids->NewNode();
    sides[i].kind = NodeKind::kPlanar;
    for (VertexId v : comps[i]) sides[i].graph.AddVertex(v);
    for (VertexId v : t.vertices) sides[i].graph.AddVertex(v);
  }
  std::map<EdgeId, int> edge_side;
  std::map<int, int> clique_side;
  for (const VirtualClique& c : old.cliques) {
    int side = 0;
    for (VertexId v : c.vertices) {
      if (!in_tau.count(v)) side = side_of.at(v);
    }
    clique_side[c.id] = side;
    for (EdgeId e : c.edges) edge_side[e] = side;
    sides[side].cliques.push_back(c);
  }
  for (const auto& [id, e] : old.graph.edges()) {
    int side = 0;
    if (e.tag == EdgeTag::kVirtual) {
      side = edge_side.at(id);
    } else if (!in_tau.count(e.u)) {
      side = side_of.at(e.u);
    } else if (!in_tau.count(e.v)) {
      side = side_of.at(e.v);
    }
    sides[side].graph.AddEdge(e);
  }
  for (auto& [id, te] : tree->edges) {
    for (int k = 0; k < 2; ++k) {
      if (te.nodes[k] == nid) te.nodes[k] = sides[clique_side.at(te.cliques[k])].id;
    }
  }
  std::vector<VertexId> tau_vertices = t.vertices;
  for (size_t i = 1; i < sides.size(); ++i) {
    VirtualClique c = AddClique(&sides[i], tau_vertices, ids);
    AddTreeEdge(tree, nid, tau, sides[i].id, c.id, ids);
  }
  for (ComponentNode& side : sides) {
    int id = side.id;
    tree->nodes[id] = std::move(side);
  }
}

bool SplitOneTripletFace(ComponentTree* tree, IdAllocator* ids) {
  for (const auto& [nid, node] : tree->nodes) {
    if (node.kind != NodeKind::kPlanar) continue;
    for (const VirtualClique& c : node.cliques) {
      if (c.vertices.size() != 3) continue;
      std::set<VertexId> removed(c.vertices.begin(), c.vertices.end());
      auto comps = ComponentsWithout(node.graph, removed);
      if (comps.size() < 2) continue;
      SplitNodeAtClique(tree, nid, c.id, comps, ids);
      return true;
    }
  }
  return false;
}

struct Instance {
  int node = 0;
  int clique = 0;
  auto operator<=>(const Instance&) const = default;
};

// Sharers of one separating set, linked through tree edges.
std::vector<std::vector<Instance>> SharedGroups(const ComponentTree& tree) {
  std::map<Instance, Instance> parent;
  std::function<Instance(Instance)> find = [&](Instance x) {
    while (!(parent.at(x) == x)) x = parent.at(x);
    return x;
  };
  for (const auto& [id, te] : tree.edges) {
    for (int k = 0; k < 2; ++k) {
      Instance x{te.nodes[k], te.cliques[k]};
      parent.emplace(x, x);
    }
  }
  for (const auto& [id, te] : tree.edges) {
    Instance a = find({te.nodes[0], te.cliques[0]});
    Instance b = find({te.nodes[1], te.cliques[1]});
    if (!(a == b)) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<Instance, std::vector<Instance>> groups;
  for (const auto& [x, p] : parent) groups[find(x)].push_back(x);
  std::vector<std::vector<Instance>> out;
  for (auto& [root, members] : groups) {
    if (members.size() > 2) out.push_back(std::move(members));
  }
  return out;
}

// Heap indices 1..num_gadgets are gadgets; the rest are leaves.
void CollectLeaves(int index, int total, int num_gadgets,
                   std::vector<int>* out) {
  if (index > total) return;
  if (index > num_gadgets) {
    out->push_back(index);
    return;
  }
  CollectLeaves(2 * index, total, num_gadgets, out);
  CollectLeaves(2 * index + 1, total, num_gadgets, out);
}

void ReplaceGroup(ComponentTree* tree, std::vector<Instance> members,
                  IdAllocator* ids, TransformLog* log) {
  auto degree = [&](const Instance& x) {
    return tree->EdgesAtClique(x.node, x.clique).size();
  };
  std::sort(members.begin(), members.end(),
            [&](const Instance& a, const Instance& b) {
              size_t da = degree(a), db = degree(b);
              if (da != db) return da > db;
              return a < b;
            });
  Instance g1 = members.front();
  std::vector<Instance> leaves(members.begin() + 1, members.end());
  std::sort(leaves.begin(), leaves.end());
  for (const Instance& x : members) {
    for (int te : tree->EdgesAtClique(x.node, x.clique)) tree->edges.erase(te);
  }
  std::set<int> member_nodes;
  for (const Instance& x : members) {
    if (!member_nodes.insert(x.node).second) {
      throw VerificationError("node " + std::to_string(x.node) +
                              " holds one separating set twice");
    }
  }
  // Region of each leaf once the group's tree edges are gone.
  std::vector<std::set<int>> leaf_region;
  for (const Instance& x : leaves) {
    std::set<int> region{x.node};
    std::deque<int> queue{x.node};
    while (!queue.empty()) {
      int y = queue.front();
      queue.pop_front();
      for (int te : tree->EdgesAt(y)) {
        int z = tree->edges.at(te).Other(y);
        if (region.insert(z).second) queue.push_back(z);
      }
    }
    leaf_region.push_back(std::move(region));
  }

  const int m = static_cast<int>(members.size());
  const int num_gadgets = m - 2;
  const int total = 2 * m - 3;
  std::vector<VertexId> tau = tree->nodes.at(g1.node).clique(g1.clique).vertices;
  const size_t t = tau.size();

  GadgetRecord record;
  record.set = tau;
  record.root_sharer = g1.node;
  for (const Instance& x : leaves) record.leaves.push_back(x.node);

  struct GadgetIds {
    int node = 0;
    int a = 0, b = 0, c = 0;  // clique ids
    std::vector<VertexId> bv, cv;
  };
  std::vector<GadgetIds> gadgets(num_gadgets + 1);
  for (int i = 1; i <= num_gadgets; ++i) {
    std::vector<VertexId> av;
    if (i == 1) {
      av = tau;
    } else {
      const GadgetIds& p = gadgets[i / 2];
      av = i % 2 == 0 ? p.bv : p.cv;
    }
    ComponentNode x;
    x.id = ids->NewNode();
    x.kind = NodeKind::kConstant;
    x.gadget = true;
    for (VertexId v : av) x.graph.AddVertex(v);
    GadgetIds& gi = gadgets[i];
    gi.node = x.id;
    std::vector<int> b_leaves, c_leaves;
    CollectLeaves(2 * i, total, num_gadgets, &b_leaves);
    CollectLeaves(2 * i + 1, total, num_gadgets, &c_leaves);
    auto region_of = [&](const std::vector<int>& heap) {
      std::set<int> r;
      for (int h : heap) {
        const auto& lr = leaf_region[h - num_gadgets - 1];
        r.insert(lr.begin(), lr.end());
      }
      return r;
    };
    std::set<int> b_region = region_of(b_leaves);
    std::set<int> c_region = region_of(c_leaves);
    for (size_t k = 0; k < t; ++k) {
      for (int side = 0; side < 2; ++side) {
        const std::set<int>& region = side == 0 ? b_region : c_region;
        VertexSplitRecord r;
        r.v = av[k];
        r.mid = ids->NewVertex();
        r.split = ids->NewVertex();
        r.moved = NonVirtualAt(*tree, region, av[k]);
        for (int id : region) RenameInNode(&tree->nodes.at(id), av[k], r.split);
        r.aux_near = ids->NewEdge();
        r.aux_far = ids->NewEdge();
        x.graph.AddVertex(r.mid);
        x.graph.AddVertex(r.split);
        x.graph.AddEdge(r.aux_near, r.v, r.mid, EdgeTag::kAuxiliary);
        x.graph.AddEdge(r.aux_far, r.mid, r.split, EdgeTag::kAuxiliary);
        (side == 0 ? gi.bv : gi.cv).push_back(r.split);
        record.splits.push_back(std::move(r));
      }
    }
    gi.a = AddClique(&x, av, ids).id;
    gi.b = AddClique(&x, gi.bv, ids).id;
    gi.c = AddClique(&x, gi.cv, ids).id;
    record.gadgets.push_back(x.id);
    tree->nodes[x.id] = std::move(x);
  }
  for (int i = 1; i <= num_gadgets; ++i) {
    if (i == 1) {
      AddTreeEdge(tree, g1.node, g1.clique, gadgets[1].node, gadgets[1].a, ids);
    } else {
      const GadgetIds& p = gadgets[i / 2];
      AddTreeEdge(tree, p.node, i % 2 == 0 ? p.b : p.c, gadgets[i].node,
                  gadgets[i].a, ids);
    }
  }
  for (int h = num_gadgets + 1; h <= total; ++h) {
    const GadgetIds& p = gadgets[h / 2];
    const Instance& leaf = leaves[h - num_gadgets - 1];
    AddTreeEdge(tree, p.node, h % 2 == 0 ? p.b : p.c, leaf.node, leaf.clique,
                ids);
  }
  log->push_back(std::move(record));
}

}  // namespace

std::pair<Multigraph, VertexSplitRecord> VertexSplit(
    const Multigraph& g, VertexId v, const std::vector<EdgeId>& x1,
    const std::vector<EdgeId>& x2, IdAllocator* ids) {
  if (!g.HasVertex(v)) {
    throw PreconditionError("no vertex " + std::to_string(v));
  }
  std::set<EdgeId> at_v;
  for (EdgeId e : g.IncidentEdges(v)) {
    if (g.edge(e).is_loop()) {
      throw PreconditionError("cannot split vertex " + std::to_string(v) +
                              " carrying loop " + std::to_string(e));
    }
    at_v.insert(e);
  }
  std::set<EdgeId> given;
  for (const auto* part : {&x1, &x2}) {
    for (EdgeId e : *part) {
      if (!at_v.count(e) || !given.insert(e).second) {
        throw PreconditionError("edge sets do not partition the edges at " +
                                std::to_string(v));
      }
    }
  }
  if (given != at_v) {
    throw PreconditionError("edge sets do not partition the edges at " +
                            std::to_string(v));
  }
  VertexSplitRecord r;
  r.v = v;
  r.mid = ids->NewVertex();
  r.split = ids->NewVertex();
  r.aux_near = ids->NewEdge();
  r.aux_far = ids->NewEdge();
  r.moved = x2;
  std::sort(r.moved.begin(), r.moved.end());
  Multigraph out = g;
  ApplyVertexSplit(r, &out);
  return {std::move(out), std::move(r)};
}

void ApplyVertexSplit(const VertexSplitRecord& r, Multigraph* g) {
  g->AddVertex(r.mid);
  g->AddVertex(r.split);
  for (EdgeId e : r.moved) g->ReplaceEndpoint(e, r.v, r.split);
  g->AddEdge(r.aux_near, r.v, r.mid, EdgeTag::kAuxiliary);
  g->AddEdge(r.aux_far, r.mid, r.split, EdgeTag::kAuxiliary);
}

void RemoveThreeBonds(ComponentForest* forest) {
  for (ComponentTree& tree : forest->trees) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [nid, node] : tree.nodes) {
        if (node.graph.num_vertices() != 2) continue;
        if (node.CountNonVirtualEdges() != 1) continue;
        if (node.graph.CountEdges(EdgeTag::kVirtual) < 2) continue;
        std::vector<int> tes = tree.EdgesAt(nid);
        if (tes.empty()) continue;
        int host = tree.edges.at(tes.front()).Other(nid);
        int host_te = tes.front();
        for (int te : tes) {
          int other = tree.edges.at(te).Other(nid);
          if (other < host) {
            host = other;
            host_te = te;
          }
        }
        int host_clique = tree.edges.at(host_te).CliqueAt(host);
        EdgeId moved = 0;
        for (const auto& [id, e] : node.graph.edges()) {
          if (e.tag != EdgeTag::kVirtual) {
            moved = id;
            tree.nodes.at(host).graph.AddEdge(e);
          }
        }
        tree.edges.erase(host_te);
        for (auto& [id, te] : tree.edges) {
          for (int k = 0; k < 2; ++k) {
            if (te.nodes[k] == nid) {
              te.nodes[k] = host;
              te.cliques[k] = host_clique;
            }
          }
        }
        tree.nodes.at(host).embedding.reset();
        forest->log.push_back(ThreeBondMergeRecord{nid, host, moved});
        tree.nodes.erase(nid);
        changed = true;
        break;
      }
    }
  }
}

void SplitTripletFaces(ComponentForest* forest) {
  for (ComponentTree& tree : forest->trees) {
    while (SplitOneTripletFace(&tree, &forest->ids)) {
    }
  }
}

void DedupSeparatingSets(ComponentForest* forest) {
  for (ComponentTree& tree : forest->trees) {
    for (auto& group : SharedGroups(tree)) {
      ReplaceGroup(&tree, std::move(group), &forest->ids, &forest->log);
    }
  }
}

void StarSplit(ComponentForest* forest) {
  IdAllocator& ids = forest->ids;
  for (ComponentTree& tree : forest->trees) {
    std::vector<int> node_ids;
    for (const auto& [id, node] : tree.nodes) node_ids.push_back(id);
    for (int nid : node_ids) {
      std::vector<VertexId> vs(tree.nodes.at(nid).graph.vertices().begin(),
                               tree.nodes.at(nid).graph.vertices().end());
      for (VertexId a : vs) {
        std::vector<int> holding;
        for (const VirtualClique& c : tree.nodes.at(nid).cliques) {
          if (std::binary_search(c.vertices.begin(), c.vertices.end(), a)) {
            holding.push_back(c.id);
          }
        }
        if (holding.size() < 2) continue;
        for (int cid : holding) {
          std::vector<int> tes = tree.EdgesAtClique(nid, cid);
          if (tes.size() != 1) {
            throw VerificationError("clique " + std::to_string(cid) +
                                    " is not shared by exactly two nodes");
          }
          std::set<int> region = tree.Region(nid, tes.front());
          VertexSplitRecord r;
          r.v = a;
          r.mid = ids.NewVertex();
          r.split = ids.NewVertex();
          r.moved = NonVirtualAt(tree, region, a);
          for (int id : region) RenameInNode(&tree.nodes.at(id), a, r.split);
          ComponentNode& node = tree.nodes.at(nid);
          VirtualClique& c = node.clique(cid);
          for (EdgeId e : c.edges) {
            const Edge& ve = node.graph.edge(e);
            if (ve.u == a || ve.v == a) node.graph.ReplaceEndpoint(e, a, r.split);
          }
          std::replace(c.vertices.begin(), c.vertices.end(), a, r.split);
          SortClique(&c);
          r.aux_near = ids.NewEdge();
          r.aux_far = ids.NewEdge();
          node.graph.AddVertex(r.mid);
          node.graph.AddEdge(r.aux_near, a, r.mid, EdgeTag::kAuxiliary);
          node.graph.AddEdge(r.aux_far, r.mid, r.split, EdgeTag::kAuxiliary);
          node.embedding.reset();
          forest->log.push_back(std::move(r));
        }
      }
    }
  }
}

void EmbedPlanarNodes(ComponentForest* forest) {
  for (ComponentTree& tree : forest->trees) {
    for (auto& [id, node] : tree.nodes) {
      if (node.kind != NodeKind::kPlanar) continue;
      std::vector<std::array<EdgeId, 3>> triangles;
      for (const VirtualClique& c : node.cliques) {
        if (c.edges.size() == 3) triangles.push_back({c.edges[0], c.edges[1], c.edges[2]});
      }
      node.embedding = EmbedWithFacialTriangles(node.graph, triangles);
    }
  }
}

ComponentForest Normalize(const ComponentForest& input) {
  ComponentForest forest = input;
  RemoveThreeBonds(&forest);
  SplitTripletFaces(&forest);
  DedupSeparatingSets(&forest);
  StarSplit(&forest);
  EmbedPlanarNodes(&forest);
  for (const ComponentTree& tree : forest.trees) ValidateTree(tree);
  StructureReport report = CheckStructure(forest);
  if (!report.ok()) {
    throw VerificationError("normalized forest violates: " +
                            report.violations.front());
  }
  return forest;
}

StructureReport CheckStructure(const ComponentForest& forest) {
  StructureReport report;
  const int bound = forest.mode == Mode::kK33 ? 50 : 60;
  auto fail = [&](int node, const std::string& what) {
    report.violations.push_back("node " + std::to_string(node) + ": " + what);
  };
  for (const ComponentTree& tree : forest.trees) {
    for (const auto& [nid, node] : tree.nodes) {
      std::map<VertexId, int> clique_count;
      for (const VirtualClique& c : node.cliques) {
        for (VertexId v : c.vertices) {
          if (++clique_count[v] == 2) {
            fail(nid, "vertex " + std::to_string(v) + " lies in two cliques");
          }
        }
        if (tree.EdgesAtClique(nid, c.id).size() != 1) {
          fail(nid, "clique " + std::to_string(c.id) +
                        " is not shared by exactly two nodes");
        }
      }
      if (node.kind == NodeKind::kPlanar) {
        if (!node.embedding) {
          fail(nid, "planar node is not embedded");
          continue;
        }
        for (const VirtualClique& c : node.cliques) {
          if (c.edges.size() == 3 &&
              FindFaceWithEdges(*node.embedding, c.edges) < 0) {
            fail(nid, "triangle clique " + std::to_string(c.id) +
                          " does not bound a face");
          }
        }
      } else {
        int edges = node.CountNonVirtualEdges();
        if (node.gadget) {
          report.max_gadget_edges = std::max(report.max_gadget_edges, edges);
          if (edges > 12) fail(nid, "gadget has " + std::to_string(edges) + " edges");
        } else {
          report.max_constant_edges = std::max(report.max_constant_edges, edges);
          if (edges > bound) {
            fail(nid, "constant node has " + std::to_string(edges) + " edges");
          }
        }
      }
    }
  }
  return report;
}

Multigraph ReplayForward(const Multigraph& original, const TransformLog& log) {
  Multigraph g = original;
  for (const TransformRecord& rec : log) {
    if (const auto* d = std::get_if<EdgeDeletionRecord>(&rec)) {
      g.RemoveEdge(d->edge);
    } else if (const auto* s = std::get_if<VertexSplitRecord>(&rec)) {
      ApplyVertexSplit(*s, &g);
    } else if (const auto* gr = std::get_if<GadgetRecord>(&rec)) {
      for (const VertexSplitRecord& r : gr->splits) ApplyVertexSplit(r, &g);
    }
  }
  return g;
}

namespace {

bool SameEdges(const Multigraph& a, const Multigraph& b) {
  if (a.vertices() != b.vertices() || a.num_edges() != b.num_edges()) return false;
  for (const auto& [id, e] : a.edges()) {
    if (!b.HasEdge(id)) return false;
    const Edge& f = b.edge(id);
    if (std::minmax(e.u, e.v) != std::minmax(f.u, f.v)) return false;
  }
  return true;
}

void UndoSplit(const VertexSplitRecord& r, Multigraph* g, std::set<EdgeId>* m) {
  bool near = m->count(r.aux_near) > 0;
  bool far = m->count(r.aux_far) > 0;
  if (near == far) {
    throw PreconditionError("matching covers the split path at vertex " +
                            std::to_string(r.v) + " incorrectly");
  }
  m->erase(r.aux_near);
  m->erase(r.aux_far);
  g->RemoveVertex(r.mid);
  for (EdgeId e : r.moved) g->ReplaceEndpoint(e, r.split, r.v);
  if (g->Degree(r.split) != 0) {
    throw PreconditionError("split vertex " + std::to_string(r.split) +
                            " keeps edges after undo");
  }
  g->RemoveVertex(r.split);
}

}  // namespace

Matching MapMatchingBack(const Multigraph& normalized, const Matching& m,
                         const TransformLog& log, const Multigraph& original) {
  if (!IsPerfectMatching(normalized, m)) {
    throw PreconditionError("matching is not perfect in the normalized graph");
  }
  Multigraph g = normalized;
  std::set<EdgeId> in(m.begin(), m.end());
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    if (const auto* d = std::get_if<EdgeDeletionRecord>(&*it)) {
      g.AddEdge(d->edge, d->u, d->v, original.HasEdge(d->edge)
                                         ? original.edge(d->edge).tag
                                         : EdgeTag::kReal);
    } else if (const auto* s = std::get_if<VertexSplitRecord>(&*it)) {
      UndoSplit(*s, &g, &in);
    } else if (const auto* gr = std::get_if<GadgetRecord>(&*it)) {
      for (auto r = gr->splits.rbegin(); r != gr->splits.rend(); ++r) {
        UndoSplit(*r, &g, &in);
      }
    }
  }
  if (!SameEdges(g, original)) {
    throw VerificationError("log replay does not restore the input graph");
  }
  Matching out(in.begin(), in.end());
  if (!IsPerfectMatching(original, out)) {
    throw VerificationError("mapped matching is not perfect");
  }
  return out;
}

}  // namespace isoweight
