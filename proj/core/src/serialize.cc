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

#include "isoweight/serialize.h"

#include <algorithm>
#include <json.hpp>

#include "isoweight/error.h"

namespace isoweight {
namespace {

using Json = nlohmann::json;

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json Parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), 0);
  }
}

// Runs `f`, turning JSON access errors into ParseError.
template <typename F>
auto Guard(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("unexpected JSON layout: ") + e.what(), 0);
  }
}

EdgeTag ParseTag(const std::string& s) {
  if (s == "real") return EdgeTag::kReal;
  if (s == "virtual") return EdgeTag::kVirtual;
  if (s == "auxiliary") return EdgeTag::kAuxiliary;
  throw ParseError("unknown edge tag '" + s + "'", 0);
}

Json SplitJson(const VertexSplitRecord& r) {
  return Json{{"type", "vertex_split"}, {"v", r.v},
              {"mid", r.mid},           {"split", r.split},
              {"aux_near", r.aux_near}, {"aux_far", r.aux_far},
              {"moved", r.moved}};
}

VertexSplitRecord SplitFromJson(const Json& j) {
  VertexSplitRecord r;
  r.v = j.at("v");
  r.mid = j.at("mid");
  r.split = j.at("split");
  r.aux_near = j.at("aux_near");
  r.aux_far = j.at("aux_far");
  r.moved = j.at("moved").get<std::vector<EdgeId>>();
  return r;
}

Json LogJson(const TransformLog& log) {
  Json out = Json::array();
  for (const TransformRecord& rec : log) {
    if (const auto* d = std::get_if<EdgeDeletionRecord>(&rec)) {
      out.push_back({{"type", "edge_deletion"}, {"edge", d->edge}, {"u", d->u}, {"v", d->v}});
    } else if (const auto* s = std::get_if<VertexSplitRecord>(&rec)) {
      out.push_back(SplitJson(*s));
    } else if (const auto* g = std::get_if<GadgetRecord>(&rec)) {
      Json splits = Json::array();
      for (const auto& r : g->splits) splits.push_back(SplitJson(r));
      out.push_back({{"type", "gadget"},
                     {"set", g->set},
                     {"root_sharer", g->root_sharer},
                     {"gadgets", g->gadgets},
                     {"leaves", g->leaves},
                     {"splits", splits}});
    } else if (const auto* b = std::get_if<ThreeBondMergeRecord>(&rec)) {
      out.push_back({{"type", "three_bond_merge"},
                     {"removed_node", b->removed_node},
                     {"host_node", b->host_node},
                     {"edge", b->edge}});
    }
  }
  return out;
}

TransformLog LogFrom(const Json& j) {
  TransformLog log;
  for (const Json& r : j) {
    const std::string type = r.at("type");
    if (type == "edge_deletion") {
      log.push_back(EdgeDeletionRecord{r.at("edge"), r.at("u"), r.at("v")});
    } else if (type == "vertex_split") {
      log.push_back(SplitFromJson(r));
    } else if (type == "gadget") {
      GadgetRecord g;
      g.set = r.at("set").get<std::vector<VertexId>>();
      g.root_sharer = r.at("root_sharer");
      g.gadgets = r.at("gadgets").get<std::vector<int>>();
      g.leaves = r.at("leaves").get<std::vector<int>>();
      for (const Json& s : r.at("splits")) g.splits.push_back(SplitFromJson(s));
      log.push_back(std::move(g));
    } else if (type == "three_bond_merge") {
      log.push_back(ThreeBondMergeRecord{r.at("removed_node"), r.at("host_node"),
                                         r.at("edge")});
    } else {
      throw ParseError("unknown log record '" + type + "'", 0);
    }
  }
  return log;
}

Json RotationJson(const Embedding& emb) {
  Json out = Json::object();
  for (const auto& [v, darts] : emb.rotation()) {
    Json list = Json::array();
    for (const Dart& d : darts) list.push_back(d.edge);
    out[std::to_string(v)] = list;
  }
  return out;
}

std::map<VertexId, std::vector<Dart>> RotationFrom(const Multigraph& g,
                                                   const Json& j) {
  std::map<VertexId, std::vector<Dart>> rot;
  for (const auto& [key, list] : j.items()) {
    VertexId v = std::stoi(key);
    std::set<EdgeId> seen_loop;
    for (const Json& x : list) {
      EdgeId e = x.get<EdgeId>();
      if (!g.HasEdge(e)) throw ParseError("rotation names unknown edge " + std::to_string(e), 0);
      const Edge& edge = g.edge(e);
      bool fwd;
      if (edge.is_loop()) {
        fwd = seen_loop.insert(e).second;
      } else {
        fwd = edge.u == v;
      }
      rot[v].push_back(Dart{e, fwd});
    }
  }
  return rot;
}

Json EdgeJson(const Edge& e) {
  return Json{{"id", e.id}, {"u", e.u}, {"v", e.v}, {"tag", EdgeTagName(e.tag)}};
}

Json IdsJson(const IdAllocator& ids) {
  return Json{{"next_vertex", ids.next_vertex},
              {"next_edge", ids.next_edge},
              {"next_node", ids.next_node},
              {"next_clique", ids.next_clique},
              {"next_tree_edge", ids.next_tree_edge}};
}

}  // namespace

std::string ForestToJson(const ComponentForest& forest) {
  Json trees = Json::array();
  for (const ComponentTree& tree : forest.trees) {
    Json nodes = Json::array();
    for (const auto& [id, node] : tree.nodes) {
      Json edges = Json::array();
      for (const auto& [eid, e] : node.graph.edges()) edges.push_back(EdgeJson(e));
      Json cliques = Json::array();
      for (const VirtualClique& c : node.cliques) {
        cliques.push_back({{"id", c.id}, {"vertices", c.vertices}, {"edges", c.edges}});
      }
      Json n{{"id", id},
             {"kind", node.kind == NodeKind::kPlanar ? "planar" : "constant"},
             {"gadget", node.gadget},
             {"vertices", std::vector<VertexId>(node.graph.vertices().begin(),
                                                node.graph.vertices().end())},
             {"edges", edges},
             {"cliques", cliques}};
      if (node.embedding) n["rotation"] = RotationJson(*node.embedding);
      nodes.push_back(std::move(n));
    }
    Json tes = Json::array();
    for (const auto& [id, te] : tree.edges) {
      tes.push_back({{"id", id},
                     {"nodes", te.nodes},
                     {"cliques", te.cliques},
                     {"set", tree.nodes.at(te.nodes[0]).clique(te.cliques[0]).vertices}});
    }
    trees.push_back({{"nodes", nodes}, {"edges", tes}});
  }
  Json out{{"mode", ModeName(forest.mode)},
           {"vertices", std::vector<VertexId>(forest.vertices.begin(),
                                              forest.vertices.end())},
           {"no_perfect_matching", forest.no_perfect_matching},
           {"ids", IdsJson(forest.ids)},
           {"log", LogJson(forest.log)},
           {"trees", trees}};
  return Dump(out);
}

ComponentForest ForestFromJson(const std::string& text) {
  Json j = Parse(text);
  return Guard([&] {
    ComponentForest f;
    f.mode = ParseMode(j.at("mode"));
    for (VertexId v : j.at("vertices").get<std::vector<VertexId>>()) f.vertices.insert(v);
    f.no_perfect_matching = j.at("no_perfect_matching");
    const Json& ids = j.at("ids");
    f.ids.next_vertex = ids.at("next_vertex");
    f.ids.next_edge = ids.at("next_edge");
    f.ids.next_node = ids.at("next_node");
    f.ids.next_clique = ids.at("next_clique");
    f.ids.next_tree_edge = ids.at("next_tree_edge");
    f.log = LogFrom(j.at("log"));
    for (const Json& jt : j.at("trees")) {
      ComponentTree tree;
      for (const Json& jn : jt.at("nodes")) {
        ComponentNode node;
        node.id = jn.at("id");
        const std::string kind = jn.at("kind");
        if (kind != "planar" && kind != "constant") {
          throw ParseError("unknown node kind '" + kind + "'", 0);
        }
        node.kind = kind == "planar" ? NodeKind::kPlanar : NodeKind::kConstant;
        node.gadget = jn.at("gadget");
        for (VertexId v : jn.at("vertices").get<std::vector<VertexId>>()) node.graph.AddVertex(v);
        for (const Json& je : jn.at("edges")) {
          node.graph.AddEdge(je.at("id"), je.at("u"), je.at("v"), ParseTag(je.at("tag")));
        }
        for (const Json& jc : jn.at("cliques")) {
          VirtualClique c;
          c.id = jc.at("id");
          c.vertices = jc.at("vertices").get<std::vector<VertexId>>();
          c.edges = jc.at("edges").get<std::vector<EdgeId>>();
          node.cliques.push_back(std::move(c));
        }
        if (jn.contains("rotation")) {
          node.embedding = Embedding(node.graph, RotationFrom(node.graph, jn.at("rotation")));
        }
        int id = node.id;
        tree.nodes[id] = std::move(node);
      }
      for (const Json& je : jt.at("edges")) {
        TreeEdge te;
        te.id = je.at("id");
        te.nodes = je.at("nodes").get<std::array<int, 2>>();
        te.cliques = je.at("cliques").get<std::array<int, 2>>();
        tree.edges[te.id] = te;
      }
      ValidateTree(tree);
      f.trees.push_back(std::move(tree));
    }
    return f;
  });
}

std::string WorkingTreesToJson(const std::vector<WorkingTree>& wts) {
  Json trees = Json::array();
  for (const WorkingTree& wt : wts) {
    Json nodes = Json::array();
    for (const auto& [id, n] : wt.nodes) {
      Json children = Json::array();
      for (const WorkingTreeChild& c : n.children) {
        children.push_back({{"node", c.node}, {"link", c.link}, {"clique", c.clique}});
      }
      nodes.push_back({{"id", id},
                       {"parent", n.parent},
                       {"level", n.level},
                       {"height", n.height},
                       {"leaves", n.leaves},
                       {"children", children}});
    }
    trees.push_back({{"root", wt.root}, {"max_level", wt.max_level}, {"nodes", nodes}});
  }
  return Dump(Json{{"working_trees", trees}});
}

std::vector<WorkingTree> WorkingTreesFromJson(const std::string& text) {
  Json j = Parse(text);
  return Guard([&] {
    std::vector<WorkingTree> out;
    for (const Json& jt : j.at("working_trees")) {
      WorkingTree wt;
      wt.root = jt.at("root");
      wt.max_level = jt.at("max_level");
      for (const Json& jn : jt.at("nodes")) {
        WorkingTreeNode n;
        n.id = jn.at("id");
        n.parent = jn.at("parent");
        n.level = jn.at("level");
        n.height = jn.at("height");
        n.leaves = jn.at("leaves");
        for (const Json& c : jn.at("children")) {
          n.children.push_back({c.at("node"), c.at("link"), c.at("clique")});
        }
        wt.nodes[n.id] = std::move(n);
      }
      out.push_back(std::move(wt));
    }
    return out;
  });
}

std::string LogToJson(const TransformLog& log) { return Dump(Json{{"log", LogJson(log)}}); }

TransformLog LogFromJson(const std::string& text) {
  Json j = Parse(text);
  return Guard([&] { return LogFrom(j.at("log")); });
}

std::string RotationToJson(const Embedding& emb) {
  return Dump(Json{{"rotation", RotationJson(emb)}});
}

std::map<VertexId, std::vector<Dart>> RotationFromJson(const Multigraph& g,
                                                       const std::string& text) {
  Json j = Parse(text);
  return Guard([&] { return RotationFrom(g, j.at("rotation")); });
}

std::string WeightsToJson(const SchemeWeights& s, const Multigraph& graph,
                          const TransformLog& log) {
  Json edges = Json::array();
  for (const auto& [id, e] : graph.edges()) {
    VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    edges.push_back({{"id", id},
                     {"u", a},
                     {"v", b},
                     {"edge", {a, b}},
                     {"tag", EdgeTagName(e.tag)},
                     {"weight", s.final.Canonical(e).str()}});
  }
  Json params{{"m_const", s.params.m_const},
              {"K", s.params.K.str()},
              {"L", s.params.L},
              {"scale", s.scale.str()}};
  Json out{{"params", params},
           {"vertices", std::vector<VertexId>(graph.vertices().begin(),
                                              graph.vertices().end())},
           {"edges", edges},
           {"log", LogJson(log)}};
  return Dump(out);
}

WeightsFile WeightsFromJson(const std::string& text) {
  Json j = Parse(text);
  return Guard([&] {
    WeightsFile f;
    const Json& p = j.at("params");
    f.params.m_const = p.at("m_const");
    f.params.K = Integer(p.at("K").get<std::string>());
    f.params.L = p.at("L");
    f.scale = Integer(p.at("scale").get<std::string>());
    for (VertexId v : j.at("vertices").get<std::vector<VertexId>>()) f.graph.AddVertex(v);
    for (const Json& e : j.at("edges")) {
      f.graph.AddEdge(e.at("id"), e.at("u"), e.at("v"), ParseTag(e.at("tag")));
      try {
        f.weights.Set(e.at("id"), Integer(e.at("weight").get<std::string>()));
      } catch (const std::runtime_error&) {
        throw ParseError("bad weight on edge " + e.at("id").dump(), 0);
      }
    }
    f.log = LogFrom(j.at("log"));
    return f;
  });
}

std::string MatchingToJson(const Matching& m) {
  Matching sorted = m;
  std::sort(sorted.begin(), sorted.end());
  return Dump(Json{{"matching", sorted}});
}

Matching MatchingFromJson(const std::string& text) {
  Json j = Parse(text);
  return Guard([&] { return j.at("matching").get<Matching>(); });
}

}  // namespace isoweight
