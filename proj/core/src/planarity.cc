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

#include "isoweight/planarity.h"

#include <algorithm>
#include <deque>
#include <iterator>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "isoweight/error.h"

namespace isoweight {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// The simple graph underlying a multigraph, with loops dropped.
struct SimpleGraph {
  std::vector<VertexId> vertex_of;         // boost index -> vertex id
  std::map<VertexId, int> index_of;        // vertex id -> boost index
  std::vector<std::vector<EdgeId>> pairs;  // boost edge index -> edge ids
  BoostGraph graph;
};

SimpleGraph BuildSimple(const Multigraph& g) {
  SimpleGraph s;
  for (VertexId v : g.vertices()) {
    s.index_of[v] = static_cast<int>(s.vertex_of.size());
    s.vertex_of.push_back(v);
  }
  std::map<std::pair<VertexId, VertexId>, int> pair_index;
  for (const auto& [id, e] : g.edges()) {
    if (e.is_loop()) continue;
    auto key = std::minmax(e.u, e.v);
    auto [it, fresh] = pair_index.emplace(
        std::make_pair(key.first, key.second), static_cast<int>(s.pairs.size()));
    if (fresh) s.pairs.emplace_back();
    s.pairs[it->second].push_back(id);
  }
  s.graph = BoostGraph(s.vertex_of.size());
  std::vector<std::pair<std::pair<VertexId, VertexId>, int>> ordered(
      pair_index.begin(), pair_index.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  for (const auto& [key, index] : ordered) {
    auto added = boost::add_edge(s.index_of[key.first], s.index_of[key.second],
                                 s.graph);
    boost::put(boost::edge_index, s.graph, added.first, index);
  }
  return s;
}

bool IsConnected(const Multigraph& g) {
  if (g.num_vertices() == 0) return true;
  std::set<VertexId> seen{*g.vertices().begin()};
  std::deque<VertexId> queue{*g.vertices().begin()};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.Neighbors(x)) {
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return static_cast<int>(seen.size()) == g.num_vertices();
}

Dart DartLeaving(const Edge& e, VertexId x) { return Dart{e.id, e.u == x}; }

}  // namespace

Embedding::Embedding(Multigraph g, std::map<VertexId, std::vector<Dart>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  int index = 0;
  for (const auto& [id, e] : graph_.edges()) edge_index_[id] = index++;
  const int num_darts = 2 * graph_.num_edges();
  darts_.resize(num_darts);
  for (const auto& [id, i] : edge_index_) {
    darts_[2 * i] = Dart{id, true};
    darts_[2 * i + 1] = Dart{id, false};
  }
  successor_.assign(num_darts, -1);
  std::vector<bool> placed(num_darts, false);
  for (const auto& [v, list] : rotation_) {
    if (!graph_.HasVertex(v)) {
      throw PreconditionError("rotation names unknown vertex " +
                              std::to_string(v));
    }
    for (size_t k = 0; k < list.size(); ++k) {
      const Dart& d = list[k];
      if (!graph_.HasEdge(d.edge) || graph_.Tail(d) != v) {
        throw PreconditionError("rotation at " + std::to_string(v) +
                                " lists a dart of edge " +
                                std::to_string(d.edge) + " not leaving it");
      }
      int di = DartIndex(d);
      if (placed[di]) {
        throw PreconditionError("dart of edge " + std::to_string(d.edge) +
                                " appears twice");
      }
      placed[di] = true;
      successor_[di] = DartIndex(list[(k + 1) % list.size()]);
    }
  }
  for (int di = 0; di < num_darts; ++di) {
    if (!placed[di]) {
      throw PreconditionError("dart of edge " + std::to_string(darts_[di].edge) +
                              " missing from the rotation");
    }
  }
  if (!IsConnected(graph_)) {
    throw PreconditionError("embedding requires a connected graph");
  }
  face_of_.assign(num_darts, -1);
  for (int start = 0; start < num_darts; ++start) {
    if (face_of_[start] >= 0) continue;
    Face face;
    face.id = static_cast<int>(faces_.size());
    int d = start;
    while (face_of_[d] < 0) {
      face_of_[d] = face.id;
      face.boundary.push_back(darts_[d]);
      d = successor_[d ^ 1];
    }
    if (d != start) throw PreconditionError("face tracing did not close");
    faces_.push_back(std::move(face));
  }
  if (num_darts == 0) {
    if (graph_.num_vertices() != 1) {
      throw PreconditionError("edgeless embedding needs exactly one vertex");
    }
    faces_.push_back(Face{0, {}, false});
  }
  if (graph_.num_vertices() - graph_.num_edges() + num_faces() != 2) {
    throw PreconditionError("rotation system violates Euler's formula");
  }
  // Outer face: longest boundary, then smallest edge id. Faces made only of
  // virtual edges are skipped while any other face exists.
  int best = -1;
  bool best_real = false;
  size_t best_len = 0;
  EdgeId best_min = 0;
  for (const Face& f : faces_) {
    bool has_real = f.boundary.empty();
    EdgeId min_id = 0;
    bool first = true;
    for (const Dart& d : f.boundary) {
      if (graph_.edge(d.edge).tag != EdgeTag::kVirtual) has_real = true;
      if (first || d.edge < min_id) min_id = d.edge;
      first = false;
    }
    bool better = false;
    if (best < 0) {
      better = true;
    } else if (has_real != best_real) {
      better = has_real;
    } else if (f.boundary.size() != best_len) {
      better = f.boundary.size() > best_len;
    } else {
      better = min_id < best_min;
    }
    if (better) {
      best = f.id;
      best_real = has_real;
      best_len = f.boundary.size();
      best_min = min_id;
    }
  }
  SetOuterFace(best);
}

void Embedding::SetOuterFace(int face) {
  if (face < 0 || face >= num_faces()) {
    throw PreconditionError("no face " + std::to_string(face));
  }
  outer_ = face;
  for (Face& f : faces_) f.inner = f.id != face;
}

int Embedding::DartIndex(Dart d) const {
  auto it = edge_index_.find(d.edge);
  if (it == edge_index_.end()) {
    throw PreconditionError("no edge " + std::to_string(d.edge));
  }
  return 2 * it->second + (d.forward ? 0 : 1);
}

int Embedding::FaceOf(Dart d) const { return face_of_[DartIndex(d)]; }

Dart Embedding::Next(Dart d) const {
  return darts_[successor_[DartIndex(d) ^ 1]];
}

Integer Embedding::FaceCirculation(int face, const WeightAssignment& w) const {
  return Circulation(faces_.at(face).boundary, w);
}

bool IsPlanar(const Multigraph& g) {
  SimpleGraph s = BuildSimple(g);
  return boost::boyer_myrvold_planarity_test(s.graph);
}

Embedding Embed(const Multigraph& g) {
  if (g.num_vertices() == 0) throw PreconditionError("empty graph");
  if (!IsConnected(g)) {
    throw PreconditionError("embedding requires a connected graph");
  }
  SimpleGraph s = BuildSimple(g);
  const size_t n = s.vertex_of.size();
  std::vector<std::vector<BoostEdge>> storage(n);
  std::vector<BoostEdge> kuratowski;
  auto embedding = boost::make_iterator_property_map(
      storage.begin(), boost::get(boost::vertex_index, s.graph));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = s.graph,
      boost::boyer_myrvold_params::embedding = embedding,
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(kuratowski));
  if (!planar) {
    std::vector<EdgeId> certificate;
    for (const BoostEdge& e : kuratowski) {
      certificate.push_back(
          s.pairs[boost::get(boost::edge_index, s.graph, e)].front());
    }
    std::sort(certificate.begin(), certificate.end());
    throw NonPlanarError("graph is not planar", certificate);
  }
  std::map<VertexId, std::vector<Dart>> rotation;
  for (size_t i = 0; i < n; ++i) {
    VertexId x = s.vertex_of[i];
    std::vector<Dart>& list = rotation[x];
    for (EdgeId id : g.IncidentEdges(x)) {
      if (!g.edge(id).is_loop()) continue;
      list.push_back(Dart{id, true});
      list.push_back(Dart{id, false});
    }
    for (const BoostEdge& be : storage[i]) {
      const std::vector<EdgeId>& ids =
          s.pairs[boost::get(boost::edge_index, s.graph, be)];
      size_t a = boost::source(be, s.graph);
      size_t b = boost::target(be, s.graph);
      VertexId y = s.vertex_of[a == i ? b : a];
      if (x < y) {
        for (EdgeId id : ids) list.push_back(DartLeaving(g.edge(id), x));
      } else {
        for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
          list.push_back(DartLeaving(g.edge(*it), x));
        }
      }
    }
  }
  return Embedding(g, std::move(rotation));
}

Embedding EmbedWithFacialTriangles(
    const Multigraph& g, const std::vector<std::array<EdgeId, 3>>& triangles) {
  if (triangles.empty()) return Embed(g);
  Multigraph h = g;
  VertexId next_vertex = g.MaxVertexId() + 1;
  EdgeId next_edge = g.MaxEdgeId() + 1;
  struct Star {
    VertexId center;
    std::array<VertexId, 3> corners;
    std::array<EdgeId, 3> spokes;  // spoke k joins center -> corners[k]
  };
  std::vector<Star> stars;
  // (x, y) -> triangle edge id, for x != y in one triangle.
  std::map<std::pair<VertexId, VertexId>, EdgeId> side;
  for (const auto& tri : triangles) {
    std::set<VertexId> corners;
    for (EdgeId id : tri) {
      const Edge& e = g.edge(id);
      corners.insert(e.u);
      corners.insert(e.v);
      side[{e.u, e.v}] = id;
      side[{e.v, e.u}] = id;
    }
    if (corners.size() != 3) {
      throw PreconditionError("edges do not form a triangle");
    }
    for (EdgeId id : tri) h.RemoveEdge(id);
    Star star;
    star.center = next_vertex++;
    h.AddVertex(star.center);
    int k = 0;
    for (VertexId c : corners) {
      star.corners[k] = c;
      star.spokes[k] = next_edge++;
      h.AddEdge(star.spokes[k], star.center, c, EdgeTag::kReal);
      ++k;
    }
    stars.push_back(star);
  }
  Embedding eh = [&] {
    try {
      return Embed(h);
    } catch (const NonPlanarError&) {
      throw PreconditionError("triangles cannot all bound faces");
    }
  }();
  std::map<VertexId, std::vector<Dart>> rotation;
  std::map<EdgeId, std::pair<const Star*, int>> spoke_of;
  for (const Star& star : stars) {
    for (int k = 0; k < 3; ++k) spoke_of[star.spokes[k]] = {&star, k};
  }
  for (const auto& [x, list] : eh.rotation()) {
    if (!g.HasVertex(x)) continue;
    std::vector<Dart>& out = rotation[x];
    for (const Dart& d : list) {
      auto it = spoke_of.find(d.edge);
      if (it == spoke_of.end()) {
        out.push_back(d);
        continue;
      }
      const Star& star = *it->second.first;
      // Rotation at the star center, as corner positions.
      const std::vector<Dart>& around = eh.rotation().at(star.center);
      int pos = -1;
      for (size_t k = 0; k < around.size(); ++k) {
        if (around[k].edge == d.edge) pos = static_cast<int>(k);
      }
      VertexId succ = eh.graph().Head(around[(pos + 1) % 3]);
      VertexId pred = eh.graph().Head(around[(pos + 2) % 3]);
      out.push_back(DartLeaving(g.edge(side.at({x, succ})), x));
      out.push_back(DartLeaving(g.edge(side.at({x, pred})), x));
    }
  }
  Embedding result(g, std::move(rotation));
  for (const auto& tri : triangles) {
    if (FindFaceWithEdges(result, {tri[0], tri[1], tri[2]}) < 0) {
      throw VerificationError("triangle did not become a face");
    }
  }
  return result;
}

Multigraph Dual(const Embedding& emb) {
  Multigraph dual;
  for (int f = 0; f < emb.num_faces(); ++f) dual.AddVertex(f);
  for (const auto& [id, e] : emb.graph().edges()) {
    dual.AddEdge(id, emb.FaceOf(Dart{id, true}), emb.FaceOf(Dart{id, false}),
                 e.tag);
  }
  return dual;
}

std::vector<int> FacesInside(const Embedding& emb, const Cycle& c) {
  std::set<EdgeId> blocked;
  for (const Dart& d : c) blocked.insert(d.edge);
  Multigraph dual = Dual(emb);
  std::vector<bool> reached(emb.num_faces(), false);
  std::deque<int> queue{emb.outer_face()};
  reached[emb.outer_face()] = true;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (EdgeId id : dual.IncidentEdges(f)) {
      if (blocked.count(id)) continue;
      int other = dual.edge(id).Other(f);
      if (!reached[other]) {
        reached[other] = true;
        queue.push_back(other);
      }
    }
  }
  std::vector<int> inside;
  for (int f = 0; f < emb.num_faces(); ++f) {
    if (!reached[f]) inside.push_back(f);
  }
  return inside;
}

Cycle ClockwiseOrientation(const Embedding& emb, const Cycle& c) {
  std::vector<int> inside = FacesInside(emb, c);
  std::set<int> in(inside.begin(), inside.end());
  Cycle out = in.count(emb.FaceOf(c.front())) ? c : Reverse(c);
  for (const Dart& d : out) {
    if (!in.count(emb.FaceOf(d))) {
      throw PreconditionError("cycle does not separate the embedding");
    }
  }
  return out;
}

int FindFaceWithEdges(const Embedding& emb, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  for (const Face& f : emb.faces()) {
    if (f.boundary.size() != edges.size()) continue;
    std::vector<EdgeId> ids;
    for (const Dart& d : f.boundary) ids.push_back(d.edge);
    std::sort(ids.begin(), ids.end());
    if (ids == edges) return f.id;
  }
  return -1;
}

Contraction ContractVirtual(const Embedding& emb) {
  const Multigraph& g = emb.graph();
  std::map<VertexId, std::vector<Dart>> rot = emb.rotation();
  std::map<EdgeId, std::pair<VertexId, VertexId>> ends;
  for (const auto& [id, e] : g.edges()) ends[id] = {e.u, e.v};
  std::map<VertexId, VertexId> merged_into;
  auto position = [](const std::vector<Dart>& list, const Dart& d) {
    auto it = std::find(list.begin(), list.end(), d);
    return static_cast<size_t>(it - list.begin());
  };
  for (const auto& [id, e] : g.edges()) {
    if (e.tag != EdgeTag::kVirtual) continue;
    auto [x, y] = ends[id];
    Dart dx{id, true};
    Dart dy{id, false};
    if (x != y) {
      std::vector<Dart>& rx = rot[x];
      std::vector<Dart>& ry = rot[y];
      size_t px = position(rx, dx);
      size_t py = position(ry, dy);
      std::vector<Dart> spliced(rx.begin(), rx.begin() + px);
      spliced.insert(spliced.end(), ry.begin() + py + 1, ry.end());
      spliced.insert(spliced.end(), ry.begin(), ry.begin() + py);
      spliced.insert(spliced.end(), rx.begin() + px + 1, rx.end());
      for (const Dart& d : ry) {
        auto& [a, b] = ends[d.edge];
        if (a == y) a = x;
        if (b == y) b = x;
      }
      rot[x] = std::move(spliced);
      rot.erase(y);
      merged_into[y] = x;
    } else {
      std::vector<Dart>& rx = rot[x];
      size_t n = rx.size();
      size_t pf = position(rx, dx);
      size_t pb = position(rx, dy);
      if (rx[(pf + 1) % n] != dy && rx[(pb + 1) % n] != dx) {
        throw PreconditionError("virtual triangle is not a face");
      }
      rx.erase(std::remove_if(rx.begin(), rx.end(),
                              [&](const Dart& d) { return d.edge == id; }),
               rx.end());
    }
    ends.erase(id);
  }
  Multigraph contracted;
  for (VertexId v : g.vertices()) {
    if (!merged_into.count(v)) contracted.AddVertex(v);
  }
  for (const auto& [id, e] : g.edges()) {
    if (e.tag == EdgeTag::kVirtual) continue;
    contracted.AddEdge(id, ends[id].first, ends[id].second, e.tag);
  }
  for (auto it = rot.begin(); it != rot.end();) {
    if (it->second.empty()) {
      it = rot.erase(it);
    } else {
      ++it;
    }
  }
  Contraction out;
  out.embedding = Embedding(std::move(contracted), std::move(rot));
  for (const Face& f : emb.faces()) {
    for (const Dart& d : f.boundary) {
      if (g.edge(d.edge).tag != EdgeTag::kVirtual) {
        out.face_map[f.id] = out.embedding.FaceOf(d);
        break;
      }
    }
  }
  auto outer = out.face_map.find(emb.outer_face());
  if (outer == out.face_map.end()) {
    throw PreconditionError("outer face is bounded only by virtual edges");
  }
  out.embedding.SetOuterFace(outer->second);
  for (VertexId v : g.vertices()) {
    VertexId r = v;
    while (merged_into.count(r)) r = merged_into[r];
    out.vertex_map[v] = r;
  }
  return out;
}

}  // namespace isoweight
