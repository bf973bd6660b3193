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

#include "isoweight/graph.h"

#include <algorithm>

#include "isoweight/error.h"

namespace isoweight {

const char* EdgeTagName(EdgeTag tag) {
  switch (tag) {
    case EdgeTag::kReal:
      return "real";
    case EdgeTag::kVirtual:
      return "virtual";
    case EdgeTag::kAuxiliary:
      return "auxiliary";
  }
  return "real";
}

void Multigraph::AddVertex(VertexId v) {
  vertices_.insert(v);
  incidence_[v];
}

void Multigraph::AddEdge(EdgeId id, VertexId u, VertexId v, EdgeTag tag) {
  if (edges_.count(id)) {
    throw PreconditionError("duplicate edge id " + std::to_string(id));
  }
  if (!HasVertex(u) || !HasVertex(v)) {
    throw PreconditionError("edge " + std::to_string(id) +
                            " has an endpoint outside the vertex set");
  }
  edges_[id] = Edge{id, u, v, tag};
  incidence_[u].insert(id);
  incidence_[v].insert(id);
}

void Multigraph::RemoveEdge(EdgeId id) {
  auto it = edges_.find(id);
  if (it == edges_.end()) {
    throw PreconditionError("no edge " + std::to_string(id));
  }
  incidence_[it->second.u].erase(id);
  incidence_[it->second.v].erase(id);
  edges_.erase(it);
}

void Multigraph::RemoveVertex(VertexId v) {
  if (!HasVertex(v)) return;
  std::vector<EdgeId> incident(incidence_[v].begin(), incidence_[v].end());
  for (EdgeId e : incident) RemoveEdge(e);
  incidence_.erase(v);
  vertices_.erase(v);
}

void Multigraph::ReplaceEndpoint(EdgeId id, VertexId from, VertexId to) {
  auto it = edges_.find(id);
  if (it == edges_.end()) {
    throw PreconditionError("no edge " + std::to_string(id));
  }
  Edge& e = it->second;
  if (e.u != from && e.v != from) {
    throw PreconditionError("edge " + std::to_string(id) + " is not incident to " +
                            std::to_string(from));
  }
  AddVertex(to);
  incidence_[from].erase(id);
  if (e.u == from) e.u = to;
  if (e.v == from) e.v = to;
  incidence_[to].insert(id);
}

void Multigraph::RenameVertex(VertexId from, VertexId to) {
  if (from == to || !HasVertex(from)) return;
  AddVertex(to);
  std::vector<EdgeId> incident(incidence_[from].begin(),
                               incidence_[from].end());
  for (EdgeId e : incident) ReplaceEndpoint(e, from, to);
  incidence_.erase(from);
  vertices_.erase(from);
}

const Edge& Multigraph::edge(EdgeId id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) {
    throw PreconditionError("no edge " + std::to_string(id));
  }
  return it->second;
}

std::vector<EdgeId> Multigraph::IncidentEdges(VertexId v) const {
  auto it = incidence_.find(v);
  if (it == incidence_.end()) return {};
  return std::vector<EdgeId>(it->second.begin(), it->second.end());
}

std::vector<VertexId> Multigraph::Neighbors(VertexId v) const {
  std::set<VertexId> out;
  auto it = incidence_.find(v);
  if (it == incidence_.end()) return {};
  for (EdgeId id : it->second) {
    const Edge& e = edges_.at(id);
    if (!e.is_loop()) out.insert(e.Other(v));
  }
  return std::vector<VertexId>(out.begin(), out.end());
}

int Multigraph::Degree(VertexId v) const {
  int d = 0;
  auto it = incidence_.find(v);
  if (it == incidence_.end()) return 0;
  for (EdgeId id : it->second) d += edges_.at(id).is_loop() ? 2 : 1;
  return d;
}

VertexId Multigraph::Tail(Dart d) const {
  const Edge& e = edge(d.edge);
  return d.forward ? e.u : e.v;
}

VertexId Multigraph::Head(Dart d) const {
  const Edge& e = edge(d.edge);
  return d.forward ? e.v : e.u;
}

Multigraph Multigraph::Filtered(EdgeTag tag) const {
  Multigraph out;
  for (VertexId v : vertices_) out.AddVertex(v);
  for (const auto& [id, e] : edges_) {
    if (e.tag == tag) out.AddEdge(e);
  }
  return out;
}

Multigraph Multigraph::WithoutVirtual() const {
  Multigraph out;
  for (VertexId v : vertices_) out.AddVertex(v);
  for (const auto& [id, e] : edges_) {
    if (e.tag != EdgeTag::kVirtual) out.AddEdge(e);
  }
  return out;
}

int Multigraph::CountEdges(EdgeTag tag) const {
  int n = 0;
  for (const auto& [id, e] : edges_) n += e.tag == tag;
  return n;
}

EdgeId Multigraph::MaxEdgeId() const {
  return edges_.empty() ? 0 : edges_.rbegin()->first;
}

VertexId Multigraph::MaxVertexId() const {
  return vertices_.empty() ? 0 : *vertices_.rbegin();
}

Cycle Reverse(const Cycle& c) {
  Cycle out;
  out.reserve(c.size());
  for (auto it = c.rbegin(); it != c.rend(); ++it) out.push_back(it->Reversed());
  return out;
}

void ValidateCycle(const Multigraph& g, const Cycle& c) {
  if (c.empty()) throw PreconditionError("empty cycle");
  std::set<VertexId> seen;
  std::set<EdgeId> used;
  for (size_t i = 0; i < c.size(); ++i) {
    if (!g.HasEdge(c[i].edge)) {
      throw PreconditionError("cycle uses unknown edge " +
                              std::to_string(c[i].edge));
    }
    if (!used.insert(c[i].edge).second) {
      throw PreconditionError("cycle repeats edge " +
                              std::to_string(c[i].edge));
    }
    const Dart& next = c[(i + 1) % c.size()];
    if (g.Head(c[i]) != g.Tail(next)) {
      throw PreconditionError("cycle is not closed at position " +
                              std::to_string(i));
    }
    if (!seen.insert(g.Tail(c[i])).second) {
      throw PreconditionError("cycle repeats a vertex");
    }
  }
}

std::vector<VertexId> CycleVertices(const Multigraph& g, const Cycle& c) {
  std::vector<VertexId> out;
  out.reserve(c.size());
  for (const Dart& d : c) out.push_back(g.Tail(d));
  return out;
}

void WeightAssignment::Set(EdgeId e, Integer forward_weight) {
  weights_[e] = std::move(forward_weight);
}

void WeightAssignment::Add(EdgeId e, const Integer& delta) {
  weights_[e] += delta;
}

const Integer& WeightAssignment::Forward(EdgeId e) const {
  auto it = weights_.find(e);
  if (it == weights_.end()) {
    throw PreconditionError("edge " + std::to_string(e) + " has no weight");
  }
  return it->second;
}

Integer WeightAssignment::At(Dart d) const {
  const Integer& w = Forward(d.edge);
  return d.forward ? w : Integer(-w);
}

Integer WeightAssignment::Canonical(const Edge& edge) const {
  const Integer& w = Forward(edge.id);
  return edge.u <= edge.v ? w : Integer(-w);
}

Integer WeightAssignment::AbsSum() const {
  Integer s = 0;
  for (const auto& [e, w] : weights_) s += abs(w);
  return s;
}

Integer WeightAssignment::MaxAbs() const {
  Integer m = 0;
  for (const auto& [e, w] : weights_) m = std::max(m, Integer(abs(w)));
  return m;
}

void WeightAssignment::MergeDisjoint(const WeightAssignment& other) {
  for (const auto& [e, w] : other.weights_) {
    if (!weights_.emplace(e, w).second) {
      throw PreconditionError("edge " + std::to_string(e) +
                              " weighted twice");
    }
  }
}

Integer Circulation(const Cycle& c, const WeightAssignment& w) {
  Integer s = 0;
  for (const Dart& d : c) {
    if (d.forward) {
      s += w.Forward(d.edge);
    } else {
      s -= w.Forward(d.edge);
    }
  }
  return s;
}

bool IsMatching(const Multigraph& g, const Matching& m) {
  std::set<VertexId> covered;
  std::set<EdgeId> ids;
  for (EdgeId id : m) {
    if (!g.HasEdge(id) || !ids.insert(id).second) return false;
    const Edge& e = g.edge(id);
    if (e.is_loop()) return false;
    if (!covered.insert(e.u).second || !covered.insert(e.v).second) {
      return false;
    }
  }
  return true;
}

bool IsPerfectMatching(const Multigraph& g, const Matching& m) {
  return IsMatching(g, m) &&
         static_cast<int>(2 * m.size()) == g.num_vertices();
}

Integer MatchingWeight(const Multigraph& g, const Matching& m,
                       const WeightAssignment& w,
                       const std::map<VertexId, int>* side) {
  Integer s = 0;
  for (EdgeId id : m) {
    const Edge& e = g.edge(id);
    if (side != nullptr) {
      s += side->at(e.u) == 0 ? w.Forward(id) : Integer(-w.Forward(id));
    } else {
      s += w.Canonical(e);
    }
  }
  return s;
}

WeightAssignment Combine(const WeightAssignment& w0, const WeightAssignment& w1,
                         const Integer& scale) {
  if (scale <= 2 * w1.AbsSum()) {
    throw PreconditionError("scale does not dominate w1");
  }
  WeightAssignment out;
  auto a = w0.values().begin();
  auto b = w1.values().begin();
  if (w0.size() != w1.size()) {
    throw PreconditionError("w0 and w1 cover different edge sets");
  }
  for (; a != w0.values().end(); ++a, ++b) {
    if (a->first != b->first) {
      throw PreconditionError("w0 and w1 cover different edge sets");
    }
    out.Set(a->first, scale * a->second + b->second);
  }
  return out;
}

}  // namespace isoweight
