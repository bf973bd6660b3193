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

// Labeled multigraphs, directed edge occurrences, skew-symmetric weights and
// the circulation primitive.

#ifndef ISOWEIGHT_GRAPH_H_
#define ISOWEIGHT_GRAPH_H_

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace isoweight {

using VertexId = int;
using EdgeId = int;
using Integer = boost::multiprecision::cpp_int;

enum class EdgeTag { kReal, kVirtual, kAuxiliary };

const char* EdgeTagName(EdgeTag tag);

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  EdgeTag tag = EdgeTag::kReal;

  bool is_loop() const { return u == v; }
  VertexId Other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// One traversal direction of an edge. `forward` means u -> v in the stored
// orientation of the edge. Loops need the flag since u == v.
struct Dart {
  EdgeId edge = 0;
  bool forward = true;

  Dart Reversed() const { return Dart{edge, !forward}; }
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

class Multigraph {
 public:
  Multigraph() = default;

  void AddVertex(VertexId v);
  // Throws PreconditionError on a duplicate id or a missing endpoint.
  void AddEdge(EdgeId id, VertexId u, VertexId v, EdgeTag tag = EdgeTag::kReal);
  void AddEdge(const Edge& e) { AddEdge(e.id, e.u, e.v, e.tag); }
  void RemoveEdge(EdgeId id);
  // Removes `v` and every incident edge.
  void RemoveVertex(VertexId v);
  // Re-ends the `from` endpoint of edge `id` at `to`. Both ends of a loop
  // move together.
  void ReplaceEndpoint(EdgeId id, VertexId from, VertexId to);
  // Moves every edge end at `from` to `to` and drops `from`.
  void RenameVertex(VertexId from, VertexId to);

  bool HasVertex(VertexId v) const { return vertices_.count(v) > 0; }
  bool HasEdge(EdgeId id) const { return edges_.count(id) > 0; }
  const Edge& edge(EdgeId id) const;
  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Incident edge ids in ascending order; a loop is listed once.
  std::vector<EdgeId> IncidentEdges(VertexId v) const;
  // Distinct neighbours of `v` other than `v` itself.
  std::vector<VertexId> Neighbors(VertexId v) const;
  int Degree(VertexId v) const;

  VertexId Tail(Dart d) const;
  VertexId Head(Dart d) const;

  // Edges with the given tag only; every vertex is kept.
  Multigraph Filtered(EdgeTag tag) const;
  // Real and auxiliary edges; every vertex is kept.
  Multigraph WithoutVirtual() const;
  int CountEdges(EdgeTag tag) const;
  EdgeId MaxEdgeId() const;
  VertexId MaxVertexId() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::set<VertexId> vertices_;
  std::map<EdgeId, Edge> edges_;
  std::map<VertexId, std::set<EdgeId>> incidence_;
};

// Ordered directed edge occurrences; consecutive darts share a vertex and
// the last dart ends where the first starts.
using Cycle = std::vector<Dart>;

Cycle Reverse(const Cycle& c);
// Throws PreconditionError unless `c` is a closed simple cycle of `g`.
void ValidateCycle(const Multigraph& g, const Cycle& c);
std::vector<VertexId> CycleVertices(const Multigraph& g, const Cycle& c);

// Skew-symmetric weights. The value stored for an edge is its weight in the
// stored orientation of the graph it was built for; the reverse direction
// is the negation.
class WeightAssignment {
 public:
  void Set(EdgeId e, Integer forward_weight);
  void Add(EdgeId e, const Integer& delta);
  bool Has(EdgeId e) const { return weights_.count(e) > 0; }
  // Throws PreconditionError naming `e` when it has no weight.
  const Integer& Forward(EdgeId e) const;
  Integer At(Dart d) const;
  // Weight in the smaller-to-larger endpoint orientation of `edge`.
  Integer Canonical(const Edge& edge) const;
  const std::map<EdgeId, Integer>& values() const { return weights_; }
  int size() const { return static_cast<int>(weights_.size()); }
  // Sum of |w(e)| over all edges.
  Integer AbsSum() const;
  Integer MaxAbs() const;
  // Merges `other`; throws PreconditionError on an edge weighted twice.
  void MergeDisjoint(const WeightAssignment& other);

  friend bool operator==(const WeightAssignment&,
                         const WeightAssignment&) = default;

 private:
  std::map<EdgeId, Integer> weights_;
};

// Sum of directed edge weights along `c`.
Integer Circulation(const Cycle& c, const WeightAssignment& w);

// Edge ids, sorted.
using Matching = std::vector<EdgeId>;

bool IsMatching(const Multigraph& g, const Matching& m);
bool IsPerfectMatching(const Multigraph& g, const Matching& m);

// Weight of `m`. Each edge is read from its side-0 endpoint to its side-1
// endpoint when `side` is given, else in canonical orientation.
Integer MatchingWeight(const Multigraph& g, const Matching& m,
                       const WeightAssignment& w,
                       const std::map<VertexId, int>* side = nullptr);

// scale * w0 + w1 per edge. Rejects scale <= 2 * sum |w1| and mismatched
// edge sets.
WeightAssignment Combine(const WeightAssignment& w0, const WeightAssignment& w1,
                         const Integer& scale);

// Hands out fresh ids for vertices, edges, component nodes, cliques and
// component-tree edges.
struct IdAllocator {
  VertexId next_vertex = 1;
  EdgeId next_edge = 1;
  int next_node = 1;
  int next_clique = 1;
  int next_tree_edge = 1;

  VertexId NewVertex() { return next_vertex++; }
  EdgeId NewEdge() { return next_edge++; }
  int NewNode() { return next_node++; }
  int NewClique() { return next_clique++; }
  int NewTreeEdge() { return next_tree_edge++; }
  friend bool operator==(const IdAllocator&, const IdAllocator&) = default;
};

}  // namespace isoweight

#endif  // ISOWEIGHT_GRAPH_H_
