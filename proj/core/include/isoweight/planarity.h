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

// Rotation-system embeddings of connected planar multigraphs.
//
// Faces are traced with next(d) = successor of reverse(d) in the rotation at
// head(d). Every face is therefore walked with its interior on the same
// side; that walking direction is what "clockwise" means throughout the
// library.

#ifndef ISOWEIGHT_PLANARITY_H_
#define ISOWEIGHT_PLANARITY_H_

#include <array>
#include <map>
#include <vector>

#include "isoweight/graph.h"

namespace isoweight {

struct Face {
  int id = 0;
  std::vector<Dart> boundary;
  bool inner = true;
};

class Embedding {
 public:
  Embedding() = default;
  // `rotation[v]` lists the darts leaving v in cyclic order. Validates the
  // rotation system, traces faces, checks Euler's formula and picks the
  // outer face. Throws PreconditionError on any failure.
  Embedding(Multigraph g, std::map<VertexId, std::vector<Dart>> rotation);

  const Multigraph& graph() const { return graph_; }
  const std::map<VertexId, std::vector<Dart>>& rotation() const {
    return rotation_;
  }
  const std::vector<Face>& faces() const { return faces_; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int outer_face() const { return outer_; }
  void SetOuterFace(int face);

  int FaceOf(Dart d) const;
  Dart Next(Dart d) const;
  Integer FaceCirculation(int face, const WeightAssignment& w) const;

 private:
  int DartIndex(Dart d) const;

  Multigraph graph_;
  std::map<VertexId, std::vector<Dart>> rotation_;
  std::map<EdgeId, int> edge_index_;
  std::vector<int> successor_;   // by dart index, within the rotation
  std::vector<Dart> darts_;      // by dart index
  std::vector<int> face_of_;     // by dart index
  std::vector<Face> faces_;
  int outer_ = 0;
};

// True when the underlying simple graph is planar.
bool IsPlanar(const Multigraph& g);

// Deterministic embedding of a connected planar multigraph. Throws
// NonPlanarError with the Kuratowski edges otherwise.
Embedding Embed(const Multigraph& g);

// Embedding in which each listed triangle (three edge ids) bounds a face.
// Triangles must be pairwise vertex-disjoint.
Embedding EmbedWithFacialTriangles(
    const Multigraph& g, const std::vector<std::array<EdgeId, 3>>& triangles);

// Vertices are face ids; edge e joins the faces on its two sides.
Multigraph Dual(const Embedding& emb);

// Inner faces enclosed by the simple cycle `c`, sorted.
std::vector<int> FacesInside(const Embedding& emb, const Cycle& c);

// `c` or its reverse, whichever walks the enclosed faces' boundaries.
Cycle ClockwiseOrientation(const Embedding& emb, const Cycle& c);

// Face whose boundary consists of exactly the given edges, or -1.
int FindFaceWithEdges(const Embedding& emb, std::vector<EdgeId> edges);

struct Contraction {
  Embedding embedding;
  // Original face id -> contracted face id. Faces bounded only by virtual
  // edges vanish and are absent.
  std::map<int, int> face_map;
  // Original vertex -> surviving representative.
  std::map<VertexId, VertexId> vertex_map;
};

// Contracts every virtual edge. Each virtual triangle must bound a face.
// Real edges parallel to a virtual edge become loops. Edge ids and stored
// orientations of surviving edges are preserved.
Contraction ContractVirtual(const Embedding& emb);

}  // namespace isoweight

#endif  // ISOWEIGHT_PLANARITY_H_
