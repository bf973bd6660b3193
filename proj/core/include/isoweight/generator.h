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

// Seeded generators for in-class graphs built by explicit clique-sums, plus
// small named graphs.

#ifndef ISOWEIGHT_GENERATOR_H_
#define ISOWEIGHT_GENERATOR_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "isoweight/graph.h"

namespace isoweight {

enum class GeneratorMode { kK33, kK5, kPlanarOnly };

const char* GeneratorModeName(GeneratorMode mode);
// Accepts "k33", "k5" and "planar".
GeneratorMode ParseGeneratorMode(const std::string& name);

struct GeneratorSpec {
  GeneratorMode mode = GeneratorMode::kPlanarOnly;
  int min_pieces = 1;
  int max_pieces = 3;
  int min_piece_size = 3;
  int max_piece_size = 6;
  int max_vertices = 14;
  std::uint64_t seed = 1;
  // Subdivide edges until bipartite and insist on a perfect matching.
  bool bipartite = false;
};

// Deterministic across platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi].
  int Uniform(int lo, int hi);
  bool Bernoulli(double p);
  template <typename T>
  void Shuffle(std::vector<T>* v) {
    for (int i = static_cast<int>(v->size()) - 1; i > 0; --i) {
      std::swap((*v)[i], (*v)[Uniform(0, i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct GroundTruthPiece {
  std::string kind;  // "planar", "k5" or "v8"
  std::vector<VertexId> vertices;
};

struct GroundTruthSum {
  int piece = 0;  // index of the piece glued onto the graph built so far
  std::vector<VertexId> shared;
  bool deleted_edge = false;
};

struct GeneratedInstance {
  Multigraph graph;  // vertices 1..n, edges 1..m
  std::vector<GroundTruthPiece> pieces;
  std::vector<GroundTruthSum> sums;
  int subdivisions = 0;
};

GeneratedInstance Generate(const GeneratorSpec& spec);

// Connected planar multigraph on n vertices with optional loops and
// parallel edges.
Multigraph RandomPlanarMultigraph(int n, std::uint64_t seed, bool loops,
                                  bool parallels);

// Random tree with `n` nodes as parent links: entry i links node i + 2 to an
// earlier node.
std::vector<std::pair<int, int>> RandomTree(int n, std::uint64_t seed);

Multigraph MakeK5();
Multigraph MakeK33();
Multigraph MakeV8();
Multigraph MakeCycle(int n);
Multigraph MakeGrid(int rows, int cols);
Multigraph MakeComplete(int n);

}  // namespace isoweight

#endif  // ISOWEIGHT_GENERATOR_H_
