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

#include "isoweight/generator.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "isoweight/decompose.h"
#include "isoweight/error.h"
#include "isoweight/oracle.h"

namespace isoweight {
namespace {

bool Connected(const Multigraph& g) {
  return ComponentsWithout(g, {}).size() <= 1;
}

bool Biconnected(const Multigraph& g) {
  if (!Connected(g)) return false;
  if (g.num_vertices() < 3) return true;
  for (VertexId v : g.vertices()) {
    if (ComponentsWithout(g, {v}).size() > 1) return false;
  }
  return true;
}

// Random apollonian triangulation on vertices 1..n, n >= 3.
Multigraph StackedTriangulation(int n, Rng* rng) {
  Multigraph g;
  for (int v = 1; v <= n; ++v) g.AddVertex(v);
  EdgeId next = 1;
  g.AddEdge(next++, 1, 2);
  g.AddEdge(next++, 2, 3);
  g.AddEdge(next++, 1, 3);
  std::vector<std::array<VertexId, 3>> faces{{1, 2, 3}, {1, 2, 3}};
  for (int v = 4; v <= n; ++v) {
    int i = rng->Uniform(0, static_cast<int>(faces.size()) - 1);
    auto [a, b, c] = faces[i];
    g.AddEdge(next++, a, v);
    g.AddEdge(next++, b, v);
    g.AddEdge(next++, c, v);
    faces[i] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  return g;
}

// Deletes edges in random order with probability p while `keep` holds.
template <typename Pred>
void ThinEdges(Multigraph* g, double p, Rng* rng, Pred keep) {
  std::vector<EdgeId> ids;
  for (const auto& [id, e] : g->edges()) ids.push_back(id);
  rng->Shuffle(&ids);
  for (EdgeId id : ids) {
    if (!rng->Bernoulli(p)) continue;
    Edge e = g->edge(id);
    g->RemoveEdge(id);
    if (!keep(*g)) g->AddEdge(e);
  }
}

Multigraph PlanarPiece(int n, Rng* rng) {
  if (n == 3 || rng->Bernoulli(0.2)) return MakeCycle(n);
  Multigraph g = StackedTriangulation(n, rng);
  ThinEdges(&g, 0.35, rng, Biconnected);
  return g;
}

std::vector<std::array<VertexId, 3>> Triangles(const Multigraph& g) {
  std::set<std::array<VertexId, 3>> out;
  for (const auto& [id, e] : g.edges()) {
    if (e.is_loop()) continue;
    auto nu = g.Neighbors(e.u);
    auto nv = g.Neighbors(e.v);
    std::set<VertexId> sv(nv.begin(), nv.end());
    for (VertexId w : nu) {
      if (w == e.v || !sv.count(w)) continue;
      std::array<VertexId, 3> t{e.u, e.v, w};
      std::sort(t.begin(), t.end());
      out.insert(t);
    }
  }
  return {out.begin(), out.end()};
}

EdgeId FindEdge(const Multigraph& g, VertexId a, VertexId b) {
  for (EdgeId id : g.IncidentEdges(a)) {
    if (g.edge(id).Other(a) == b) return id;
  }
  return 0;
}

// Renumbers vertices 1..n and edges 1..m in random order.
Multigraph Relabel(const Multigraph& g, Rng* rng,
                   std::map<VertexId, VertexId>* vmap) {
  std::vector<VertexId> labels;
  for (int i = 1; i <= g.num_vertices(); ++i) labels.push_back(i);
  rng->Shuffle(&labels);
  int k = 0;
  for (VertexId v : g.vertices()) (*vmap)[v] = labels[k++];
  std::vector<Edge> edges;
  for (const auto& [id, e] : g.edges()) edges.push_back(e);
  rng->Shuffle(&edges);
  Multigraph out;
  for (int i = 1; i <= g.num_vertices(); ++i) out.AddVertex(i);
  EdgeId next = 1;
  for (const Edge& e : edges) {
    VertexId u = vmap->at(e.u), v = vmap->at(e.v);
    if (rng->Bernoulli(0.5)) std::swap(u, v);
    out.AddEdge(next++, u, v, e.tag);
  }
  return out;
}

class Builder {
 public:
  Builder(const GeneratorSpec& spec, int budget, Rng* rng)
      : spec_(spec), budget_(budget), rng_(rng) {}

  GeneratedInstance Build() {
    int pieces = rng_->Uniform(spec_.min_pieces, std::max(spec_.min_pieces,
                                                          spec_.max_pieces));
    for (int i = 0; i < pieces; ++i) {
      if (!AddPiece(i == 0)) break;
    }
    GeneratedInstance out;
    out.graph = g_;
    out.pieces = pieces_;
    out.sums = sums_;
    return out;
  }

 private:
  // Picks the next piece; returns it with vertices 1..k.
  std::pair<std::string, Multigraph> PickPiece(int room) {
    const int lo = std::max(3, spec_.min_piece_size);
    if (spec_.mode == GeneratorMode::kK33 && room >= 5 && rng_->Bernoulli(0.4)) {
      return {"k5", MakeK5()};
    }
    if (spec_.mode == GeneratorMode::kK5 && room >= 8 && rng_->Bernoulli(0.3)) {
      return {"v8", MakeV8()};
    }
    int hi = std::min(spec_.max_piece_size, room);
    if (hi < lo) return {"", Multigraph()};
    return {"planar", PlanarPiece(rng_->Uniform(lo, hi), rng_)};
  }

  bool AddPiece(bool first) {
    int used = g_.num_vertices();
    if (first) {
      auto [kind, p] = PickPiece(budget_);
      if (kind.empty()) return false;
      Glue(kind, p, {});
      return true;
    }
    // Sum order: 3 (k5 only), 2, 1.
    int k = 2;
    double r = rng_->Uniform(0, 99) / 100.0;
    if (r < 0.1) {
      k = 1;
    } else if (spec_.mode == GeneratorMode::kK5 && r < 0.55) {
      k = 3;
    }
    std::vector<VertexId> target;
    if (k == 3) {
      auto tris = Triangles(g_);
      if (tris.empty()) {
        k = 2;
      } else {
        auto t = tris[rng_->Uniform(0, static_cast<int>(tris.size()) - 1)];
        target.assign(t.begin(), t.end());
      }
    }
    if (k == 2) {
      std::vector<EdgeId> ids;
      for (const auto& [id, e] : g_.edges()) {
        if (!e.is_loop()) ids.push_back(id);
      }
      if (ids.empty()) {
        k = 1;
      } else {
        const Edge& e = g_.edge(ids[rng_->Uniform(0, static_cast<int>(ids.size()) - 1)]);
        target = {e.u, e.v};
      }
    }
    if (k == 1) {
      std::vector<VertexId> vs(g_.vertices().begin(), g_.vertices().end());
      target = {vs[rng_->Uniform(0, static_cast<int>(vs.size()) - 1)]};
    }
    int room = budget_ - used + k;
    auto [kind, p] = PickPiece(room);
    if (kind.empty()) return false;
    std::vector<VertexId> local;
    if (k == 3) {
      auto tris = Triangles(p);
      if (tris.empty()) {
        // Pieces without triangles join along an edge instead.
        k = 2;
        target.resize(2);
      } else {
        auto t = tris[rng_->Uniform(0, static_cast<int>(tris.size()) - 1)];
        local.assign(t.begin(), t.end());
      }
    }
    if (k == 2) {
      std::vector<EdgeId> ids;
      for (const auto& [id, e] : p.edges()) ids.push_back(id);
      const Edge& e = p.edge(ids[rng_->Uniform(0, static_cast<int>(ids.size()) - 1)]);
      local = {e.u, e.v};
    }
    if (k == 1) local = {rng_->Uniform(1, p.num_vertices())};
    rng_->Shuffle(&local);
    std::map<VertexId, VertexId> shared;
    for (int i = 0; i < k; ++i) shared[local[i]] = target[i];
    GroundTruthSum sum;
    sum.piece = static_cast<int>(pieces_.size());
    sum.shared = target;
    std::sort(sum.shared.begin(), sum.shared.end());
    EdgeId shared_edge = k == 2 ? FindEdge(g_, target[0], target[1]) : 0;
    Glue(kind, p, shared);
    if (k == 2 && rng_->Bernoulli(0.5)) {
      g_.RemoveEdge(shared_edge);
      sum.deleted_edge = true;
    }
    sums_.push_back(std::move(sum));
    return true;
  }

  void Glue(const std::string& kind, const Multigraph& p,
            const std::map<VertexId, VertexId>& shared) {
    std::map<VertexId, VertexId> to_global;
    GroundTruthPiece piece;
    piece.kind = kind;
    for (VertexId v : p.vertices()) {
      auto it = shared.find(v);
      VertexId x = it != shared.end() ? it->second : next_vertex_++;
      to_global[v] = x;
      g_.AddVertex(x);
      piece.vertices.push_back(x);
    }
    std::sort(piece.vertices.begin(), piece.vertices.end());
    for (const auto& [id, e] : p.edges()) {
      if (shared.count(e.u) && shared.count(e.v)) continue;  // already present
      g_.AddEdge(next_edge_++, to_global[e.u], to_global[e.v]);
    }
    pieces_.push_back(std::move(piece));
  }

  const GeneratorSpec& spec_;
  int budget_;
  Rng* rng_;
  Multigraph g_;
  VertexId next_vertex_ = 1;
  EdgeId next_edge_ = 1;
  std::vector<GroundTruthPiece> pieces_;
  std::vector<GroundTruthSum> sums_;
};

// Subdivides every edge whose ends share a BFS color.
int MakeBipartite(Multigraph* g) {
  std::map<VertexId, int> color;
  for (VertexId s : g->vertices()) {
    if (color.count(s)) continue;
    color[s] = 0;
    std::vector<VertexId> queue{s};
    for (size_t i = 0; i < queue.size(); ++i) {
      for (VertexId y : g->Neighbors(queue[i])) {
        if (color.emplace(y, 1 - color[queue[i]]).second) queue.push_back(y);
      }
    }
  }
  std::vector<EdgeId> bad;
  for (const auto& [id, e] : g->edges()) {
    if (color[e.u] == color[e.v]) bad.push_back(id);
  }
  VertexId next_v = g->MaxVertexId() + 1;
  EdgeId next_e = g->MaxEdgeId() + 1;
  for (EdgeId id : bad) {
    Edge e = g->edge(id);
    g->RemoveEdge(id);
    VertexId x = next_v++;
    g->AddVertex(x);
    g->AddEdge(e.id, e.u, x);
    g->AddEdge(next_e++, x, e.v);
  }
  return static_cast<int>(bad.size());
}

bool HasPerfectMatching(const Multigraph& g) {
  if (g.num_vertices() % 2 == 1) return false;
  return EnumeratePerfectMatchings(g, [](const Matching&) { return false; }) > 0;
}

}  // namespace

const char* GeneratorModeName(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::kK33:
      return "k33";
    case GeneratorMode::kK5:
      return "k5";
    case GeneratorMode::kPlanarOnly:
      return "planar";
  }
  return "unknown";
}

GeneratorMode ParseGeneratorMode(const std::string& name) {
  if (name == "k33") return GeneratorMode::kK33;
  if (name == "k5") return GeneratorMode::kK5;
  if (name == "planar") return GeneratorMode::kPlanarOnly;
  throw ParseError("unknown generator mode '" + name + "'", 0);
}

int Rng::Uniform(int lo, int hi) {
  if (hi <= lo) return lo;
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

bool Rng::Bernoulli(double p) {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

GeneratedInstance Generate(const GeneratorSpec& spec) {
  if (spec.min_pieces < 1 || spec.max_piece_size < 3 || spec.max_vertices < 3) {
    throw PreconditionError("generator spec admits no graph");
  }
  Rng rng(spec.seed);
  const int attempts = spec.bipartite ? 500 : 1;
  for (int a = 0; a < attempts; ++a) {
    int budget = spec.max_vertices;
    if (spec.bipartite) budget = std::max(3, spec.max_vertices - a % (spec.max_vertices / 2 + 1));
    GeneratedInstance inst = Builder(spec, budget, &rng).Build();
    if (spec.bipartite) {
      inst.subdivisions = MakeBipartite(&inst.graph);
      if (inst.graph.num_vertices() > spec.max_vertices ||
          !HasPerfectMatching(inst.graph)) {
        continue;
      }
    }
    std::map<VertexId, VertexId> vmap;
    inst.graph = Relabel(inst.graph, &rng, &vmap);
    for (GroundTruthPiece& p : inst.pieces) {
      for (VertexId& v : p.vertices) v = vmap.at(v);
      std::sort(p.vertices.begin(), p.vertices.end());
    }
    for (GroundTruthSum& s : inst.sums) {
      for (VertexId& v : s.shared) v = vmap.at(v);
      std::sort(s.shared.begin(), s.shared.end());
    }
    return inst;
  }
  throw Error("no bipartite instance with a perfect matching within " +
              std::to_string(spec.max_vertices) + " vertices for seed " +
              std::to_string(spec.seed));
}

Multigraph RandomPlanarMultigraph(int n, std::uint64_t seed, bool loops,
                                  bool parallels) {
  if (n < 1) throw PreconditionError("need at least one vertex");
  Rng rng(seed);
  Multigraph g;
  if (n == 1) {
    g.AddVertex(1);
  } else if (n == 2) {
    g.AddVertex(1);
    g.AddVertex(2);
    g.AddEdge(1, 1, 2);
  } else {
    g = StackedTriangulation(n, &rng);
    ThinEdges(&g, 0.4, &rng, Connected);
  }
  EdgeId next = g.MaxEdgeId() + 1;
  if (parallels) {
    std::vector<Edge> edges;
    for (const auto& [id, e] : g.edges()) edges.push_back(e);
    for (const Edge& e : edges) {
      if (rng.Bernoulli(0.15)) g.AddEdge(next++, e.v, e.u);
    }
  }
  if (loops) {
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    for (VertexId v : vs) {
      if (rng.Bernoulli(0.1)) g.AddEdge(next++, v, v);
    }
  }
  std::map<VertexId, VertexId> vmap;
  return Relabel(g, &rng, &vmap);
}

std::vector<std::pair<int, int>> RandomTree(int n, std::uint64_t seed) {
  Rng rng(seed);
  const double chain = std::array<double, 3>{0.0, 0.5, 0.9}[rng.Uniform(0, 2)];
  std::vector<std::pair<int, int>> links;
  for (int v = 2; v <= n; ++v) {
    int parent = rng.Bernoulli(chain) ? v - 1 : rng.Uniform(1, v - 1);
    links.push_back({v, parent});
  }
  return links;
}

Multigraph MakeComplete(int n) {
  Multigraph g;
  for (int v = 1; v <= n; ++v) g.AddVertex(v);
  EdgeId next = 1;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) g.AddEdge(next++, a, b);
  }
  return g;
}

Multigraph MakeK5() { return MakeComplete(5); }

Multigraph MakeK33() {
  Multigraph g;
  for (int v = 1; v <= 6; ++v) g.AddVertex(v);
  EdgeId next = 1;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 4; b <= 6; ++b) g.AddEdge(next++, a, b);
  }
  return g;
}

Multigraph MakeV8() {
  Multigraph g = MakeCycle(8);
  EdgeId next = 9;
  for (int i = 1; i <= 4; ++i) g.AddEdge(next++, i, i + 4);
  return g;
}

Multigraph MakeCycle(int n) {
  Multigraph g;
  for (int v = 1; v <= n; ++v) g.AddVertex(v);
  for (int v = 1; v <= n; ++v) g.AddEdge(v, v, v % n + 1);
  return g;
}

Multigraph MakeGrid(int rows, int cols) {
  Multigraph g;
  auto id = [cols](int r, int c) { return r * cols + c + 1; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) g.AddVertex(id(r, c));
  }
  EdgeId next = 1;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.AddEdge(next++, id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.AddEdge(next++, id(r, c), id(r + 1, c));
    }
  }
  return g;
}

}  // namespace isoweight
