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

#include "isoweight/oracle.h"

#include <algorithm>
#include <deque>
#include <set>

#include "isoweight/error.h"

namespace isoweight {
namespace {

Dart DartFrom(const Edge& e, VertexId tail) { return Dart{e.id, e.u == tail}; }

class CycleWalker {
 public:
  CycleWalker(const Multigraph& g, std::int64_t cap,
              const std::function<bool(const Cycle&)>& visit)
      : g_(g), cap_(cap), visit_(visit) {}

  EnumerationResult Run() {
    for (const auto& [id, e] : g_.edges()) {
      if (e.is_loop() && !Emit({Dart{id, true}})) return result_;
    }
    for (VertexId s : g_.vertices()) {
      start_ = s;
      on_path_.insert(s);
      if (!Extend(s)) return result_;
      on_path_.erase(s);
    }
    return result_;
  }

 private:
  bool Emit(const Cycle& c) {
    if (result_.count >= cap_) {
      result_.truncated = true;
      return false;
    }
    ++result_.count;
    if (!visit_(c)) {
      result_.truncated = true;
      return false;
    }
    return true;
  }

  bool Extend(VertexId x) {
    for (EdgeId id : g_.IncidentEdges(x)) {
      const Edge& e = g_.edge(id);
      if (e.is_loop()) continue;
      VertexId y = e.Other(x);
      if (y == start_) {
        if (path_.empty()) continue;
        if (path_.size() == 1) {
          if (path_[0].edge >= id) continue;
        } else {
          VertexId first = g_.Head(path_.front());
          if (first >= x) continue;
        }
        path_.push_back(DartFrom(e, x));
        bool go_on = Emit(path_);
        path_.pop_back();
        if (!go_on) return false;
        continue;
      }
      if (y < start_ || on_path_.count(y)) continue;
      path_.push_back(DartFrom(e, x));
      on_path_.insert(y);
      bool go_on = Extend(y);
      on_path_.erase(y);
      path_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Multigraph& g_;
  std::int64_t cap_;
  const std::function<bool(const Cycle&)>& visit_;
  EnumerationResult result_;
  VertexId start_ = 0;
  Cycle path_;
  std::set<VertexId> on_path_;
};

class MatchingWalker {
 public:
  MatchingWalker(const Multigraph& g,
                 const std::function<bool(const Matching&)>& visit)
      : g_(g), visit_(visit) {
    for (VertexId v : g.vertices()) unmatched_.insert(v);
  }

  std::int64_t Run() {
    if (g_.num_vertices() % 2 == 0) Search();
    return count_;
  }

 private:
  // Returns false once the visitor asks to stop.
  bool Search() {
    if (unmatched_.empty()) {
      ++count_;
      Matching m = chosen_;
      std::sort(m.begin(), m.end());
      return visit_(m);
    }
    VertexId best = 0;
    std::vector<EdgeId> best_options;
    bool found = false;
    for (VertexId v : unmatched_) {
      std::vector<EdgeId> options;
      for (EdgeId id : g_.IncidentEdges(v)) {
        const Edge& e = g_.edge(id);
        if (!e.is_loop() && unmatched_.count(e.Other(v))) options.push_back(id);
      }
      if (!found || options.size() < best_options.size()) {
        best = v;
        best_options = std::move(options);
        found = true;
        if (best_options.empty()) return true;
      }
    }
    for (EdgeId id : best_options) {
      VertexId y = g_.edge(id).Other(best);
      unmatched_.erase(best);
      unmatched_.erase(y);
      chosen_.push_back(id);
      bool go_on = Search();
      chosen_.pop_back();
      unmatched_.insert(best);
      unmatched_.insert(y);
      if (!go_on) return false;
    }
    return true;
  }

  const Multigraph& g_;
  const std::function<bool(const Matching&)>& visit_;
  std::set<VertexId> unmatched_;
  Matching chosen_;
  std::int64_t count_ = 0;
};

}  // namespace

EnumerationResult EnumerateCycles(const Multigraph& g, std::int64_t cap,
                                  const std::function<bool(const Cycle&)>& visit) {
  return CycleWalker(g, cap, visit).Run();
}

CirculationReport CheckNonzeroCirculation(const Multigraph& g,
                                          const WeightAssignment& w,
                                          std::int64_t cap) {
  CirculationReport report;
  EnumerationResult r = EnumerateCycles(g, cap, [&](const Cycle& c) {
    if (Circulation(c, w) == 0) {
      report.ok = false;
      report.witness = c;
      return false;
    }
    return true;
  });
  report.cycles = r.count;
  report.truncated = r.truncated && report.ok;
  return report;
}

std::int64_t EnumeratePerfectMatchings(
    const Multigraph& g, const std::function<bool(const Matching&)>& visit) {
  return MatchingWalker(g, visit).Run();
}

std::int64_t CountPerfectMatchings(const Multigraph& g) {
  return EnumeratePerfectMatchings(g, [](const Matching&) { return true; });
}

std::optional<std::map<VertexId, int>> TwoColoring(const Multigraph& g) {
  std::map<VertexId, int> side;
  for (VertexId s : g.vertices()) {
    if (side.count(s)) continue;
    side[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (EdgeId id : g.IncidentEdges(x)) {
        const Edge& e = g.edge(id);
        if (e.is_loop()) return std::nullopt;
        VertexId y = e.Other(x);
        auto it = side.find(y);
        if (it == side.end()) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (it->second == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

const char* IsolationVerdictName(IsolationVerdict v) {
  switch (v) {
    case IsolationVerdict::kUniqueMin:
      return "unique-min";
    case IsolationVerdict::kTie:
      return "tie";
    case IsolationVerdict::kNoPerfectMatching:
      return "no-pm";
    case IsolationVerdict::kNotBipartite:
      return "not-bipartite";
  }
  return "unknown";
}

IsolationReport CheckIsolation(const Multigraph& g, const WeightAssignment& w) {
  IsolationReport report;
  auto side = TwoColoring(g);
  if (!side) {
    report.verdict = IsolationVerdict::kNotBipartite;
    return report;
  }
  int at_min = 0;
  report.matchings = EnumeratePerfectMatchings(g, [&](const Matching& m) {
    Integer weight = MatchingWeight(g, m, w, &*side);
    if (at_min == 0 || weight < report.min_weight) {
      report.min_weight = weight;
      report.best = m;
      report.tied.clear();
      at_min = 1;
    } else if (weight == report.min_weight) {
      if (at_min == 1) report.tied = m;
      ++at_min;
    }
    return true;
  });
  if (report.matchings == 0) {
    report.verdict = IsolationVerdict::kNoPerfectMatching;
  } else {
    report.verdict =
        at_min == 1 ? IsolationVerdict::kUniqueMin : IsolationVerdict::kTie;
  }
  return report;
}

std::map<int, Cycle> ProjectCycle(const ComponentTree& tree,
                                  const Multigraph& glued, const Cycle& c) {
  ValidateCycle(glued, c);
  std::map<EdgeId, int> owner;
  for (const Dart& d : c) {
    int node = tree.NodeOfEdge(d.edge);
    if (node == 0) {
      throw PreconditionError("cycle edge " + std::to_string(d.edge) +
                              " is not in the tree");
    }
    owner[d.edge] = node;
  }
  std::map<int, Cycle> out;
  for (const auto& [nid, node] : tree.nodes) {
    // Side of every other node as seen from nid: the tree edge leading there.
    std::map<int, int> side{{nid, 0}};
    for (int te : tree.EdgesAt(nid)) {
      for (int x : tree.Region(nid, te)) side[x] = te;
    }
    const size_t n = c.size();
    std::vector<int> where(n);
    bool touches = false;
    for (size_t i = 0; i < n; ++i) {
      where[i] = side.at(owner.at(c[i].edge));
      touches = touches || where[i] == 0;
    }
    if (!touches) continue;
    // Start right after a switch so no excursion wraps around.
    size_t start = 0;
    while (start < n && where[start] == where[(start + n - 1) % n]) ++start;
    if (start == n) start = 0;
    Cycle proj;
    for (size_t k = 0; k < n;) {
      size_t i = (start + k) % n;
      if (where[i] == 0) {
        proj.push_back(c[i]);
        ++k;
        continue;
      }
      size_t len = 0;
      while (k + len < n && where[(start + k + len) % n] == where[i]) ++len;
      VertexId x = glued.Tail(c[i]);
      VertexId y = glued.Head(c[(start + k + len - 1) % n]);
      const VirtualClique& q = node.clique(tree.edges.at(where[i]).CliqueAt(nid));
      EdgeId chosen = 0;
      for (EdgeId e : q.edges) {
        const Edge& ve = node.graph.edge(e);
        if ((ve.u == x && ve.v == y) || (ve.u == y && ve.v == x)) chosen = e;
      }
      if (chosen == 0) {
        throw VerificationError("excursion from " + std::to_string(x) + " to " +
                                std::to_string(y) + " has no virtual edge in node " +
                                std::to_string(nid));
      }
      proj.push_back(DartFrom(node.graph.edge(chosen), x));
      k += len;
    }
    out[nid] = std::move(proj);
  }
  return out;
}

WeightAssignment WithZeroVirtual(const ComponentForest& forest,
                                 const WeightAssignment& w) {
  WeightAssignment out = w;
  for (const ComponentTree& tree : forest.trees) {
    for (const auto& [id, node] : tree.nodes) {
      for (const auto& [eid, e] : node.graph.edges()) {
        if (e.tag == EdgeTag::kVirtual) out.Set(eid, 0);
      }
    }
  }
  return out;
}

}  // namespace isoweight
