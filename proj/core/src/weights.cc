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

#include "isoweight/weights.h"

#include <algorithm>
#include <deque>
#include <set>

#include "isoweight/error.h"

namespace isoweight {
namespace {

Integer Pow(const Integer& base, int exp) {
  Integer out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

void SetCanonical(WeightAssignment* w, const Edge& e, const Integer& value) {
  w->Set(e.id, e.u <= e.v ? value : Integer(-value));
}

}  // namespace

SchemeParams ChooseParams(const ComponentForest& forest,
                          const std::vector<WorkingTree>& wts) {
  SchemeParams p;
  for (const ComponentTree& tree : forest.trees) {
    for (const auto& [id, node] : tree.nodes) {
      if (node.kind == NodeKind::kConstant) {
        p.m_const = std::max(p.m_const, node.CountNonVirtualEdges());
      }
    }
  }
  p.K = Integer(1) << (p.m_const + 3);
  p.L = 1;
  for (const WorkingTree& wt : wts) p.L = std::max(p.L, wt.max_level);
  return p;
}

WeightAssignment WeightConstantNode(const ComponentNode& node,
                                    const WorkingTreeNode& wnode,
                                    const Integer& K) {
  WeightAssignment w;
  Integer unit = Pow(K, wnode.height - 1) * wnode.leaves;
  int j = 0;
  for (const auto& [id, e] : node.graph.edges()) {
    if (e.tag == EdgeTag::kVirtual) continue;
    ++j;
    SetCanonical(&w, e, (Integer(1) << j) * unit);
  }
  return w;
}

FacePlan PlanFaceCirculations(const ComponentNode& node, const WorkingTree& wt,
                              const Integer& K) {
  if (!node.embedding) {
    throw PreconditionError("node " + std::to_string(node.id) + " is not embedded");
  }
  const Embedding& emb = *node.embedding;
  FacePlan plan;
  for (const WorkingTreeChild& ch : wt.nodes.at(node.id).children) {
    const WorkingTreeNode& child = wt.nodes.at(ch.node);
    Integer term = 2 * Pow(K, child.height) * child.leaves;
    const VirtualClique& c = node.clique(ch.clique);
    std::set<int> faces;
    for (EdgeId e : c.edges) {
      faces.insert(emb.FaceOf(Dart{e, true}));
      faces.insert(emb.FaceOf(Dart{e, false}));
    }
    if (c.edges.size() == 3) {
      int tri = FindFaceWithEdges(emb, c.edges);
      if (tri < 0) {
        throw PreconditionError("triangle clique " + std::to_string(c.id) +
                                " of node " + std::to_string(node.id) +
                                " is not a face");
      }
      faces.erase(tri);
    }
    faces.erase(emb.outer_face());
    for (int f : faces) plan[f] += term;
  }
  return plan;
}

WeightAssignment FaceToEdge(const Embedding& emb, const FacePlan& plan) {
  const int outer = emb.outer_face();
  for (const auto& [f, value] : plan) {
    if (f == outer && value != 0) {
      throw PreconditionError("plan assigns a circulation to the outer face");
    }
  }
  const int nf = emb.num_faces();
  std::vector<int> parent(nf, -1);
  std::vector<Dart> parent_dart(nf);  // dart of the tree edge inside the face
  std::vector<int> order{outer};
  parent[outer] = outer;
  for (size_t i = 0; i < order.size(); ++i) {
    int f = order[i];
    std::set<EdgeId> edges;
    for (const Dart& d : emb.faces()[f].boundary) edges.insert(d.edge);
    for (EdgeId e : edges) {
      for (bool fwd : {true, false}) {
        Dart d{e, fwd};
        int g = emb.FaceOf(d);
        if (parent[g] != -1) continue;
        parent[g] = f;
        parent_dart[g] = d;
        order.push_back(g);
      }
    }
  }
  if (static_cast<int>(order.size()) != nf) {
    throw VerificationError("dual graph is disconnected");
  }
  std::vector<Integer> sum(nf);
  for (int f = 0; f < nf; ++f) {
    if (f == outer) continue;
    auto it = plan.find(f);
    if (it != plan.end()) sum[f] = it->second;
  }
  WeightAssignment w;
  for (const auto& [id, e] : emb.graph().edges()) w.Set(id, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int g = *it;
    if (g == outer) continue;
    const Dart& d = parent_dart[g];
    w.Set(d.edge, d.forward ? sum[g] : Integer(-sum[g]));
    sum[parent[g]] += sum[g];
  }
  for (int f = 0; f < nf; ++f) {
    if (f == outer) continue;
    auto it = plan.find(f);
    Integer want = it == plan.end() ? Integer(0) : it->second;
    if (emb.FaceCirculation(f, w) != want) {
      throw VerificationError("face " + std::to_string(f) +
                              " misses its planned circulation");
    }
  }
  return w;
}

WeightAssignment PlanarNodeWeights(const ComponentNode& node,
                                   const FacePlan& plan) {
  if (!node.embedding) {
    throw PreconditionError("node " + std::to_string(node.id) + " is not embedded");
  }
  Contraction con = ContractVirtual(*node.embedding);
  FacePlan moved;
  for (const auto& [f, value] : plan) {
    if (value == 0) continue;
    auto it = con.face_map.find(f);
    if (it == con.face_map.end()) {
      throw PreconditionError("planned face " + std::to_string(f) +
                              " vanishes under contraction");
    }
    moved[it->second] += value;
  }
  return FaceToEdge(con.embedding, moved);
}

WeightAssignment BuildW0(const ComponentForest& forest,
                         const std::vector<WorkingTree>& wts,
                         const SchemeParams& params) {
  WeightAssignment w;
  for (size_t t = 0; t < forest.trees.size(); ++t) {
    const WorkingTree& wt = wts.at(t);
    for (const auto& [id, node] : forest.trees[t].nodes) {
      if (node.CountNonVirtualEdges() == 0) continue;
      if (node.kind == NodeKind::kConstant) {
        w.MergeDisjoint(WeightConstantNode(node, wt.nodes.at(id), params.K));
      } else {
        w.MergeDisjoint(
            PlanarNodeWeights(node, PlanFaceCirculations(node, wt, params.K)));
      }
    }
  }
  return w;
}

WeightAssignment BuildW1(const ComponentForest& forest) {
  WeightAssignment w;
  for (const ComponentTree& tree : forest.trees) {
    for (const auto& [id, node] : tree.nodes) {
      if (node.CountNonVirtualEdges() == 0) continue;
      if (node.kind == NodeKind::kConstant) {
        WeightAssignment zero;
        for (const auto& [eid, e] : node.graph.edges()) {
          if (e.tag != EdgeTag::kVirtual) zero.Set(eid, 0);
        }
        w.MergeDisjoint(zero);
        continue;
      }
      if (!node.embedding) {
        throw PreconditionError("node " + std::to_string(id) + " is not embedded");
      }
      Contraction con = ContractVirtual(*node.embedding);
      FacePlan plan;
      for (const Face& f : con.embedding.faces()) {
        if (f.id != con.embedding.outer_face()) plan[f.id] = 1;
      }
      w.MergeDisjoint(FaceToEdge(con.embedding, plan));
    }
  }
  return w;
}

Integer CirculationBound(const WorkingTree& wt, int node, const Integer& K) {
  const WorkingTreeNode& n = wt.nodes.at(node);
  return Pow(K, n.height) * n.leaves;
}

Integer GlobalCirculationBound(const std::vector<WorkingTree>& wts,
                               const Integer& K) {
  Integer best = 0;
  for (const WorkingTree& wt : wts) {
    best = std::max(best, CirculationBound(wt, wt.root, K));
  }
  return best;
}

SchemeWeights ComputeWeights(const ComponentForest& forest,
                             const std::vector<WorkingTree>& wts) {
  if (wts.size() != forest.trees.size()) {
    throw PreconditionError("one working tree per component tree expected");
  }
  SchemeWeights s;
  s.params = ChooseParams(forest, wts);
  s.w0 = BuildW0(forest, wts, s.params);
  s.w1 = BuildW1(forest);
  s.scale = 1 + 2 * s.w1.AbsSum();
  s.final = Combine(s.w0, s.w1, s.scale);
  return s;
}

}  // namespace isoweight
