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

// Brute-force checkers used by tests and by `isoweight verify`. None of them
// relies on the weighting code they check.

#ifndef ISOWEIGHT_ORACLE_H_
#define ISOWEIGHT_ORACLE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "isoweight/decompose.h"
#include "isoweight/graph.h"

namespace isoweight {

struct EnumerationResult {
  std::int64_t count = 0;
  bool truncated = false;  // stopped at the cap or by the visitor
};

// Visits every simple cycle once, loops and 2-cycles of parallel edges
// included. The visitor returns false to stop.
EnumerationResult EnumerateCycles(const Multigraph& g, std::int64_t cap,
                                  const std::function<bool(const Cycle&)>& visit);

struct CirculationReport {
  bool ok = true;
  std::int64_t cycles = 0;
  bool truncated = false;
  Cycle witness;  // a zero-circulation cycle when !ok
};

// Every simple cycle of `g` must have nonzero circulation.
CirculationReport CheckNonzeroCirculation(const Multigraph& g,
                                          const WeightAssignment& w,
                                          std::int64_t cap);

// Visits every perfect matching (edge ids ascending). Loops are ignored.
// The visitor returns false to stop.
std::int64_t EnumeratePerfectMatchings(
    const Multigraph& g, const std::function<bool(const Matching&)>& visit);
std::int64_t CountPerfectMatchings(const Multigraph& g);

// Side 0 / 1 per vertex, the smallest vertex of each component on side 0;
// nullopt for a non-bipartite graph.
std::optional<std::map<VertexId, int>> TwoColoring(const Multigraph& g);

enum class IsolationVerdict { kUniqueMin, kTie, kNoPerfectMatching, kNotBipartite };

const char* IsolationVerdictName(IsolationVerdict v);

struct IsolationReport {
  IsolationVerdict verdict = IsolationVerdict::kNoPerfectMatching;
  std::int64_t matchings = 0;
  Integer min_weight;
  Matching best;
  Matching tied;  // second minimum-weight matching on a tie
};

// Weighs each matching by orienting its edges from side 0 to side 1.
IsolationReport CheckIsolation(const Multigraph& g, const WeightAssignment& w);

// Projection of cycle `c` of `glued` onto each node of `tree`: every
// excursion into the part beyond a tree edge becomes the matching virtual
// edge of the node's clique. Nodes the cycle does not touch are absent.
std::map<int, Cycle> ProjectCycle(const ComponentTree& tree,
                                  const Multigraph& glued, const Cycle& c);

// `w` plus weight 0 on every virtual edge of `forest`.
WeightAssignment WithZeroVirtual(const ComponentForest& forest,
                                 const WeightAssignment& w);

}  // namespace isoweight

#endif  // ISOWEIGHT_ORACLE_H_
