// Copyright 2026 The CLMAT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLMAT_TREE_BUILDER_H_
#define CLMAT_TREE_BUILDER_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "clmat/aggregation_tree.h"
#include "clmat/metrics.h"
#include "clmat/radio.h"
#include "clmat/topology.h"

namespace clmat {

// Dijkstra from `root`. The next node finalized is the unfinalized one with
// the smallest tentative distance, lowest index first on ties; a parent is
// only replaced on a strict improvement.
AggregationTree ShortestPathTree(const NetworkGraph& graph, std::size_t root);
AggregationTree ShortestPathTree(const NetworkGraph& graph,
                                 std::string_view root);

std::size_t TreeDepth(const AggregationTree& tree);

// Bellman-Ford style edge relaxation to a fixpoint (at most |V| sweeps).
// Unreachable nodes get +infinity. Shares no code with ShortestPathTree.
std::vector<double> OracleShortestPaths(const NetworkGraph& graph,
                                        std::size_t root);

struct MetricsConfig {
  CostVariant cost = CostVariant::kClmat;
  EnergyVariant energy = EnergyVariant::kNodeMin;
  // Supplies the per-packet transmission energies for the eq3 cost.
  RadioModel radio;
};

struct Candidate {
  std::size_t root = 0;
  AggregationTree tree;
  TreeMetrics metrics;
  bool spanning = false;
};

// One entry per graph node, in insertion order.
struct CandidateSet {
  std::vector<Candidate> entries;
};

// Metric triple for one tree. tree_energy is empty for a singleton tree.
TreeMetrics ComputeMetrics(const AggregationTree& tree,
                           const NetworkGraph& graph,
                           const MetricsConfig& config);

CandidateSet BuildAllCandidates(const NetworkGraph& graph,
                                const MetricsConfig& config);

}  // namespace clmat

#endif  // CLMAT_TREE_BUILDER_H_
