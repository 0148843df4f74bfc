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

#ifndef CLMAT_METRICS_H_
#define CLMAT_METRICS_H_

#include <functional>
#include <optional>
#include <string_view>

#include "clmat/aggregation_tree.h"
#include "clmat/topology.h"

namespace clmat {

enum class EnergyVariant { kNodeMin, kEdgeMin };
enum class CostVariant { kClmat, kEq3 };

const char* EnergyVariantName(EnergyVariant variant);
const char* CostVariantName(CostVariant variant);
std::optional<EnergyVariant> ParseEnergyVariant(std::string_view text);
std::optional<CostVariant> ParseCostVariant(std::string_view text);

// Scored triple for one candidate tree. tree_energy is empty when the tree
// has no non-root node; tree_cost may be +infinity.
struct TreeMetrics {
  std::optional<double> tree_energy;
  double tree_cost = 0.0;
  double total_distance = 0.0;

  bool operator==(const TreeMetrics&) const = default;
};

// Minimum node energy on the root-to-leaf path, leaf excluded, root included.
double BranchEnergy(const AggregationTree& tree, const NetworkGraph& graph,
                    std::size_t leaf);

// node-min: minimum energy over spanned non-root nodes.
// edge-min: minimum current link energy over tree edges.
// Both throw kSingletonTree on a tree with no edges.
double TreeEnergy(const AggregationTree& tree, const NetworkGraph& graph,
                  EnergyVariant variant);

// e_uv / residual_u + e_vu / residual_v. Throws kNonPositiveResidual.
double Eq3EdgeCost(double tx_uv, double tx_vu, double residual_u,
                   double residual_v);

// e_u / (e_u - T) + e_v / (e_v - T); +infinity whenever a denominator <= 0.
double ClmatEdgeCost(double energy_u, double energy_v, double tree_energy);

struct CostContext {
  // Required by clmat when the tree has edges.
  std::optional<double> tree_energy;
  // Per-packet transmission energy over a link of the given distance (eq3).
  std::function<double(double)> tx_energy;
};

// Sum of edge costs over the tree's edges, in child-index order.
// +infinity is absorbing.
double TreeCost(const AggregationTree& tree, const NetworkGraph& graph,
                CostVariant variant, const CostContext& ctx);

// Sum of root distances over spanned non-root nodes in index order.
// Throws kUnreachableNode if any spanned node has a non-finite distance.
double TotalDistance(const AggregationTree& tree);

}  // namespace clmat

#endif  // CLMAT_METRICS_H_
