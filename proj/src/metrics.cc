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

#include "clmat/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace clmat {

const char* EnergyVariantName(EnergyVariant variant) {
  return variant == EnergyVariant::kEdgeMin ? "edge-min" : "node-min";
}

const char* CostVariantName(CostVariant variant) {
  return variant == CostVariant::kEq3 ? "eq3" : "clmat";
}

std::optional<EnergyVariant> ParseEnergyVariant(std::string_view text) {
  if (text == "node-min") return EnergyVariant::kNodeMin;
  if (text == "edge-min") return EnergyVariant::kEdgeMin;
  return std::nullopt;
}

std::optional<CostVariant> ParseCostVariant(std::string_view text) {
  if (text == "clmat") return CostVariant::kClmat;
  if (text == "eq3") return CostVariant::kEq3;
  return std::nullopt;
}

double BranchEnergy(const AggregationTree& tree, const NetworkGraph& graph,
                    std::size_t leaf) {
  if (!tree.Spans(leaf)) {
    throw Error(ErrorKind::kNotInTree,
                "node " + graph.id(leaf) + " is not in the tree");
  }
  if (leaf == tree.root) {
    throw Error(ErrorKind::kLeafIsRoot, "branch leaf must differ from root");
  }
  double lowest = kInfinity;
  std::vector<std::size_t> path = tree.PathFromRoot(leaf);
  path.pop_back();
  for (std::size_t i : path) lowest = std::min(lowest, graph.energy(i));
  return lowest;
}

double TreeEnergy(const AggregationTree& tree, const NetworkGraph& graph,
                  EnergyVariant variant) {
  const auto edges = tree.Edges();
  if (edges.empty()) {
    throw Error(ErrorKind::kSingletonTree,
                "tree energy is undefined for a single-node tree");
  }
  double lowest = kInfinity;
  for (const auto& [parent, child] : edges) {
    const double e = variant == EnergyVariant::kNodeMin
                         ? graph.energy(child)
                         : graph.LinkEnergy(parent, child);
    lowest = std::min(lowest, e);
  }
  return lowest;
}

double Eq3EdgeCost(double tx_uv, double tx_vu, double residual_u,
                   double residual_v) {
  if (!(residual_u > 0.0) || !(residual_v > 0.0)) {
    throw Error(ErrorKind::kNonPositiveResidual,
                "residual energy must be positive");
  }
  return tx_uv / residual_u + tx_vu / residual_v;
}

double ClmatEdgeCost(double energy_u, double energy_v, double tree_energy) {
  const double du = energy_u - tree_energy;
  const double dv = energy_v - tree_energy;
  if (!(du > 0.0) || !(dv > 0.0)) return kInfinity;
  return energy_u / du + energy_v / dv;
}

double TreeCost(const AggregationTree& tree, const NetworkGraph& graph,
                CostVariant variant, const CostContext& ctx) {
  const auto edges = tree.Edges();
  if (edges.empty()) return 0.0;
  if (variant == CostVariant::kClmat && !ctx.tree_energy) {
    throw Error(ErrorKind::kInvalidConfig, "clmat cost needs a tree energy");
  }
  if (variant == CostVariant::kEq3 && !ctx.tx_energy) {
    throw Error(ErrorKind::kInvalidConfig,
                "eq3 cost needs a transmission energy model");
  }
  double total = 0.0;
  for (const auto& [parent, child] : edges) {
    double cost;
    if (variant == CostVariant::kClmat) {
      cost = ClmatEdgeCost(graph.energy(parent), graph.energy(child),
                           *ctx.tree_energy);
    } else {
      const double d = graph.Distance(parent, child);
      const double tx = ctx.tx_energy(d);
      cost = Eq3EdgeCost(tx, tx, graph.energy(parent), graph.energy(child));
    }
    total += cost;
  }
  return total;
}

double TotalDistance(const AggregationTree& tree) {
  double total = 0.0;
  for (std::size_t i : tree.SpannedNodes()) {
    if (i == tree.root) continue;
    if (!std::isfinite(tree.dist[i])) {
      throw Error(ErrorKind::kUnreachableNode,
                  "spanned node " + std::to_string(i) +
                      " has no finite root distance");
    }
    total += tree.dist[i];
  }
  return total;
}

}  // namespace clmat
