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

#include "clmat/tree_builder.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

namespace clmat {

bool AggregationTree::IsSpanning() const {
  return SpannedCount() == node_count();
}

std::size_t AggregationTree::SpannedCount() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < node_count(); ++i) count += Spans(i) ? 1 : 0;
  return count;
}

std::vector<std::size_t> AggregationTree::SpannedNodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < node_count(); ++i) {
    if (Spans(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> AggregationTree::Edges()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < node_count(); ++i) {
    if (parent[i]) out.emplace_back(*parent[i], i);
  }
  return out;
}

std::vector<std::size_t> AggregationTree::ChildCounts() const {
  std::vector<std::size_t> out(node_count(), 0);
  for (const auto& p : parent) {
    if (p) ++out[*p];
  }
  return out;
}

std::vector<std::size_t> AggregationTree::PathFromRoot(std::size_t i) const {
  std::vector<std::size_t> path;
  if (!Spans(i)) return path;
  for (std::size_t at = i;; at = *parent[at]) {
    path.push_back(at);
    if (at == root) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

AggregationTree ShortestPathTree(const NetworkGraph& graph, std::size_t root) {
  const std::size_t n = graph.size();
  if (root >= n) {
    throw Error(ErrorKind::kUnknownVertex, "root index out of range");
  }
  AggregationTree tree;
  tree.root = root;
  tree.parent.assign(n, std::nullopt);
  tree.dist.assign(n, kInfinity);
  tree.hops.assign(n, 0);
  tree.dist[root] = 0.0;

  // Min-heap on (distance, index): popping reproduces the linear scan that
  // picks the smallest tentative distance, lowest index on ties.
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> frontier;
  std::vector<bool> final(n, false);
  frontier.emplace(0.0, root);
  while (!frontier.empty()) {
    auto [d, v] = frontier.top();
    frontier.pop();
    if (final[v] || d > tree.dist[v]) continue;
    final[v] = true;
    for (const Neighbor& nb : graph.Neighbors(v)) {
      if (final[nb.index]) continue;
      const double candidate = tree.dist[v] + nb.distance;
      if (candidate < tree.dist[nb.index]) {
        tree.dist[nb.index] = candidate;
        tree.parent[nb.index] = v;
        tree.hops[nb.index] = tree.hops[v] + 1;
        frontier.emplace(candidate, nb.index);
      }
    }
  }
  // hops[] was written at relaxation time; a later strict improvement always
  // rewrites it together with the parent, so it is final here.
  tree.depth = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (tree.Spans(i)) tree.depth = std::max(tree.depth, tree.hops[i]);
  }
  return tree;
}

AggregationTree ShortestPathTree(const NetworkGraph& graph,
                                 std::string_view root) {
  return ShortestPathTree(graph, graph.IndexOf(root));
}

std::size_t TreeDepth(const AggregationTree& tree) {
  std::size_t depth = 0;
  for (std::size_t i = 0; i < tree.node_count(); ++i) {
    if (!tree.Spans(i)) continue;
    std::size_t count = 0;
    for (std::size_t at = i; at != tree.root; at = *tree.parent[at]) ++count;
    depth = std::max(depth, count);
  }
  return depth;
}

std::vector<double> OracleShortestPaths(const NetworkGraph& graph,
                                        std::size_t root) {
  const std::size_t n = graph.size();
  if (root >= n) {
    throw Error(ErrorKind::kUnknownVertex, "root index out of range");
  }
  std::vector<std::tuple<std::size_t, std::size_t, double>> arcs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const double w = graph.Distance(u, v);
      if (u != v && w < kInfinity) arcs.emplace_back(u, v, w);
    }
  }
  std::vector<double> dist(n, kInfinity);
  dist[root] = 0.0;
  for (std::size_t sweep = 0; sweep < n; ++sweep) {
    bool changed = false;
    for (const auto& [u, v, w] : arcs) {
      if (dist[u] + w < dist[v]) {
        dist[v] = dist[u] + w;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist;
}

TreeMetrics ComputeMetrics(const AggregationTree& tree,
                           const NetworkGraph& graph,
                           const MetricsConfig& config) {
  TreeMetrics metrics;
  metrics.total_distance = TotalDistance(tree);
  if (tree.Edges().empty()) {
    metrics.tree_cost = 0.0;
    return metrics;
  }
  metrics.tree_energy = TreeEnergy(tree, graph, config.energy);
  CostContext ctx;
  ctx.tree_energy = metrics.tree_energy;
  const RadioModel radio = config.radio;
  ctx.tx_energy = [radio](double d) { return radio.TxEnergy(d); };
  metrics.tree_cost = TreeCost(tree, graph, config.cost, ctx);
  return metrics;
}

CandidateSet BuildAllCandidates(const NetworkGraph& graph,
                                const MetricsConfig& config) {
  CandidateSet set;
  set.entries.reserve(graph.size());
  for (std::size_t r = 0; r < graph.size(); ++r) {
    Candidate c;
    c.root = r;
    c.tree = ShortestPathTree(graph, r);
    c.metrics = ComputeMetrics(c.tree, graph, config);
    c.spanning = c.tree.IsSpanning();
    set.entries.push_back(std::move(c));
  }
  return set;
}

}  // namespace clmat
