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

#ifndef CLMAT_AGGREGATION_TREE_H_
#define CLMAT_AGGREGATION_TREE_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "clmat/topology.h"

namespace clmat {

// Rooted shortest-path tree over a NetworkGraph, indexed by graph position.
// Nodes the root cannot reach are not spanned: their parent is empty and
// their dist is +infinity.
struct AggregationTree {
  std::size_t root = 0;
  std::vector<std::optional<std::size_t>> parent;
  std::vector<double> dist;
  std::vector<std::size_t> hops;
  std::size_t depth = 0;

  std::size_t node_count() const { return parent.size(); }
  bool Spans(std::size_t i) const {
    return i == root || (i < parent.size() && parent[i].has_value());
  }
  bool IsSpanning() const;
  std::size_t SpannedCount() const;

  // Spanned node indices in ascending order, root included.
  std::vector<std::size_t> SpannedNodes() const;

  // Tree edges as (parent, child), ordered by child index.
  std::vector<std::pair<std::size_t, std::size_t>> Edges() const;

  // Number of children per node.
  std::vector<std::size_t> ChildCounts() const;

  // Root-to-`i` path, root first.
  std::vector<std::size_t> PathFromRoot(std::size_t i) const;
};

}  // namespace clmat

#endif  // CLMAT_AGGREGATION_TREE_H_
