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

#include "clmat/selection.h"

#include <algorithm>

namespace clmat {

const char* TieRuleName(TieRule rule) {
  return rule == TieRule::kPaperOrder ? "paper-order" : "min-depth";
}

std::optional<TieRule> ParseTieRule(std::string_view text) {
  if (text == "min-depth") return TieRule::kMinDepth;
  if (text == "paper-order") return TieRule::kPaperOrder;
  return std::nullopt;
}

bool RanksBefore(const RankEntry& a, const RankEntry& b, TieRule tie) {
  if (a.spanning != b.spanning) return a.spanning;
  if (a.metrics.total_distance != b.metrics.total_distance) {
    return a.metrics.total_distance < b.metrics.total_distance;
  }
  if (tie == TieRule::kMinDepth) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.order > b.order;
  }
  return a.order < b.order;
}

std::vector<RankEntry> RankCandidates(std::span<const RankEntry> entries,
                                      TieRule tie) {
  std::vector<RankEntry> ranked(entries.begin(), entries.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [tie](const RankEntry& a, const RankEntry& b) {
                     return RanksBefore(a, b, tie);
                   });
  if (ranked.empty() || !ranked.front().spanning) {
    throw Error(ErrorKind::kNoSpanningCandidate,
                "no candidate root reaches every node");
  }
  return ranked;
}

SelectionResult CompareTrees(const CandidateSet& candidates,
                             const NetworkGraph& graph, TieRule tie) {
  std::vector<RankEntry> entries;
  entries.reserve(candidates.entries.size());
  for (const Candidate& c : candidates.entries) {
    entries.push_back(RankEntry{graph.id(c.root), c.root, c.metrics,
                                c.tree.depth, c.spanning,
                                graph.energy(c.root)});
  }
  SelectionResult result;
  result.ranking = RankCandidates(entries, tie);
  const RankEntry& best = result.ranking.front();
  result.chosen_root = best.root;
  result.chosen_index = best.order;
  result.metrics = best.metrics;
  auto chosen = std::find_if(
      candidates.entries.begin(), candidates.entries.end(),
      [&](const Candidate& c) { return c.root == best.order; });
  result.tree = chosen->tree;
  return result;
}

SelectionResult SelectAggregator(const NetworkGraph& graph,
                                 const SelectConfig& config) {
  if (graph.empty()) {
    throw Error(ErrorKind::kNoSpanningCandidate, "graph has no nodes");
  }
  return CompareTrees(BuildAllCandidates(graph, config.metrics), graph,
                      config.tie);
}

}  // namespace clmat
