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

#ifndef CLMAT_SELECTION_H_
#define CLMAT_SELECTION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clmat/tree_builder.h"

namespace clmat {

// Secondary key among spanning candidates of equal total distance.
//   kMinDepth:   shallower tree first, then the later-inserted root.
//   kPaperOrder: the earlier-inserted root (a strict "<" scan).
enum class TieRule { kMinDepth, kPaperOrder };

const char* TieRuleName(TieRule rule);
std::optional<TieRule> ParseTieRule(std::string_view text);

// What the decision rule sees about one candidate. `order` is the root's
// insertion index.
struct RankEntry {
  std::string root;
  std::size_t order = 0;
  TreeMetrics metrics;
  std::size_t depth = 0;
  bool spanning = true;
  double root_energy = 0.0;
};

// True iff `a` precedes `b` in the selection order: spanning before
// non-spanning, then ascending total distance, then the tie rule.
bool RanksBefore(const RankEntry& a, const RankEntry& b, TieRule tie);

// Sorted copy of `entries`; the first element is the choice. Throws
// kNoSpanningCandidate when no entry spans.
std::vector<RankEntry> RankCandidates(std::span<const RankEntry> entries,
                                      TieRule tie);

struct SelectionResult {
  std::string chosen_root;
  std::size_t chosen_index = 0;
  AggregationTree tree;
  TreeMetrics metrics;
  std::vector<RankEntry> ranking;
};

SelectionResult CompareTrees(const CandidateSet& candidates,
                             const NetworkGraph& graph, TieRule tie);

struct SelectConfig {
  MetricsConfig metrics;
  TieRule tie = TieRule::kMinDepth;
};

SelectionResult SelectAggregator(const NetworkGraph& graph,
                                 const SelectConfig& config);

}  // namespace clmat

#endif  // CLMAT_SELECTION_H_
