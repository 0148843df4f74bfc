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

#ifndef CLMAT_REPORT_H_
#define CLMAT_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "clmat/selection.h"
#include "clmat/simulator.h"
#include "clmat/topology.h"

namespace clmat {

// Fixed three-decimal rendering; +infinity prints as "inf".
std::string FormatFixed3(double value);

// Vertex list followed by one "u -> v  distance  edge_energy" row per matrix
// entry, in index order. Empty graphs print "Graph does not exist.".
std::string DisplayGraph(const NetworkGraph& graph);

// Graphviz text. With a tree, tree edges are drawn bold and the root is a
// double circle. Node labels carry the node's current energy.
std::string ExportDot(const NetworkGraph& graph,
                      const AggregationTree* tree = nullptr);

// One row per candidate in selection order, the chosen root marked with '*'.
std::string RenderRanking(const SelectionResult& result);

// Per-root candidate listings in insertion order.
std::string CandidatesTable(const CandidateSet& set, const NetworkGraph& graph);
std::string CandidatesCsv(const CandidateSet& set, const NetworkGraph& graph);
std::string CandidatesJson(const CandidateSet& set, const NetworkGraph& graph);

std::string SelectionJson(const SelectionResult& result);

std::string PolicyTable(const std::vector<PolicyOutcome>& outcomes);
std::string PolicyCsv(const std::vector<PolicyOutcome>& outcomes);

}  // namespace clmat

#endif  // CLMAT_REPORT_H_
