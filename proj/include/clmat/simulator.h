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

#ifndef CLMAT_SIMULATOR_H_
#define CLMAT_SIMULATOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clmat/radio.h"
#include "clmat/selection.h"
#include "clmat/topology.h"

namespace clmat {

// Residual energies are tracked as integer picojoules so that the energy
// ledger balances exactly: initial - final == sum of per-round drains.
using Picojoules = std::int64_t;

Picojoules ToPicojoules(double joules);
double ToJoules(Picojoules amount);
// Exact decimal rendering in Joules, e.g. "1.500000000000".
std::string FormatJoules(Picojoules amount);

struct SimConfig {
  RadioModel radio;
  std::size_t max_rounds = 10000;
  std::size_t reselect_every = 1;
  TieRule tie = TieRule::kMinDepth;
  CostVariant cost = CostVariant::kClmat;
  EnergyVariant energy = EnergyVariant::kNodeMin;
  std::uint64_t seed = 1;
  // When false the run continues past the first death (re-selecting on the
  // surviving nodes) until partition, root loss or max_rounds.
  bool stop_at_first_death = true;

  void Validate() const;
};

// How the aggregator is chosen at each re-selection.
struct Policy {
  enum class Kind { kClmat, kFixedRoot, kMaxEnergyRoot, kRandomRoot };

  Kind kind = Kind::kClmat;
  std::string root;                   // kFixedRoot
  std::optional<std::uint64_t> seed;  // kRandomRoot; defaults to config seed
  std::size_t trials = 1;             // kRandomRoot

  static Policy Clmat() { return {}; }
  static Policy FixedRoot(std::string root) {
    return {Kind::kFixedRoot, std::move(root), std::nullopt, 1};
  }
  static Policy MaxEnergyRoot() { return {Kind::kMaxEnergyRoot, {}, std::nullopt, 1}; }
  static Policy RandomRoot(std::optional<std::uint64_t> seed,
                           std::size_t trials) {
    return {Kind::kRandomRoot, {}, seed, trials};
  }

  std::string Name() const;
};

// Accepts "clmat", "fixed:<id>", "max-energy", "random", "random:<seed>".
std::optional<Policy> ParsePolicy(std::string_view text,
                                  std::size_t random_trials = 1);

struct SimState {
  std::vector<Picojoules> residual;
  std::vector<bool> alive;
  std::size_t round = 0;
  AggregationTree current_tree;
};

struct NodeDrain {
  std::size_t node = 0;
  Picojoules amount = 0;
};

struct RoundReport {
  std::size_t round = 0;
  std::string aggregator;
  // One entry per node in the round's tree, ascending node index.
  std::vector<NodeDrain> drained;
  Picojoules total_drained = 0;
  std::size_t alive_count = 0;  // after the round's deaths
  std::vector<std::string> deaths;
  std::size_t transmissions = 0;
  // Residual of every node after the round, indexed like the graph.
  std::vector<Picojoules> residual_after;
};

// Applies one round of convergecast over `tree` (indexed like `graph`):
// every spanned non-root node sends one packet to its parent and every node
// pays rx_cost per child. Nodes at or below zero afterwards are marked dead.
RoundReport DrainRound(SimState& state, const NetworkGraph& graph,
                       const AggregationTree& tree, const RadioModel& radio);

enum class EndReason { kFirstDeath, kMaxRounds, kPartition, kRootLost, kAllDead };

const char* EndReasonName(EndReason reason);

struct SimResult {
  // Round in which the first node died, or the number of completed rounds
  // when nobody died.
  std::size_t lifetime = 0;
  bool any_death = false;
  EndReason end = EndReason::kMaxRounds;
  std::vector<RoundReport> reports;
  // Packets received by aggregators over the whole run.
  std::uint64_t delivered_packets = 0;
  Picojoules initial_total = 0;
  Picojoules final_total = 0;
  std::vector<std::string> node_ids;
};

SimResult RunLifetime(const NetworkGraph& graph, const SimConfig& config,
                      const Policy& policy = Policy::Clmat());

struct PolicyOutcome {
  std::string policy;
  double lifetime = 0.0;  // mean over trials
  double delivered_packets = 0.0;
  std::size_t trials = 1;
};

std::vector<PolicyOutcome> ComparePolicies(const NetworkGraph& graph,
                                           const SimConfig& config,
                                           const std::vector<Policy>& policies);

// "round,aggregator,total_drained,alive,deaths"
std::string ReportsCsv(const SimResult& result);
// "round,node,residual" for every node alive at the start of each round.
std::string ResidualTraceCsv(const SimResult& result);

}  // namespace clmat

#endif  // CLMAT_SIMULATOR_H_
