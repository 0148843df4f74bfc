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

#include "clmat/simulator.h"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

namespace clmat {
namespace {

constexpr double kPicojoulesPerJoule = 1e12;

// Maps a tree built on the alive subgraph back onto full-graph indices.
AggregationTree LiftTree(const AggregationTree& sub_tree,
                         const std::vector<std::size_t>& sub_to_full,
                         std::size_t full_size) {
  AggregationTree tree;
  tree.root = sub_to_full[sub_tree.root];
  tree.parent.assign(full_size, std::nullopt);
  tree.dist.assign(full_size, kInfinity);
  tree.hops.assign(full_size, 0);
  tree.depth = sub_tree.depth;
  for (std::size_t i = 0; i < sub_tree.node_count(); ++i) {
    const std::size_t full = sub_to_full[i];
    tree.dist[full] = sub_tree.dist[i];
    tree.hops[full] = sub_tree.hops[i];
    if (sub_tree.parent[i]) tree.parent[full] = sub_to_full[*sub_tree.parent[i]];
  }
  return tree;
}

struct Choice {
  std::optional<AggregationTree> tree;  // on the alive subgraph
  EndReason failure = EndReason::kPartition;
};

Choice ChooseTree(const NetworkGraph& sub, const SimConfig& config,
                  const Policy& policy, std::mt19937_64& rng) {
  Choice choice;
  switch (policy.kind) {
    case Policy::Kind::kClmat: {
      SelectConfig select;
      select.metrics = MetricsConfig{config.cost, config.energy, config.radio};
      select.tie = config.tie;
      try {
        choice.tree = SelectAggregator(sub, select).tree;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kNoSpanningCandidate) throw;
      }
      return choice;
    }
    case Policy::Kind::kFixedRoot: {
      auto root = sub.GetIndex(policy.root);
      if (!root) {
        choice.failure = EndReason::kRootLost;
        return choice;
      }
      AggregationTree tree = ShortestPathTree(sub, *root);
      if (tree.IsSpanning()) choice.tree = std::move(tree);
      return choice;
    }
    case Policy::Kind::kMaxEnergyRoot:
    case Policy::Kind::kRandomRoot: {
      std::vector<AggregationTree> spanning;
      for (std::size_t r = 0; r < sub.size(); ++r) {
        AggregationTree tree = ShortestPathTree(sub, r);
        if (tree.IsSpanning()) spanning.push_back(std::move(tree));
      }
      if (spanning.empty()) return choice;
      std::size_t pick = 0;
      if (policy.kind == Policy::Kind::kMaxEnergyRoot) {
        for (std::size_t k = 1; k < spanning.size(); ++k) {
          if (sub.energy(spanning[k].root) > sub.energy(spanning[pick].root)) {
            pick = k;
          }
        }
      } else {
        std::uniform_int_distribution<std::size_t> uniform(
            0, spanning.size() - 1);
        pick = uniform(rng);
      }
      choice.tree = std::move(spanning[pick]);
      return choice;
    }
  }
  return choice;
}

Picojoules Sum(const std::vector<Picojoules>& values) {
  Picojoules total = 0;
  for (Picojoules v : values) total += v;
  return total;
}

}  // namespace

Picojoules ToPicojoules(double joules) {
  const double scaled = joules * kPicojoulesPerJoule;
  if (!std::isfinite(scaled) ||
      std::fabs(scaled) >= 9.2e18) {
    throw Error(ErrorKind::kInvalidEnergy,
                "energy out of the representable picojoule range");
  }
  return static_cast<Picojoules>(std::llround(scaled));
}

double ToJoules(Picojoules amount) {
  return static_cast<double>(amount) / kPicojoulesPerJoule;
}

std::string FormatJoules(Picojoules amount) {
  const bool negative = amount < 0;
  // Magnitude in unsigned space so INT64_MIN stays representable.
  const std::uint64_t magnitude =
      negative ? 0 - static_cast<std::uint64_t>(amount)
               : static_cast<std::uint64_t>(amount);
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%s%" PRIu64 ".%012" PRIu64,
                negative ? "-" : "", magnitude / std::uint64_t{1000000000000},
                magnitude % std::uint64_t{1000000000000});
  return buffer;
}

void SimConfig::Validate() const {
  radio.Validate();
  if (max_rounds < 1) {
    throw Error(ErrorKind::kInvalidConfig, "max_rounds must be at least 1");
  }
  if (reselect_every < 1) {
    throw Error(ErrorKind::kInvalidConfig, "reselect_every must be at least 1");
  }
}

std::string Policy::Name() const {
  switch (kind) {
    case Kind::kClmat: return "clmat";
    case Kind::kFixedRoot: return "fixed:" + root;
    case Kind::kMaxEnergyRoot: return "max-energy";
    case Kind::kRandomRoot:
      return seed ? "random:" + std::to_string(*seed) : "random";
  }
  return "?";
}

std::optional<Policy> ParsePolicy(std::string_view text,
                                  std::size_t random_trials) {
  if (text == "clmat") return Policy::Clmat();
  if (text == "max-energy") return Policy::MaxEnergyRoot();
  if (text == "random") return Policy::RandomRoot(std::nullopt, random_trials);
  if (text.starts_with("fixed:") && text.size() > 6) {
    return Policy::FixedRoot(std::string(text.substr(6)));
  }
  if (text.starts_with("random:") && text.size() > 7) {
    std::uint64_t seed = 0;
    for (char c : text.substr(7)) {
      if (c < '0' || c > '9') return std::nullopt;
      seed = seed * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return Policy::RandomRoot(seed, random_trials);
  }
  return std::nullopt;
}

const char* EndReasonName(EndReason reason) {
  switch (reason) {
    case EndReason::kFirstDeath: return "first-death";
    case EndReason::kMaxRounds: return "max-rounds";
    case EndReason::kPartition: return "partition";
    case EndReason::kRootLost: return "root-lost";
    case EndReason::kAllDead: return "all-dead";
  }
  return "?";
}

RoundReport DrainRound(SimState& state, const NetworkGraph& graph,
                       const AggregationTree& tree, const RadioModel& radio) {
  RoundReport report;
  report.round = ++state.round;
  report.aggregator = graph.id(tree.root);

  const Picojoules rx = ToPicojoules(radio.rx_cost);
  const auto children = tree.ChildCounts();
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (!state.alive[i] || !tree.Spans(i)) continue;
    Picojoules cost = static_cast<Picojoules>(children[i]) * rx;
    if (tree.parent[i]) {
      cost += ToPicojoules(radio.TxEnergy(graph.Distance(*tree.parent[i], i)));
      ++report.transmissions;
    }
    state.residual[i] -= cost;
    report.drained.push_back({i, cost});
    report.total_drained += cost;
  }
  for (const NodeDrain& d : report.drained) {
    if (state.residual[d.node] <= 0) {
      state.alive[d.node] = false;
      report.deaths.push_back(graph.id(d.node));
    }
  }
  for (bool a : state.alive) report.alive_count += a ? 1 : 0;
  report.residual_after = state.residual;
  state.current_tree = tree;
  return report;
}

SimResult RunLifetime(const NetworkGraph& graph, const SimConfig& config,
                      const Policy& policy) {
  config.Validate();
  if (graph.empty()) {
    throw Error(ErrorKind::kNoSpanningCandidate, "graph has no nodes");
  }
  SimResult result;
  SimState state;
  state.alive.assign(graph.size(), true);
  for (const NodeRecord& n : graph.nodes()) {
    state.residual.push_back(ToPicojoules(n.energy));
    result.node_ids.push_back(n.id);
  }
  for (Picojoules r : state.residual) {
    if (r > std::numeric_limits<Picojoules>::max() - result.initial_total) {
      throw Error(ErrorKind::kInvalidEnergy,
                  "total energy exceeds the picojoule ledger range");
    }
    result.initial_total += r;
  }

  std::mt19937_64 rng(policy.seed.value_or(config.seed));
  std::optional<AggregationTree> tree;
  bool need_select = true;
  result.end = EndReason::kMaxRounds;

  for (std::size_t round = 1; round <= config.max_rounds; ++round) {
    if (need_select || (round - 1) % config.reselect_every == 0) {
      std::vector<std::size_t> sub_to_full;
      for (std::size_t i = 0; i < graph.size(); ++i) {
        if (state.alive[i]) sub_to_full.push_back(i);
      }
      NetworkGraph sub = graph.Induced(state.alive);
      for (std::size_t k = 0; k < sub_to_full.size(); ++k) {
        sub.SetEnergy(k, ToJoules(state.residual[sub_to_full[k]]));
      }
      Choice choice = ChooseTree(sub, config, policy, rng);
      if (!choice.tree) {
        if (round == 1) {
          throw Error(ErrorKind::kNoSpanningCandidate,
                      "policy " + policy.Name() +
                          " has no tree spanning the network");
        }
        result.end = choice.failure;
        break;
      }
      tree = LiftTree(*choice.tree, sub_to_full, graph.size());
      need_select = false;
    }

    RoundReport report = DrainRound(state, graph, *tree, config.radio);
    result.delivered_packets += report.transmissions;
    const bool died = !report.deaths.empty();
    const bool none_left = report.alive_count == 0;
    result.reports.push_back(std::move(report));
    if (died) {
      if (!result.any_death) {
        result.any_death = true;
        result.lifetime = round;
      }
      need_select = true;
      if (config.stop_at_first_death) {
        result.end = EndReason::kFirstDeath;
        break;
      }
      if (none_left) {
        result.end = EndReason::kAllDead;
        break;
      }
    }
  }
  if (!result.any_death) result.lifetime = result.reports.size();
  result.final_total = Sum(state.residual);
  return result;
}

std::vector<PolicyOutcome> ComparePolicies(
    const NetworkGraph& graph, const SimConfig& config,
    const std::vector<Policy>& policies) {
  std::vector<PolicyOutcome> table;
  for (const Policy& policy : policies) {
    PolicyOutcome outcome;
    outcome.policy = policy.Name();
    if (policy.kind == Policy::Kind::kRandomRoot) {
      outcome.trials = std::max<std::size_t>(policy.trials, 1);
      const std::uint64_t base = policy.seed.value_or(config.seed);
      double lifetime_sum = 0.0;
      double delivered_sum = 0.0;
      for (std::size_t t = 0; t < outcome.trials; ++t) {
        Policy trial = policy;
        trial.seed = base + t;
        SimResult run = RunLifetime(graph, config, trial);
        lifetime_sum += static_cast<double>(run.lifetime);
        delivered_sum += static_cast<double>(run.delivered_packets);
      }
      outcome.lifetime = lifetime_sum / static_cast<double>(outcome.trials);
      outcome.delivered_packets =
          delivered_sum / static_cast<double>(outcome.trials);
    } else {
      SimResult run = RunLifetime(graph, config, policy);
      outcome.lifetime = static_cast<double>(run.lifetime);
      outcome.delivered_packets = static_cast<double>(run.delivered_packets);
    }
    table.push_back(std::move(outcome));
  }
  return table;
}

std::string ReportsCsv(const SimResult& result) {
  std::ostringstream out;
  out << "round,aggregator,total_drained,alive,deaths\n";
  for (const RoundReport& r : result.reports) {
    out << r.round << ',' << r.aggregator << ',' << FormatJoules(r.total_drained)
        << ',' << r.alive_count << ',';
    for (std::size_t k = 0; k < r.deaths.size(); ++k) {
      if (k) out << ';';
      out << r.deaths[k];
    }
    out << '\n';
  }
  return out.str();
}

std::string ResidualTraceCsv(const SimResult& result) {
  std::ostringstream out;
  out << "round,node,residual\n";
  for (const RoundReport& r : result.reports) {
    for (const NodeDrain& d : r.drained) {
      out << r.round << ',' << result.node_ids[d.node] << ','
          << FormatJoules(r.residual_after[d.node]) << '\n';
    }
  }
  return out.str();
}

}  // namespace clmat
