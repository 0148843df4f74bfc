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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "clmat/cli.h"
#include "clmat/menu.h"
#include "clmat/report.h"
#include "clmat/selection.h"
#include "clmat/simulator.h"
#include "clmat/topology.h"
#include "test_support.h"

namespace clmat {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void Check(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void Criterion(int number, const char* title, double limit_ms,
               const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = Clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.Check(false, std::string("exception: ") + e.what());
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (limit_ms > 0 && ms >= limit_ms) {
    outcome.Check(false, "took " + std::to_string(ms) + " ms, limit " +
                             std::to_string(limit_ms) + " ms");
  }
  if (!outcome.ok) ++failures;
  std::printf("[%s] AC%d %s (%.3f ms)%s%s\n", outcome.ok ? "PASS" : "FAIL",
              number, title, ms, outcome.ok ? "" : ": ",
              outcome.detail.c_str());
}

SimConfig LifetimeConfig() {
  SimConfig config;
  config.radio = RadioModel{0.01, 1e-5, 2, 0.005};
  config.max_rounds = 100000;
  return config;
}

NetworkGraph ConnectedTopology(std::uint64_t& seed) {
  while (true) {
    RandomTopologyParams p;
    p.n = 20;
    p.side = 100.0;
    p.range = 40.0;
    p.energy_lo = 1.0;
    p.energy_hi = 2.0;
    p.seed = seed++;
    NetworkGraph g = RandomTopology(p);
    if (ShortestPathTree(g, 0).IsSpanning()) return g;
  }
}

std::set<std::size_t> DistanceMinimalRoots(const NetworkGraph& g) {
  CandidateSet set = BuildAllCandidates(g, {});
  double best = kInfinity;
  for (const Candidate& c : set.entries) best = std::min(best, c.metrics.total_distance);
  std::set<std::size_t> roots;
  for (const Candidate& c : set.entries) {
    if (c.metrics.total_distance == best) roots.insert(c.root);
  }
  return roots;
}

void PublishedSelection(Outcome& o) {
  // H is given a shallower tree than G; the published depths are unknown.
  auto ranked = RankCandidates(testing::PublishedCandidates(3, 2),
                               TieRule::kMinDepth);
  const RankEntry& best = ranked.front();
  o.Check(best.root == "H", "chose " + best.root);
  o.Check(best.metrics.tree_energy == 3.0, "energy");
  o.Check(best.metrics.tree_cost == 22.378, "cost");
  o.Check(best.metrics.total_distance == 16.0, "distance");
}

void SptOracle(Outcome& o) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    NetworkGraph g = testing::RandomConnectedGraph(rng);
    for (std::size_t r = 0; r < g.size(); ++r) {
      o.Check(ShortestPathTree(g, r).dist == OracleShortestPaths(g, r),
              "graph " + std::to_string(trial) + " root " + std::to_string(r));
    }
  }
}

void SelectionOracle(Outcome& o) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    NetworkGraph g = testing::RandomConnectedGraph(rng);
    for (TieRule tie : {TieRule::kMinDepth, TieRule::kPaperOrder}) {
      SelectConfig config;
      config.tie = tie;
      const std::size_t expected =
          testing::OracleChooseRoot(g, tie, OracleShortestPaths);
      o.Check(SelectAggregator(g, config).chosen_index == expected,
              "graph " + std::to_string(trial) + " tie " + TieRuleName(tie));
    }
  }
}

void MetricDefinitions(Outcome& o) {
  std::mt19937_64 rng(3);
  testing::RandomGraphOptions opt;
  opt.integer_energies = false;
  for (int trial = 0; trial < 200; ++trial) {
    NetworkGraph g = testing::RandomConnectedGraph(rng, opt);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    const std::size_t root = pick(rng);
    AggregationTree t = ShortestPathTree(g, root);

    double node_scan = kInfinity;
    double edge_scan = kInfinity;
    double dist_sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i == root) continue;
      node_scan = std::min(node_scan, g.energy(i));
      const std::size_t p = *t.parent[i];
      edge_scan = std::min(edge_scan, std::min(g.energy(p), g.energy(i)));
      dist_sum += t.dist[i];
    }
    const std::string at = "tree " + std::to_string(trial);
    o.Check(TreeEnergy(t, g, EnergyVariant::kNodeMin) == node_scan, at + " node-min");
    o.Check(TreeEnergy(t, g, EnergyVariant::kEdgeMin) == edge_scan, at + " edge-min");
    o.Check(TotalDistance(t) == dist_sum, at + " total distance");
  }
}

void CostFormulas(Outcome& o) {
  const double eq3 = Eq3EdgeCost(0.2, 0.2, 4.0, 2.0);
  o.Check(std::fabs(eq3 - 0.15) <= 1e-12 * 0.15, "eq3 = " + std::to_string(eq3));
  const double clmat = ClmatEdgeCost(5, 4, 3);
  o.Check(std::fabs(clmat - 6.5) <= 1e-12 * 6.5, "clmat = " + std::to_string(clmat));
  o.Check(ClmatEdgeCost(3, 5, 3) == kInfinity, "u at T");
  o.Check(ClmatEdgeCost(5, 3, 3) == kInfinity, "v at T");
  o.Check(ClmatEdgeCost(3, 3, 3) == kInfinity, "both at T");
}

void ArgminInvariance(Outcome& o) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> energy(0.1, 50.0);
  for (int trial = 0; trial < 50; ++trial) {
    NetworkGraph g = testing::RandomConnectedGraph(rng);
    const std::string at = "graph " + std::to_string(trial);
    for (TieRule tie : {TieRule::kMinDepth, TieRule::kPaperOrder}) {
      SelectConfig config;
      config.tie = tie;
      const std::string chosen = SelectAggregator(g, config).chosen_root;
      for (double k : {0.5, 3.0, 10.0}) {
        o.Check(SelectAggregator(g.ScaledDistances(k), config).chosen_root == chosen,
                at + " scale " + std::to_string(k));
      }
    }
    NetworkGraph perturbed = g;
    for (std::size_t i = 0; i < g.size(); ++i) perturbed.SetEnergy(i, energy(rng));
    o.Check(DistanceMinimalRoots(g) == DistanceMinimalRoots(perturbed),
            at + " energy perturbation");
  }
}

void SimulatorConservation(Outcome& o) {
  std::uint64_t seed = 1000;
  const SimConfig config = LifetimeConfig();
  for (int trial = 0; trial < 50; ++trial) {
    NetworkGraph g = ConnectedTopology(seed);
    SimResult run = RunLifetime(g, config);
    Picojoules drained = 0;
    for (const RoundReport& r : run.reports) drained += r.total_drained;
    const std::string at = "topology " + std::to_string(trial);
    o.Check(run.any_death, at + " reached the round horizon");
    o.Check(run.initial_total - run.final_total == drained, at + " conservation");
    SimResult again = RunLifetime(g, config);
    o.Check(ReportsCsv(run) == ReportsCsv(again), at + " report csv");
    o.Check(ResidualTraceCsv(run) == ResidualTraceCsv(again), at + " trace csv");
  }

  NetworkGraph pair;
  pair.AddVertex("leaf", 3.0);
  pair.AddVertex("root", 5.0);
  pair.AddEdge("leaf", "root", 1.0);
  SimConfig flat;
  flat.radio = RadioModel{1.0, 0.0, 2, 0.5};
  flat.max_rounds = 1000;
  flat.reselect_every = flat.max_rounds;
  SimResult hand = RunLifetime(pair, flat);
  o.Check(hand.lifetime == 3, "two-node lifetime " + std::to_string(hand.lifetime));
}

void Dominance(Outcome& o) {
  std::uint64_t seed = 5000;
  const SimConfig config = LifetimeConfig();
  for (int trial = 0; trial < 50; ++trial) {
    NetworkGraph g = ConnectedTopology(seed);
    std::vector<Policy> policies{Policy::Clmat()};
    for (const NodeRecord& n : g.nodes()) policies.push_back(Policy::FixedRoot(n.id));
    auto table = ComparePolicies(g, config, policies);
    double worst = kInfinity;
    for (std::size_t i = 1; i < table.size(); ++i) worst = std::min(worst, table[i].lifetime);
    o.Check(table[0].lifetime >= worst,
            "topology " + std::to_string(trial) + ": clmat " +
                std::to_string(table[0].lifetime) + " < worst fixed " +
                std::to_string(worst));
  }
}

void CliRoundTrips(Outcome& o) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomTopologyParams p;
    p.seed = seed;
    p.mode = seed % 2 ? LinkMode::kUndirected : LinkMode::kDirected;
    NetworkGraph g = RandomTopology(p);
    const std::string text = ExportTopologyJson(g);
    NetworkGraph back = LoadTopology(text);
    o.Check(SameStructure(g, back) && ExportTopologyJson(back) == text,
            "json round trip seed " + std::to_string(seed));
  }

  const NetworkGraph f4 = testing::F4();
  std::istringstream script(
      "1 A 5\n1 B 4\n1 C 3\n1 D 6\n2 A B 2\n2 B C 1\n2 A C 4\n2 C D 2\n"
      "2 B D 5\n5\n6\n");
  std::ostringstream transcript;
  RunMenu(script, transcript, {});

  std::istringstream no_input(ExportTopologyJson(f4));
  std::ostringstream batch, err;
  const int code = RunCli({"select", "-i", "-"}, no_input, batch, err);
  o.Check(code == kExitOk, "batch select exit " + std::to_string(code));
  o.Check(transcript.str().find(batch.str()) != std::string::npos,
          "menu transcript lacks batch select output");

  AggregationTree tree = SelectAggregator(f4, {}).tree;
  o.Check(ExportDot(f4, &tree) == ExportDot(testing::F4(), &tree), "dot bytes");
  std::istringstream in1(ExportTopologyJson(f4)), in2(ExportTopologyJson(f4));
  std::ostringstream dot1, dot2;
  RunCli({"select", "-i", "-", "--format", "dot"}, in1, dot1, err);
  RunCli({"select", "-i", "-", "--format", "dot"}, in2, dot2, err);
  o.Check(!dot1.str().empty() && dot1.str() == dot2.str(), "cli dot bytes");
}

}  // namespace
}  // namespace clmat

int main() {
  using namespace clmat;
  Criterion(1, "published selection fixture chooses H (3 J, 22.378, 16)", 1.0,
            PublishedSelection);
  Criterion(2, "shortest-path tree equals relaxation oracle, 500 graphs", 5000.0,
            SptOracle);
  Criterion(3, "selection equals exhaustive oracle, 200 graphs, both tie rules",
            5000.0, SelectionOracle);
  Criterion(4, "metric definitions on 200 random trees", 0.0, MetricDefinitions);
  Criterion(5, "edge cost formulas", 0.0, CostFormulas);
  Criterion(6, "argmin invariance under scaling and energy perturbation", 0.0,
            ArgminInvariance);
  Criterion(7, "simulator conservation and determinism, 50 topologies", 10000.0,
            SimulatorConservation);
  Criterion(8, "clmat lifetime >= worst fixed root, 50 topologies", 0.0, Dominance);
  Criterion(9, "json round trip, menu/batch equivalence, dot determinism", 0.0,
            CliRoundTrips);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
