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

#include "clmat/cli.h"

#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "clmat/menu.h"
#include "clmat/report.h"
#include "clmat/selection.h"
#include "clmat/simulator.h"
#include "clmat/topology.h"

namespace clmat {
namespace {

struct TopologyArgs {
  std::string input;
  std::string edges;
  std::string nodes;
  bool directed = false;
};

struct MetricArgs {
  std::string cost = "clmat";
  std::string energy = "node-min";
  std::string tie = "min-depth";
  std::string radio = "50e-9,100e-12,2,50e-9";
};

struct SimArgs {
  std::size_t rounds = 10000;
  std::size_t reselect_every = 1;
  std::uint64_t seed = 1;
  bool continue_after_death = false;
};

std::string ReadFile(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::kParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void AddTopologyOptions(CLI::App* cmd, TopologyArgs& args) {
  auto* input = cmd->add_option("-i,--input", args.input,
                                "topology JSON file ('-' for stdin)");
  auto* edges = cmd->add_option("--edges", args.edges, "edge list CSV u,v,distance");
  auto* nodes = cmd->add_option("--nodes", args.nodes, "node CSV id,energy[,x,y]");
  cmd->add_flag("--directed", args.directed, "read CSV links as directed");
  input->excludes(edges)->excludes(nodes);
  edges->needs(nodes);
  nodes->needs(edges);
}

void AddMetricOptions(CLI::App* cmd, MetricArgs& args) {
  cmd->add_option("--cost", args.cost, "edge cost variant")
      ->check(CLI::IsMember({"clmat", "eq3"}))
      ->capture_default_str();
  cmd->add_option("--energy", args.energy, "tree energy variant")
      ->check(CLI::IsMember({"node-min", "edge-min"}))
      ->capture_default_str();
  cmd->add_option("--tie", args.tie, "tie rule for equal total distance")
      ->check(CLI::IsMember({"min-depth", "paper-order"}))
      ->capture_default_str();
  cmd->add_option("--radio", args.radio,
                  "radio model tx_fixed,coeff,exponent,rx (J per packet)")
      ->capture_default_str();
}

void AddSimOptions(CLI::App* cmd, SimArgs& args) {
  cmd->add_option("--rounds", args.rounds, "maximum rounds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--reselect-every", args.reselect_every,
                  "rounds between aggregator re-selection")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", args.seed, "seed for randomized policies")
      ->capture_default_str();
  cmd->add_flag("--continue-after-death", args.continue_after_death,
                "keep running past the first node death");
}

NetworkGraph LoadGraph(const TopologyArgs& args, std::istream& in) {
  if (!args.input.empty()) return LoadTopology(ReadFile(args.input, in));
  if (!args.edges.empty()) {
    return LoadTopologyCsv(ReadFile(args.edges, in), ReadFile(args.nodes, in),
                           args.directed ? LinkMode::kDirected
                                         : LinkMode::kUndirected);
  }
  throw CLI::RequiredError("--input or --edges/--nodes");
}

RadioModel ParseRadio(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--radio", "not a number: " + field);
    }
  }
  if (values.size() != 4) {
    throw CLI::ValidationError("--radio", "expected tx_fixed,coeff,exponent,rx");
  }
  RadioModel radio{values[0], values[1], static_cast<int>(values[2]), values[3]};
  if (static_cast<double>(radio.exponent) != values[2]) {
    throw CLI::ValidationError("--radio", "exponent must be 2 or 4");
  }
  try {
    radio.Validate();
  } catch (const Error& e) {
    throw CLI::ValidationError("--radio", e.what());
  }
  return radio;
}

SelectConfig MakeSelectConfig(const MetricArgs& args) {
  SelectConfig config;
  config.metrics.cost = *ParseCostVariant(args.cost);
  config.metrics.energy = *ParseEnergyVariant(args.energy);
  config.metrics.radio = ParseRadio(args.radio);
  config.tie = *ParseTieRule(args.tie);
  return config;
}

SimConfig MakeSimConfig(const MetricArgs& metric, const SimArgs& sim) {
  SelectConfig select = MakeSelectConfig(metric);
  SimConfig config;
  config.radio = select.metrics.radio;
  config.cost = select.metrics.cost;
  config.energy = select.metrics.energy;
  config.tie = select.tie;
  config.max_rounds = sim.rounds;
  config.reselect_every = sim.reselect_every;
  config.seed = sim.seed;
  config.stop_at_first_death = !sim.continue_after_death;
  return config;
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::kParseError, "cannot write " + path);
  file << text;
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNoSpanningCandidate: return kExitNoSpanning;
    case ErrorKind::kInvalidConfig: return kExitUsage;
    default: return kExitData;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Lifetime-maximizing aggregation tree selection for sensor networks",
               "clmat"};
  app.require_subcommand(1);

  RandomTopologyParams gen_params;
  std::string gen_mode = "undirected";
  std::string output;
  auto* gen = app.add_subcommand("gen", "generate a random geometric topology");
  gen->add_option("-n,--nodes", gen_params.n, "node count")
      ->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--side", gen_params.side, "square side length")
      ->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--range", gen_params.range, "transmission range")
      ->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--energy-lo", gen_params.energy_lo, "lowest node energy (J)")
      ->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--energy-hi", gen_params.energy_hi, "highest node energy (J)")
      ->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--seed", gen_params.seed, "generator seed")->capture_default_str();
  gen->add_option("--mode", gen_mode, "link mode")
      ->check(CLI::IsMember({"undirected", "directed"}))->capture_default_str();
  gen->add_option("-o,--output", output, "output file (default stdout)");

  TopologyArgs topo;
  MetricArgs metric;
  SimArgs sim;
  std::string format;

  auto* trees = app.add_subcommand("trees", "score the tree rooted at every node");
  AddTopologyOptions(trees, topo);
  AddMetricOptions(trees, metric);
  trees->add_option("--format", format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  auto* select = app.add_subcommand("select", "choose the aggregator");
  AddTopologyOptions(select, topo);
  AddMetricOptions(select, metric);
  select->add_option("--format", format, "table|json|dot")
      ->check(CLI::IsMember({"table", "json", "dot"}));

  std::string policy_text = "clmat";
  std::string trace_path;
  auto* simulate = app.add_subcommand("simulate", "run a lifetime simulation");
  AddTopologyOptions(simulate, topo);
  AddMetricOptions(simulate, metric);
  AddSimOptions(simulate, sim);
  simulate->add_option("--policy", policy_text,
                       "clmat|max-energy|random[:seed]|fixed:<id>")
      ->capture_default_str();
  simulate->add_option("--trace", trace_path, "write per-node residual CSV here");
  simulate->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));

  std::vector<std::string> policy_list = {"clmat", "max-energy", "random",
                                          "fixed-all"};
  std::size_t trials = 10;
  auto* compare = app.add_subcommand("compare", "compare lifetimes across policies");
  AddTopologyOptions(compare, topo);
  AddMetricOptions(compare, metric);
  AddSimOptions(compare, sim);
  compare->add_option("--policies", policy_list,
                      "policies; fixed-all expands to every fixed root")
      ->delimiter(',')
      ->capture_default_str();
  compare->add_option("--trials", trials, "trials for random policies")
      ->check(CLI::PositiveNumber)->capture_default_str();
  compare->add_option("--format", format, "table|csv")
      ->check(CLI::IsMember({"table", "csv"}));

  bool menu_directed = false;
  auto* menu = app.add_subcommand("menu", "interactive graph builder");
  AddMetricOptions(menu, metric);
  menu->add_flag("--directed", menu_directed, "one-sided links");

  std::vector<const char*> argv{"clmat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      gen_params.mode = *ParseLinkMode(gen_mode);
      WriteOutput(output, ExportTopologyJson(RandomTopology(gen_params)), out);
    } else if (trees->parsed()) {
      SelectConfig config = MakeSelectConfig(metric);
      NetworkGraph graph = LoadGraph(topo, in);
      CandidateSet set = BuildAllCandidates(graph, config.metrics);
      if (format == "csv") {
        out << CandidatesCsv(set, graph);
      } else if (format == "json") {
        out << CandidatesJson(set, graph);
      } else {
        out << CandidatesTable(set, graph);
      }
    } else if (select->parsed()) {
      SelectConfig config = MakeSelectConfig(metric);
      NetworkGraph graph = LoadGraph(topo, in);
      SelectionResult result = SelectAggregator(graph, config);
      if (format == "json") {
        out << SelectionJson(result);
      } else if (format == "dot") {
        out << ExportDot(graph, &result.tree);
      } else {
        out << RenderRanking(result);
      }
    } else if (simulate->parsed()) {
      SimConfig config = MakeSimConfig(metric, sim);
      auto policy = ParsePolicy(policy_text);
      if (!policy) {
        throw CLI::ValidationError("--policy", "unknown policy " + policy_text);
      }
      NetworkGraph graph = LoadGraph(topo, in);
      SimResult result = RunLifetime(graph, config, *policy);
      out << ReportsCsv(result);
      if (!trace_path.empty()) WriteOutput(trace_path, ResidualTraceCsv(result), out);
      err << "lifetime=" << result.lifetime
          << " end=" << EndReasonName(result.end)
          << " delivered=" << result.delivered_packets << '\n';
    } else if (compare->parsed()) {
      SimConfig config = MakeSimConfig(metric, sim);
      NetworkGraph graph = LoadGraph(topo, in);
      std::vector<Policy> policies;
      for (const std::string& text : policy_list) {
        if (text == "fixed-all") {
          for (const NodeRecord& n : graph.nodes()) {
            policies.push_back(Policy::FixedRoot(n.id));
          }
          continue;
        }
        auto policy = ParsePolicy(text, trials);
        if (!policy) {
          throw CLI::ValidationError("--policies", "unknown policy " + text);
        }
        policies.push_back(*policy);
      }
      auto table = ComparePolicies(graph, config, policies);
      out << (format == "csv" ? PolicyCsv(table) : PolicyTable(table));
    } else if (menu->parsed()) {
      RunMenu(in, out, MakeSelectConfig(metric),
              menu_directed ? LinkMode::kDirected : LinkMode::kUndirected);
    }
  } catch (const CLI::ParseError& e) {
    err << "clmat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "clmat: " << ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  }
  return kExitOk;
}

}  // namespace clmat
