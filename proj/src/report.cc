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

#include "clmat/report.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace clmat {
namespace {

using nlohmann::json;

std::string Quote(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string EnergyCell(const std::optional<double>& energy) {
  return energy ? FormatFixed3(*energy) : "-";
}

json MetricsJson(const TreeMetrics& m) {
  json out;
  out["energy"] = m.tree_energy ? json(*m.tree_energy) : json(nullptr);
  // JSON has no infinity; a null cost means +infinity.
  out["cost"] = std::isfinite(m.tree_cost) ? json(m.tree_cost) : json(nullptr);
  out["distance"] = m.total_distance;
  return out;
}

std::string PadRight(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string PadLeft(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string FormatFixed3(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

std::string DisplayGraph(const NetworkGraph& graph) {
  if (graph.empty()) return "Graph does not exist.\n";
  std::ostringstream out;
  out << "Vertices:";
  for (const NodeRecord& n : graph.nodes()) {
    out << ' ' << n.id << '(' << FormatFixed3(n.energy) << " J)";
  }
  out << '\n';
  if (!graph.EdgeExists()) {
    out << "No edges.\n";
    return out.str();
  }
  for (std::size_t u = 0; u < graph.size(); ++u) {
    for (const Neighbor& nb : graph.Neighbors(u)) {
      out << graph.id(u) << " -> " << graph.id(nb.index) << "  "
          << FormatFixed3(nb.distance) << "  "
          << FormatFixed3(graph.LinkEnergy(u, nb.index)) << '\n';
    }
  }
  return out.str();
}

std::string ExportDot(const NetworkGraph& graph, const AggregationTree* tree) {
  const bool directed = graph.mode() == LinkMode::kDirected;
  const char* arrow = directed ? " -> " : " -- ";
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " network {\n";
  for (std::size_t i = 0; i < graph.size(); ++i) {
    out << "  " << Quote(graph.id(i)) << " [label=\"" << graph.id(i) << "\\n"
        << FormatFixed3(graph.energy(i)) << " J\"";
    if (tree && tree->root == i) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const LinkRecord& link : graph.Links()) {
    const std::size_t u = graph.IndexOf(link.u);
    const std::size_t v = graph.IndexOf(link.v);
    bool in_tree = false;
    if (tree) {
      in_tree = tree->parent[v] == u ||
                (!directed && tree->parent[u] == v);
    }
    out << "  " << Quote(link.u) << arrow << Quote(link.v) << " [label=\""
        << FormatFixed3(link.distance) << "\"";
    if (in_tree) out << ", style=bold, color=red";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string RenderRanking(const SelectionResult& result) {
  std::ostringstream out;
  out << PadRight("root", 10) << PadLeft("energy", 10) << PadLeft("cost", 12)
      << PadLeft("distance", 12) << PadLeft("depth", 7) << PadLeft("spanning", 10)
      << "  chosen\n";
  for (const RankEntry& e : result.ranking) {
    const bool chosen = e.spanning && e.root == result.chosen_root;
    out << PadRight(e.root, 10) << PadLeft(EnergyCell(e.metrics.tree_energy), 10)
        << PadLeft(FormatFixed3(e.metrics.tree_cost), 12)
        << PadLeft(FormatFixed3(e.metrics.total_distance), 12)
        << PadLeft(std::to_string(e.depth), 7)
        << PadLeft(e.spanning ? "yes" : "no", 10) << (chosen ? "  *" : "")
        << '\n';
  }
  out << "aggregator: " << result.chosen_root << " (energy "
      << EnergyCell(result.metrics.tree_energy) << " J, cost "
      << FormatFixed3(result.metrics.tree_cost) << ", distance "
      << FormatFixed3(result.metrics.total_distance) << ")\n";
  return out.str();
}

std::string CandidatesTable(const CandidateSet& set, const NetworkGraph& graph) {
  std::ostringstream out;
  out << PadRight("root", 10) << PadLeft("energy", 10) << PadLeft("cost", 12)
      << PadLeft("distance", 12) << PadLeft("depth", 7) << PadLeft("spanning", 10)
      << '\n';
  for (const Candidate& c : set.entries) {
    out << PadRight(graph.id(c.root), 10)
        << PadLeft(EnergyCell(c.metrics.tree_energy), 10)
        << PadLeft(FormatFixed3(c.metrics.tree_cost), 12)
        << PadLeft(FormatFixed3(c.metrics.total_distance), 12)
        << PadLeft(std::to_string(c.tree.depth), 7)
        << PadLeft(c.spanning ? "yes" : "no", 10) << '\n';
  }
  return out.str();
}

std::string CandidatesCsv(const CandidateSet& set, const NetworkGraph& graph) {
  std::ostringstream out;
  out << "root,energy,cost,distance,depth,spanning\n";
  for (const Candidate& c : set.entries) {
    out << graph.id(c.root) << ',' << EnergyCell(c.metrics.tree_energy) << ','
        << FormatFixed3(c.metrics.tree_cost) << ','
        << FormatFixed3(c.metrics.total_distance) << ',' << c.tree.depth << ','
        << (c.spanning ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string CandidatesJson(const CandidateSet& set, const NetworkGraph& graph) {
  json out = json::array();
  for (const Candidate& c : set.entries) {
    json entry = MetricsJson(c.metrics);
    entry["root"] = graph.id(c.root);
    entry["depth"] = c.tree.depth;
    entry["spanning"] = c.spanning;
    json parents = json::object();
    for (const auto& [p, child] : c.tree.Edges()) {
      parents[graph.id(child)] = graph.id(p);
    }
    entry["parent"] = std::move(parents);
    out.push_back(std::move(entry));
  }
  return out.dump(2) + "\n";
}

std::string SelectionJson(const SelectionResult& result) {
  json out;
  out["chosen"] = result.chosen_root;
  out["metrics"] = MetricsJson(result.metrics);
  json ranking = json::array();
  for (const RankEntry& e : result.ranking) {
    json entry = MetricsJson(e.metrics);
    entry["root"] = e.root;
    entry["depth"] = e.depth;
    entry["spanning"] = e.spanning;
    entry["root_energy"] = e.root_energy;
    ranking.push_back(std::move(entry));
  }
  out["ranking"] = std::move(ranking);
  return out.dump(2) + "\n";
}

std::string PolicyTable(const std::vector<PolicyOutcome>& outcomes) {
  std::ostringstream out;
  out << PadRight("policy", 20) << PadLeft("lifetime", 12)
      << PadLeft("delivered", 14) << PadLeft("trials", 8) << '\n';
  for (const PolicyOutcome& o : outcomes) {
    out << PadRight(o.policy, 20) << PadLeft(FormatFixed3(o.lifetime), 12)
        << PadLeft(FormatFixed3(o.delivered_packets), 14)
        << PadLeft(std::to_string(o.trials), 8) << '\n';
  }
  return out.str();
}

std::string PolicyCsv(const std::vector<PolicyOutcome>& outcomes) {
  std::ostringstream out;
  out << "policy,lifetime,delivered,trials\n";
  for (const PolicyOutcome& o : outcomes) {
    out << o.policy << ',' << FormatFixed3(o.lifetime) << ','
        << FormatFixed3(o.delivered_packets) << ',' << o.trials << '\n';
  }
  return out.str();
}

}  // namespace clmat
