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

#include <sstream>
#include <string>
#include <vector>

#include "clmat/topology.h"
#include "json.hpp"

namespace clmat {
namespace {

using nlohmann::json;

[[noreturn]] void Semantic(const std::string& message) {
  throw Error(ErrorKind::kSemanticError, message);
}

double RequireNumber(const json& object, const char* key,
                     const std::string& where) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_number()) {
    throw Error(ErrorKind::kParseError,
                where + ": missing numeric field \"" + key + "\"");
  }
  return it->get<double>();
}

std::string RequireString(const json& object, const char* key,
                          const std::string& where) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) {
    throw Error(ErrorKind::kParseError,
                where + ": missing string field \"" + key + "\"");
  }
  return it->get<std::string>();
}

// Re-raises construction failures as semantic errors of the document.
template <typename Fn>
void AsSemantic(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw;
    Semantic(e.what());
  }
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    auto first = field.find_first_not_of(" \t\r");
    auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos
                         ? std::string()
                         : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::vector<std::vector<std::string>> ReadCsv(std::string_view text,
                                              const char* what) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (header) {
      header = false;
      continue;
    }
    rows.push_back(SplitCsvLine(line));
  }
  if (header) {
    throw Error(ErrorKind::kParseError,
                std::string(what) + ": missing header row");
  }
  return rows;
}

double ParseDouble(const std::string& text, const std::string& where) {
  try {
    std::size_t used = 0;
    double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParseError,
                where + ": not a number: \"" + text + "\"");
  }
}

}  // namespace

NetworkGraph LoadTopology(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::kParseError, "topology must be a JSON object");
  }

  LinkMode mode = LinkMode::kUndirected;
  if (auto it = doc.find("mode"); it != doc.end()) {
    auto parsed = it->is_string() ? ParseLinkMode(it->get<std::string>())
                                  : std::nullopt;
    if (!parsed) {
      throw Error(ErrorKind::kParseError,
                  "\"mode\" must be \"undirected\" or \"directed\"");
    }
    mode = *parsed;
  }
  auto nodes = doc.find("nodes");
  auto edges = doc.find("edges");
  if (nodes == doc.end() || !nodes->is_array() || edges == doc.end() ||
      !edges->is_array()) {
    throw Error(ErrorKind::kParseError,
                "topology needs \"nodes\" and \"edges\" arrays");
  }

  NetworkGraph graph(mode);
  for (std::size_t i = 0; i < nodes->size(); ++i) {
    const json& node = (*nodes)[i];
    const std::string where = "nodes[" + std::to_string(i) + "]";
    if (!node.is_object()) {
      throw Error(ErrorKind::kParseError, where + " must be an object");
    }
    std::string id = RequireString(node, "id", where);
    double energy = RequireNumber(node, "energy", where);
    std::optional<Position> position;
    const bool has_x = node.contains("x");
    const bool has_y = node.contains("y");
    if (has_x != has_y) {
      throw Error(ErrorKind::kParseError, where + ": x and y go together");
    }
    if (has_x) {
      position = Position{RequireNumber(node, "x", where),
                          RequireNumber(node, "y", where)};
    }
    AsSemantic([&] { graph.AddVertex(std::move(id), energy, position); });
  }
  for (std::size_t i = 0; i < edges->size(); ++i) {
    const json& edge = (*edges)[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!edge.is_object()) {
      throw Error(ErrorKind::kParseError, where + " must be an object");
    }
    std::string u = RequireString(edge, "u", where);
    std::string v = RequireString(edge, "v", where);
    double distance = RequireNumber(edge, "distance", where);
    AsSemantic([&] { graph.AddEdge(u, v, distance); });
  }
  return graph;
}

std::string ExportTopologyJson(const NetworkGraph& graph) {
  json doc = json::object();
  doc["mode"] = LinkModeName(graph.mode());
  json nodes = json::array();
  for (const NodeRecord& n : graph.nodes()) {
    json node = {{"id", n.id}, {"energy", n.energy}};
    if (n.position) {
      node["x"] = n.position->x;
      node["y"] = n.position->y;
    }
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const LinkRecord& link : graph.Links()) {
    edges.push_back({{"u", link.u}, {"v", link.v}, {"distance", link.distance}});
  }
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

NetworkGraph LoadTopologyCsv(std::string_view edges_csv,
                             std::string_view nodes_csv, LinkMode mode) {
  NetworkGraph graph(mode);
  auto node_rows = ReadCsv(nodes_csv, "node csv");
  for (std::size_t i = 0; i < node_rows.size(); ++i) {
    const auto& row = node_rows[i];
    const std::string where = "node csv row " + std::to_string(i + 1);
    if (row.size() != 2 && row.size() != 4) {
      throw Error(ErrorKind::kParseError, where + ": expected id,energy[,x,y]");
    }
    double energy = ParseDouble(row[1], where);
    std::optional<Position> position;
    if (row.size() == 4) {
      position = Position{ParseDouble(row[2], where), ParseDouble(row[3], where)};
    }
    AsSemantic([&] { graph.AddVertex(row[0], energy, position); });
  }
  auto edge_rows = ReadCsv(edges_csv, "edge csv");
  for (std::size_t i = 0; i < edge_rows.size(); ++i) {
    const auto& row = edge_rows[i];
    const std::string where = "edge csv row " + std::to_string(i + 1);
    if (row.size() != 3) {
      throw Error(ErrorKind::kParseError, where + ": expected u,v,distance");
    }
    double distance = ParseDouble(row[2], where);
    AsSemantic([&] { graph.AddEdge(row[0], row[1], distance); });
  }
  return graph;
}

}  // namespace clmat
