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

#include "clmat/menu.h"

#include <optional>
#include <string>

#include "clmat/report.h"

namespace clmat {
namespace {

constexpr const char* kMenu =
    "\n1. Add vertex\n2. Add edge\n3. Display graph\n"
    "4. Compute trees and metrics\n5. Compare trees\n6. Exit\n"
    "Enter choice: ";

std::optional<std::string> Prompt(std::istream& in, std::ostream& out,
                                  const char* label) {
  out << label;
  std::string token;
  if (!(in >> token)) return std::nullopt;
  return token;
}

std::optional<double> PromptNumber(std::istream& in, std::ostream& out,
                                   const char* label) {
  auto token = Prompt(in, out, label);
  if (!token) return std::nullopt;
  try {
    std::size_t used = 0;
    double value = std::stod(*token, &used);
    if (used == token->size()) return value;
  } catch (const std::exception&) {
  }
  out << "Not a number: " << *token << '\n';
  return std::nullopt;
}

}  // namespace

NetworkGraph RunMenu(std::istream& in, std::ostream& out,
                     const SelectConfig& config, LinkMode mode) {
  NetworkGraph graph(mode);
  while (true) {
    out << kMenu;
    std::string token;
    if (!(in >> token)) {
      out << '\n';
      break;
    }
    int choice = 0;
    if (token.size() == 1 && token[0] >= '1' && token[0] <= '6') {
      choice = token[0] - '0';
    }
    if (choice == 6) break;
    try {
      switch (choice) {
        case 1: {
          auto name = Prompt(in, out, "Vertex name: ");
          if (!name) break;
          auto energy = PromptNumber(in, out, "Energy (J): ");
          if (!energy) break;
          graph.AddVertex(*name, *energy);
          break;
        }
        case 2: {
          if (graph.empty()) {
            out << "No vertex exists.\n";
            break;
          }
          auto u = Prompt(in, out, "Source vertex: ");
          if (!u) break;
          if (!graph.GetIndex(*u)) {
            out << "Source vertex does not exist.\n";
            break;
          }
          auto v = Prompt(in, out, "Destination vertex: ");
          if (!v) break;
          if (!graph.GetIndex(*v)) {
            out << "Destination vertex does not exist.\n";
            break;
          }
          auto d = PromptNumber(in, out, "Distance: ");
          if (!d) break;
          graph.AddEdge(*u, *v, *d);
          break;
        }
        case 3:
          out << DisplayGraph(graph);
          break;
        case 4:
          if (graph.empty()) {
            out << "Graph does not exist.\n";
            break;
          }
          out << CandidatesTable(BuildAllCandidates(graph, config.metrics),
                                 graph);
          break;
        case 5:
          if (graph.empty()) {
            out << "Graph does not exist.\n";
            break;
          }
          out << RenderRanking(SelectAggregator(graph, config));
          break;
        default:
          out << "Invalid choice.\n";
      }
    } catch (const Error& e) {
      out << "error: " << e.what() << '\n';
    }
  }
  return graph;
}

}  // namespace clmat
