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

#include "clmat/topology.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace clmat {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateVertex: return "DuplicateVertex";
    case ErrorKind::kInvalidEnergy: return "InvalidEnergy";
    case ErrorKind::kUnknownVertex: return "UnknownVertex";
    case ErrorKind::kSelfLoop: return "SelfLoop";
    case ErrorKind::kNonPositiveDistance: return "NonPositiveDistance";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kSemanticError: return "SemanticError";
    case ErrorKind::kNotInTree: return "NotInTree";
    case ErrorKind::kLeafIsRoot: return "LeafIsRoot";
    case ErrorKind::kSingletonTree: return "SingletonTree";
    case ErrorKind::kNonPositiveResidual: return "NonPositiveResidual";
    case ErrorKind::kUnreachableNode: return "UnreachableNode";
    case ErrorKind::kNoSpanningCandidate: return "NoSpanningCandidate";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

const char* LinkModeName(LinkMode mode) {
  return mode == LinkMode::kDirected ? "directed" : "undirected";
}

std::optional<LinkMode> ParseLinkMode(std::string_view text) {
  if (text == "undirected") return LinkMode::kUndirected;
  if (text == "directed") return LinkMode::kDirected;
  return std::nullopt;
}

void NetworkGraph::AddVertex(std::string name, double energy,
                             std::optional<Position> position) {
  if (name.empty()) {
    throw Error(ErrorKind::kSemanticError, "vertex name must be nonempty");
  }
  if (GetIndex(name)) {
    throw Error(ErrorKind::kDuplicateVertex,
                "Vertex already exists: " + name);
  }
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw Error(ErrorKind::kInvalidEnergy,
                "vertex " + name + " needs a positive finite energy");
  }
  index_.emplace(name, nodes_.size());
  nodes_.push_back(NodeRecord{std::move(name), energy, position});
  adjacency_.emplace_back();
}

void NetworkGraph::AddEdge(std::string_view u, std::string_view v,
                           double distance) {
  auto iu = GetIndex(u);
  if (!iu) {
    throw Error(ErrorKind::kUnknownVertex,
                "Source vertex does not exist: " + std::string(u));
  }
  auto iv = GetIndex(v);
  if (!iv) {
    throw Error(ErrorKind::kUnknownVertex,
                "Destination vertex does not exist: " + std::string(v));
  }
  if (*iu == *iv) {
    throw Error(ErrorKind::kSelfLoop, "self-loop on " + std::string(u));
  }
  if (!(distance > 0.0) || !std::isfinite(distance)) {
    throw Error(ErrorKind::kNonPositiveDistance,
                "distance " + std::string(u) + "-" + std::string(v) +
                    " must be positive and finite");
  }
  const double link_energy = LinkEnergy(*iu, *iv);
  Store(*iu, *iv, distance, link_energy);
  if (mode_ == LinkMode::kUndirected) Store(*iv, *iu, distance, link_energy);
}

void NetworkGraph::Store(std::size_t u, std::size_t v, double distance,
                         double link_energy) {
  adjacency_[u][v] = StoredLink{distance, link_energy};
}

bool NetworkGraph::EdgeExists() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& row) { return !row.empty(); });
}

std::optional<std::size_t> NetworkGraph::GetIndex(
    std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t NetworkGraph::IndexOf(std::string_view name) const {
  auto i = GetIndex(name);
  if (!i) {
    throw Error(ErrorKind::kUnknownVertex,
                "vertex does not exist: " + std::string(name));
  }
  return *i;
}

void NetworkGraph::SetEnergy(std::size_t i, double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw Error(ErrorKind::kInvalidEnergy,
                "vertex " + nodes_.at(i).id + " needs a positive energy");
  }
  nodes_.at(i).energy = energy;
}

double NetworkGraph::Distance(std::size_t from, std::size_t to) const {
  if (from == to) return 0.0;
  const auto& row = adjacency_.at(from);
  auto it = row.find(to);
  return it == row.end() ? kInfinity : it->second.distance;
}

std::vector<Neighbor> NetworkGraph::Neighbors(std::size_t i) const {
  std::vector<Neighbor> out;
  const auto& row = adjacency_.at(i);
  out.reserve(row.size());
  for (const auto& [j, link] : row) out.push_back({j, link.distance});
  return out;
}

double NetworkGraph::LinkEnergy(std::size_t u, std::size_t v) const {
  return std::min(nodes_.at(u).energy, nodes_.at(v).energy);
}

std::optional<double> NetworkGraph::StoredLinkEnergy(std::size_t u,
                                                     std::size_t v) const {
  const auto& row = adjacency_.at(u);
  auto it = row.find(v);
  if (it == row.end()) return std::nullopt;
  return it->second.link_energy;
}

std::vector<LinkRecord> NetworkGraph::Links() const {
  std::vector<LinkRecord> out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (const auto& [v, link] : adjacency_[u]) {
      if (mode_ == LinkMode::kUndirected && v < u) continue;
      out.push_back(
          LinkRecord{nodes_[u].id, nodes_[v].id, link.distance,
                     link.link_energy});
    }
  }
  return out;
}

std::size_t NetworkGraph::link_count() const {
  std::size_t entries = 0;
  for (const auto& row : adjacency_) entries += row.size();
  return mode_ == LinkMode::kUndirected ? entries / 2 : entries;
}

NetworkGraph NetworkGraph::Induced(const std::vector<bool>& keep) const {
  NetworkGraph out(mode_);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (keep.at(i)) {
      out.AddVertex(nodes_[i].id, nodes_[i].energy, nodes_[i].position);
    }
  }
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    if (!keep[u]) continue;
    for (const auto& [v, link] : adjacency_[u]) {
      if (!keep[v]) continue;
      if (mode_ == LinkMode::kUndirected && v < u) continue;
      out.AddEdge(nodes_[u].id, nodes_[v].id, link.distance);
    }
  }
  return out;
}

NetworkGraph NetworkGraph::ScaledDistances(double factor) const {
  if (!(factor > 0.0)) {
    throw Error(ErrorKind::kInvalidConfig, "scale factor must be positive");
  }
  NetworkGraph out = *this;
  for (auto& row : out.adjacency_) {
    for (auto& [v, link] : row) link.distance *= factor;
  }
  return out;
}

bool SameStructure(const NetworkGraph& a, const NetworkGraph& b) {
  return a.mode() == b.mode() && a.nodes() == b.nodes() &&
         a.Links() == b.Links();
}

NetworkGraph RandomTopology(const RandomTopologyParams& params) {
  if (params.n < 1 || !(params.side > 0.0) || !(params.range > 0.0) ||
      !(params.energy_lo > 0.0) || params.energy_hi < params.energy_lo) {
    throw Error(ErrorKind::kInvalidConfig, "invalid random topology params");
  }
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> coord(0.0, params.side);
  std::uniform_real_distribution<double> energy(params.energy_lo,
                                                params.energy_hi);

  NetworkGraph graph(params.mode);
  for (std::size_t i = 0; i < params.n; ++i) {
    Position p{coord(rng), coord(rng)};
    double e = params.energy_lo == params.energy_hi ? params.energy_lo
                                                    : energy(rng);
    graph.AddVertex("n" + std::to_string(i), e, p);
  }
  for (std::size_t i = 0; i < params.n; ++i) {
    for (std::size_t j = i + 1; j < params.n; ++j) {
      const Position& a = *graph.node(i).position;
      const Position& b = *graph.node(j).position;
      double d = std::hypot(a.x - b.x, a.y - b.y);
      // Coincident points cannot form a positive-length link.
      if (d <= params.range && d > 0.0) {
        graph.AddEdge(graph.id(i), graph.id(j), d);
        if (params.mode == LinkMode::kDirected) {
          graph.AddEdge(graph.id(j), graph.id(i), d);
        }
      }
    }
  }
  return graph;
}

}  // namespace clmat
