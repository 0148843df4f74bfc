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

#ifndef CLMAT_TOPOLOGY_H_
#define CLMAT_TOPOLOGY_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "clmat/error.h"

namespace clmat {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Position {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Position&) const = default;
};

// A sensor node. Energy is in Joules.
struct NodeRecord {
  std::string id;
  double energy = 0.0;
  std::optional<Position> position;

  bool operator==(const NodeRecord&) const = default;
};

// A stored link. `link_energy` is the min-endpoint energy captured when the
// link was inserted; consumers that need current values should call
// NetworkGraph::LinkEnergy instead.
struct LinkRecord {
  std::string u;
  std::string v;
  double distance = 0.0;
  double link_energy = 0.0;

  bool operator==(const LinkRecord&) const = default;
};

enum class LinkMode { kUndirected, kDirected };

const char* LinkModeName(LinkMode mode);
std::optional<LinkMode> ParseLinkMode(std::string_view text);

struct Neighbor {
  std::size_t index;
  double distance;
};

// Node table plus a weighted adjacency with distance-matrix semantics:
// Distance(i, i) == 0 and an absent pair reads as +infinity.
//
// Undirected mode writes both matrix entries on AddEdge. Directed mode keeps
// the one-sided write u -> v only.
class NetworkGraph {
 public:
  explicit NetworkGraph(LinkMode mode = LinkMode::kUndirected) : mode_(mode) {}

  void AddVertex(std::string name, double energy,
                 std::optional<Position> position = std::nullopt);

  // Re-adding an existing pair overwrites its distance.
  void AddEdge(std::string_view u, std::string_view v, double distance);

  // True iff at least one finite, nonzero off-diagonal distance exists.
  bool EdgeExists() const;

  std::optional<std::size_t> GetIndex(std::string_view name) const;
  std::size_t IndexOf(std::string_view name) const;  // throws kUnknownVertex

  LinkMode mode() const { return mode_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const std::vector<NodeRecord>& nodes() const { return nodes_; }
  const NodeRecord& node(std::size_t i) const { return nodes_.at(i); }
  const std::string& id(std::size_t i) const { return nodes_.at(i).id; }
  double energy(std::size_t i) const { return nodes_.at(i).energy; }

  void SetEnergy(std::size_t i, double energy);

  double Distance(std::size_t from, std::size_t to) const;

  // Outgoing neighbors of `i` in ascending index order.
  std::vector<Neighbor> Neighbors(std::size_t i) const;

  // min(energy(u), energy(v)) from the current node energies.
  double LinkEnergy(std::size_t u, std::size_t v) const;

  // Energy cached at insertion time for the stored link (u, v).
  std::optional<double> StoredLinkEnergy(std::size_t u, std::size_t v) const;

  // Stored links sorted by (index(u), index(v)). Undirected links appear once
  // with the lower index first.
  std::vector<LinkRecord> Links() const;

  std::size_t link_count() const;

  // Subgraph over the nodes with keep[i] set, in the original relative order.
  NetworkGraph Induced(const std::vector<bool>& keep) const;

  // Copy with every link distance multiplied by `factor` (> 0).
  NetworkGraph ScaledDistances(double factor) const;

 private:
  struct StoredLink {
    double distance;
    double link_energy;
  };

  void Store(std::size_t u, std::size_t v, double distance,
             double link_energy);

  LinkMode mode_;
  std::vector<NodeRecord> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  // Row-major adjacency; adjacency_[u] holds every matrix entry (u, v) that
  // is finite and off-diagonal.
  std::vector<std::map<std::size_t, StoredLink>> adjacency_;
};

bool SameStructure(const NetworkGraph& a, const NetworkGraph& b);

struct RandomTopologyParams {
  std::size_t n = 20;
  double side = 100.0;
  double range = 30.0;
  double energy_lo = 1.0;
  double energy_hi = 2.0;
  std::uint64_t seed = 1;
  LinkMode mode = LinkMode::kUndirected;
};

// Uniform placement in a side x side square; every pair within Euclidean
// distance <= range is linked at that distance. Nodes are named n0..n{n-1}.
NetworkGraph RandomTopology(const RandomTopologyParams& params);

// JSON topology document:
//   {"mode": "undirected"|"directed",
//    "nodes": [{"id", "energy", "x"?, "y"?}],
//    "edges": [{"u", "v", "distance"}]}
NetworkGraph LoadTopology(std::string_view json_text);
std::string ExportTopologyJson(const NetworkGraph& graph);

// Edge list `u,v,distance` plus node table `id,energy[,x,y]`, both with a
// header row.
NetworkGraph LoadTopologyCsv(std::string_view edges_csv,
                             std::string_view nodes_csv,
                             LinkMode mode = LinkMode::kUndirected);

}  // namespace clmat

#endif  // CLMAT_TOPOLOGY_H_
