// Copyright 2026 The lcz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lcz/graph.hpp"

namespace lcz {

struct Arc {
  int tail, head;
  bool operator==(const Arc&) const = default;
};

/// Acyclic orientation of a graph with its gate-scheduling order (every arc
/// has its tail before its head in topo_order).
class OrientedDag {
 public:
  OrientedDag() = default;
  /// Arcs must be aligned with g.edges(). With an empty `order` a topological
  /// order is derived (Kahn, smallest id first). Throws on cycles.
  OrientedDag(UndirectedGraph g, std::vector<Arc> arcs, std::vector<int> order = {});

  const UndirectedGraph& base() const { return g_; }
  int num_nodes() const { return g_.num_nodes(); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& topo_order() const { return order_; }
  const std::vector<int>& sources() const { return sources_; }
  const std::vector<int>& sinks() const { return sinks_; }
  /// Tails of arcs entering v / heads of arcs leaving v, ascending.
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  bool has_arc(int tail, int head) const;
  /// Position of each node in topo_order.
  std::vector<int> positions() const;

  /// All arcs flipped and the order reversed.
  OrientedDag reversed() const;

 private:
  UndirectedGraph g_;
  std::vector<Arc> arcs_;
  std::vector<int> order_;
  std::vector<int> sources_, sinks_;
  std::vector<std::vector<int>> in_, out_;
};

struct OrientationReport {
  bool acyclic = false;
  int n_plus = 0;
  int n_minus = 0;
};

/// Works on arbitrary (possibly cyclic) orientations; counts are zero when cyclic.
OrientationReport validate_orientation(const UndirectedGraph& g, const std::vector<Arc>& arcs);
OrientationReport validate_bipolar(const OrientedDag& dag);

/// Per-node layer tuple of the recursive BFS; the first entry is the hop
/// distance from `root`.
std::vector<std::vector<int>> lightcone_layers(const UndirectedGraph& g, int root);
OrientedDag bfs_lightcone_orientation(const UndirectedGraph& g, int root);
OrientedDag bipolar_orientation_dfs(const UndirectedGraph& g, int s, int t);
OrientedDag bipolar_orientation_bfs(const UndirectedGraph& g, int s, int t);
/// Unique-source DAG for any connected graph (reversed light-cone DAG).
OrientedDag single_source_orientation(const UndirectedGraph& g, int root);

struct Rational {
  long long num = 0, den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};
Rational make_rational(long long num, long long den);

Rational averaged_heads_in_degree(const OrientedDag& dag);
/// (deg+(tail), deg-(head)) of an existing arc.
std::pair<int, int> degree_pair(const OrientedDag& dag, int tail, int head);
/// Longest directed path measured in arcs.
int longest_path_length(const OrientedDag& dag);

/// "N M" header, "i -> j" lines in edge order, then "order: ..." line.
std::string write_orientation(const OrientedDag& dag);
OrientedDag parse_orientation(const std::string& text);

}  // namespace lcz
