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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcz {

using Edge = std::pair<int, int>;

/// Thrown for malformed input; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Thrown when an operation hits a configured size or retry cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on nodes 0..n-1. Edges are stored with i < j in
/// insertion order; adjacency lists are sorted ascending.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(int n, std::vector<Edge> edges);

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool has_edge(int i, int j) const;
  /// Index of edge {i,j} in edges(), or -1.
  int edge_index(int i, int j) const;
  bool is_regular(int d) const;

  /// Original external ids when the graph was parsed from sparse ids.
  const std::vector<long long>& labels() const { return labels_; }
  void set_labels(std::vector<long long> labels) { labels_ = std::move(labels); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> adj_edge_;
  std::vector<long long> labels_;
};

/// Parses "N M" header (optional), then "i j" lines; '#' starts a comment.
UndirectedGraph parse_edge_list(const std::string& text);
/// Writes "N M" then one "i j" line per edge.
std::string write_edge_list(const UndirectedGraph& g);

UndirectedGraph generate_random_regular(int n, int d, std::uint64_t seed, int max_retries = 10000);
/// Random spanning tree plus each remaining pair with probability `extra_p`.
UndirectedGraph generate_random_connected(int n, double extra_p, std::uint64_t seed);

UndirectedGraph path_graph(int n);
UndirectedGraph cycle_graph(int n);
UndirectedGraph complete_graph(int n);
UndirectedGraph star_graph(int leaves);
UndirectedGraph petersen_graph();

/// Induced subgraph on `nodes` (relabelled 0..k-1 in the given order).
UndirectedGraph induced_subgraph(const UndirectedGraph& g, const std::vector<int>& nodes);

int count_components(const UndirectedGraph& g);
bool is_connected(const UndirectedGraph& g);
bool is_biconnected(const UndirectedGraph& g);
/// Hop distance from `src` (-1 when unreachable).
std::vector<int> bfs_distances(const UndirectedGraph& g, int src);
/// Length of the shortest cycle, 0 when acyclic.
int girth(const UndirectedGraph& g);

struct BlockDecomposition {
  std::vector<Edge> bridges;
  std::vector<std::vector<int>> blocks;        // sorted node ids
  std::vector<std::vector<Edge>> block_edges;  // edges per block
  std::vector<int> articulation_nodes;         // sorted
  /// (component, articulation node) incidences; components are the blocks
  /// followed by the bridges (index blocks.size() + k).
  std::vector<std::pair<int, int>> block_cut_tree;
};

BlockDecomposition biconnected_components(const UndirectedGraph& g);

/// Merges per-block 0/1 assignments (aligned with dec.blocks[b]) into a global
/// assignment, flipping whole blocks to agree at articulation nodes and
/// cutting every bridge.
std::vector<int> combine_block_solutions(const UndirectedGraph& g, const BlockDecomposition& dec,
                                         const std::vector<std::vector<int>>& per_block);

struct CycleCount {
  std::uint64_t count = 0;
  bool exceeded = false;
};

CycleCount count_simple_cycles(const UndirectedGraph& g, std::uint64_t cap = 10000000ULL);

}  // namespace lcz
