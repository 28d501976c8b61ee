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


#include <gtest/gtest.h>

#include "lcz/graph.hpp"
#include "lcz/orientation.hpp"

namespace lcz {
namespace {

bool respects_order(const OrientedDag& d) {
  auto pos = d.positions();
  for (const Arc& a : d.arcs())
    if (pos[a.tail] >= pos[a.head]) return false;
  return true;
}

TEST(Lightcone, StarRootedAtCenter) {
  OrientedDag d = bfs_lightcone_orientation(star_graph(3), 0);
  for (const Arc& a : d.arcs()) EXPECT_EQ(a.head, 0);
  OrientationReport r = validate_bipolar(d);
  EXPECT_TRUE(r.acyclic);
  EXPECT_EQ(r.n_plus, 3);
  EXPECT_EQ(r.n_minus, 1);
}

TEST(Lightcone, PathRootedAtEnd) {
  OrientedDag d = bfs_lightcone_orientation(path_graph(3), 0);
  EXPECT_TRUE(d.has_arc(2, 1));
  EXPECT_TRUE(d.has_arc(1, 0));
  EXPECT_EQ(d.topo_order(), (std::vector<int>{2, 1, 0}));
}

TEST(Lightcone, LayersAreDistances) {
  UndirectedGraph g = petersen_graph();
  auto tuples = lightcone_layers(g, 0);
  auto dist = bfs_distances(g, 0);
  for (int v = 0; v < g.num_nodes(); ++v) EXPECT_EQ(tuples[v].front(), dist[v]);
}

TEST(Lightcone, SingleSinkOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    UndirectedGraph g = generate_random_connected(3 + static_cast<int>(s % 15), 0.2, s);
    int root = static_cast<int>(s % g.num_nodes());
    OrientedDag d = bfs_lightcone_orientation(g, root);
    EXPECT_TRUE(respects_order(d));
    EXPECT_EQ(d.sinks(), std::vector<int>{root});
  }
}

TEST(Lightcone, DisconnectedRejected) {
  EXPECT_THROW(bfs_lightcone_orientation(UndirectedGraph(4, {{0, 1}, {2, 3}}), 0), std::invalid_argument);
}

TEST(Bipolar, Triangle) {
  UndirectedGraph g = cycle_graph(3);
  for (auto f : {bipolar_orientation_dfs, bipolar_orientation_bfs}) {
    OrientedDag d = f(g, 0, 2);
    EXPECT_TRUE(d.has_arc(0, 1));
    EXPECT_TRUE(d.has_arc(0, 2));
    EXPECT_TRUE(d.has_arc(1, 2));
  }
}

TEST(Bipolar, C4) {
  UndirectedGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  UndirectedGraph c4 = cycle_graph(4);
  for (auto f : {bipolar_orientation_dfs, bipolar_orientation_bfs}) {
    // C4 with s=0, t=2 needs the chord for (s,t) to be an edge.
    OrientedDag d = f(g, 0, 2);
    EXPECT_TRUE(d.has_arc(0, 1) && d.has_arc(1, 2) && d.has_arc(0, 3) && d.has_arc(3, 2));
    OrientedDag e = f(c4, 0, 1);
    OrientationReport r = validate_bipolar(e);
    EXPECT_EQ(r.n_plus, 1);
    EXPECT_EQ(r.n_minus, 1);
  }
}

TEST(Bipolar, K4AllEdges) {
  UndirectedGraph g = complete_graph(4);
  for (auto f : {bipolar_orientation_dfs, bipolar_orientation_bfs})
    for (auto [s, t] : g.edges()) {
      OrientationReport r = validate_bipolar(f(g, s, t));
      EXPECT_TRUE(r.acyclic);
      EXPECT_EQ(r.n_plus, 1);
      EXPECT_EQ(r.n_minus, 1);
      OrientedDag d = f(g, t, s);
      EXPECT_EQ(d.sources(), std::vector<int>{t});
      EXPECT_EQ(d.sinks(), std::vector<int>{s});
    }
}

TEST(Bipolar, Preconditions) {
  EXPECT_THROW(bipolar_orientation_dfs(cycle_graph(5), 0, 2), std::invalid_argument);
  EXPECT_THROW(bipolar_orientation_bfs(path_graph(3), 0, 1), std::invalid_argument);
  EXPECT_THROW(bipolar_orientation_dfs(cycle_graph(5), 1, 1), std::invalid_argument);
}

TEST(Bipolar, RandomBiconnected) {
  int tested = 0;
  for (std::uint64_t s = 0; tested < 500; ++s) {
    UndirectedGraph g = (s % 2) ? generate_random_regular(6 + 2 * static_cast<int>(s % 10), 3, s)
                                : generate_random_connected(5 + static_cast<int>(s % 12), 0.35, s);
    if (!is_biconnected(g)) continue;
    ++tested;
    auto [a, b] = g.edges()[s % g.num_edges()];
    for (auto f : {bipolar_orientation_dfs, bipolar_orientation_bfs}) {
      OrientedDag d = f(g, a, b);
      ASSERT_TRUE(respects_order(d));
      ASSERT_EQ(d.sources(), std::vector<int>{a});
      ASSERT_EQ(d.sinks(), std::vector<int>{b});
    }
  }
}

TEST(Bipolar, BfsPathsNotLongerOnAverage) {
  double dfs = 0, bfs = 0;
  for (std::uint64_t s = 0; s < 40; ++s) {
    UndirectedGraph g = generate_random_regular(32, 3, s);
    if (!is_biconnected(g)) continue;
    auto [a, b] = g.edges()[0];
    dfs += longest_path_length(bipolar_orientation_dfs(g, a, b));
    bfs += longest_path_length(bipolar_orientation_bfs(g, a, b));
  }
  EXPECT_LT(bfs, dfs);
}

TEST(Validate, CycleDetected) {
  UndirectedGraph g = cycle_graph(3);
  OrientationReport r = validate_orientation(g, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_FALSE(r.acyclic);
  EXPECT_THROW(OrientedDag(g, {{0, 1}, {1, 2}, {2, 0}}), std::invalid_argument);
}

TEST(HeadsInDegree, Examples) {
  UndirectedGraph k4 = complete_graph(4);
  EXPECT_EQ(averaged_heads_in_degree(bipolar_orientation_dfs(k4, 0, 1)), make_rational(4, 3));
  OrientedDag path(path_graph(3), {{0, 1}, {1, 2}});
  EXPECT_EQ(averaged_heads_in_degree(path), make_rational(0, 1));
  EXPECT_EQ(averaged_heads_in_degree(bfs_lightcone_orientation(star_graph(3), 0)), make_rational(2, 1));
}

TEST(HeadsInDegree, ThreeRegularIdentity) {
  for (std::uint64_t s = 0; s < 80; ++s) {
    UndirectedGraph g = generate_random_regular(4 + 2 * static_cast<int>(s % 12), 3, s);
    if (!is_connected(g)) continue;
    OrientedDag d = (s % 2) ? bfs_lightcone_orientation(g, 0) : single_source_orientation(g, 0);
    int np = static_cast<int>(d.sources().size()), nm = static_cast<int>(d.sinks().size());
    Rational expect = make_rational(2LL * g.num_nodes() + 4LL * (np + nm), 3LL * g.num_nodes());
    EXPECT_EQ(averaged_heads_in_degree(d), expect);
  }
}

TEST(DegreePair, Examples) {
  OrientedDag path(path_graph(3), {{0, 1}, {1, 2}});
  EXPECT_EQ(degree_pair(path, 1, 2), (std::pair<int, int>{1, 1}));
  EXPECT_THROW(degree_pair(path, 2, 1), std::invalid_argument);
  OrientedDag k4 = bipolar_orientation_dfs(complete_graph(4), 0, 3);
  for (int v : k4.in_neighbors(3)) EXPECT_EQ(degree_pair(k4, v, 3).second, 3);
  UndirectedGraph g = generate_random_regular(16, 3, 4);
  OrientedDag d = single_source_orientation(g, 0);
  for (const Arc& a : d.arcs()) {
    auto [o, i] = degree_pair(d, a.tail, a.head);
    EXPECT_TRUE(o >= 1 && o <= 3 && i >= 1 && i <= 3);
  }
}

TEST(Serialization, RoundTrip) {
  UndirectedGraph g = petersen_graph();
  OrientedDag d = bipolar_orientation_bfs(g, 0, 1);
  std::string text = write_orientation(d);
  OrientedDag e = parse_orientation(text);
  EXPECT_EQ(write_orientation(e), text);
  EXPECT_EQ(e.topo_order(), d.topo_order());
  EXPECT_NE(text.find("0 -> 1"), std::string::npos);
  EXPECT_NE(text.find("order: "), std::string::npos);
}

TEST(Serialization, BadOrderRejected) {
  EXPECT_THROW(parse_orientation("3 2\n0 -> 1\n1 -> 2\norder: 2 1 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_orientation("3 2\n0 -> 1\n1 2\norder: 0 1 2\n"), ParseError);
}

TEST(OrientedDag, Reversed) {
  OrientedDag d = bipolar_orientation_dfs(petersen_graph(), 0, 1);
  OrientedDag r = d.reversed();
  EXPECT_EQ(r.sources(), d.sinks());
  EXPECT_EQ(r.sinks(), d.sources());
  EXPECT_TRUE(respects_order(r));
}

}  // namespace
}  // namespace lcz
