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

#include <algorithm>
#include <complex>
#include <set>

#include "lcz/ansatz.hpp"
#include "lcz/oracle.hpp"
#include "lcz/rng.hpp"
#include "lcz/serialize.hpp"
#include "lcz/simulate.hpp"

namespace lcz {
namespace {

OrientedDag directed_path3() { return OrientedDag(path_graph(3), {{0, 1}, {1, 2}}); }

TEST(BipolarZy, PathGateOrder) {
  AnsatzCircuit c = build_bipolar_zy(directed_path3(), 1, Scheme::Uniform);
  ASSERT_EQ(c.gates.size(), 2u);
  EXPECT_EQ(c.gates[0].kind, GateKind::ZY);
  EXPECT_EQ(std::make_pair(c.gates[0].q0, c.gates[0].q1), std::make_pair(0, 1));
  EXPECT_EQ(std::make_pair(c.gates[1].q0, c.gates[1].q1), std::make_pair(1, 2));
  EXPECT_EQ(c.num_params, 1);
}

TEST(BipolarZy, OddRoundsReverse) {
  AnsatzCircuit c = build_bipolar_zy(directed_path3(), 2, Scheme::Uniform);
  ASSERT_EQ(c.gates.size(), 4u);
  EXPECT_EQ(std::make_pair(c.gates[2].q0, c.gates[2].q1), std::make_pair(2, 1));
  EXPECT_EQ(std::make_pair(c.gates[3].q0, c.gates[3].q1), std::make_pair(1, 0));
  EXPECT_EQ(c.gates[3].param, 1);
  EXPECT_EQ(c.num_params, 2);
}

TEST(BipolarZy, CycleDegreePairClasses) {
  UndirectedGraph c8 = cycle_graph(8);
  OrientedDag d = bipolar_orientation_dfs(c8, 0, 1);
  EXPECT_EQ(build_bipolar_zy(d, 1, Scheme::DegreePair).num_params, 4);
  EXPECT_EQ(build_bipolar_zy(d, 1, Scheme::HeadInDegree).num_params, 2);
  OrientedDag far = OrientedDag(c8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 4}, {6, 5}, {7, 6}, {0, 7}});
  EXPECT_EQ(build_bipolar_zy(far, 1, Scheme::DegreePair).num_params, 3);
}

TEST(BipolarZy, ParameterCounts) {
  UndirectedGraph g = generate_random_regular(12, 3, 2);
  OrientedDag d = single_source_orientation(g, 0);
  for (int p = 1; p <= 3; ++p) {
    EXPECT_EQ(build_bipolar_zy(d, p, Scheme::Uniform).num_params, p);
    EXPECT_EQ(build_bipolar_zy(d, p, Scheme::PerGate).num_params, p * g.num_edges());
    EXPECT_LE(build_bipolar_zy(d, p, Scheme::DegreePair).num_params, p * 9);
    EXPECT_LE(build_bipolar_zy(d, p, Scheme::HeadInDegree).num_params, p * 3);
  }
}

TEST(BipolarZy, BindingIsSurjective) {
  UndirectedGraph g = petersen_graph();
  for (Scheme s : {Scheme::Uniform, Scheme::DegreePair, Scheme::HeadInDegree, Scheme::PerGate}) {
    AnsatzCircuit c = build_bipolar_zy(bipolar_orientation_bfs(g, 0, 1), 2, s);
    std::set<int> used;
    for (const auto& gt : c.gates) {
      ASSERT_LT(gt.param, c.num_params);
      used.insert(gt.param);
    }
    EXPECT_EQ(static_cast<int>(used.size()), c.num_params);
    EXPECT_EQ(static_cast<int>(c.param_labels.size()), c.num_params);
  }
}

TEST(BipolarZy, EachEdgeOncePerRound) {
  UndirectedGraph g = generate_random_regular(10, 3, 9);
  AnsatzCircuit c = build_bipolar_zy(single_source_orientation(g, 0), 3, Scheme::Uniform);
  for (int r = 0; r < 3; ++r) {
    std::multiset<Edge> seen;
    for (const auto& gt : c.gates)
      if (gt.round == r) seen.insert({std::min(gt.q0, gt.q1), std::max(gt.q0, gt.q1)});
    EXPECT_EQ(seen, std::multiset<Edge>(g.edges().begin(), g.edges().end()));
  }
}

TEST(BipolarZy, ZRightYLeftHolds) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    UndirectedGraph g = generate_random_connected(10, 0.25, s);
    AnsatzCircuit c = build_bipolar_zy(single_source_orientation(g, 0), 3, Scheme::PerGate);
    EXPECT_TRUE(satisfies_z_right_y_left(c));
    EXPECT_TRUE(satisfies_z_right_y_left(build_lightcone_zy(g, 0, 2, Scheme::Uniform)));
  }
  AnsatzCircuit bad = build_bipolar_zy(directed_path3(), 1, Scheme::Uniform);
  std::swap(bad.gates[0], bad.gates[1]);
  EXPECT_FALSE(satisfies_z_right_y_left(bad));
}

TEST(BipolarZy, EnteringGatesCommute) {
  UndirectedGraph g = petersen_graph();
  AnsatzCircuit c = build_bipolar_zy(bipolar_orientation_dfs(g, 0, 1), 1, Scheme::PerGate);
  Rng rng(3);
  Angles th(c.num_params);
  for (int k = 0; k < c.num_params; ++k) th[k] = rng.uniform(-kPi, kPi);
  double ref = expected_cut(c, th, Backend::Statevector).expected_cut;
  AnsatzCircuit perm = c;
  // Reverse each maximal run of gates sharing a head.
  for (std::size_t a = 0; a < perm.gates.size();) {
    std::size_t b = a;
    while (b < perm.gates.size() && perm.gates[b].q1 == perm.gates[a].q1) ++b;
    std::reverse(perm.gates.begin() + static_cast<long>(a), perm.gates.begin() + static_cast<long>(b));
    a = b;
  }
  EXPECT_NEAR(expected_cut(perm, th, Backend::Statevector).expected_cut, ref, 1e-12);
}

TEST(LightconeZy, FamilyAndSink) {
  UndirectedGraph g = petersen_graph();
  AnsatzCircuit c = build_lightcone_zy(g, 3, 1, Scheme::Uniform);
  EXPECT_EQ(c.family, "lightcone-zy");
  EXPECT_EQ(static_cast<int>(c.gates.size()), g.num_edges());
}

TEST(Qaoa, Shapes) {
  AnsatzCircuit k2 = build_qaoa(path_graph(2), 1);
  EXPECT_EQ(k2.gates.size(), 3u);
  EXPECT_EQ(k2.num_params, 2);
  EXPECT_EQ(k2.gates[0].kind, GateKind::QaoaCost);
  EXPECT_EQ(build_qaoa(petersen_graph(), 3).num_params, 6);
}

TEST(Qaoa, TriangleNeedsThreeLayers) {
  auto col = greedy_edge_coloring(cycle_graph(3));
  EXPECT_EQ(std::set<int>(col.begin(), col.end()).size(), 3u);
  AnsatzCircuit c = build_qaoa(cycle_graph(3), 1);
  EXPECT_EQ(two_qubit_depth(c), 6);
}

// Dense operator for a Pauli word; letter k acts on qubit k (least significant).
Eigen::MatrixXcd pauli_word(const std::string& w) {
  using C = std::complex<double>;
  Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity(), X, Y, Z;
  X << 0, 1, 1, 0;
  Y << 0, C(0, -1), C(0, 1), 0;
  Z << 1, 0, 0, -1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char ch : w) {
    Eigen::Matrix2cd f = ch == 'X' ? X : ch == 'Y' ? Y : ch == 'Z' ? Z : I;
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = f(r, c) * m;
    m = next;
  }
  return m;
}

Eigen::MatrixXcd rotation(const std::string& w, double t) {
  const Eigen::Index d = Eigen::Index(1) << w.size();
  return std::cos(t / 2) * Eigen::MatrixXcd::Identity(d, d) -
         std::complex<double>(0, std::sin(t / 2)) * pauli_word(w);
}

TEST(Qaoa, TriangleMatchesDenseMatrices) {
  AnsatzCircuit c = build_qaoa(cycle_graph(3), 1);
  for (double gm : {0.3, 0.9}) {
    for (double b : {0.2, 0.7}) {
      Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(8, 1.0 / std::sqrt(8.0));
      psi = rotation("ZZI", gm) * psi;
      psi = rotation("IZZ", gm) * psi;
      psi = rotation("ZIZ", gm) * psi;
      for (const char* x : {"XII", "IXI", "IIX"}) psi = rotation(x, 2 * b) * psi;
      double zz01 = (psi.adjoint() * pauli_word("ZZI") * psi)(0).real();
      Angles th(2);
      th << gm, b;
      EXPECT_NEAR(expected_cut(c, th, Backend::Statevector).per_edge[0], zz01, 1e-12);
    }
  }
}

TEST(BipolarZy, PathMatchesDenseMatrices) {
  AnsatzCircuit c = build_bipolar_zy(directed_path3(), 1, Scheme::PerGate);
  Angles th(2);
  th << 0.4, -1.1;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(8, 1.0 / std::sqrt(8.0));
  psi = rotation("ZYI", th[0]) * psi;
  psi = rotation("IZY", th[1]) * psi;
  ExpectationReport r = expected_cut(c, th, Backend::Statevector);
  EXPECT_NEAR(r.per_edge[0], (psi.adjoint() * pauli_word("ZZI") * psi)(0).real(), 1e-12);
  EXPECT_NEAR(r.per_edge[1], (psi.adjoint() * pauli_word("IZZ") * psi)(0).real(), 1e-12);
}

TEST(Ry, Shapes) {
  AnsatzCircuit c = build_ry(path_graph(3));
  EXPECT_EQ(c.gates.size(), 3u);
  EXPECT_EQ(c.num_params, 3);
}

TEST(Ry, HalfPiGivesBasisStates) {
  UndirectedGraph g = petersen_graph();
  AnsatzCircuit c = build_ry(g);
  std::vector<int> x = brute_force_maxcut(g).bits;
  Angles th(g.num_nodes());
  for (int v = 0; v < g.num_nodes(); ++v) th[v] = x[v] ? kPi / 2 : -kPi / 2;
  auto p = CutEvaluator(c).probabilities(th);
  EXPECT_NEAR(p[static_cast<Eigen::Index>(bits_to_index(x))], 1.0, 1e-12);
  EXPECT_NEAR(expected_cut(c, th, Backend::Statevector).expected_cut, 12.0, 1e-12);
}

TEST(SolutionAngles, Path) {
  OrientedDag d = directed_path3();
  Angles th = set_solution_angles(d, {0, 1, 0});
  EXPECT_NEAR(th[0], kPi / 2, 1e-15);
  EXPECT_NEAR(th[1], kPi / 2, 1e-15);
  AnsatzCircuit c = build_bipolar_zy(d, 1, Scheme::PerGate);
  EXPECT_NEAR(expected_cut(c, th, Backend::Statevector).expected_cut, 2.0, 1e-12);
}

TEST(SolutionAngles, K2) {
  OrientedDag d(path_graph(2), {{0, 1}});
  Angles th = set_solution_angles(d, {0, 1});
  EXPECT_NEAR(th[0], kPi / 2, 1e-15);
  AnsatzCircuit c = build_bipolar_zy(d, 1, Scheme::PerGate);
  EXPECT_NEAR(expected_cut(c, th, Backend::Statevector).per_edge[0], -1.0, 1e-12);
}

TEST(SolutionAngles, RandomRegularReachesOptimum) {
  UndirectedGraph g = generate_random_regular(10, 3, 21);
  CutAssignment best = brute_force_maxcut(g);
  OrientedDag d = single_source_orientation(g, 0);
  AnsatzCircuit c = build_bipolar_zy(d, 1, Scheme::PerGate);
  EXPECT_NEAR(expected_cut(c, set_solution_angles(d, best.bits), Backend::Statevector).expected_cut, best.cut,
              1e-9);
}

TEST(SolutionAngles, Errors) {
  EXPECT_THROW(set_solution_angles(directed_path3(), {0, 1}), std::invalid_argument);
  OrientedDag two_sources(path_graph(3), {{0, 1}, {2, 1}});
  EXPECT_THROW(set_solution_angles(two_sources, {0, 1, 0}), std::invalid_argument);
}

TEST(EdgeColoring, SmallCases) {
  auto ncol = [](const std::vector<int>& c) { return std::set<int>(c.begin(), c.end()).size(); };
  EXPECT_EQ(ncol(greedy_edge_coloring(cycle_graph(4))), 2u);
  EXPECT_EQ(ncol(greedy_edge_coloring(cycle_graph(5))), 3u);
  EXPECT_GE(ncol(greedy_edge_coloring(complete_graph(4))), 3u);
}

TEST(EdgeColoring, ProperAndBounded) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    UndirectedGraph g = generate_random_connected(14, 0.3, s);
    auto col = greedy_edge_coloring(g);
    for (int v = 0; v < g.num_nodes(); ++v) {
      std::set<int> seen;
      for (int w : g.neighbors(v)) EXPECT_TRUE(seen.insert(col[g.edge_index(v, w)]).second);
    }
    EXPECT_LE(*std::max_element(col.begin(), col.end()) + 1, 2 * g.max_degree() - 1);
  }
}

TEST(Depth, Examples) {
  AnsatzCircuit one = build_bipolar_zy(OrientedDag(path_graph(2), {{0, 1}}), 1, Scheme::Uniform);
  EXPECT_EQ(two_qubit_depth(one), 2);
  UndirectedGraph disjoint(4, {{0, 1}, {2, 3}});
  AnsatzCircuit two = build_bipolar_zy(OrientedDag(disjoint, {{0, 1}, {2, 3}}), 1, Scheme::Uniform);
  EXPECT_EQ(two_qubit_depth(two), 2);
  EXPECT_EQ(two_qubit_depth(build_bipolar_zy(directed_path3(), 1, Scheme::Uniform)), 4);
  EXPECT_EQ(two_qubit_depth(build_ry(path_graph(3))), 0);
}

TEST(Schemes, ParseNames) {
  for (Scheme s : {Scheme::Uniform, Scheme::DegreePair, Scheme::HeadInDegree, Scheme::PerGate})
    EXPECT_EQ(parse_scheme(scheme_name(s)), s);
  EXPECT_THROW(parse_scheme("bogus"), std::invalid_argument);
}

TEST(CircuitJson, FieldOrder) {
  AnsatzCircuit c = build_bipolar_zy(directed_path3(), 1, Scheme::Uniform);
  std::string s = to_json(c).dump();
  EXPECT_EQ(s.rfind(R"({"n_qubits":3,"rounds":1,"scheme":"uniform","gates":[{"kind":"zy","qubits":[0,1],"param":0},)", 0),
            0u);
}

}  // namespace
}  // namespace lcz
