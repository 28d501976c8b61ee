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
#include <vector>

#include "lcz/graph.hpp"
#include "lcz/orientation.hpp"
#include "lcz/types.hpp"

namespace lcz {

enum class GateKind { ZY, QaoaCost, QaoaMixer, RY };

/// ZY: q0 carries Z, q1 carries Y, unitary exp(-i t Z Y / 2).
/// QaoaCost: exp(-i t Z Z / 2). QaoaMixer: exp(-i t X) on q0. RY: exp(-i t Y / 2) on q0.
struct Gate {
  GateKind kind;
  int q0 = 0;
  int q1 = -1;
  int param = 0;
  int round = 0;
  bool two_qubit() const { return kind == GateKind::ZY || kind == GateKind::QaoaCost; }
};

enum class Scheme { Uniform, DegreePair, HeadInDegree, PerGate };

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& s);

struct AnsatzCircuit {
  std::string family;  // "bipolar-zy", "lightcone-zy", "qaoa", "ry"
  int n_qubits = 0;
  int rounds = 1;
  Scheme scheme = Scheme::Uniform;
  std::vector<Gate> gates;  // application order
  int num_params = 0;
  std::vector<std::string> param_labels;
  std::vector<Edge> edges;  // MaxCut graph whose <ZZ> terms are measured

  int parameter_count() const { return num_params; }
  UndirectedGraph graph() const { return UndirectedGraph(n_qubits, edges); }
};

/// ZY_p circuit on any DAG: even rounds walk topo_order emitting each node's
/// entering gates (ascending tail); odd rounds do the same on the reversed DAG.
AnsatzCircuit build_bipolar_zy(const OrientedDag& dag, int p, Scheme scheme);
AnsatzCircuit build_lightcone_zy(const UndirectedGraph& g, int root, int p, Scheme scheme);
AnsatzCircuit build_qaoa(const UndirectedGraph& g, int p);
AnsatzCircuit build_ry(const UndirectedGraph& g);

/// PerGate angles for the ZY_1 circuit of `dag` that prepare (|x> + |~x>)/sqrt2.
/// Needs a single-source DAG.
Angles set_solution_angles(const OrientedDag& dag, const std::vector<int>& bits);

/// Color per edge index; smallest color free at both endpoints.
std::vector<int> greedy_edge_coloring(const UndirectedGraph& g);

/// Two layers per two-qubit gate, ASAP in gate order; single-qubit gates are free.
int two_qubit_depth(const AnsatzCircuit& c);

/// Every node's Y-end gates precede its Z-end gates within each round.
bool satisfies_z_right_y_left(const AnsatzCircuit& c);

}  // namespace lcz
