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


#include "lcz/ansatz.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lcz {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Uniform:
      return "uniform";
    case Scheme::DegreePair:
      return "degreepair";
    case Scheme::HeadInDegree:
      return "headindegree";
    case Scheme::PerGate:
      return "pergate";
  }
  return "uniform";
}

Scheme parse_scheme(const std::string& s) {
  if (s == "uniform") return Scheme::Uniform;
  if (s == "degreepair") return Scheme::DegreePair;
  if (s == "headindegree") return Scheme::HeadInDegree;
  if (s == "pergate") return Scheme::PerGate;
  throw std::invalid_argument("unknown scheme '" + s + "'");
}

namespace {

std::string pair_label(int round, int a, int b) {
  return "r" + std::to_string(round) + ":(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

AnsatzCircuit build_bipolar_zy(const OrientedDag& dag, int p, Scheme scheme) {
  if (p < 1) throw std::invalid_argument("rounds must be >= 1");
  AnsatzCircuit c;
  c.family = "bipolar-zy";
  c.n_qubits = dag.num_nodes();
  c.rounds = p;
  c.scheme = scheme;
  c.edges = dag.base().edges();
  const OrientedDag rev = dag.reversed();
  for (int l = 0; l < p; ++l) {
    const OrientedDag& d = l % 2 == 0 ? dag : rev;
    std::vector<Gate> round;
    for (int v : d.topo_order())
      for (int tail : d.in_neighbors(v)) round.push_back({GateKind::ZY, tail, v, 0, l});
    // Parameter classes for this round.
    std::map<std::pair<int, int>, int> cls;
    for (const auto& g : round) {
      std::pair<int, int> key{0, 0};
      if (scheme == Scheme::DegreePair) key = {d.out_degree(g.q0), d.in_degree(g.q1)};
      if (scheme == Scheme::HeadInDegree) key = {0, d.in_degree(g.q1)};
      if (scheme != Scheme::PerGate) cls.emplace(key, 0);
    }
    int base = c.num_params;
    if (scheme == Scheme::PerGate) {
      for (std::size_t k = 0; k < round.size(); ++k) {
        round[k].param = base + static_cast<int>(k);
        c.param_labels.push_back("r" + std::to_string(l) + ":" + std::to_string(round[k].q0) + "->" +
                                 std::to_string(round[k].q1));
      }
      c.num_params += static_cast<int>(round.size());
    } else {
      int k = 0;
      for (auto& [key, idx] : cls) {
        idx = base + k++;
        if (scheme == Scheme::Uniform)
          c.param_labels.push_back("r" + std::to_string(l));
        else if (scheme == Scheme::HeadInDegree)
          c.param_labels.push_back("r" + std::to_string(l) + ":in" + std::to_string(key.second));
        else
          c.param_labels.push_back(pair_label(l, key.first, key.second));
      }
      for (auto& g : round) {
        std::pair<int, int> key{0, 0};
        if (scheme == Scheme::DegreePair) key = {d.out_degree(g.q0), d.in_degree(g.q1)};
        if (scheme == Scheme::HeadInDegree) key = {0, d.in_degree(g.q1)};
        g.param = cls.at(key);
      }
      c.num_params += static_cast<int>(cls.size());
    }
    c.gates.insert(c.gates.end(), round.begin(), round.end());
  }
  return c;
}

AnsatzCircuit build_lightcone_zy(const UndirectedGraph& g, int root, int p, Scheme scheme) {
  AnsatzCircuit c = build_bipolar_zy(bfs_lightcone_orientation(g, root), p, scheme);
  c.family = "lightcone-zy";
  return c;
}

std::vector<int> greedy_edge_coloring(const UndirectedGraph& g) {
  std::vector<int> color(g.num_edges(), -1);
  std::vector<std::vector<int>> used(g.num_nodes());
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edges()[e];
    int col = 0;
    auto taken = [&](int x) {
      return std::find(used[a].begin(), used[a].end(), x) != used[a].end() ||
             std::find(used[b].begin(), used[b].end(), x) != used[b].end();
    };
    while (taken(col)) ++col;
    color[e] = col;
    used[a].push_back(col);
    used[b].push_back(col);
  }
  return color;
}

AnsatzCircuit build_qaoa(const UndirectedGraph& g, int p) {
  if (p < 1) throw std::invalid_argument("rounds must be >= 1");
  AnsatzCircuit c;
  c.family = "qaoa";
  c.n_qubits = g.num_nodes();
  c.rounds = p;
  c.scheme = Scheme::Uniform;
  c.edges = g.edges();
  auto color = greedy_edge_coloring(g);
  std::vector<int> order(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
  for (int l = 0; l < p; ++l) {
    for (int e : order) c.gates.push_back({GateKind::QaoaCost, g.edges()[e].first, g.edges()[e].second, 2 * l, l});
    for (int q = 0; q < g.num_nodes(); ++q) c.gates.push_back({GateKind::QaoaMixer, q, -1, 2 * l + 1, l});
    c.param_labels.push_back("gamma" + std::to_string(l));
    c.param_labels.push_back("beta" + std::to_string(l));
  }
  c.num_params = 2 * p;
  return c;
}

AnsatzCircuit build_ry(const UndirectedGraph& g) {
  AnsatzCircuit c;
  c.family = "ry";
  c.n_qubits = g.num_nodes();
  c.rounds = 1;
  c.scheme = Scheme::PerGate;
  c.edges = g.edges();
  for (int q = 0; q < g.num_nodes(); ++q) {
    c.gates.push_back({GateKind::RY, q, -1, q, 0});
    c.param_labels.push_back("q" + std::to_string(q));
  }
  c.num_params = g.num_nodes();
  return c;
}

Angles set_solution_angles(const OrientedDag& dag, const std::vector<int>& bits) {
  const int n = dag.num_nodes();
  if (static_cast<int>(bits.size()) != n)
    throw std::invalid_argument("assignment length " + std::to_string(bits.size()) + " != N=" + std::to_string(n));
  if (dag.sources().size() != 1) throw std::invalid_argument("solution angles need a single-source DAG");
  AnsatzCircuit c = build_bipolar_zy(dag, 1, Scheme::PerGate);
  std::vector<int> parent(n, -1);
  for (int v = 0; v < n; ++v)
    if (dag.in_degree(v) > 0) parent[v] = dag.in_neighbors(v).front();
  Angles th = Angles::Zero(c.num_params);
  for (const auto& g : c.gates)
    if (parent[g.q1] == g.q0) th[g.param] = bits[g.q0] != bits[g.q1] ? kPi / 2 : -kPi / 2;
  return th;
}

int two_qubit_depth(const AnsatzCircuit& c) {
  std::vector<int> t(c.n_qubits, 0);
  int depth = 0;
  for (const auto& g : c.gates) {
    if (!g.two_qubit()) continue;
    int start = std::max(t[g.q0], t[g.q1]);
    t[g.q0] = t[g.q1] = start + 2;
    depth = std::max(depth, start + 2);
  }
  return depth;
}

bool satisfies_z_right_y_left(const AnsatzCircuit& c) {
  for (int l = 0; l < c.rounds; ++l) {
    std::vector<char> z_seen(c.n_qubits, 0);
    for (const auto& g : c.gates) {
      if (g.round != l || g.kind != GateKind::ZY) continue;
      if (z_seen[g.q1]) return false;
      z_seen[g.q0] = 1;
    }
  }
  return true;
}

}  // namespace lcz
