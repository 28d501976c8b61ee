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
#include <map>
#include <string>
#include <vector>

#include "lcz/ansatz.hpp"
#include "lcz/types.hpp"

namespace lcz {

enum class TruncationKind { None, KLocal, Weight, Coefficient };

struct TruncationMode {
  TruncationKind kind = TruncationKind::None;
  int k = 0;                // KLocal
  int max_weight = 0;       // Weight
  double threshold = 0.0;   // Coefficient

  static TruncationMode none() { return {}; }
  static TruncationMode klocal(int k);
  static TruncationMode weight(int w);
  static TruncationMode coefficient(double c);
};

/// "none", "klocal:K", "weight:W", "coef:C".
TruncationMode parse_truncation(const std::string& spec);
std::string truncation_name(const TruncationMode& m);

/// Pauli string in symplectic form: (x,z) = (1,0) X, (0,1) Z, (1,1) Y.
struct PauliString {
  std::uint64_t x = 0, z = 0;
  bool operator==(const PauliString&) const = default;
};

struct PauliTerm {
  PauliString s;
  double coefficient = 0.0;
};

char pauli_letter(const PauliString& p, int q);
/// Sparse letter map view (node -> 'X'/'Y'/'Z').
std::map<int, char> pauli_letters(const PauliString& p);

/// Rotation exp(-i t G / 2) with Pauli generator G. A half rotation keeps
/// the unchanged branch (scaled by cos t on anticommutation) and drops the
/// branch that would leave a letter on its discarded partner qubit.
struct PauliRotation {
  PauliString generator;
  double scale = 1.0;  // t = scale * angles[param]
  int param = 0;
  bool half = false;
};

struct PauliProgram {
  int n_qubits = 0;
  std::vector<PauliRotation> rotations;  // application order
  PauliString observable;
};

struct PauliOptions {
  std::size_t max_terms = 4000000;
  double prune = 1e-15;
};

/// Exact translation of a circuit on <= 64 qubits measuring Z_i Z_j.
PauliProgram compile_pauli(const AnsatzCircuit& c, int i, int j);
/// Circuit restricted to the k-local subgraph of edge (i,j): full rotations on
/// subgraph edges, half rotations on every other gate end inside the
/// subgraph. Qubits are relabelled compactly.
PauliProgram compile_klocal(const AnsatzCircuit& c, int i, int j, int k);

/// Heisenberg back-propagation; returns <+|O|+> of the evolved observable.
double backpropagate(const PauliProgram& prog, const Angles& th, const TruncationMode& mode,
                     const PauliOptions& opt = {}, std::size_t* peak_terms = nullptr);

double pauli_backpropagate(const AnsatzCircuit& c, const Angles& th, int i, int j, const TruncationMode& mode,
                           const PauliOptions& opt = {});

/// The k-local circuit realised with a fresh |+> ancilla per half gate, for
/// statevector cross-checks. Returns the circuit and the mapped edge.
struct KLocalCircuit {
  AnsatzCircuit circuit;
  int i = 0, j = 0;
};
KLocalCircuit klocal_circuit(const AnsatzCircuit& c, int i, int j, int k);

}  // namespace lcz
