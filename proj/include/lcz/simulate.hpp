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
#include <optional>
#include <string>
#include <vector>

#include "lcz/ansatz.hpp"
#include "lcz/pauli.hpp"
#include "lcz/statevector.hpp"
#include "lcz/types.hpp"

namespace lcz {

enum class Backend { Statevector, Pauli };

std::string backend_name(Backend b);
Backend parse_backend(const std::string& s);

struct SimOptions {
  int max_qubits = 24;
  PauliOptions pauli;
};

struct ExpectationReport {
  std::vector<Edge> edges;
  std::vector<double> per_edge;  // <Z_i Z_j>, aligned with edges
  double expected_cut = 0.0;
  std::optional<double> ratio;
  Backend backend = Backend::Statevector;
  TruncationMode mode;
};

/// Expected cut M/2 - sum <ZZ> / 2.
double cut_from_zz(const std::vector<double>& zz);

ExpectationReport statevector_expectations(const AnsatzCircuit& c, const Angles& th, const SimOptions& opt = {});
ExpectationReport expected_cut(const AnsatzCircuit& c, const Angles& th, Backend backend,
                               const TruncationMode& mode = {}, std::optional<double> c_max = std::nullopt,
                               const SimOptions& opt = {});

/// Cut value of every basis state, qubit 0 least significant.
Eigen::VectorXd cut_table(const UndirectedGraph& g);

/// Reusable statevector objective: expected cut as <p, cut_table>.
class CutEvaluator {
 public:
  explicit CutEvaluator(const AnsatzCircuit& c, const SimOptions& opt = {});
  double operator()(const Angles& th);
  Eigen::VectorXd probabilities(const Angles& th);

 private:
  AnsatzCircuit c_;
  Eigen::VectorXd table_;
  bool complex_;
};

struct Sample {
  std::vector<int> bits;
  int cut = 0;
};

std::vector<Sample> sample_bitstrings(const AnsatzCircuit& c, const Angles& th, int shots, std::uint64_t seed,
                                      const SimOptions& opt = {});

/// Von Neumann entropy in bits of qubits [0, cut_position).
double half_chain_entropy(const AnsatzCircuit& c, const Angles& th, int cut_position, const SimOptions& opt = {});

struct VarianceEstimate {
  double mean = 0.0;
  double variance = 0.0;
  double standard_error = 0.0;
  int samples = 0;
};

/// Sample variance of <H_MC> (the negated expected cut) over angle vectors
/// uniform in [0, 2pi)^P.
VarianceEstimate variance_estimate(const AnsatzCircuit& c, int n_samples, std::uint64_t seed,
                                   const SimOptions& opt = {});

}  // namespace lcz
