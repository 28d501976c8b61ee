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


#include "lcz/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lcz/oracle.hpp"
#include "lcz/rng.hpp"

namespace lcz {

std::string backend_name(Backend b) { return b == Backend::Statevector ? "statevector" : "pauli"; }

Backend parse_backend(const std::string& s) {
  if (s == "statevector") return Backend::Statevector;
  if (s == "pauli") return Backend::Pauli;
  throw std::invalid_argument("unknown backend '" + s + "'");
}

double cut_from_zz(const std::vector<double>& zz) {
  double sum = 0.0;
  for (double v : zz) sum += v;
  return 0.5 * static_cast<double>(zz.size()) - 0.5 * sum;
}

namespace {

void check_cap(const AnsatzCircuit& c, const SimOptions& opt) {
  if (c.n_qubits > opt.max_qubits)
    throw ResourceError("statevector: " + std::to_string(c.n_qubits) + " qubits exceeds cap " +
                        std::to_string(opt.max_qubits));
}

template <typename Scalar>
std::vector<double> zz_all(const AnsatzCircuit& c, const Angles& th) {
  auto sv = simulate_state<Scalar>(c, th);
  Eigen::VectorXd p = sv.probabilities();
  std::vector<double> out;
  out.reserve(c.edges.size());
  for (auto [i, j] : c.edges) {
    const std::uint64_t mi = 1ULL << i, mj = 1ULL << j;
    double acc = 0.0;
    for (Eigen::Index x = 0; x < p.size(); ++x) acc += (((x & mi) != 0) == ((x & mj) != 0)) ? p[x] : -p[x];
    out.push_back(acc);
  }
  return out;
}

Eigen::VectorXd probs_of(const AnsatzCircuit& c, const Angles& th) {
  if (needs_complex(c)) return simulate_state<std::complex<double>>(c, th).probabilities();
  return simulate_state<double>(c, th).probabilities();
}

}  // namespace

ExpectationReport statevector_expectations(const AnsatzCircuit& c, const Angles& th, const SimOptions& opt) {
  check_cap(c, opt);
  ExpectationReport r;
  r.edges = c.edges;
  r.backend = Backend::Statevector;
  r.per_edge = needs_complex(c) ? zz_all<std::complex<double>>(c, th) : zz_all<double>(c, th);
  r.expected_cut = cut_from_zz(r.per_edge);
  return r;
}

ExpectationReport expected_cut(const AnsatzCircuit& c, const Angles& th, Backend backend, const TruncationMode& mode,
                               std::optional<double> c_max, const SimOptions& opt) {
  ExpectationReport r;
  if (backend == Backend::Statevector) {
    if (mode.kind != TruncationKind::None) throw std::invalid_argument("truncation requires the pauli backend");
    r = statevector_expectations(c, th, opt);
  } else {
    r.edges = c.edges;
    r.backend = Backend::Pauli;
    r.mode = mode;
    for (auto [i, j] : c.edges) r.per_edge.push_back(pauli_backpropagate(c, th, i, j, mode, opt.pauli));
    r.expected_cut = cut_from_zz(r.per_edge);
  }
  if (c_max) r.ratio = approximation_ratio(r.expected_cut, *c_max);
  return r;
}

Eigen::VectorXd cut_table(const UndirectedGraph& g) {
  const int n = g.num_nodes();
  if (n > 30) throw ResourceError("cut table: too many nodes");
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::VectorXd t(dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    int cut = 0;
    for (auto [i, j] : g.edges()) cut += static_cast<int>(((x >> i) ^ (x >> j)) & 1);
    t[x] = cut;
  }
  return t;
}

CutEvaluator::CutEvaluator(const AnsatzCircuit& c, const SimOptions& opt)
    : c_(c), table_(), complex_(needs_complex(c)) {
  check_cap(c, opt);
  table_ = cut_table(c.graph());
}

Eigen::VectorXd CutEvaluator::probabilities(const Angles& th) { return probs_of(c_, th); }

double CutEvaluator::operator()(const Angles& th) {
  if (complex_) return simulate_state<std::complex<double>>(c_, th).probabilities().dot(table_);
  return simulate_state<double>(c_, th).amplitudes().cwiseAbs2().dot(table_);
}

std::vector<Sample> sample_bitstrings(const AnsatzCircuit& c, const Angles& th, int shots, std::uint64_t seed,
                                      const SimOptions& opt) {
  check_cap(c, opt);
  if (shots < 0) throw std::invalid_argument("shots must be >= 0");
  Eigen::VectorXd p = probs_of(c, th);
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (Eigen::Index x = 0; x < p.size(); ++x) cdf[x] = (acc += p[x]);
  Rng rng = substream(seed, "shots");
  UndirectedGraph g = c.graph();
  std::vector<Sample> out;
  out.reserve(shots);
  for (int k = 0; k < shots; ++k) {
    double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::uint64_t x = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), p.size() - 1));
    Sample s;
    s.bits = index_to_bits(x, c.n_qubits);
    s.cut = cut_value(g, s.bits);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

template <typename Scalar>
double entropy_of(const Statevector<Scalar>& sv, int cut_position) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = sv.num_qubits();
  const Eigen::Index rows = Eigen::Index(1) << cut_position, cols = Eigen::Index(1) << (n - cut_position);
  Eigen::Map<const Mat> A(sv.amplitudes().data(), rows, cols);
  Mat rho = rows <= cols ? Mat(A * A.adjoint()) : Mat(A.adjoint() * A);
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    double l = es.eigenvalues()[k];
    if (l > 1e-15) s -= l * std::log2(l);
  }
  return s;
}

}  // namespace

double half_chain_entropy(const AnsatzCircuit& c, const Angles& th, int cut_position, const SimOptions& opt) {
  check_cap(c, opt);
  if (cut_position < 0 || cut_position > c.n_qubits) throw std::invalid_argument("cut position out of range");
  if (needs_complex(c)) return entropy_of(simulate_state<std::complex<double>>(c, th), cut_position);
  return entropy_of(simulate_state<double>(c, th), cut_position);
}

VarianceEstimate variance_estimate(const AnsatzCircuit& c, int n_samples, std::uint64_t seed, const SimOptions& opt) {
  if (n_samples < 2) throw std::invalid_argument("variance needs at least 2 samples");
  CutEvaluator eval(c, opt);
  Rng rng = substream(seed, "angles");
  Eigen::VectorXd v(n_samples);
  Angles th(c.num_params);
  for (int k = 0; k < n_samples; ++k) {
    for (int q = 0; q < th.size(); ++q) th[q] = rng.uniform(0.0, 2 * kPi);
    v[k] = -eval(th);
  }
  VarianceEstimate out;
  out.samples = n_samples;
  out.mean = v.mean();
  Eigen::VectorXd d = v.array() - out.mean;
  const double n = n_samples;
  const double m2 = d.squaredNorm() / n, m4 = d.array().pow(4).sum() / n;
  out.variance = d.squaredNorm() / (n - 1);
  out.standard_error = std::sqrt(std::max(0.0, (m4 - m2 * m2 * (n - 3) / (n - 1)) / n));
  return out;
}

}  // namespace lcz
