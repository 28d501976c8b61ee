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

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Dense>

#include "lcz/ansatz.hpp"
#include "lcz/types.hpp"

namespace lcz {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

/// Dense state on n qubits, qubit 0 = least significant bit. Real scalars
/// suffice for ZY and RY gates from |+>^n; QAOA gates need complex scalars.
template <typename Scalar>
class Statevector {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Real = typename Eigen::NumTraits<Scalar>::Real;

  explicit Statevector(int n) : n_(n) {
    if (n < 0 || n > 30) throw std::invalid_argument("statevector: unsupported qubit count");
    const Eigen::Index dim = Eigen::Index(1) << n;
    amp_ = Vector::Constant(dim, Scalar(Real(1) / std::sqrt(Real(dim))));
  }

  int num_qubits() const { return n_; }
  const Vector& amplitudes() const { return amp_; }
  Vector& amplitudes() { return amp_; }
  Real norm() const { return amp_.norm(); }

  /// exp(-i t Z_a Y_b / 2)
  void apply_zy(int a, int b, Real t) {
    const Real c = std::cos(t / 2), s = std::sin(t / 2);
    const std::uint64_t sb = 1ULL << b, za = 1ULL << a;
    const std::uint64_t dim = static_cast<std::uint64_t>(amp_.size());
    Scalar* d = amp_.data();
    for (std::uint64_t hi = 0; hi < dim; hi += 2 * sb)
      for (std::uint64_t x = hi; x < hi + sb; ++x) {
        const Real sz = (x & za) ? -s : s;
        const Scalar p0 = d[x], p1 = d[x | sb];
        d[x] = c * p0 - sz * p1;
        d[x | sb] = c * p1 + sz * p0;
      }
  }

  /// exp(-i t Y / 2)
  void apply_ry(int q, Real t) {
    const Real c = std::cos(t / 2), s = std::sin(t / 2);
    const std::uint64_t sb = 1ULL << q;
    const std::uint64_t dim = static_cast<std::uint64_t>(amp_.size());
    Scalar* d = amp_.data();
    for (std::uint64_t hi = 0; hi < dim; hi += 2 * sb)
      for (std::uint64_t x = hi; x < hi + sb; ++x) {
        const Scalar p0 = d[x], p1 = d[x | sb];
        d[x] = c * p0 - s * p1;
        d[x | sb] = s * p0 + c * p1;
      }
  }

  /// exp(-i t Z_a Z_b / 2)
  void apply_zz(int a, int b, Real t) {
    if constexpr (!is_complex<Scalar>::value) {
      throw std::logic_error("ZZ phase needs complex amplitudes");
    } else {
      const Scalar ph_even = std::polar(Real(1), -t / 2), ph_odd = std::polar(Real(1), t / 2);
      const std::uint64_t ma = 1ULL << a, mb = 1ULL << b;
      const std::uint64_t dim = static_cast<std::uint64_t>(amp_.size());
      Scalar* d = amp_.data();
      for (std::uint64_t x = 0; x < dim; ++x) d[x] *= (((x & ma) != 0) == ((x & mb) != 0)) ? ph_even : ph_odd;
    }
  }

  /// exp(-i t X)
  void apply_rx_mixer(int q, Real t) {
    if constexpr (!is_complex<Scalar>::value) {
      throw std::logic_error("X mixer needs complex amplitudes");
    } else {
      const Scalar c(std::cos(t), 0), ms(0, -std::sin(t));
      const std::uint64_t sb = 1ULL << q;
      const std::uint64_t dim = static_cast<std::uint64_t>(amp_.size());
      Scalar* d = amp_.data();
      for (std::uint64_t hi = 0; hi < dim; hi += 2 * sb)
        for (std::uint64_t x = hi; x < hi + sb; ++x) {
          const Scalar p0 = d[x], p1 = d[x | sb];
          d[x] = c * p0 + ms * p1;
          d[x | sb] = ms * p0 + c * p1;
        }
    }
  }

  void apply(const Gate& g, Real t) {
    switch (g.kind) {
      case GateKind::ZY:
        apply_zy(g.q0, g.q1, t);
        break;
      case GateKind::RY:
        apply_ry(g.q0, t);
        break;
      case GateKind::QaoaCost:
        apply_zz(g.q0, g.q1, t);
        break;
      case GateKind::QaoaMixer:
        apply_rx_mixer(g.q0, t);
        break;
    }
  }

  Eigen::Matrix<Real, Eigen::Dynamic, 1> probabilities() const { return amp_.cwiseAbs2(); }

  Real zz(int i, int j) const {
    const std::uint64_t mi = 1ULL << i, mj = 1ULL << j;
    Real acc = 0;
    for (Eigen::Index x = 0; x < amp_.size(); ++x) {
      const Real p = std::norm(amp_[x]);
      acc += (((x & mi) != 0) == ((x & mj) != 0)) ? p : -p;
    }
    return acc;
  }

 private:
  int n_;
  Vector amp_;
};

inline bool needs_complex(const AnsatzCircuit& c) {
  for (const auto& g : c.gates)
    if (g.kind == GateKind::QaoaCost || g.kind == GateKind::QaoaMixer) return true;
  return false;
}

template <typename Scalar>
void run_circuit(const AnsatzCircuit& c, const Angles& th, Statevector<Scalar>& sv) {
  if (th.size() != c.num_params)
    throw std::invalid_argument("angle vector has " + std::to_string(th.size()) + " entries, circuit needs " +
                                std::to_string(c.num_params));
  for (const auto& g : c.gates) sv.apply(g, th[g.param]);
}

template <typename Scalar>
Statevector<Scalar> simulate_state(const AnsatzCircuit& c, const Angles& th) {
  Statevector<Scalar> sv(c.n_qubits);
  run_circuit(c, th, sv);
  return sv;
}

}  // namespace lcz
