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


#include "lcz/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "lcz/rng.hpp"

namespace lcz {

TruncationMode TruncationMode::klocal(int k) {
  if (k < 0) throw std::invalid_argument("k-local truncation needs k >= 0");
  TruncationMode m;
  m.kind = TruncationKind::KLocal;
  m.k = k;
  return m;
}

TruncationMode TruncationMode::weight(int w) {
  if (w < 1) throw std::invalid_argument("weight truncation needs w >= 1");
  TruncationMode m;
  m.kind = TruncationKind::Weight;
  m.max_weight = w;
  return m;
}

TruncationMode TruncationMode::coefficient(double c) {
  if (!(c > 0)) throw std::invalid_argument("coefficient truncation needs a positive threshold");
  TruncationMode m;
  m.kind = TruncationKind::Coefficient;
  m.threshold = c;
  return m;
}

TruncationMode parse_truncation(const std::string& spec) {
  if (spec.empty() || spec == "none") return TruncationMode::none();
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("truncation spec '" + spec + "' needs kind:value");
  std::string kind = spec.substr(0, colon), val = spec.substr(colon + 1);
  try {
    if (kind == "klocal") return TruncationMode::klocal(std::stoi(val));
    if (kind == "weight") return TruncationMode::weight(std::stoi(val));
    if (kind == "coef") return TruncationMode::coefficient(std::stod(val));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad truncation value '" + val + "'");
  }
  throw std::invalid_argument("unknown truncation kind '" + kind + "'");
}

std::string truncation_name(const TruncationMode& m) {
  switch (m.kind) {
    case TruncationKind::None:
      return "none";
    case TruncationKind::KLocal:
      return "klocal:" + std::to_string(m.k);
    case TruncationKind::Weight:
      return "weight:" + std::to_string(m.max_weight);
    case TruncationKind::Coefficient: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "coef:%.17g", m.threshold);
      return buf;
    }
  }
  return "none";
}

char pauli_letter(const PauliString& p, int q) {
  const bool x = (p.x >> q) & 1ULL, z = (p.z >> q) & 1ULL;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

std::map<int, char> pauli_letters(const PauliString& p) {
  std::map<int, char> out;
  for (int q = 0; q < 64; ++q) {
    char c = pauli_letter(p, q);
    if (c != 'I') out[q] = c;
  }
  return out;
}

namespace {

struct KeyHash {
  std::size_t operator()(const PauliString& p) const noexcept {
    return static_cast<std::size_t>(splitmix64(p.x ^ (p.z * 0x9e3779b97f4a7c15ULL)));
  }
};

PauliString generator_of(const Gate& g, const std::vector<int>& map) {
  std::uint64_t a = 1ULL << map[g.q0];
  switch (g.kind) {
    case GateKind::ZY: {
      std::uint64_t b = 1ULL << map[g.q1];
      return {b, a | b};
    }
    case GateKind::QaoaCost:
      return {0, a | (1ULL << map[g.q1])};
    case GateKind::QaoaMixer:
      return {a, 0};
    case GateKind::RY:
      return {a, a};
  }
  return {};
}

double scale_of(const Gate& g) { return g.kind == GateKind::QaoaMixer ? 2.0 : 1.0; }

// Letters of a two-qubit generator restricted to one endpoint.
PauliString restrict_to(const Gate& g, int end, int compact) {
  std::uint64_t m = 1ULL << compact;
  if (g.kind == GateKind::ZY) return end == 0 ? PauliString{0, m} : PauliString{m, m};
  return {0, m};  // ZZ
}

PauliString zz_observable(int i, int j) { return {0, (1ULL << i) | (1ULL << j)}; }

std::vector<int> distances_from_edge(const AnsatzCircuit& c, int i, int j) {
  UndirectedGraph g = c.graph();
  std::vector<int> d(c.n_qubits, -1);
  std::queue<int> q;
  d[i] = d[j] = 0;
  q.push(i);
  q.push(j);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push(w);
      }
  }
  return d;
}

void check_edge(const AnsatzCircuit& c, int i, int j) {
  if (i < 0 || j < 0 || i >= c.n_qubits || j >= c.n_qubits || i == j)
    throw std::invalid_argument("observable edge out of range");
}

}  // namespace

PauliProgram compile_pauli(const AnsatzCircuit& c, int i, int j) {
  check_edge(c, i, j);
  if (c.n_qubits > 64) throw ResourceError("pauli backend supports at most 64 qubits");
  std::vector<int> id(c.n_qubits);
  for (int q = 0; q < c.n_qubits; ++q) id[q] = q;
  PauliProgram prog;
  prog.n_qubits = c.n_qubits;
  prog.observable = zz_observable(i, j);
  for (const auto& g : c.gates) prog.rotations.push_back({generator_of(g, id), scale_of(g), g.param, false});
  return prog;
}

namespace {

struct KLocalLayout {
  std::vector<int> dist;
  std::vector<int> compact;  // -1 outside
  int size = 0;
  int k = 0;
  int i = 0, j = 0;
  bool inside(int v) const { return compact[v] >= 0; }
  bool edge_inside(int a, int b) const {
    if ((a == i && b == j) || (a == j && b == i)) return true;
    return inside(a) && inside(b) && std::min(dist[a], dist[b]) <= k - 1;
  }
};

KLocalLayout klocal_layout(const AnsatzCircuit& c, int i, int j, int k) {
  check_edge(c, i, j);
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  KLocalLayout L;
  L.dist = distances_from_edge(c, i, j);
  L.compact.assign(c.n_qubits, -1);
  L.k = k;
  L.i = i;
  L.j = j;
  for (int v = 0; v < c.n_qubits; ++v)
    if (L.dist[v] >= 0 && L.dist[v] <= k) L.compact[v] = L.size++;
  return L;
}

}  // namespace

PauliProgram compile_klocal(const AnsatzCircuit& c, int i, int j, int k) {
  KLocalLayout L = klocal_layout(c, i, j, k);
  if (L.size > 64) throw ResourceError("k-local subgraph exceeds 64 qubits");
  PauliProgram prog;
  prog.n_qubits = L.size;
  prog.observable = zz_observable(L.compact[i], L.compact[j]);
  for (const auto& g : c.gates) {
    if (!g.two_qubit()) {
      if (L.inside(g.q0)) prog.rotations.push_back({generator_of(g, L.compact), scale_of(g), g.param, false});
      continue;
    }
    if (L.edge_inside(g.q0, g.q1)) {
      prog.rotations.push_back({generator_of(g, L.compact), scale_of(g), g.param, false});
      continue;
    }
    if (L.inside(g.q0)) prog.rotations.push_back({restrict_to(g, 0, L.compact[g.q0]), scale_of(g), g.param, true});
    if (L.inside(g.q1)) prog.rotations.push_back({restrict_to(g, 1, L.compact[g.q1]), scale_of(g), g.param, true});
  }
  return prog;
}

KLocalCircuit klocal_circuit(const AnsatzCircuit& c, int i, int j, int k) {
  KLocalLayout L = klocal_layout(c, i, j, k);
  KLocalCircuit out;
  AnsatzCircuit& t = out.circuit;
  t.family = c.family + "-klocal";
  t.rounds = c.rounds;
  t.scheme = c.scheme;
  t.num_params = c.num_params;
  t.param_labels = c.param_labels;
  int next = L.size;
  for (const auto& g : c.gates) {
    if (!g.two_qubit()) {
      if (L.inside(g.q0)) t.gates.push_back({g.kind, L.compact[g.q0], -1, g.param, g.round});
      continue;
    }
    if (L.edge_inside(g.q0, g.q1)) {
      t.gates.push_back({g.kind, L.compact[g.q0], L.compact[g.q1], g.param, g.round});
      continue;
    }
    if (L.inside(g.q0)) t.gates.push_back({g.kind, L.compact[g.q0], next++, g.param, g.round});
    if (L.inside(g.q1)) t.gates.push_back({g.kind, next++, L.compact[g.q1], g.param, g.round});
  }
  t.n_qubits = next;
  out.i = L.compact[i];
  out.j = L.compact[j];
  t.edges = {std::minmax(out.i, out.j)};
  return out;
}

namespace {

// Dense term arrays with an open-addressing index (slot = position + 1).
class TermTable {
 public:
  std::vector<PauliString> key;
  std::vector<double> val;

  explicit TermTable(std::size_t cap = 1024) { resize_index(cap); }

  std::size_t size() const { return key.size(); }

  std::size_t find_or_insert(const PauliString& p) {
    if (2 * (key.size() + 1) > slot_.size()) resize_index(2 * slot_.size());
    std::size_t h = KeyHash{}(p) & mask_;
    while (std::uint32_t sl = slot_[h]) {
      if (key[sl - 1] == p) return sl - 1;
      h = (h + 1) & mask_;
    }
    key.push_back(p);
    val.push_back(0.0);
    slot_[h] = static_cast<std::uint32_t>(key.size());
    return key.size() - 1;
  }

  template <typename Drop>
  void compact(Drop drop) {
    std::size_t w = 0;
    for (std::size_t r = 0; r < key.size(); ++r) {
      if (drop(key[r], val[r])) continue;
      key[w] = key[r];
      val[w] = val[r];
      ++w;
    }
    key.resize(w);
    val.resize(w);
    std::size_t cap = 1024;
    while (cap < 2 * w) cap *= 2;
    resize_index(cap);
  }

 private:
  std::vector<std::uint32_t> slot_;
  std::size_t mask_ = 0;

  void resize_index(std::size_t cap) {
    slot_.assign(cap, 0);
    mask_ = cap - 1;
    for (std::size_t i = 0; i < key.size(); ++i) {
      std::size_t h = KeyHash{}(key[i]) & mask_;
      while (slot_[h]) h = (h + 1) & mask_;
      slot_[h] = static_cast<std::uint32_t>(i + 1);
    }
  }
};

}  // namespace

double backpropagate(const PauliProgram& prog, const Angles& th, const TruncationMode& mode, const PauliOptions& opt,
                     std::size_t* peak_terms) {
  const std::size_t R = prog.rotations.size();
  for (const auto& r : prog.rotations)
    if (r.param < 0 || r.param >= th.size()) throw std::invalid_argument("angle vector too short for circuit");
  // touched[m]: qubits acted on by rotations applied before rotation m.
  std::vector<std::uint64_t> touched(R + 1, 0);
  for (std::size_t m = 0; m < R; ++m)
    touched[m + 1] = touched[m] | prog.rotations[m].generator.x | prog.rotations[m].generator.z;

  TermTable terms;
  terms.val[terms.find_or_insert(prog.observable)] = 1.0;
  std::vector<std::pair<PauliString, double>> hits;
  std::size_t peak = 1, stale = 0;
  const bool by_weight = mode.kind == TruncationKind::Weight;
  const bool by_coef = mode.kind == TruncationKind::Coefficient;
  for (std::size_t m = R; m-- > 0;) {
    const PauliRotation& r = prog.rotations[m];
    const PauliString& G = r.generator;
    const double t = r.scale * th[r.param];
    const double c = std::cos(t), s = std::sin(t);
    const std::uint64_t dead = ~touched[m];
    hits.clear();
    for (std::size_t i = 0, n = terms.size(); i < n; ++i) {
      const PauliString& p = terms.key[i];
      if (!(std::popcount((p.x & G.z) ^ (p.z & G.x)) & 1)) continue;
      const double old = terms.val[i];
      terms.val[i] = c * old;
      if (!r.half) hits.push_back({p, old});
    }
    for (const auto& [p, coef] : hits) {
      PauliString q{p.x ^ G.x, p.z ^ G.z};
      if (q.z & dead) continue;
      if (by_weight && std::popcount(q.x | q.z) > mode.max_weight) continue;
      const int e = std::popcount(p.x & p.z) + std::popcount(G.x & G.z) + 2 * std::popcount(p.z & G.x) -
                    std::popcount(q.x & q.z);
      const double sign = ((e % 4) + 4) % 4 == 1 ? 1.0 : -1.0;
      const std::size_t k = terms.find_or_insert(q);
      terms.val[k] += sign * s * coef;
    }
    stale += hits.size();
    if (by_coef || touched[m] != touched[m + 1] || 4 * stale > terms.size()) {
      terms.compact([&](const PauliString& p, double v) {
        const double a = std::abs(v);
        return a < opt.prune || (p.z & dead) != 0 || (by_coef && a < mode.threshold);
      });
      stale = 0;
    }
    peak = std::max(peak, terms.size());
    if (terms.size() > opt.max_terms)
      throw ResourceError("pauli term count " + std::to_string(terms.size()) + " exceeds cap " +
                          std::to_string(opt.max_terms));
  }
  if (peak_terms) *peak_terms = peak;
  double v = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms.key[i].z == 0) v += terms.val[i];
  return v;
}

double pauli_backpropagate(const AnsatzCircuit& c, const Angles& th, int i, int j, const TruncationMode& mode,
                           const PauliOptions& opt) {
  if (th.size() != c.num_params) throw std::invalid_argument("angle vector length mismatch");
  if (mode.kind == TruncationKind::KLocal) return backpropagate(compile_klocal(c, i, j, mode.k), th, mode, opt);
  return backpropagate(compile_pauli(c, i, j), th, mode, opt);
}

}  // namespace lcz
