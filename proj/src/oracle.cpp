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


#include "lcz/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace lcz {

int cut_value(const UndirectedGraph& g, const std::vector<int>& bits) {
  if (static_cast<int>(bits.size()) != g.num_nodes())
    throw std::invalid_argument("bit vector length " + std::to_string(bits.size()) + " != N=" +
                                std::to_string(g.num_nodes()));
  int c = 0;
  for (auto [i, j] : g.edges()) c += bits[i] != bits[j];
  return c;
}

CutAssignment brute_force_maxcut(const UndirectedGraph& g, int max_nodes) {
  const int n = g.num_nodes();
  if (n > max_nodes) throw ResourceError("brute force: N=" + std::to_string(n) + " exceeds cap " + std::to_string(max_nodes));
  CutAssignment best;
  best.bits.assign(n, 0);
  best.is_optimal = true;
  if (n <= 1) return best;
  // Gray-code walk over bits 1..n-1; lexkey puts bit 0 in the most significant position.
  std::vector<int> bits(n, 0);
  int cut = 0;
  std::uint64_t lex = 0, best_lex = 0;
  int best_cut = 0;
  const std::uint64_t total = 1ULL << (n - 1);
  for (std::uint64_t step = 1; step < total; ++step) {
    int v = 1 + __builtin_ctzll(step);
    int delta = 0;
    for (int w : g.neighbors(v)) delta += bits[w] == bits[v] ? 1 : -1;
    bits[v] ^= 1;
    cut += delta;
    lex ^= 1ULL << (n - 1 - v);
    if (cut > best_cut || (cut == best_cut && lex < best_lex)) {
      best_cut = cut;
      best_lex = lex;
    }
  }
  for (int v = 0; v < n; ++v) best.bits[v] = static_cast<int>((best_lex >> (n - 1 - v)) & 1ULL);
  best.cut = best_cut;
  return best;
}

std::vector<int> greedy_flip(const UndirectedGraph& g, std::vector<int> bits, Rng& rng) {
  const int n = g.num_nodes();
  if (static_cast<int>(bits.size()) != n) throw std::invalid_argument("bit vector length mismatch");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    rng.shuffle(order);
    for (int v : order) {
      int gain = 0;
      for (int w : g.neighbors(v)) gain += bits[w] == bits[v] ? 1 : -1;
      if (gain > 0) {
        bits[v] ^= 1;
        changed = true;
      }
    }
  }
  return bits;
}

double approximation_ratio(double cut, double c_max) {
  if (!(c_max > 0)) throw std::invalid_argument("approximation ratio needs c_max > 0");
  return cut / c_max;
}

std::vector<int> bits_from_string(const std::string& s) {
  std::vector<int> b;
  b.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring must contain only 0/1");
    b.push_back(c - '0');
  }
  return b;
}

std::string bits_to_string(const std::vector<int>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::uint64_t bits_to_index(const std::vector<int>& bits) {
  std::uint64_t x = 0;
  for (std::size_t k = 0; k < bits.size(); ++k)
    if (bits[k]) x |= 1ULL << k;
  return x;
}

std::vector<int> index_to_bits(std::uint64_t x, int n) {
  std::vector<int> b(n);
  for (int k = 0; k < n; ++k) b[k] = static_cast<int>((x >> k) & 1ULL);
  return b;
}

}  // namespace lcz
