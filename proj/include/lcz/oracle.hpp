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
#include <vector>

#include "lcz/graph.hpp"
#include "lcz/rng.hpp"

namespace lcz {

struct CutAssignment {
  std::vector<int> bits;
  int cut = 0;
  bool is_optimal = false;
};

int cut_value(const UndirectedGraph& g, const std::vector<int>& bits);

/// Exhaustive search with bit 0 fixed to 0; ties go to the lexicographically
/// smallest bit vector.
CutAssignment brute_force_maxcut(const UndirectedGraph& g, int max_nodes = 28);

/// Shuffled single-bit-flip sweeps until a sweep makes no strict improvement.
std::vector<int> greedy_flip(const UndirectedGraph& g, std::vector<int> bits, Rng& rng);

double approximation_ratio(double cut, double c_max);

/// bitstring <-> vector helpers; character k is bits[k].
std::vector<int> bits_from_string(const std::string& s);
std::string bits_to_string(const std::vector<int>& bits);
/// Basis-state index with qubit 0 as least significant bit.
std::uint64_t bits_to_index(const std::vector<int>& bits);
std::vector<int> index_to_bits(std::uint64_t x, int n);

}  // namespace lcz
