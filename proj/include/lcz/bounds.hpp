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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lcz/orientation.hpp"
#include "lcz/types.hpp"

namespace lcz {

struct GuaranteeBound {
  std::string method;
  double alpha = 0.0;
  std::vector<double> angles;
  std::map<std::string, double> witness;
};

/// Grid of `grid` points on [lo, hi] followed by golden-section refinement.
std::pair<double, double> maximize_1d(const std::function<double(double)>& f, double lo = 0.0, double hi = kPi / 2,
                                      int grid = 721, double tol = 1e-10);
/// Grid on [lo, hi]^2 then simplex refinement.
std::pair<Eigen::Vector2d, double> maximize_2d(const std::function<double(double, double)>& f, double lo = 0.0,
                                               double hi = kPi / 2, int grid = 721);

/// -cos^k(t) sin(t)
double zero_local_edge(int k_ij, double t);
/// Two-round 0-local <ZZ> on a D-regular DAG.
double zero_local_edge_p2(int deg_plus_i, int deg_minus_j, int D, double t1, double t2);

/// max over t of (1 + (1-k) sin t + k cos t sin t) / 2
GuaranteeBound zero_local_bound(double k);
/// k = 2/3 + 4 ratio / 3
GuaranteeBound theorem1_bound(double sources_over_n);
/// max over t of (1 + cos^2 t sin t) / 2
GuaranteeBound qaoa1_style_bound();
GuaranteeBound d_regular_zy1_bound(int D);

/// 1/2 + 1/2 sum_{ab} r_ab term_ab(t1, t2); r ordered (00, 01, 10, 11).
double zy2_objective(const Eigen::Vector4d& r, double t1, double t2, int D = 3);
bool zy2_feasible(const Eigen::Vector4d& r, int D = 3, double eps = 1e-12);
GuaranteeBound zy2_bound_3regular();

double upper_triangle_cut(double t);
double lower_triangle_cut(double t);
double down_square_cut(double t);
double tree0_cut(double t);
double tree1_cut(double t);
double one_local_F(double r_up, double r_low, double r_sq, double t);
/// F / (3/2 - r_up - r_low - r_sq)
double one_local_ratio(double r_up, double r_low, double r_sq, double t);
GuaranteeBound one_local_minmax_3regular();

/// -(-sin t)^{len-1} cos^{in_degree} t, or 0 for several cycle sources/sinks.
double cycle_contribution(int length, int in_degree, double t, bool single_source_sink = true);
double theorem2_F(int k1, int k2, double t);
double theorem2_G(int k1, int k2);
GuaranteeBound theorem2_bound(int k_max = 15);

GuaranteeBound angle_relaxed_bound_3regular();
double two_regular_expected_cut(int L, double t1, double t2);

/// Bounds on the averaged heads in-degree of a D-regular DAG.
double heads_in_degree_upper(int D, double extremes_over_n);
double heads_in_degree_lower(int D, double extremes_over_n);
/// 2/3 + 4 (N+ + N-) / (3N)
Rational heads_in_degree_3regular(int N, int n_plus, int n_minus);

}  // namespace lcz
