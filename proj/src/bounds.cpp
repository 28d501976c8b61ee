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


#include "lcz/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lcz/optimize.hpp"

namespace lcz {

std::pair<double, double> maximize_1d(const std::function<double(double)>& f, double lo, double hi, int grid,
                                      double tol) {
  if (grid < 3) grid = 3;
  const double h = (hi - lo) / (grid - 1);
  int best = 0;
  double fb = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid; ++k) {
    double v = f(lo + k * h);
    if (v > fb) {
      fb = v;
      best = k;
    }
  }
  double a = lo + std::max(0, best - 1) * h, b = lo + std::min(grid - 1, best + 1) * h;
  const double r = (std::sqrt(5.0) - 1) / 2;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = f(x1);
    }
  }
  double xm = 0.5 * (a + b), fm = f(xm);
  double xg = lo + best * h;
  if (fb >= fm) return {xg, fb};
  return {xm, fm};
}

std::pair<Eigen::Vector2d, double> maximize_2d(const std::function<double(double, double)>& f, double lo, double hi,
                                               int grid) {
  const double h = (hi - lo) / (grid - 1);
  Eigen::Vector2d best(lo, lo);
  double fb = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b) {
      double v = f(lo + a * h, lo + b * h);
      if (v > fb) {
        fb = v;
        best = {lo + a * h, lo + b * h};
      }
    }
  auto clamp = [lo, hi](const Angles& x) {
    return Eigen::Vector2d(std::clamp(x[0], lo, hi), std::clamp(x[1], lo, hi));
  };
  Objective obj = [&](const Angles& x) {
    Eigen::Vector2d p = clamp(x);
    return f(p[0], p[1]);
  };
  OptimizeResult r = nelder_mead_max(obj, Angles(best), 4000, 1e-15, h);
  Eigen::Vector2d p = clamp(r.angles);
  double v = f(p[0], p[1]);
  if (v >= fb) return {p, v};
  return {best, fb};
}

double zero_local_edge(int k_ij, double t) { return -std::pow(std::cos(t), k_ij) * std::sin(t); }

double zero_local_edge_p2(int deg_plus_i, int deg_minus_j, int D, double t1, double t2) {
  if (deg_minus_j < 1 || deg_minus_j > D || deg_plus_i < 1 || deg_plus_i > D)
    throw std::invalid_argument("degree out of range");
  const int deg_plus_j = D - deg_minus_j;
  const int kj = deg_plus_i + deg_plus_j, kjp = deg_minus_j - 1, ki = deg_plus_i - 1, kip = D;
  return -std::sin(t1) * std::pow(std::cos(t1), kjp) * std::pow(std::cos(t2), kj) -
         std::sin(t2) * std::pow(std::cos(t2), ki) * std::pow(std::cos(t1), kip);
}

GuaranteeBound zero_local_bound(double k) {
  auto f = [k](double t) { return 0.5 * (1 + (1 - k) * std::sin(t) + k * std::cos(t) * std::sin(t)); };
  auto [t, v] = maximize_1d(f);
  GuaranteeBound b;
  b.method = "zero-local";
  b.alpha = f(t);
  b.angles = {t};
  b.witness["k"] = k;
  return b;
}

GuaranteeBound theorem1_bound(double ratio) {
  if (ratio < 0 || ratio > 1) throw std::invalid_argument("ratio must be in [0, 1]");
  GuaranteeBound b = zero_local_bound(2.0 / 3 + 4.0 * ratio / 3);
  b.method = "zy1-0local";
  b.witness["sources_over_n"] = ratio;
  return b;
}

GuaranteeBound qaoa1_style_bound() {
  auto f = [](double t) { return 0.5 * (1 - zero_local_edge(2, t)); };
  auto [t, v] = maximize_1d(f);
  GuaranteeBound b;
  b.method = "qaoa1-style";
  b.alpha = f(t);
  b.angles = {t};
  b.witness["k"] = 2;
  return b;
}

GuaranteeBound d_regular_zy1_bound(int D) {
  if (D < 2) throw std::invalid_argument("D must be >= 2");
  const double w1 = 1 - 2.0 / D, w2 = 2.0 / D;
  auto f = [=](double t) {
    double s = std::sin(t), c = std::cos(t);
    double v = w2 * std::pow(c, D - 2) * s;
    if (w1 != 0) v += w1 * std::pow(c, D - 3) * s;
    return 0.5 * (1 + v);
  };
  auto [t, v] = maximize_1d(f);
  GuaranteeBound b;
  b.method = "d-regular-zy1";
  b.alpha = f(t);
  b.angles = {t};
  b.witness["D"] = D;
  return b;
}

namespace {

Eigen::Vector4d zy2_terms(double t1, double t2, int D) {
  const double s1 = std::sin(t1), c1 = std::cos(t1), s2 = std::sin(t2), c2 = std::cos(t2);
  auto P = [](double x, int e) { return std::pow(x, e); };
  Eigen::Vector4d v;
  v[0] = s1 * P(c2, D) * P(c1, D - 3) + s2 * P(c1, D) * P(c2, D - 3);
  v[1] = s1 * P(c2, D - 1) * P(c1, D - 2) + s2 * P(c1, D) * P(c2, D - 3);
  v[2] = s1 * P(c2, D + 1) * P(c1, D - 3) + s2 * P(c1, D) * P(c2, D - 2);
  v[3] = s1 * P(c2, D) * P(c1, D - 2) + s2 * P(c1, D) * P(c2, D - 2);
  return v;
}

// Vertices of {x : Aeq x = beq, Ain x <= bin} by brute-force active sets.
std::vector<Eigen::VectorXd> polytope_vertices(const Eigen::MatrixXd& Aeq, const Eigen::VectorXd& beq,
                                               const Eigen::MatrixXd& Ain, const Eigen::VectorXd& bin) {
  const int d = static_cast<int>(Ain.cols());
  const int me = static_cast<int>(Aeq.rows()), mi = static_cast<int>(Ain.rows());
  const int need = d - me;
  std::vector<Eigen::VectorXd> out;
  std::vector<int> pick(need);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == need) {
      Eigen::MatrixXd A(d, d);
      Eigen::VectorXd b(d);
      A.topRows(me) = Aeq;
      b.head(me) = beq;
      for (int k = 0; k < need; ++k) {
        A.row(me + k) = Ain.row(pick[k]);
        b[me + k] = bin[pick[k]];
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
      if (lu.rank() < d) return;
      Eigen::VectorXd x = lu.solve(b);
      if (((Ain * x - bin).array() <= 1e-12).all()) {
        for (const auto& y : out)
          if ((y - x).norm() < 1e-12) return;
        out.push_back(x);
      }
      return;
    }
    for (int r = start; r < mi; ++r) {
      pick[depth] = r;
      rec(r + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

double zy2_objective(const Eigen::Vector4d& r, double t1, double t2, int D) {
  return 0.5 + 0.5 * r.dot(zy2_terms(t1, t2, D));
}

bool zy2_feasible(const Eigen::Vector4d& r, int D, double eps) {
  const double kD = D - 3 + 2.0 / D;
  if ((r.array() < -eps).any()) return false;
  if (std::abs(r.sum() - 1) > eps) return false;
  if ((r[0] + r[2]) * (D - 3) + (r[1] + r[3]) * (D - 2) > kD + eps) return false;
  if ((r[0] + r[1]) * (D - 3) + (r[2] + r[3]) * (D - 2) > kD + eps) return false;
  return true;
}

GuaranteeBound zy2_bound_3regular() {
  const int D = 3;
  const double kD = D - 3 + 2.0 / D;
  std::vector<Eigen::Vector4d> cand;
  {
    Eigen::MatrixXd Aeq = Eigen::RowVector4d::Ones();
    Eigen::VectorXd beq = Eigen::VectorXd::Ones(1);
    Eigen::MatrixXd Ain(6, 4);
    Eigen::VectorXd bin(6);
    Ain << -Eigen::Matrix4d::Identity(), Eigen::RowVector4d(D - 3, D - 2, D - 3, D - 2),
        Eigen::RowVector4d(D - 3, D - 3, D - 2, D - 2);
    bin << 0, 0, 0, 0, kD, kD;
    for (const auto& v : polytope_vertices(Aeq, beq, Ain, bin)) cand.push_back(v);
  }
  const int n = 30;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      for (int c = 0; a + b + c <= n; ++c) {
        Eigen::Vector4d r(a, b, c, n - a - b - c);
        r /= n;
        if (zy2_feasible(r, D, 1e-9)) cand.push_back(r);
      }
  // Coarse inner maxima on a shared grid, then refine the best few.
  const int G = 181;
  Eigen::MatrixXd basis(4, G * G);
  for (int p = 0; p < G; ++p)
    for (int q = 0; q < G; ++q) basis.col(p * G + q) = zy2_terms(p * (kPi / 2) / (G - 1), q * (kPi / 2) / (G - 1), D);
  std::vector<std::pair<double, int>> coarse;
  for (int k = 0; k < static_cast<int>(cand.size()); ++k)
    coarse.push_back({0.5 + 0.5 * (cand[k].transpose() * basis).maxCoeff(), k});
  std::sort(coarse.begin(), coarse.end());
  GuaranteeBound best;
  best.alpha = std::numeric_limits<double>::infinity();
  for (int k = 0; k < std::min<int>(4, static_cast<int>(coarse.size())); ++k) {
    const Eigen::Vector4d r = cand[coarse[k].second];
    auto [t, v] = maximize_2d([&](double t1, double t2) { return zy2_objective(r, t1, t2, D); });
    if (v < best.alpha) {
      best.alpha = zy2_objective(r, t[0], t[1], D);
      best.angles = {t[0], t[1]};
      best.witness = {{"r00", r[0]}, {"r01", r[1]}, {"r10", r[2]}, {"r11", r[3]}};
    }
  }
  best.method = "zy2-0local";
  return best;
}

double upper_triangle_cut(double t) {
  double s = std::sin(t), c = std::cos(t);
  return 0.5 * (3 + s + 2 * c * s - 2 * c * s * s);
}

double lower_triangle_cut(double t) {
  double s = std::sin(t), c = std::cos(t);
  return 0.5 * (3 + 3 * c * s - 2 * c * c * s * s);
}

double down_square_cut(double t) {
  double s = std::sin(t), c = std::cos(t);
  return 0.5 * (5 + s + 4 * c * s - 2 * c * s * s - 2 * c * c * s * s);
}

double tree0_cut(double t) { return 0.5 * (1 + std::sin(t)); }
double tree1_cut(double t) { return 0.5 * (1 + std::sin(t) * std::cos(t)); }

double one_local_F(double ru, double rl, double rs, double t) {
  return ru * upper_triangle_cut(t) + rl * lower_triangle_cut(t) + rs * down_square_cut(t) +
         (0.5 - ru - rs) * tree0_cut(t) + (1 - 2 * ru - 3 * rl - 4 * rs) * tree1_cut(t);
}

double one_local_ratio(double ru, double rl, double rs, double t) {
  return one_local_F(ru, rl, rs, t) / (1.5 - ru - rl - rs);
}

GuaranteeBound one_local_minmax_3regular() {
  // Ratios stay where the tree counts are nonnegative.
  auto feasible = [](double ru, double rl, double rs) {
    return ru >= -1e-12 && rl >= -1e-12 && rs >= -1e-12 && 0.5 - ru - rs >= -1e-12 &&
           1 - 2 * ru - 3 * rl - 4 * rs >= -1e-12;
  };
  std::vector<Eigen::Vector3d> cand;
  {
    Eigen::MatrixXd Aeq(0, 3);
    Eigen::VectorXd beq(0);
    Eigen::MatrixXd Ain(5, 3);
    Eigen::VectorXd bin(5);
    Ain << -Eigen::Matrix3d::Identity(), Eigen::RowVector3d(1, 0, 1), Eigen::RowVector3d(2, 3, 4);
    bin << 0, 0, 0, 0.5, 1;
    for (const auto& v : polytope_vertices(Aeq, beq, Ain, bin)) cand.push_back(v);
  }
  const int n = 24;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int c = 0; c <= n; ++c) {
        Eigen::Vector3d r(0.5 * a / n, b / (3.0 * n), 0.25 * c / n);
        if (feasible(r[0], r[1], r[2])) cand.push_back(r);
      }
  const int G = 721;
  Eigen::MatrixXd L(5, G);
  for (int k = 0; k < G; ++k) {
    double t = k * (kPi / 2) / (G - 1);
    L.col(k) << upper_triangle_cut(t), lower_triangle_cut(t), down_square_cut(t), tree0_cut(t), tree1_cut(t);
  }
  std::vector<std::pair<double, int>> coarse;
  for (int k = 0; k < static_cast<int>(cand.size()); ++k) {
    const auto& r = cand[k];
    Eigen::Matrix<double, 5, 1> w;
    w << r[0], r[1], r[2], 0.5 - r[0] - r[2], 1 - 2 * r[0] - 3 * r[1] - 4 * r[2];
    coarse.push_back({(w.transpose() * L).maxCoeff() / (1.5 - r.sum()), k});
  }
  std::sort(coarse.begin(), coarse.end());
  GuaranteeBound best;
  best.alpha = std::numeric_limits<double>::infinity();
  for (int k = 0; k < std::min<int>(4, static_cast<int>(coarse.size())); ++k) {
    const Eigen::Vector3d r = cand[coarse[k].second];
    auto f = [&](double t) { return one_local_ratio(r[0], r[1], r[2], t); };
    auto [t, v] = maximize_1d(f);
    if (v < best.alpha) {
      best.alpha = f(t);
      best.angles = {t};
      best.witness = {{"r_upper_triangle", r[0]}, {"r_lower_triangle", r[1]}, {"r_down_square", r[2]}};
    }
  }
  best.method = "zy1-1local";
  return best;
}

double cycle_contribution(int length, int in_degree, double t, bool single_source_sink) {
  if (length < 3) throw std::invalid_argument("cycle length must be >= 3");
  if (!single_source_sink) return 0.0;
  return -std::pow(-std::sin(t), length - 1) * std::pow(std::cos(t), in_degree);
}

double theorem2_F(int k1, int k2, double t) {
  const double s = std::sin(t), c = std::cos(t);
  const double g = 0.5 * (1 + s / 3 + 2 * s * c / 3);
  return g * (std::ldexp(1.0, k1 + 2) + std::ldexp(1.0, k2 + 2) - 3) -
         std::pow(s, 2 * k1 + 2) * std::pow(c, 2 * k1 + 1) * std::ldexp(1.0, k1) -
         std::pow(s, 2 * k2 + 2) * c * c * std::ldexp(1.0, k2) +
         std::ldexp(1.0, k1 + k2) * std::pow(s, 2 * (k1 + k2) + 3) * std::pow(c, 2 * k1 + 2);
}

double theorem2_G(int k1, int k2) { return std::ldexp(1.0, k1 + 2) + std::ldexp(1.0, k2 + 2) - 4; }

GuaranteeBound theorem2_bound(int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  const GuaranteeBound base = theorem1_bound(0.0);
  GuaranteeBound best;
  best.method = "theorem2";
  best.alpha = base.alpha;
  best.angles = base.angles;
  best.witness = {{"k1", -1}, {"k2", -1}};
  for (int k1 = 0; k1 <= k_max; ++k1)
    for (int k2 = 0; k2 <= k_max; ++k2) {
      auto f = [=](double t) { return theorem2_F(k1, k2, t) / theorem2_G(k1, k2); };
      auto [t, v] = maximize_1d(f);
      if (v < best.alpha) {
        best.alpha = f(t);
        best.angles = {t};
        best.witness = {{"k1", k1}, {"k2", k2}, {"cycle1_length", 2 * k1 + 3}, {"cycle2_length", 2 * k2 + 3}};
      }
    }
  best.witness["zero_local_cap"] = base.alpha;
  return best;
}

GuaranteeBound angle_relaxed_bound_3regular() {
  auto f = [](double t, double tp) { return 0.5 * (1 + std::sin(t) / 3 + 2.0 / 3 * std::sin(tp) * std::cos(tp)); };
  auto [t, v] = maximize_2d(f);
  GuaranteeBound b;
  b.method = "angle-relaxed";
  b.alpha = f(t[0], t[1]);
  b.angles = {t[0], t[1]};
  return b;
}

double two_regular_expected_cut(int L, double t1, double t2) {
  if (L < 3) throw std::invalid_argument("cycle length must be >= 3");
  const double s1 = std::sin(t1), s2 = std::sin(t2), c2 = std::cos(t2);
  return 0.5 * (L + (L - 2) * s1 + 2 * s2 * c2 + 2 * std::pow(-s1, L - 2) * s2 * c2);
}

double heads_in_degree_upper(int D, double x) { return D - 3 + 2.0 / D + (2 - 2.0 / D) * x; }

double heads_in_degree_lower(int D, double x) {
  if (D % 2 == 0) return D / 2.0 - 1 + (D / 2.0) * x;
  return D / 2.0 - 1 + 1.0 / (2 * D) + (D / 2.0 - 1.0 / (2 * D)) * x;
}

Rational heads_in_degree_3regular(int N, int n_plus, int n_minus) {
  return make_rational(2LL * N + 4LL * (n_plus + n_minus), 3LL * N);
}

}  // namespace lcz
