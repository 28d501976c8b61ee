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


#include "lcz/optimize.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lcz/oracle.hpp"
#include "lcz/rng.hpp"

namespace lcz {

std::string method_name(Method m) { return m == Method::NelderMead ? "nelder-mead" : "quasi-newton"; }

Method parse_method(const std::string& s) {
  if (s == "nelder-mead" || s == "simplex") return Method::NelderMead;
  if (s == "quasi-newton" || s == "bfgs") return Method::QuasiNewton;
  throw std::invalid_argument("unknown optimizer '" + s + "'");
}

namespace {

struct Stop {};

// Counts evaluations, records the best-so-far trace and raises Stop on
// budget exhaustion or when the target is hit.
class Counter {
 public:
  Counter(const Objective& f, int budget, std::optional<double> stop_at) : f_(f), budget_(budget), stop_at_(stop_at) {}

  double operator()(const Angles& x) {
    if (evals_ >= budget_) {
      exhausted_ = true;
      throw Stop{};
    }
    double v = f_(x);
    ++evals_;
    if (evals_ == 1 || v > best_) {
      best_ = v;
      best_x_ = x;
    }
    trace_.push_back(best_);
    if (stop_at_ && best_ >= *stop_at_) {
      reached_ = true;
      throw Stop{};
    }
    return v;
  }

  OptimizeResult result() const {
    OptimizeResult r;
    r.angles = best_x_;
    r.value = best_;
    r.iterations = evals_;
    r.budget_exhausted = exhausted_;
    r.reached_target = reached_;
    r.trace = trace_;
    return r;
  }

 private:
  const Objective& f_;
  int budget_;
  std::optional<double> stop_at_;
  int evals_ = 0;
  double best_ = 0.0;
  Angles best_x_;
  bool exhausted_ = false, reached_ = false;
  std::vector<double> trace_;
};

}  // namespace

OptimizeResult nelder_mead_max(const Objective& f, const Angles& x0, int budget, double tol, double step,
                               std::optional<double> stop_at) {
  Counter eval(f, budget, stop_at);
  const int n = static_cast<int>(x0.size());
  try {
    if (n == 0) {
      eval(x0);
      return eval.result();
    }
    const double a = 1.0, b = 1.0 + 2.0 / n, g = 0.75 - 0.5 / n, d = 1.0 - 1.0 / n;
    std::vector<Angles> xs(n + 1, x0);
    std::vector<double> fs(n + 1);
    fs[0] = -eval(xs[0]);
    for (int i = 0; i < n; ++i) {
      xs[i + 1][i] += step;
      fs[i + 1] = -eval(xs[i + 1]);
    }
    std::vector<int> idx(n + 1);
    while (true) {
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](int p, int q) { return fs[p] < fs[q]; });
      std::vector<Angles> sx(n + 1);
      std::vector<double> sf(n + 1);
      for (int k = 0; k <= n; ++k) {
        sx[k] = xs[idx[k]];
        sf[k] = fs[idx[k]];
      }
      xs.swap(sx);
      fs.swap(sf);
      double xspread = 0.0;
      for (int k = 1; k <= n; ++k) xspread = std::max(xspread, (xs[k] - xs[0]).cwiseAbs().maxCoeff());
      if (fs[n] - fs[0] <= tol && xspread <= 1e-7) break;
      if (xspread < 1e-13) break;
      Angles c = Angles::Zero(n);
      for (int k = 0; k < n; ++k) c += xs[k];
      c /= n;
      Angles xr = c + a * (c - xs[n]);
      double fr = -eval(xr);
      if (fr < fs[0]) {
        Angles xe = c + b * (xr - c);
        double fe = -eval(xe);
        if (fe < fr) {
          xs[n] = xe;
          fs[n] = fe;
        } else {
          xs[n] = xr;
          fs[n] = fr;
        }
        continue;
      }
      if (fr < fs[n - 1]) {
        xs[n] = xr;
        fs[n] = fr;
        continue;
      }
      bool shrink = false;
      if (fr < fs[n]) {
        Angles xc = c + g * (xr - c);
        double fc = -eval(xc);
        if (fc <= fr) {
          xs[n] = xc;
          fs[n] = fc;
        } else {
          shrink = true;
        }
      } else {
        Angles xc = c + g * (xs[n] - c);
        double fc = -eval(xc);
        if (fc < fs[n]) {
          xs[n] = xc;
          fs[n] = fc;
        } else {
          shrink = true;
        }
      }
      if (shrink)
        for (int k = 1; k <= n; ++k) {
          xs[k] = xs[0] + d * (xs[k] - xs[0]);
          fs[k] = -eval(xs[k]);
        }
    }
  } catch (const Stop&) {
  }
  return eval.result();
}

OptimizeResult quasi_newton_max(const Objective& f, const Angles& x0, int budget, double tol,
                                std::optional<double> stop_at) {
  Counter eval(f, budget, stop_at);
  const int n = static_cast<int>(x0.size());
  try {
    Angles x = x0;
    double fx = -eval(x);
    if (n == 0) return eval.result();
    const double h = 1e-6;
    auto grad = [&](const Angles& p) {
      Angles gr(n);
      for (int i = 0; i < n; ++i) {
        Angles a = p, b = p;
        a[i] += h;
        b[i] -= h;
        gr[i] = (-eval(a) + eval(b)) / (2 * h);
      }
      return gr;
    };
    Eigen::MatrixXd H = Eigen::MatrixXd::Identity(n, n);
    Angles g = grad(x);
    while (true) {
      if (g.norm() < 1e-9) break;
      Angles dir = -H * g;
      if (dir.dot(g) >= 0) {
        H.setIdentity();
        dir = -g;
      }
      double t = 1.0, ft = 0.0;
      Angles xt;
      bool ok = false;
      for (int ls = 0; ls < 40; ++ls) {
        xt = x + t * dir;
        ft = -eval(xt);
        if (ft <= fx + 1e-4 * t * g.dot(dir)) {
          ok = true;
          break;
        }
        t *= 0.5;
      }
      if (!ok) break;
      Angles gt = grad(xt);
      Angles s = xt - x, y = gt - g;
      double sy = s.dot(y);
      double df = fx - ft;
      x = xt;
      fx = ft;
      g = gt;
      if (sy > 1e-14) {
        Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
        double rho = 1.0 / sy;
        H = (I - rho * s * y.transpose()) * H * (I - rho * y * s.transpose()) + rho * s * s.transpose();
      }
      if (df <= tol && s.cwiseAbs().maxCoeff() <= 1e-7) break;
    }
  } catch (const Stop&) {
  }
  return eval.result();
}

OptimizeResult maximize(const Objective& f, const Angles& x0, const OptimizerConfig& cfg, std::optional<double> target) {
  int budget = cfg.max_iterations > 0 ? cfg.max_iterations : 500 * std::max<int>(1, static_cast<int>(x0.size()));
  std::optional<double> stop;
  if (target) stop = *target - cfg.target_tol;
  OptimizeResult r = cfg.method == Method::NelderMead ? nelder_mead_max(f, x0, budget, cfg.tolerance, cfg.initial_step, stop)
                                                      : quasi_newton_max(f, x0, budget, cfg.tolerance, stop);
  return r;
}

Objective cut_objective(const AnsatzCircuit& c, Backend backend, const TruncationMode& mode, const SimOptions& opt) {
  if (backend == Backend::Statevector) {
    auto ev = std::make_shared<CutEvaluator>(c, opt);
    return [ev](const Angles& th) { return (*ev)(th); };
  }
  return [c, mode, opt](const Angles& th) { return expected_cut(c, th, Backend::Pauli, mode, std::nullopt, opt).expected_cut; };
}

Objective cvar_cut_objective(const AnsatzCircuit& c, double confidence, const SimOptions& opt) {
  auto ev = std::make_shared<CutEvaluator>(c, opt);
  auto table = std::make_shared<Eigen::VectorXd>(cut_table(c.graph()));
  return [ev, table, confidence](const Angles& th) { return cvar_distribution(ev->probabilities(th), *table, confidence); };
}

OptimizeResult maximize_cut(const AnsatzCircuit& c, Backend backend, const OptimizerConfig& cfg,
                            std::optional<double> c_max, std::optional<Angles> x0) {
  Angles start;
  if (x0) {
    start = *x0;
  } else {
    Rng rng = substream(cfg.seed, "init-angles");
    start.resize(c.num_params);
    for (int k = 0; k < c.num_params; ++k) start[k] = rng.uniform(cfg.lower, cfg.upper);
  }
  if (start.size() != c.num_params) throw std::invalid_argument("initial angle vector length mismatch");
  return maximize(cut_objective(c, backend), start, cfg, c_max);
}

double cvar_objective(std::vector<double> values, double confidence) {
  if (values.empty()) throw std::invalid_argument("cvar: empty sample set");
  if (!(confidence > 0 && confidence <= 1)) throw std::invalid_argument("cvar: confidence must be in (0, 1]");
  std::sort(values.begin(), values.end(), std::greater<>());
  std::size_t k = static_cast<std::size_t>(std::ceil(confidence * static_cast<double>(values.size()) - 1e-9));
  k = std::clamp<std::size_t>(k, 1, values.size());
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i) s += values[i];
  return s / static_cast<double>(k);
}

double cvar_distribution(const Eigen::VectorXd& probs, const Eigen::VectorXd& cuts, double confidence) {
  if (!(confidence > 0 && confidence <= 1)) throw std::invalid_argument("cvar: confidence must be in (0, 1]");
  std::vector<Eigen::Index> idx(probs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return cuts[a] > cuts[b]; });
  double mass = 0.0, acc = 0.0;
  for (auto x : idx) {
    double take = std::min(probs[x], confidence - mass);
    if (take <= 0) break;
    acc += take * cuts[x];
    mass += take;
  }
  return acc / confidence;
}

TTSRecord multistart_tts(const AnsatzCircuit& c, double c_max, const TTSConfig& cfg, std::uint64_t seed,
                         const std::string& graph_id) {
  auto t0 = std::chrono::steady_clock::now();
  TTSRecord rec;
  rec.graph_id = graph_id;
  rec.scheme = c.family + "/" + scheme_name(c.scheme);
  Objective f = cut_objective(c, Backend::Statevector);
  OptimizerConfig oc = cfg.optimizer;
  oc.target_tol = cfg.success_tol;
  for (int r = 0; r < cfg.max_restarts; ++r) {
    Rng rng = substream(seed, "init-angles", static_cast<std::uint64_t>(r));
    Angles x0(c.num_params);
    for (int k = 0; k < c.num_params; ++k) x0[k] = rng.uniform(oc.lower, oc.upper);
    OptimizeResult res = maximize(f, x0, oc, c_max);
    rec.restarts = r + 1;
    rec.total_iterations += res.iterations;
    rec.traces.push_back({res.iterations, res.value});
    if (res.value >= c_max - cfg.success_tol) {
      rec.success = true;
      break;
    }
  }
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

ScalingFit scaling_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::invalid_argument("scaling fit needs >= 3 points");
  const Eigen::Index m = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd A(m, 2);
  Eigen::VectorXd y(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    if (!(points[k].second > 0)) throw std::invalid_argument("scaling fit needs positive values");
    A(k, 0) = 1.0;
    A(k, 1) = points[k].first;
    y[k] = std::log(points[k].second);
  }
  Eigen::Vector2d beta = A.colPivHouseholderQr().solve(y);
  ScalingFit fit;
  fit.a = std::exp(beta[0]);
  fit.b = std::exp(beta[1]);
  fit.residual = std::sqrt((A * beta - y).squaredNorm() / static_cast<double>(m));
  return fit;
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) throw std::invalid_argument("quantile of empty set");
  std::sort(v.begin(), v.end());
  double pos = q * static_cast<double>(v.size() - 1);
  std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  std::size_t hi = std::min(lo + 1, v.size() - 1);
  double w = pos - static_cast<double>(lo);
  return v[lo] * (1 - w) + v[hi] * w;
}

double median(std::vector<double> v) { return quantile(std::move(v), 0.5); }

}  // namespace lcz
