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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lcz/ansatz.hpp"
#include "lcz/simulate.hpp"
#include "lcz/types.hpp"

namespace lcz {

enum class Method { NelderMead, QuasiNewton };

std::string method_name(Method m);
Method parse_method(const std::string& s);

struct OptimizerConfig {
  Method method = Method::NelderMead;
  int max_iterations = 0;  // objective evaluations; 0 means 500 per parameter
  double lower = -kPi;     // initial-angle box
  double upper = kPi;
  double tolerance = 1e-10;
  double initial_step = 0.6;
  double target_tol = 1e-9;  // early stop once value >= target - target_tol
  std::uint64_t seed = 0;
};

struct OptimizeResult {
  Angles angles;
  double value = 0.0;
  int iterations = 0;
  bool budget_exhausted = false;
  bool reached_target = false;
  std::vector<double> trace;  // best value after each evaluation
};

using Objective = std::function<double(const Angles&)>;

/// Local maximization from x0; one iteration is one objective evaluation.
OptimizeResult maximize(const Objective& f, const Angles& x0, const OptimizerConfig& cfg,
                        std::optional<double> target = std::nullopt);

OptimizeResult nelder_mead_max(const Objective& f, const Angles& x0, int budget, double tol, double step,
                               std::optional<double> stop_at = std::nullopt);
OptimizeResult quasi_newton_max(const Objective& f, const Angles& x0, int budget, double tol,
                                std::optional<double> stop_at = std::nullopt);

/// Expected-cut objective for a circuit on the chosen backend.
Objective cut_objective(const AnsatzCircuit& c, Backend backend, const TruncationMode& mode = {},
                        const SimOptions& opt = {});
/// Exact CVaR of the output distribution (statevector).
Objective cvar_cut_objective(const AnsatzCircuit& c, double confidence, const SimOptions& opt = {});

OptimizeResult maximize_cut(const AnsatzCircuit& c, Backend backend, const OptimizerConfig& cfg,
                            std::optional<double> c_max = std::nullopt, std::optional<Angles> x0 = std::nullopt);

/// Mean of the top ceil(confidence * n) values.
double cvar_objective(std::vector<double> values, double confidence);
/// CVaR of a distribution over basis states with the given cut values.
double cvar_distribution(const Eigen::VectorXd& probs, const Eigen::VectorXd& cuts, double confidence);

struct RestartTrace {
  int iterations = 0;
  double best = 0.0;
};

struct TTSRecord {
  std::string graph_id;
  std::string scheme;
  int restarts = 0;
  long long total_iterations = 0;
  bool success = false;
  std::vector<RestartTrace> traces;
  double wall_seconds = 0.0;  // not part of deterministic payloads
};

struct TTSConfig {
  OptimizerConfig optimizer;
  int max_restarts = 200;
  double success_tol = 1e-6;
};

TTSRecord multistart_tts(const AnsatzCircuit& c, double c_max, const TTSConfig& cfg, std::uint64_t seed,
                         const std::string& graph_id = "");

struct ScalingFit {
  double a = 0.0, b = 0.0, residual = 0.0;
};

/// Least squares of log y = log a + N log b.
ScalingFit scaling_fit(const std::vector<std::pair<double, double>>& points);

double median(std::vector<double> v);
double quantile(std::vector<double> v, double q);

}  // namespace lcz
