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


// One PASS/FAIL line per acceptance criterion.
//   lcz_acceptance [--only 1,2,...] [--cli PATH]

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcz/ansatz.hpp"
#include "lcz/bounds.hpp"
#include "lcz/graph.hpp"
#include "lcz/optimize.hpp"
#include "lcz/oracle.hpp"
#include "lcz/orientation.hpp"
#include "lcz/rng.hpp"
#include "lcz/simulate.hpp"

namespace {

using namespace lcz;
namespace fs = std::filesystem;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Verdict()> run;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

Angles random_angles(int n, Rng& rng) {
  Angles th(n);
  for (int k = 0; k < n; ++k) th[k] = rng.uniform(-kPi, kPi);
  return th;
}

OrientedDag bipolar(const UndirectedGraph& g) { return bipolar_orientation_dfs(g, 0, g.neighbors(0).front()); }

// Biconnected random 3-regular graph; seeds advance until one qualifies.
UndirectedGraph biconnected_cubic(int n, std::uint64_t& seed) {
  for (;;) {
    UndirectedGraph g = generate_random_regular(n, 3, seed++);
    if (is_biconnected(g)) return g;
  }
}

Verdict c1() {
  GuaranteeBound b = theorem1_bound(0.0);
  bool ok = std::abs(b.alpha - 0.7934) <= 5e-4 && std::abs(b.angles[0] - 0.93) <= 0.02;
  return {ok, fmt("alpha=%.6f theta=%.4f", b.alpha, b.angles[0])};
}

Verdict c2() {
  GuaranteeBound b = qaoa1_style_bound();
  return {std::abs(b.alpha - 0.6925) <= 5e-4, fmt("alpha=%.6f theta=%.4f", b.alpha, b.angles[0])};
}

Verdict c3() {
  GuaranteeBound b = theorem2_bound(15);
  int l1 = static_cast<int>(b.witness.at("cycle1_length")), l2 = static_cast<int>(b.witness.at("cycle2_length"));
  bool ok = std::abs(b.alpha - 0.7926) <= 5e-4 && l1 == 11 && l2 == 17;
  return {ok, fmt("alpha=%.6f cycles=(%d,%d)", b.alpha, l1, l2)};
}

Verdict c4() {
  GuaranteeBound b = angle_relaxed_bound_3regular();
  bool ok = std::abs(b.alpha - 5.0 / 6) <= 1e-6 && std::abs(b.angles[0] - kPi / 2) <= 1e-6 &&
            std::abs(b.angles[1] - kPi / 4) <= 1e-6;
  return {ok, fmt("alpha=%.9f angles=(%.6f,%.6f)", b.alpha, b.angles[0], b.angles[1])};
}

Verdict c5() {
  GuaranteeBound b = zy2_bound_3regular();
  return {std::abs(b.alpha - 0.8025) <= 1e-3, fmt("alpha=%.6f", b.alpha)};
}

Verdict c6() {
  GuaranteeBound b = one_local_minmax_3regular();
  double r = b.witness.at("r_upper_triangle") + b.witness.at("r_lower_triangle") + b.witness.at("r_down_square");
  return {std::abs(b.alpha - 0.7934) <= 5e-4 && r == 0.0, fmt("alpha=%.6f ratio_sum=%g", b.alpha, r)};
}

Verdict c7() {
  double worst = 0;
  Angles th(2);
  th << kPi / 2, kPi / 4;
  for (int L = 3; L <= 12; ++L) {
    const double want = L % 2 ? L - 1 : L;
    AnsatzCircuit c = build_bipolar_zy(bipolar_orientation_dfs(cycle_graph(L), 0, 1), 1, Scheme::HeadInDegree);
    worst = std::max(worst, std::abs(two_regular_expected_cut(L, th[0], th[1]) - want));
    worst = std::max(worst, std::abs(expected_cut(c, th, Backend::Statevector).expected_cut - want));
  }
  return {worst <= 1e-9, fmt("max_error=%.3g", worst)};
}

Verdict c8() {
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    UndirectedGraph g = generate_random_connected(4 + k % 11, 0.3, 8000 + k);
    CutAssignment best = brute_force_maxcut(g);
    OrientedDag d = single_source_orientation(g, 0);
    AnsatzCircuit c = build_bipolar_zy(d, 1, Scheme::PerGate);
    double v = expected_cut(c, set_solution_angles(d, best.bits), Backend::Statevector).expected_cut;
    worst = std::max(worst, std::abs(v - best.cut));
  }
  return {worst <= 1e-9, fmt("graphs=50 max_error=%.3g", worst)};
}

Verdict c9() {
  Rng rng(9009);
  double worst = 0;
  std::uint64_t seed = 9000;
  for (int k = 0; k < 200; ++k) {
    UndirectedGraph g;
    // At most five independent cycles keeps untruncated propagation under the term cap.
    do g = generate_random_connected(4 + k % 11, 0.05, seed++);
    while (g.num_edges() - g.num_nodes() + 1 > 5);
    const int p = 1 + k % 3;
    const Scheme sc = static_cast<Scheme>((k / 4) % 4);
    AnsatzCircuit c;
    switch (k % 4) {
      case 0: c = build_bipolar_zy(is_biconnected(g) ? bipolar(g) : single_source_orientation(g, 0), p, sc); break;
      case 1: c = build_lightcone_zy(g, k % g.num_nodes(), p, sc); break;
      case 2: c = build_qaoa(g, p); break;
      default: c = build_ry(g); break;
    }
    Angles th = random_angles(c.num_params, rng);
    ExpectationReport a = expected_cut(c, th, Backend::Statevector), b = expected_cut(c, th, Backend::Pauli);
    for (std::size_t e = 0; e < a.per_edge.size(); ++e) worst = std::max(worst, std::abs(a.per_edge[e] - b.per_edge[e]));
  }
  return {worst <= 1e-10, fmt("cases=200 max_edge_diff=%.3g", worst)};
}

Verdict c10() {
  UndirectedGraph g = petersen_graph();
  AnsatzCircuit c = build_bipolar_zy(bipolar(g), 1, Scheme::Uniform);
  auto err = [&](int k, double t) {
    Angles th = Angles::Constant(1, t);
    double exact = expected_cut(c, th, Backend::Statevector).expected_cut;
    return std::abs(expected_cut(c, th, Backend::Pauli, TruncationMode::klocal(k)).expected_cut - exact);
  };
  const double eps = 0.1;
  bool law = true;
  std::string worst;
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 2; ++k)
    for (int s = 1; s <= 7; ++s) {
      const double t = 0.2 * s;
      const double e = err(k, t), eh = err(k, t / 2);
      if (e < 1e-13) continue;
      const double ratio = eh / e, law_ratio = std::pow(std::sin(t / 2) / std::sin(t), 2 * k + 1);
      const double excess = ratio / (law_ratio * (1 + eps));
      if (excess > 1) law = false;
      if (excess > worst_excess) {
        worst_excess = excess;
        worst = fmt("k=%d theta=%.1f ratio=%.4f law=%.4f", k, t, ratio, law_ratio);
      }
    }
  Rng rng(10);
  double tree = 0;
  for (int k = 0; k < 20; ++k) {
    UndirectedGraph t = generate_random_connected(10, 0.0, 1000 + k);
    AnsatzCircuit tc = build_bipolar_zy(single_source_orientation(t, 0), 1, Scheme::PerGate);
    Angles th = random_angles(tc.num_params, rng);
    tree = std::max(tree, std::abs(expected_cut(tc, th, Backend::Pauli, TruncationMode::klocal(0)).expected_cut -
                                   expected_cut(tc, th, Backend::Statevector).expected_cut));
  }
  return {law && tree < 1e-12, fmt("worst %s tree_error=%.3g", worst.c_str(), tree)};
}

Verdict c11() {
  UndirectedGraph g = generate_random_regular(8, 3, 11);
  AnsatzCircuit c = build_bipolar_zy(single_source_orientation(g, 0), 1, Scheme::PerGate);
  VarianceEstimate v = variance_estimate(c, 4000, 11);
  const double bound = 24.0 / 256;
  return {v.variance > bound - 3 * v.standard_error,
          fmt("variance=%.5f se=%.5f bound=%.5f", v.variance, v.standard_error, bound)};
}

Verdict c12() {
  std::uint64_t seed = 12000;
  double worst = 1;
  for (int k = 0; k < 50; ++k) {
    UndirectedGraph g = biconnected_cubic(8 + 2 * (k % 5), seed);
    AnsatzCircuit c = build_bipolar_zy(bipolar(g), 1, Scheme::Uniform);
    Objective f = cut_objective(c, Backend::Pauli);
    auto [t, v] = maximize_1d([&](double x) { return f(Angles::Constant(1, x)); }, 0.0, kPi, 361);
    OptimizerConfig cfg;
    OptimizeResult r = maximize_cut(c, Backend::Pauli, cfg, std::nullopt, Angles::Constant(1, t));
    worst = std::min(worst, approximation_ratio(std::max(v, r.value), brute_force_maxcut(g).cut));
  }
  return {worst >= 0.7926, fmt("graphs=50 min_ratio=%.6f", worst)};
}

Verdict c13() {
  double worst = 0;
  Angles th(2);
  th << kPi / 2, kPi / 4;
  for (int L = 6; L <= 12; ++L) {
    AnsatzCircuit c = build_bipolar_zy(bipolar_orientation_dfs(cycle_graph(L), 0, 1), 1, Scheme::HeadInDegree);
    double v = expected_cut(c, th, Backend::Pauli, TruncationMode::weight(2)).expected_cut;
    worst = std::max(worst, std::abs(v - (L - 0.5)));
  }
  return {worst <= 1e-9, fmt("max_error=%.3g", worst)};
}

Verdict c14() {
  const std::vector<int> sizes = {8, 10, 12, 14, 16};
  const int graphs = 50;
  TTSConfig cfg;
  std::vector<std::pair<double, double>> zy, ry;
  std::string med;
  for (int n : sizes) {
    std::uint64_t seed = 140000 + 1000 * n;
    std::vector<double> a, b;
    for (int k = 0; k < graphs; ++k) {
      UndirectedGraph g = biconnected_cubic(n, seed);
      const double cmax = brute_force_maxcut(g).cut;
      const std::uint64_t run = substream(14, "tts", static_cast<std::uint64_t>(n * 1000 + k)).next();
      a.push_back(static_cast<double>(
          multistart_tts(build_bipolar_zy(bipolar(g), 1, Scheme::PerGate), cmax, cfg, run).total_iterations));
      b.push_back(static_cast<double>(multistart_tts(build_ry(g), cmax, cfg, run).total_iterations));
    }
    zy.push_back({n, median(a)});
    ry.push_back({n, median(b)});
    med += fmt(" N%d:%g/%g", n, median(a), median(b));
  }
  const double bz = scaling_fit(zy).b, br = scaling_fit(ry).b;
  return {bz < br, fmt("base_zy=%.5f base_ry=%.5f medians%s", bz, br, med.c_str())};
}

std::string cli_path;

int run_cli(const std::string& args) {
  int st = std::system((cli_path + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict c15() {
  const fs::path root = fs::temp_directory_path() / ("lcz_accept_" + std::to_string(::getpid()));
  fs::remove_all(root);
  const std::vector<std::string> cmds = {
      "tts --n 8,10,12 --graphs 3 --scheme pergate --seed 3",
      "optimize --graph regular:10:3 --scheme pergate --seed 5",
      "optimize --graph connected:9:0.3 --ansatz qaoa --p 2 --method quasi-newton --seed 6",
      "simulate --graph petersen --theta 0.7 --shots 500 --variance 200 --seed 2",
      "simulate --graph regular:12:3 --backend pauli --truncation klocal:1 --theta 0.9 --seed 8",
      "guarantee --method zy1-0local --sweep",
      "postprocess --graph regular:12:3 --seed 4 --bits " + (root / "bits.txt").string(),
      "orient --graph regular:14:3 --orient bipolar-bfs --seed 1",
      "cycles --graph petersen",
  };
  fs::create_directories(root);
  std::ofstream(root / "bits.txt") << "000000000000\n010101010101\n110011001100\n";
  int compared = 0;
  std::string bad;
  for (std::size_t i = 0; i < cmds.size(); ++i)
    for (int rep = 0; rep < 2; ++rep) {
      fs::path d = root / (std::to_string(i) + "_" + std::to_string(rep));
      const std::string threads = rep ? " --threads 2" : "";
      if (run_cli(cmds[i] + threads + " --out " + d.string()) != 0) bad += " exit:" + std::to_string(i);
    }
  for (std::size_t i = 0; i < cmds.size(); ++i) {
    fs::path a = root / (std::to_string(i) + "_0"), b = root / (std::to_string(i) + "_1");
    if (!fs::exists(a)) continue;
    for (const auto& e : fs::directory_iterator(a)) {
      const std::string name = e.path().filename().string();
      if (name == "timing.json" || name == "manifest.json") continue;
      ++compared;
      if (slurp(e.path()) != slurp(b / name)) bad += " diff:" + std::to_string(i) + "/" + name;
    }
  }
  fs::remove_all(root);
  return {bad.empty() && compared > 0, fmt("payload_files=%d%s", compared, bad.c_str())};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::vector<int> only;
  cli_path = LCZ_CLI_PATH;
  app.add_option("--only", only, "criterion ids")->delimiter(',');
  app.add_option("--cli", cli_path, "lcz executable");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, "zero-local-guarantee", 1, c1},
      {2, "qaoa1-style-term", 1, c2},
      {3, "worst-case-cycle-search", 30, c3},
      {4, "angle-relaxed-guarantee", 1, c4},
      {5, "two-round-minmax", 60, c5},
      {6, "one-local-minmax", 60, c6},
      {7, "two-regular-exactness", 10, c7},
      {8, "solution-angle-exactness", 60, c8},
      {9, "backend-equivalence", 300, c9},
      {10, "klocal-error-law", 60, c10},
      {11, "variance-lower-bound", 300, c11},
      {12, "uniform-ratio-desk-scale", 900, c12},
      {13, "weight-truncation-artifact", 10, c13},
      {14, "tts-scaling-order", 7200, c14},
      {15, "determinism", 600, c15},
  };
  const std::set<int> pick(only.begin(), only.end());
  int failed = 0;
  for (const Criterion& c : all) {
    if (!pick.empty() && !pick.count(c.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_seconds) {
      v.pass = false;
      v.detail += fmt(" over budget %.0fs", c.budget_seconds);
    }
    std::printf("%s %2d %s %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), v.detail.c_str(), s);
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed ? 1 : 0;
}
