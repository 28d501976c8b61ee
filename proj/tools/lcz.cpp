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


#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcz/bounds.hpp"
#include "lcz/optimize.hpp"
#include "lcz/oracle.hpp"
#include "lcz/orientation.hpp"
#include "lcz/parallel.hpp"
#include "lcz/rng.hpp"
#include "lcz/serialize.hpp"
#include "lcz/simulate.hpp"

namespace fs = std::filesystem;
using namespace lcz;

namespace {

constexpr const char* kVersion = "0.1.0";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string graph;
  std::string ansatz = "bipolar-zy";
  int p = 1;
  std::string scheme = "uniform";
  std::string backend = "statevector";
  std::string truncation = "none";
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
  std::string orient = "auto";
  std::string dag_file;
  int s = -1, t = -1, root = 0;
  int max_qubits = 24;
  long long max_terms = 4000000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char d) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, d)) out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

// Files first; otherwise a generator spec such as regular:12:3 or cycle:8.
UndirectedGraph load_graph(const Common& o) {
  if (o.graph.empty()) throw std::invalid_argument("--graph is required");
  if (fs::exists(o.graph)) return parse_edge_list(read_file(o.graph));
  auto f = split(o.graph, ':');
  const std::string& kind = f[0];
  auto arg = [&](std::size_t k) {
    if (f.size() <= k) throw std::invalid_argument("graph spec '" + o.graph + "' is missing fields");
    return f[k];
  };
  std::uint64_t gs = substream(o.seed, "graph-gen").next();
  if (kind == "regular") return generate_random_regular(to_int(arg(1)), to_int(arg(2)), gs);
  if (kind == "connected") return generate_random_connected(to_int(arg(1)), std::stod(arg(2)), gs);
  if (kind == "cycle") return cycle_graph(to_int(arg(1)));
  if (kind == "path") return path_graph(to_int(arg(1)));
  if (kind == "complete") return complete_graph(to_int(arg(1)));
  if (kind == "star") return star_graph(to_int(arg(1)));
  if (kind == "petersen") return petersen_graph();
  throw IoError("no such graph file or generator: " + o.graph);
}

OrientedDag make_dag(const UndirectedGraph& g, const Common& o) {
  if (!o.dag_file.empty()) {
    OrientedDag d = parse_orientation(read_file(o.dag_file));
    if (d.base().num_nodes() != g.num_nodes() || d.base().edges() != g.edges())
      throw std::invalid_argument("orientation does not match the graph");
    return d;
  }
  if (g.num_edges() == 0) throw std::invalid_argument("graph has no edges");
  int s = o.s, t = o.t;
  if (s < 0 || t < 0) std::tie(s, t) = g.edges()[0];
  std::string m = o.orient;
  if (m == "auto") m = is_biconnected(g) ? "bipolar-dfs" : "single-source";
  if (m == "bipolar-dfs") return bipolar_orientation_dfs(g, s, t);
  if (m == "bipolar-bfs") return bipolar_orientation_bfs(g, s, t);
  if (m == "lightcone") return bfs_lightcone_orientation(g, o.root);
  if (m == "single-source") return single_source_orientation(g, o.root);
  throw std::invalid_argument("unknown orientation method '" + o.orient + "'");
}

AnsatzCircuit make_circuit(const UndirectedGraph& g, const Common& o) {
  Scheme sc = parse_scheme(o.scheme);
  if (o.ansatz == "bipolar-zy") return build_bipolar_zy(make_dag(g, o), o.p, sc);
  if (o.ansatz == "lightcone-zy") return build_lightcone_zy(g, o.root, o.p, sc);
  if (o.ansatz == "qaoa") return build_qaoa(g, o.p);
  if (o.ansatz == "ry") return build_ry(g);
  throw std::invalid_argument("unknown ansatz '" + o.ansatz + "'");
}

SimOptions sim_options(const Common& o) {
  SimOptions so;
  so.max_qubits = o.max_qubits;
  so.pauli.max_terms = static_cast<std::size_t>(o.max_terms);
  return so;
}

Angles make_angles(const AnsatzCircuit& c, const std::vector<double>& theta, const std::string& file) {
  std::vector<double> v = theta;
  if (!file.empty()) {
    std::istringstream in(read_file(file));
    double x;
    v.clear();
    while (in >> x) v.push_back(x);
  }
  if (v.empty()) throw std::invalid_argument("angles required (--theta or --angles)");
  if (v.size() == 1) return Angles::Constant(c.num_params, v[0]);
  if (static_cast<int>(v.size()) != c.num_params)
    throw std::invalid_argument("expected " + std::to_string(c.num_params) + " angles, got " +
                                std::to_string(v.size()));
  return Eigen::Map<const Angles>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

class Output {
 public:
  Output(const Common& o, const std::string& command, const CLI::App& root) : dir_(o.out), command_(command) {
    if (!dir_.empty()) {
      fs::create_directories(dir_);
      manifest_["tool"] = "lcz";
      manifest_["version"] = kVersion;
      manifest_["command"] = command;
      manifest_["seed"] = o.seed;
      Json cfg = Json::object();
      for (const auto& line : split(root.config_to_str(true, false), '\n')) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        auto dot = key.find('.');
        if (dot != std::string::npos && key.substr(0, dot) != command) continue;
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"') val = val.substr(1, val.size() - 2);
        cfg[key] = val;
      }
      manifest_["config"] = cfg;
      Json inputs = Json::array();
      if (!o.graph.empty() && fs::exists(o.graph))
        inputs.push_back(Json{{"path", o.graph}, {"fnv1a", fnv1a(read_file(o.graph))}});
      if (!o.dag_file.empty()) inputs.push_back(Json{{"path", o.dag_file}, {"fnv1a", fnv1a(read_file(o.dag_file))}});
      manifest_["inputs"] = inputs;
    }
    start_ = std::chrono::system_clock::now();
  }
  bool to_dir() const { return !dir_.empty(); }
  Json& manifest() { return manifest_; }

  /// Primary payload: stdout without --out, otherwise a file in the directory.
  void primary(const std::string& name, const std::string& content) {
    if (dir_.empty()) {
      std::cout << content;
      std::cout.flush();
    } else {
      write(name, content);
    }
  }
  void secondary(const std::string& name, const std::string& content) {
    if (dir_.empty()) throw std::invalid_argument(name + " needs --out");
    write(name, content);
  }
  void finish() {
    if (dir_.empty()) return;
    Json files = Json::array();
    for (const auto& f : files_) files.push_back(f);
    manifest_["outputs"] = files;
    write_raw("manifest.json", dump_pretty(manifest_));
    auto end = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(start_);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    Json timing{{"started_at", buf}, {"wall_seconds", std::chrono::duration<double>(end - start_).count()}};
    for (const auto& [k, v] : extra_timing_.items()) timing[k] = v;
    write_raw("timing.json", dump_pretty(timing));
  }
  Json& timing() { return extra_timing_; }

 private:
  void write(const std::string& name, const std::string& content) {
    files_.push_back(name);
    write_raw(name, content);
  }
  void write_raw(const std::string& name, const std::string& content) {
    std::ofstream f(fs::path(dir_) / name, std::ios::binary);
    if (!f) throw IoError("cannot write " + name);
    f << content;
  }
  std::string dir_, command_;
  Json manifest_;
  Json extra_timing_ = Json::object();
  std::vector<std::string> files_;
  std::chrono::system_clock::time_point start_;
};

Json with_manifest(Json j, const Output& out) {
  if (out.to_dir()) j["manifest"] = "manifest.json";
  return j;
}

std::optional<double> c_max_of(const UndirectedGraph& g, double given) {
  if (given >= 0) return given;
  if (g.num_nodes() > 28) return std::nullopt;
  return static_cast<double>(brute_force_maxcut(g).cut);
}

// ---- subcommands ----

void cmd_orient(const Common& o, Output& out) {
  UndirectedGraph g = load_graph(o);
  OrientedDag d = make_dag(g, o);
  Json j;
  j["method"] = o.dag_file.empty() ? o.orient : "file";
  j["n"] = g.num_nodes();
  j["m"] = g.num_edges();
  j["validation"] = to_json(validate_bipolar(d));
  j["sources"] = d.sources();
  j["sinks"] = d.sinks();
  j["heads_in_degree"] = to_json(averaged_heads_in_degree(d));
  j["longest_path"] = longest_path_length(d);
  out.primary("orientation.txt", write_orientation(d));
  if (out.to_dir()) out.secondary("orient.json", dump_pretty(with_manifest(j, out)));
}

void cmd_ansatz(const Common& o, Output& out) {
  UndirectedGraph g = load_graph(o);
  AnsatzCircuit c = make_circuit(g, o);
  Json j = to_json(c);
  j["two_qubit_depth"] = two_qubit_depth(c);
  out.primary("circuit.json", dump_pretty(with_manifest(j, out)));
}

struct AngleArgs {
  std::vector<double> theta;
  std::string file;
};

void cmd_simulate(const Common& o, Output& out, const AngleArgs& a, double cmax, int shots, int variance) {
  UndirectedGraph g = load_graph(o);
  AnsatzCircuit c = make_circuit(g, o);
  SimOptions so = sim_options(o);
  Json j;
  if (variance > 0) {
    VarianceEstimate v = variance_estimate(c, variance, substream(o.seed, "angles").next(), so);
    j = to_json(v);
    int D = g.max_degree();
    if (g.is_regular(D)) {
      int e = D * (2 * ((o.p + 1) / 2) + 1) - 1;
      j["lower_bound"] = D * g.num_nodes() / std::ldexp(1.0, e);
    }
    out.primary("variance.json", dump_pretty(with_manifest(j, out)));
    return;
  }
  Angles th = make_angles(c, a.theta, a.file);
  ExpectationReport r =
      expected_cut(c, th, parse_backend(o.backend), parse_truncation(o.truncation), c_max_of(g, cmax), so);
  j = to_json(r);
  j["family"] = c.family;
  j["scheme"] = scheme_name(c.scheme);
  j["rounds"] = c.rounds;
  out.primary("report.json", dump_pretty(with_manifest(j, out)));
  if (shots > 0) {
    std::string s;
    for (const auto& x : sample_bitstrings(c, th, shots, o.seed, so)) s += bits_to_string(x.bits) + " " + std::to_string(x.cut) + "\n";
    out.secondary("samples.txt", s);
  }
}

std::function<double(double)> sweep_function(const std::string& m, const GuaranteeBound& b, double ratio, int D) {
  if (m == "zy1-0local" || m == "1local") {
    double k = 2.0 / 3 + 4.0 * ratio / 3;
    if (m == "1local") k = 2.0 / 3;
    return [k](double t) { return 0.5 * (1 + (1 - k) * std::sin(t) + k * std::cos(t) * std::sin(t)); };
  }
  if (m == "qaoa1") return [](double t) { return 0.5 * (1 + std::pow(std::cos(t), 2) * std::sin(t)); };
  if (m == "dregular") return [D](double t) {
      double s = std::sin(t), c = std::cos(t);
      double v = 2.0 / D * std::pow(c, D - 2) * s;
      if (D >= 3) v += (1 - 2.0 / D) * std::pow(c, D - 3) * s;
      return 0.5 * (1 + v);
    };
  if (m == "theorem2") {
    int k1 = static_cast<int>(b.witness.at("k1")), k2 = static_cast<int>(b.witness.at("k2"));
    if (k1 < 0) return sweep_function("zy1-0local", b, 0.0, D);
    return [k1, k2](double t) { return theorem2_F(k1, k2, t) / theorem2_G(k1, k2); };
  }
  if (m == "angle-relaxed") return [](double t) { return 0.5 * (1 + std::sin(t) / 3 + 1.0 / 3); };
  if (m == "zy2") {
    Eigen::Vector4d r(b.witness.at("r00"), b.witness.at("r01"), b.witness.at("r10"), b.witness.at("r11"));
    double t2 = b.angles[1];
    return [r, t2](double t) { return zy2_objective(r, t, t2, 3); };
  }
  throw std::invalid_argument("no sweep for method '" + m + "'");
}

void cmd_guarantee(const Common&, Output& out, const std::string& m, double ratio, int D, int kmax, bool sweep) {
  GuaranteeBound b;
  if (m == "zy1-0local") b = theorem1_bound(ratio);
  else if (m == "qaoa1") b = qaoa1_style_bound();
  else if (m == "theorem2") b = theorem2_bound(kmax);
  else if (m == "angle-relaxed") b = angle_relaxed_bound_3regular();
  else if (m == "zy2") b = zy2_bound_3regular();
  else if (m == "1local") b = one_local_minmax_3regular();
  else if (m == "dregular") b = d_regular_zy1_bound(D);
  else throw std::invalid_argument("unknown guarantee method '" + m + "'");
  out.primary("guarantee.json", dump_pretty(with_manifest(to_json(b), out)));
  if (sweep) {
    auto f = sweep_function(m, b, ratio, D);
    std::string csv = "theta,value\n";
    const int n = 181;
    for (int k = 0; k < n; ++k) {
      double t = k * (kPi / 2) / (n - 1);
      csv += fmt(t) + "," + fmt(f(t)) + "\n";
    }
    out.secondary("sweep.csv", csv);
  }
}

OptimizerConfig optimizer_config(const Common& o, const std::string& method, int max_iter) {
  OptimizerConfig cfg;
  cfg.method = parse_method(method);
  cfg.max_iterations = max_iter;
  cfg.seed = o.seed;
  return cfg;
}

void cmd_optimize(const Common& o, Output& out, const std::string& method, int max_iter, double cvar, double cmax) {
  UndirectedGraph g = load_graph(o);
  AnsatzCircuit c = make_circuit(g, o);
  OptimizerConfig cfg = optimizer_config(o, method, max_iter);
  auto cm = c_max_of(g, cmax);
  OptimizeResult r;
  Rng rng = substream(o.seed, "init-angles");
  Angles x0(c.num_params);
  for (int k = 0; k < c.num_params; ++k) x0[k] = rng.uniform(cfg.lower, cfg.upper);
  SimOptions so = sim_options(o);
  if (cvar > 0) {
    r = maximize(cvar_cut_objective(c, cvar, so), x0, cfg);
  } else {
    r = maximize(cut_objective(c, parse_backend(o.backend), parse_truncation(o.truncation), so), x0, cfg, cm);
  }
  Json j;
  j["family"] = c.family;
  j["scheme"] = scheme_name(c.scheme);
  j["rounds"] = c.rounds;
  j["method"] = method_name(cfg.method);
  j["objective"] = cvar > 0 ? "cvar" : "expectation";
  if (cvar > 0) j["confidence"] = cvar;
  j["result"] = to_json(r);
  ExpectationReport rep = expected_cut(c, r.angles, Backend::Statevector, {}, cm, so);
  j["expected_cut"] = rep.expected_cut;
  if (cm) {
    j["c_max"] = *cm;
    j["ratio"] = *rep.ratio;
  }
  out.primary("optimize.json", dump_pretty(with_manifest(j, out)));
  if (out.to_dir()) {
    std::string csv = "iteration,best\n";
    for (std::size_t k = 0; k < r.trace.size(); ++k) csv += std::to_string(k + 1) + "," + fmt(r.trace[k]) + "\n";
    out.secondary("trace.csv", csv);
  }
}

void cmd_tts(const Common& o, Output& out, const std::vector<int>& sizes, int graphs, int degree, int restarts,
             const std::string& method, int max_iter) {
  struct Job {
    int n, index;
  };
  std::vector<Job> jobs;
  for (int n : sizes)
    for (int k = 0; k < graphs; ++k) jobs.push_back({n, k});
  TTSConfig cfg;
  cfg.optimizer = optimizer_config(o, method, max_iter);
  cfg.max_restarts = restarts;
  std::vector<TTSRecord> recs(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), o.threads, [&](int i) {
    const Job& jb = jobs[i];
    const std::uint64_t key = static_cast<std::uint64_t>(jb.n) * 1000003ULL + static_cast<std::uint64_t>(jb.index);
    UndirectedGraph g = generate_random_regular(jb.n, degree, substream(o.seed, "graph-gen", key).next());
    AnsatzCircuit c = make_circuit(g, o);
    double cmax = brute_force_maxcut(g).cut;
    recs[i] = multistart_tts(c, cmax, cfg, substream(o.seed, "tts", key).next(),
                             "n" + std::to_string(jb.n) + "-g" + std::to_string(jb.index));
  });
  std::string jsonl;
  double wall = 0;
  for (const auto& r : recs) {
    jsonl += dump_line(to_json(r));
    wall += r.wall_seconds;
  }
  out.primary("tts.jsonl", jsonl);
  out.timing()["tts_wall_seconds"] = wall;
  if (!out.to_dir()) return;
  std::string csv = "N,median,q25,q75\n";
  std::vector<std::pair<double, double>> pts;
  std::size_t at = 0;
  for (int n : sizes) {
    std::vector<double> it;
    for (int k = 0; k < graphs; ++k) it.push_back(static_cast<double>(recs[at++].total_iterations));
    double med = median(it);
    csv += std::to_string(n) + "," + fmt(med) + "," + fmt(quantile(it, 0.25)) + "," + fmt(quantile(it, 0.75)) + "\n";
    pts.push_back({static_cast<double>(n), med});
  }
  out.secondary("tts.csv", csv);
  if (pts.size() >= 3) {
    ScalingFit f = scaling_fit(pts);
    out.secondary("fit.json", dump_pretty(with_manifest(Json{{"a", f.a}, {"b", f.b}, {"residual", f.residual}}, out)));
  }
}

std::vector<std::vector<int>> read_bits(const std::string& path, int n) {
  std::vector<std::vector<int>> out;
  std::istringstream in(read_file(path));
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    std::vector<int> b;
    try {
      b = bits_from_string(tok);
    } catch (const std::exception& e) {
      throw ParseError(ln, e.what());
    }
    if (static_cast<int>(b.size()) != n) throw ParseError(ln, "bitstring length does not match the graph");
    out.push_back(b);
  }
  return out;
}

void cmd_oracle(const Common& o, Output& out, const std::string& bits_file) {
  UndirectedGraph g = load_graph(o);
  CutAssignment best = brute_force_maxcut(g);
  Json j;
  j["n"] = g.num_nodes();
  j["m"] = g.num_edges();
  j["c_max"] = best.cut;
  j["optimal"] = to_json(best);
  if (!bits_file.empty()) {
    Json ev = Json::array();
    for (const auto& b : read_bits(bits_file, g.num_nodes())) {
      int cut = cut_value(g, b);
      ev.push_back(Json{{"bits", bits_to_string(b)}, {"cut", cut}, {"ratio", approximation_ratio(cut, best.cut)}});
    }
    j["evaluations"] = ev;
  }
  out.primary("oracle.json", dump_pretty(with_manifest(j, out)));
}

void cmd_postprocess(const Common& o, Output& out, const std::string& bits_file) {
  UndirectedGraph g = load_graph(o);
  if (bits_file.empty()) throw std::invalid_argument("--bits is required");
  auto in = read_bits(bits_file, g.num_nodes());
  if (in.empty()) throw std::invalid_argument("no bitstrings in " + bits_file);
  const double cmax = brute_force_maxcut(g).cut;
  Rng rng = substream(o.seed, "shuffles");
  std::string lines;
  double raw = 0, post = 0;
  for (const auto& b : in) {
    auto nb = greedy_flip(g, b, rng);
    int c0 = cut_value(g, b), c1 = cut_value(g, nb);
    raw += approximation_ratio(c0, cmax);
    post += approximation_ratio(c1, cmax);
    lines += bits_to_string(nb) + " " + std::to_string(c1) + "\n";
  }
  out.primary("postprocess.txt", lines);
  if (out.to_dir()) {
    const double k = static_cast<double>(in.size());
    Json j{{"samples", in.size()}, {"c_max", cmax}, {"raw_mean_ratio", raw / k}, {"post_mean_ratio", post / k}};
    out.secondary("postprocess.json", dump_pretty(with_manifest(j, out)));
  }
}

void cmd_cycles(const Common& o, Output& out, double cap) {
  UndirectedGraph g = load_graph(o);
  CycleCount cc = count_simple_cycles(g, static_cast<std::uint64_t>(cap));
  BlockDecomposition dec = biconnected_components(g);
  Json j;
  j["n"] = g.num_nodes();
  j["m"] = g.num_edges();
  j["simple_cycles"] = cc.count;
  j["cap_exceeded"] = cc.exceeded;
  j["girth"] = girth(g);
  j["connected"] = is_connected(g);
  j["biconnected"] = is_biconnected(g);
  j["blocks"] = dec.blocks;
  Json br = Json::array();
  for (auto [a, b] : dec.bridges) br.push_back(Json::array({a, b}));
  j["bridges"] = br;
  j["articulation_nodes"] = dec.articulation_nodes;
  out.primary("cycles.json", dump_pretty(with_manifest(j, out)));
}

void cmd_entropy(const Common& o, Output& out, const AngleArgs& a, int cut) {
  UndirectedGraph g = load_graph(o);
  AnsatzCircuit c = make_circuit(g, o);
  Angles th = make_angles(c, a.theta, a.file);
  if (cut < 0) cut = c.n_qubits / 2;
  Json j{{"n_qubits", c.n_qubits}, {"cut_position", cut}, {"units", "bits"},
         {"entropy", half_chain_entropy(c, th, cut, sim_options(o))}};
  out.primary("entropy.json", dump_pretty(with_manifest(j, out)));
}

int fail(int code, const std::string& kind, const std::string& msg, int line = 0) {
  Json e{{"code", code}, {"kind", kind}, {"message", msg}};
  if (line > 0) e["line"] = line;
  std::cerr << Json{{"error", e}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Light-cone and bipolar ZY ansatz toolkit for MaxCut"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<CLI::ConfigINI>());
  app.set_config("--config", "", "key=value config file");
  app.set_version_flag("--version", kVersion);
  app.option_defaults()->always_capture_default();

  Common o;
  app.add_option("--graph", o.graph, "edge-list file or generator (regular:N:D, cycle:L, path:N, complete:N, "
                                     "star:K, connected:N:P, petersen)");
  app.add_option("--ansatz", o.ansatz)->check(CLI::IsMember({"bipolar-zy", "lightcone-zy", "qaoa", "ry"}));
  app.add_option("--p", o.p, "rounds")->check(CLI::PositiveNumber);
  app.add_option("--scheme", o.scheme)->check(CLI::IsMember({"uniform", "degreepair", "headindegree", "pergate"}));
  app.add_option("--backend", o.backend)->check(CLI::IsMember({"statevector", "pauli"}));
  app.add_option("--truncation", o.truncation, "none | klocal:K | weight:W | coef:C");
  app.add_option("--seed", o.seed);
  app.add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "output directory");
  app.add_option("--orient", o.orient)
      ->check(CLI::IsMember({"auto", "bipolar-dfs", "bipolar-bfs", "lightcone", "single-source"}));
  app.add_option("--dag", o.dag_file, "orientation file");
  app.add_option("--s", o.s, "bipolar source");
  app.add_option("--t", o.t, "bipolar sink");
  app.add_option("--root", o.root, "light-cone root");
  app.add_option("--max-qubits", o.max_qubits);
  app.add_option("--max-terms", o.max_terms);

  auto* orient = app.add_subcommand("orient", "orient a graph");
  auto* ansatz = app.add_subcommand("ansatz", "emit the circuit JSON");

  AngleArgs ang;
  double cmax = -1;
  int shots = 0, variance = 0;
  auto* simulate = app.add_subcommand("simulate", "expected cut for given angles");
  simulate->add_option("--theta", ang.theta, "angle list (one value broadcasts)")->delimiter(',');
  simulate->add_option("--angles", ang.file, "file of angles");
  simulate->add_option("--cmax", cmax, "known optimum, skips brute force");
  simulate->add_option("--shots", shots, "write samples.txt");
  simulate->add_option("--variance", variance, "Monte-Carlo variance over uniform angles");

  std::string gmethod = "zy1-0local";
  double ratio = 0.0;
  int degree = 3, kmax = 15;
  bool sweep = false;
  auto* guarantee = app.add_subcommand("guarantee", "performance guarantee bounds");
  guarantee->add_option("--method", gmethod)
      ->check(CLI::IsMember({"zy1-0local", "qaoa1", "theorem2", "angle-relaxed", "zy2", "1local", "dregular"}));
  guarantee->add_option("--ratio", ratio, "sources over N");
  guarantee->add_option("--degree", degree);
  guarantee->add_option("--kmax", kmax);
  guarantee->add_flag("--sweep", sweep, "write sweep.csv");

  std::string omethod = "nelder-mead";
  int max_iter = 0;
  double cvar = 0;
  auto* optimize = app.add_subcommand("optimize", "variational maximization");
  optimize->add_option("--method", omethod)->check(CLI::IsMember({"nelder-mead", "quasi-newton"}));
  optimize->add_option("--max-iter", max_iter, "evaluation budget (0: 500 per parameter)");
  optimize->add_option("--cvar", cvar, "CVaR confidence");
  optimize->add_option("--cmax", cmax);

  std::vector<int> sizes{12};
  int graphs = 10, restarts = 200;
  auto* tts = app.add_subcommand("tts", "multi-start time-to-solution");
  tts->add_option("--n", sizes, "graph sizes")->delimiter(',');
  tts->add_option("--graphs", graphs)->check(CLI::PositiveNumber);
  tts->add_option("--degree", degree);
  tts->add_option("--max-restarts", restarts)->check(CLI::PositiveNumber);
  tts->add_option("--method", omethod)->check(CLI::IsMember({"nelder-mead", "quasi-newton"}));
  tts->add_option("--max-iter", max_iter);

  std::string bits_file;
  auto* oracle = app.add_subcommand("oracle", "brute-force MaxCut");
  oracle->add_option("--bits", bits_file, "bitstrings to evaluate");
  auto* post = app.add_subcommand("postprocess", "greedy bit-flip improvement");
  post->add_option("--bits", bits_file, "bitstrings, one per line");

  double cap = 1e7;
  auto* cycles = app.add_subcommand("cycles", "cycle and block structure");
  cycles->add_option("--cap", cap);

  int cut = -1;
  auto* entropy = app.add_subcommand("entropy", "half-chain entanglement entropy");
  entropy->add_option("--theta", ang.theta)->delimiter(',');
  entropy->add_option("--angles", ang.file);
  entropy->add_option("--cut", cut, "qubits [0, cut) form the subsystem");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail(1, "usage", e.what());
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    Output out(o, sub->get_name(), app);
    if (sub == orient) cmd_orient(o, out);
    else if (sub == ansatz) cmd_ansatz(o, out);
    else if (sub == simulate) cmd_simulate(o, out, ang, cmax, shots, variance);
    else if (sub == guarantee) cmd_guarantee(o, out, gmethod, ratio, degree, kmax, sweep);
    else if (sub == optimize) cmd_optimize(o, out, omethod, max_iter, cvar, cmax);
    else if (sub == tts) cmd_tts(o, out, sizes, graphs, degree, restarts, omethod, max_iter);
    else if (sub == oracle) cmd_oracle(o, out, bits_file);
    else if (sub == post) cmd_postprocess(o, out, bits_file);
    else if (sub == cycles) cmd_cycles(o, out, cap);
    else if (sub == entropy) cmd_entropy(o, out, ang, cut);
    out.finish();
  } catch (const ParseError& e) {
    return fail(1, "parse", e.what(), e.line());
  } catch (const ResourceError& e) {
    return fail(2, "resource", e.what());
  } catch (const IoError& e) {
    return fail(1, "io", e.what());
  } catch (const std::exception& e) {
    return fail(1, "validation", e.what());
  }
  return 0;
}
