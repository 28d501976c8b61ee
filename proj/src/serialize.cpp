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


#include "lcz/serialize.hpp"

#include <cmath>

namespace lcz {

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::ZY: return "zy";
    case GateKind::QaoaCost: return "zz";
    case GateKind::QaoaMixer: return "rx";
    case GateKind::RY: return "ry";
  }
  return "?";
}

Json to_json(const AnsatzCircuit& c) {
  Json j;
  j["n_qubits"] = c.n_qubits;
  j["rounds"] = c.rounds;
  j["scheme"] = scheme_name(c.scheme);
  Json gates = Json::array();
  for (const auto& g : c.gates) {
    Json q = Json::array({g.q0});
    if (g.two_qubit()) q.push_back(g.q1);
    gates.push_back(Json{{"kind", gate_kind_name(g.kind)}, {"qubits", q}, {"param", g.param}});
  }
  j["gates"] = gates;
  j["family"] = c.family;
  j["num_params"] = c.num_params;
  j["param_labels"] = c.param_labels;
  return j;
}

Json to_json(const ExpectationReport& r) {
  Json j;
  j["backend"] = backend_name(r.backend);
  j["truncation"] = truncation_name(r.mode);
  j["expected_cut"] = r.expected_cut;
  if (r.ratio) j["ratio"] = *r.ratio;
  Json edges = Json::array();
  for (std::size_t k = 0; k < r.edges.size(); ++k)
    edges.push_back(Json{{"i", r.edges[k].first}, {"j", r.edges[k].second}, {"zz", r.per_edge[k]}});
  j["edges"] = edges;
  return j;
}

Json to_json(const GuaranteeBound& b) {
  Json j;
  j["method"] = b.method;
  j["alpha"] = b.alpha;
  j["angles"] = b.angles;
  Json w = Json::object();
  for (const auto& [k, v] : b.witness) {
    if (std::abs(v) < 1e15 && v == std::floor(v)) w[k] = static_cast<long long>(v);
    else w[k] = v;
  }
  j["witness"] = w;
  return j;
}

Json to_json(const TTSRecord& r) {
  Json j;
  j["graph_id"] = r.graph_id;
  j["scheme"] = r.scheme;
  j["restarts"] = r.restarts;
  j["total_iterations"] = r.total_iterations;
  j["success"] = r.success;
  Json t = Json::array();
  for (const auto& x : r.traces) t.push_back(Json{{"iterations", x.iterations}, {"best", x.best}});
  j["traces"] = t;
  return j;
}

Json to_json(const CutAssignment& a) {
  Json j;
  j["bits"] = bits_to_string(a.bits);
  j["cut"] = a.cut;
  j["is_optimal"] = a.is_optimal;
  return j;
}

Json to_json(const OrientationReport& r) {
  return Json{{"acyclic", r.acyclic}, {"n_plus", r.n_plus}, {"n_minus", r.n_minus}};
}

Json to_json(const OptimizeResult& r, bool with_trace) {
  Json j;
  j["value"] = r.value;
  j["angles"] = std::vector<double>(r.angles.data(), r.angles.data() + r.angles.size());
  j["iterations"] = r.iterations;
  j["budget_exhausted"] = r.budget_exhausted;
  j["reached_target"] = r.reached_target;
  if (with_trace) j["trace"] = r.trace;
  return j;
}

Json to_json(const VarianceEstimate& v) {
  return Json{{"mean", v.mean}, {"variance", v.variance}, {"standard_error", v.standard_error}, {"samples", v.samples}};
}

Json to_json(const Rational& q) { return Json{{"num", q.num}, {"den", q.den}, {"value", q.value()}}; }

std::string dump_line(const Json& j) { return j.dump() + "\n"; }
std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lcz
