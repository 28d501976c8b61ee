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

#include <json.hpp>

#include "lcz/ansatz.hpp"
#include "lcz/bounds.hpp"
#include "lcz/optimize.hpp"
#include "lcz/oracle.hpp"
#include "lcz/orientation.hpp"
#include "lcz/simulate.hpp"

namespace lcz {

using Json = nlohmann::ordered_json;

std::string gate_kind_name(GateKind k);

Json to_json(const AnsatzCircuit& c);
Json to_json(const ExpectationReport& r);
Json to_json(const GuaranteeBound& b);
Json to_json(const TTSRecord& r);
Json to_json(const CutAssignment& a);
Json to_json(const OrientationReport& r);
Json to_json(const OptimizeResult& r, bool with_trace = false);
Json to_json(const VarianceEstimate& v);
Json to_json(const Rational& q);

/// Compact single-line dump with a trailing newline.
std::string dump_line(const Json& j);
/// Indented dump with a trailing newline.
std::string dump_pretty(const Json& j);

}  // namespace lcz
