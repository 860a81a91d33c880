// Copyright 2026 The symcov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "symcov/covariance.hpp"
#include "symcov/scanner.hpp"
#include "symcov/symstate.hpp"
#include "symcov/tensors.hpp"

namespace symcov::io {

using json = nlohmann::json;

/// Builds a state from either a family description
///   {"family": "ghz"|"w"|"dicke"|"product"|"noisy", "n_qubits": N,
///    "p": int, "theta"/"phi": float, "x": float, "base": {...}}
/// or a serialized state {"n_qubits": N, "dicke_matrix": [[re, im], ...]}.
/// Throws DomainError on malformed input.
SymmetricState state_from_json(const json& j);

/// One-parameter family x -> state for a "noisy" description; any "x" in
/// the description is ignored.
StateFamily family_from_json(const json& j);

/// Parses `text` as inline JSON, or failing that reads it as a file path.
json load_json_argument(const std::string& text);

json to_json(const SymmetricState& rho);
json to_json(const CorrelationTensor& t);
json to_json(const CovarianceMatrix& cm);
json to_json(const NegativityReport& report);
json to_json(const Detector& d);

/// Scan document; `agrees` compares the threshold against `paper_value`
/// at `agree_tol` (false when either is missing).
json to_json(const ScanResult& scan, const json& family, std::optional<double> paper_value,
             double agree_tol);

std::string to_csv(const SymmetricState& rho);
std::string to_csv(const CorrelationTensor& t);
std::string to_csv(const CovarianceMatrix& cm);
std::string to_csv(const NegativityReport& report);

}  // namespace symcov::io
