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

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcov/covariance.hpp"
#include "symcov/symstate.hpp"
#include "symcov/tensors.hpp"

namespace symcov {

/// Scalar entanglement detector on C^(2k); negative means detected.
///   min_eig      smallest eigenvalue of C^(2k)
///   diag         C^(2k)_{ii} at a chosen multi-index
///   moment_diag  T^(2k)_{ii} = <A_i B_i>; C_ii <= T_ii, so T_ii < 0 also
///                certifies negativity
struct Detector {
  enum class Kind { min_eig, diag, moment_diag };

  Kind kind = Kind::min_eig;
  int k = 1;
  std::optional<MultiIndex> index;

  static Detector min_eig(int k) { return {Kind::min_eig, k, std::nullopt}; }
  static Detector diag(MultiIndex i) {
    const int k = i.rank();
    return {Kind::diag, k, std::move(i)};
  }
  static Detector moment_diag(MultiIndex i) {
    const int k = i.rank();
    return {Kind::moment_diag, k, std::move(i)};
  }
};

std::string to_string(Detector::Kind kind);
Detector::Kind parse_detector_kind(const std::string& name);

struct DetectorReading {
  double value = 0.0;
  double tolerance = 0.0;  // detected <=> value < -tolerance
  bool detected() const { return value < -tolerance; }
};

DetectorReading read_detector(const SymmetricState& rho, const Detector& d);
double detector_value(const SymmetricState& rho, const Detector& d);

using StateFamily = std::function<SymmetricState(double)>;

struct ScanResult {
  Detector detector;
  std::optional<double> threshold;  // infimum of the detected set, (x*, 1] detected
  std::pair<double, double> bracket{0.0, 0.0};  // not detected at .first, detected at .second
  double resolution = 0.0;
  bool monotone = true;  // a single not-detected -> detected transition on the grid
  bool smooth = true;    // grid continuity check passed
  std::vector<double> grid_x;
  std::vector<double> grid_values;
};

inline constexpr double kDefaultScanTol = 1e-6;
inline constexpr int kDefaultScanGrid = 64;

/// Uniform grid over [0, 1] (grid intervals), then bisection of the lowest
/// not-detected -> detected transition down to width <= tol.
ScanResult scan_threshold(const StateFamily& family, const Detector& d,
                          double tol = kDefaultScanTol, int grid = kDefaultScanGrid);

/// Closed-form thresholds for the noisy GHZ / W families at even N.
struct AnalyticThresholds {
  int n_qubits = 0;
  double ghz_diag = 0.0;     // 1 / N^2
  double w_diag = 0.0;       // 1 / (N + 2)
  double w_two_qubit = 0.0;  // N^2 / (N^2 + 12)
};

AnalyticThresholds analytic_thresholds(int n_qubits);

/// Index (x, ..., x, y) of rank k.
MultiIndex ghz_witness_index(int k);
/// Index (z, ..., z) of rank k.
MultiIndex w_witness_index(int k);

}  // namespace symcov
