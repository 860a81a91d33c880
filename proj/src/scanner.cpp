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

#include "symcov/scanner.hpp"

#include <cmath>
#include <numeric>

namespace symcov {

namespace {

constexpr double kDiagTol = 1e-9;

void require_index(const Detector& d) {
  if (!d.index) throw DomainError("detector needs a multi-index");
  if (d.index->rank() != d.k) {
    throw DomainError("detector index rank " + std::to_string(d.index->rank()) +
                      " does not match k = " + std::to_string(d.k));
  }
}

}  // namespace

std::string to_string(Detector::Kind kind) {
  switch (kind) {
    case Detector::Kind::min_eig: return "min_eig";
    case Detector::Kind::diag: return "diag";
    case Detector::Kind::moment_diag: return "moment_diag";
  }
  return "?";
}

Detector::Kind parse_detector_kind(const std::string& name) {
  if (name == "min_eig") return Detector::Kind::min_eig;
  if (name == "diag") return Detector::Kind::diag;
  if (name == "moment_diag") return Detector::Kind::moment_diag;
  throw DomainError("unknown detector kind '" + name + "'");
}

DetectorReading read_detector(const SymmetricState& rho, const Detector& d) {
  if (d.k < 1 || 2 * d.k > rho.n_qubits()) {
    throw DomainError("detector: need 2k <= N, got k=" + std::to_string(d.k) +
                      ", N=" + std::to_string(rho.n_qubits()));
  }
  switch (d.kind) {
    case Detector::Kind::min_eig: {
      const Eigen::MatrixXd c = inter_group_covariance(rho, d.k);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c, Eigen::EigenvaluesOnly);
      return {es.eigenvalues()(0), negativity_tolerance(c)};
    }
    case Detector::Kind::diag: {
      require_index(d);
      const double pair = correlation_entry(reduced_state(rho, 2 * d.k), *d.index + *d.index);
      const double single = correlation_entry(reduced_state(rho, d.k), *d.index);
      return {pair - single * single, kDiagTol};
    }
    case Detector::Kind::moment_diag: {
      require_index(d);
      return {correlation_entry(reduced_state(rho, 2 * d.k), *d.index + *d.index), kDiagTol};
    }
  }
  throw DomainError("detector: unknown kind");
}

double detector_value(const SymmetricState& rho, const Detector& d) {
  return read_detector(rho, d).value;
}

ScanResult scan_threshold(const StateFamily& family, const Detector& d, double tol, int grid) {
  if (!(tol > 0.0)) throw DomainError("scan_threshold: tol must be positive");
  if (grid < 8) throw DomainError("scan_threshold: grid must be at least 8");

  ScanResult out;
  out.detector = d;
  const double h = 1.0 / grid;
  std::vector<bool> detected;
  for (int i = 0; i <= grid; ++i) {
    const double x = i * h;
    const DetectorReading r = read_detector(family(x), d);
    out.grid_x.push_back(x);
    out.grid_values.push_back(r.value);
    detected.push_back(r.detected());
  }

  // Continuity: no jump may exceed 10 * h * (mean absolute slope).
  double mean_step = 0.0;
  for (int i = 0; i < grid; ++i) {
    mean_step += std::abs(out.grid_values[i + 1] - out.grid_values[i]);
  }
  mean_step /= grid;
  for (int i = 0; i < grid; ++i) {
    if (std::abs(out.grid_values[i + 1] - out.grid_values[i]) > 10.0 * mean_step + 1e-12) {
      out.smooth = false;
    }
  }

  int changes = 0;
  int first = -1;
  for (int i = 0; i < grid; ++i) {
    if (detected[i] != detected[i + 1]) ++changes;
    if (first < 0 && !detected[i] && detected[i + 1]) first = i;
  }
  out.monotone = changes <= 1 && (first >= 0 || changes == 0);

  if (detected[0]) {
    // Entangled over the whole grid, including the noise-only end.
    out.threshold = 0.0;
    out.bracket = {0.0, 0.0};
    return out;
  }
  if (first < 0) return out;  // nothing detected

  auto hit = [&](double x) { return read_detector(family(x), d).detected(); };
  double lo = out.grid_x[first];
  double hi = out.grid_x[first + 1];
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (hit(mid) ? hi : lo) = mid;
  }
  if (hit(lo) || !hit(hi)) {
    throw ConsistencyError("scan_threshold: bracket endpoints failed re-evaluation");
  }
  out.bracket = {lo, hi};
  out.resolution = hi - lo;
  out.threshold = 0.5 * (lo + hi);
  return out;
}

AnalyticThresholds analytic_thresholds(int n_qubits) {
  if (n_qubits < 2 || n_qubits % 2 != 0) {
    throw DomainError("analytic_thresholds: N must be even and >= 2, got " +
                      std::to_string(n_qubits));
  }
  const double n = n_qubits;
  return {n_qubits, 1.0 / (n * n), 1.0 / (n + 2.0), n * n / (n * n + 12.0)};
}

MultiIndex ghz_witness_index(int k) {
  std::vector<Axis> axes(static_cast<std::size_t>(k), Axis::x);
  axes.back() = Axis::y;
  return MultiIndex(std::move(axes));
}

MultiIndex w_witness_index(int k) {
  return MultiIndex(std::vector<Axis>(static_cast<std::size_t>(k), Axis::z));
}

}  // namespace symcov
