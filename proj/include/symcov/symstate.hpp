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

#include <Eigen/Dense>

#include "symcov/errors.hpp"

namespace symcov {

/// Tolerances attached to the SymmetricState invariants.
inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kPurityTol = 1e-10;

/// Density matrix of a permutation-symmetric N-qubit state, stored in the
/// (N+1)-dimensional Dicke basis. Row/column p counts |1> excitations, so
/// p = 0 is |0...0> and p = N is |1...1>.
///
/// Instances always satisfy the three invariants (Hermitian, unit trace,
/// positive semidefinite); `from_matrix` is the only way to wrap an
/// arbitrary matrix and it rejects invalid input.
class SymmetricState {
 public:
  static SymmetricState from_matrix(int n_qubits, Eigen::MatrixXcd dicke_matrix);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& dicke_matrix() const { return matrix_; }

  /// Tr(rho^2).
  double purity() const;

 private:
  SymmetricState(int n_qubits, Eigen::MatrixXcd m)
      : n_qubits_(n_qubits), matrix_(std::move(m)) {}

  int n_qubits_;
  Eigen::MatrixXcd matrix_;
};

/// Diagnostic for a candidate density matrix. Never throws.
struct StateDiagnostics {
  bool shape_ok = false;
  double hermiticity_defect = 0.0;  // max |M - M^dagger| entry
  double trace_defect = 0.0;        // |Tr M - 1|
  double min_eigenvalue = 0.0;      // of the Hermitian part

  bool hermitian_ok() const { return hermiticity_defect <= kHermiticityTol; }
  bool trace_ok() const { return trace_defect <= kTraceTol; }
  bool psd_ok() const { return min_eigenvalue >= -kPsdTol; }
  bool ok() const { return shape_ok && hermitian_ok() && trace_ok() && psd_ok(); }
};

StateDiagnostics validate(int n_qubits, const Eigen::MatrixXcd& dicke_matrix);
StateDiagnostics validate(const SymmetricState& rho);

/// Direction on the Bloch sphere. Construct via `canonical` to fold
/// arbitrary angles into theta in [0, pi], phi in [0, 2 pi).
struct BlochDirection {
  double theta = 0.0;
  double phi = 0.0;

  static BlochDirection canonical(double theta, double phi);
};

/// Projector onto the Dicke vector with `p` excitations.
SymmetricState dicke_state(int n_qubits, int p);

/// (|0...0> + |1...1>)/sqrt(2). Requires N >= 2.
SymmetricState ghz_state(int n_qubits);

/// The one-excitation Dicke state. Requires N >= 2.
SymmetricState w_state(int n_qubits);

/// Coherent spin state (cos(t/2)|0> + e^{i phi} sin(t/2)|1>)^{(x) N}.
SymmetricState product_state(int n_qubits, const BlochDirection& dir);

/// (1 - x)/(N + 1) * P_N + x * psi. `psi` must be pure.
SymmetricState noisy_mixture(const SymmetricState& psi, double x);

/// Partial trace down to `n_keep` qubits, done in the Dicke basis by
/// splitting each Dicke vector over the (n_keep, N - n_keep) bipartition.
SymmetricState reduced_state(const SymmetricState& rho, int n_keep);

/// C(n, k) as a double (exact for the sizes used here).
double binomial(int n, int k);

}  // namespace symcov
