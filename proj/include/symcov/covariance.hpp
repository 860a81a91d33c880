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

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "symcov/symstate.hpp"
#include "symcov/tensors.hpp"

namespace symcov {

inline constexpr double kDefaultNegativityTol = 1e-9;

/// Second-moment blocks for two disjoint k-qubit groups a (qubits 1..k)
/// and b (qubits k+1..2k). By exchange symmetry the two diagonal blocks
/// coincide, so only A is stored.
///
///   c_block(i, j) = T^(2k)_{i||j} - T^(k)_i T^(k)_j        (inter-group)
///   a_block(i, j) = 1/2 <{A_i, A_j}> - <A_i><A_j>          (intra-group)
struct CovarianceMatrix {
  int n_qubits = 0;
  int k = 0;
  Eigen::MatrixXd c_block;
  Eigen::MatrixXd a_block;
};

CovarianceMatrix covariance_matrix(const SymmetricState& rho, int k);

/// Just the inter-group block C^(2k).
Eigen::MatrixXd inter_group_covariance(const SymmetricState& rho, int k);

/// The 2*3^k variance matrix [[A, C], [C^T, A]].
Eigen::MatrixXd full_variance(const CovarianceMatrix& cm);

/// Conjugates both blocks by R^{(x) k}. R must be a proper rotation.
CovarianceMatrix rotate(const CovarianceMatrix& cm, const Eigen::Matrix3d& r);

/// R^{(x) k} (3^k x 3^k).
Eigen::MatrixXd kron_power(const Eigen::Matrix3d& r, int k);

double min_eigenvalue(const CovarianceMatrix& cm);

/// Scale-aware cutoff: base * max(1, ||C||_inf).
double negativity_tolerance(const Eigen::MatrixXd& c, double base = kDefaultNegativityTol);

struct MinorCertificate {
  std::vector<std::size_t> indices;  // multi-index codes, ascending
  double value = 0.0;
};

/// Determinant of the principal submatrix on `indices`, computed directly
/// (closed forms up to 3x3, LU otherwise).
double principal_minor(const Eigen::MatrixXd& m, const std::vector<std::size_t>& indices);

/// Scans principal minors of c_block by increasing order (all 1x1, then all
/// 2x2, ...) up to `max_order` and returns the first one below -tol. A
/// negative tol selects negativity_tolerance(c_block). No result does not
/// certify positivity.
std::optional<MinorCertificate> principal_minor_search(const CovarianceMatrix& cm,
                                                       int max_order, double tol = -1.0);

enum class CertificateKind { minor, eigenvector };

struct Certificate {
  CertificateKind kind = CertificateKind::minor;
  std::vector<std::size_t> indices;  // minor support, or eigenvector support
  double value = 0.0;                // minor value, or X^T C X
  Eigen::VectorXd witness;           // eigenvector X (eigenvector kind only)
};

struct NegativityReport {
  int n_qubits = 0;
  int k = 0;
  double min_eigenvalue = 0.0;
  bool entangled = false;
  std::optional<Certificate> certificate;
  double tolerance = 0.0;  // effective (scaled) cutoff
};

/// Sufficient test for 2k-qubit entanglement: C^(2k) not positive
/// semidefinite. Tries the cheap order-1/2 minors first and always settles
/// the verdict on the minimum eigenvalue.
NegativityReport test_entanglement(const SymmetricState& rho, int k,
                                   double tol = kDefaultNegativityTol);

}  // namespace symcov
