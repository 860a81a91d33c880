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

#include "symcov/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace symcov {

namespace {

using cd = std::complex<double>;

void require_group_size(int n_qubits, int k, const char* what) {
  if (k < 1 || 2 * k > n_qubits) {
    throw DomainError(std::string(what) + ": need 1 <= k and 2k <= N, got k=" +
                      std::to_string(k) + ", N=" + std::to_string(n_qubits));
  }
}

// Calls f(indices) for every ascending `order`-subset of 0..n-1 until f
// returns true.
template <typename F>
bool for_each_subset(std::size_t n, int order, F&& f) {
  const auto r = static_cast<std::size_t>(order);
  if (r == 0 || r > n) return false;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Eigen::MatrixXd inter_group_covariance(const SymmetricState& rho, int k) {
  require_group_size(rho.n_qubits(), k, "inter_group_covariance");
  const Eigen::VectorXd col = moment_column(correlation_tensor(rho, k));
  return moment_matrix(correlation_tensor(rho, 2 * k)) - col * col.transpose();
}

CovarianceMatrix covariance_matrix(const SymmetricState& rho, int k) {
  require_group_size(rho.n_qubits(), k, "covariance_matrix");

  const Eigen::VectorXd col = moment_column(correlation_tensor(rho, k));
  const Eigen::MatrixXd t2k = moment_matrix(correlation_tensor(rho, 2 * k));

  CovarianceMatrix cm;
  cm.n_qubits = rho.n_qubits();
  cm.k = k;
  cm.c_block = t2k - col * col.transpose();

  // Intra-group block from operator products on the k-qubit reduction:
  // 1/2 Tr[rho_k (A_i A_j + A_j A_i)] - <A_i><A_j>.
  const Eigen::MatrixXcd rho_k = embed_symmetric(reduced_state(rho, k));
  const auto n = static_cast<Eigen::Index>(pow3(k));
  std::vector<Eigen::MatrixXcd> ops(static_cast<std::size_t>(n));
  std::vector<Eigen::MatrixXcd> rho_ops(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    auto& op = ops[static_cast<std::size_t>(i)];
    op = pauli_string_matrix(MultiIndex::decode(k, static_cast<std::size_t>(i)));
    rho_ops[static_cast<std::size_t>(i)] = rho_k * op;
  }
  cm.a_block.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& ri = rho_ops[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i; j < n; ++j) {
      const auto& rj = rho_ops[static_cast<std::size_t>(j)];
      // Tr(X Y) = sum_ab X_ab Y_ba
      const cd ij = ri.cwiseProduct(ops[static_cast<std::size_t>(j)].transpose()).sum();
      const cd ji = rj.cwiseProduct(ops[static_cast<std::size_t>(i)].transpose()).sum();
      const double v = 0.5 * (ij + ji).real() - col(i) * col(j);
      cm.a_block(i, j) = v;
      cm.a_block(j, i) = v;
    }
  }
  return cm;
}

Eigen::MatrixXd full_variance(const CovarianceMatrix& cm) {
  const Eigen::Index n = cm.c_block.rows();
  Eigen::MatrixXd v(2 * n, 2 * n);
  v.topLeftCorner(n, n) = cm.a_block;
  v.topRightCorner(n, n) = cm.c_block;
  v.bottomLeftCorner(n, n) = cm.c_block.transpose();
  v.bottomRightCorner(n, n) = cm.a_block;
  return v;
}

Eigen::MatrixXd kron_power(const Eigen::Matrix3d& r, int k) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
  for (int f = 0; f < k; ++f) {
    Eigen::MatrixXd next(out.rows() * 3, out.cols() * 3);
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j) next.block<3, 3>(3 * i, 3 * j) = out(i, j) * r;
    out = std::move(next);
  }
  return out;
}

CovarianceMatrix rotate(const CovarianceMatrix& cm, const Eigen::Matrix3d& r) {
  const double orth = (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  if (orth > 1e-10 || std::abs(r.determinant() - 1.0) > 1e-10) {
    throw DomainError("rotate: matrix is not a proper rotation (|R^T R - I| = " +
                      std::to_string(orth) + ", det = " + std::to_string(r.determinant()) + ")");
  }
  const Eigen::MatrixXd big = kron_power(r, cm.k);
  CovarianceMatrix out = cm;
  out.c_block = big * cm.c_block * big.transpose();
  out.a_block = big * cm.a_block * big.transpose();
  return out;
}

double min_eigenvalue(const CovarianceMatrix& cm) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cm.c_block, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double negativity_tolerance(const Eigen::MatrixXd& c, double base) {
  const double inf_norm = c.size() == 0 ? 0.0 : c.cwiseAbs().rowwise().sum().maxCoeff();
  return base * std::max(1.0, inf_norm);
}

double principal_minor(const Eigen::MatrixXd& m, const std::vector<std::size_t>& indices) {
  const auto r = static_cast<Eigen::Index>(indices.size());
  Eigen::MatrixXd sub(r, r);
  for (Eigen::Index a = 0; a < r; ++a)
    for (Eigen::Index b = 0; b < r; ++b)
      sub(a, b) = m(static_cast<Eigen::Index>(indices[static_cast<std::size_t>(a)]),
                    static_cast<Eigen::Index>(indices[static_cast<std::size_t>(b)]));
  return sub.fullPivLu().determinant();
}

std::optional<MinorCertificate> principal_minor_search(const CovarianceMatrix& cm,
                                                       int max_order, double tol) {
  const Eigen::MatrixXd& c = cm.c_block;
  if (tol < 0.0) tol = negativity_tolerance(c);
  const auto n = static_cast<std::size_t>(c.rows());
  auto at = [&](std::size_t i, std::size_t j) {
    return c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  };

  std::optional<MinorCertificate> found;
  for (int order = 1; order <= max_order && !found; ++order) {
    for_each_subset(n, order, [&](const std::vector<std::size_t>& idx) {
      double v = 0.0;
      if (order == 1) {
        v = at(idx[0], idx[0]);
      } else if (order == 2) {
        v = at(idx[0], idx[0]) * at(idx[1], idx[1]) - at(idx[0], idx[1]) * at(idx[1], idx[0]);
      } else {
        v = principal_minor(c, idx);
      }
      if (v < -tol) {
        found = MinorCertificate{idx, v};
        return true;
      }
      return false;
    });
  }
  if (found) {
    const double check = principal_minor(c, found->indices);
    if (!(check < -tol) || std::abs(check - found->value) > 1e-10 * std::max(1.0, std::abs(check))) {
      throw ConsistencyError("principal_minor_search: certificate failed re-evaluation");
    }
  }
  return found;
}

NegativityReport test_entanglement(const SymmetricState& rho, int k, double tol) {
  require_group_size(rho.n_qubits(), k, "test_entanglement");
  if (!(tol > 0.0)) throw DomainError("test_entanglement: tolerance must be positive");

  const CovarianceMatrix cm = covariance_matrix(rho, k);
  NegativityReport report;
  report.n_qubits = rho.n_qubits();
  report.k = k;
  report.tolerance = negativity_tolerance(cm.c_block, tol);

  std::optional<MinorCertificate> minor = principal_minor_search(cm, 2, report.tolerance);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cm.c_block);
  report.min_eigenvalue = es.eigenvalues()(0);
  report.entangled = report.min_eigenvalue < -report.tolerance;
  if (!report.entangled) return report;

  Certificate cert;
  if (minor) {
    cert.kind = CertificateKind::minor;
    cert.indices = std::move(minor->indices);
    cert.value = minor->value;
  } else {
    Eigen::VectorXd x = es.eigenvectors().col(0);
    Eigen::Index lead = 0;
    x.cwiseAbs().maxCoeff(&lead);
    if (x(lead) < 0.0) x = -x;
    cert.kind = CertificateKind::eigenvector;
    cert.value = x.dot(cm.c_block * x);
    if (!(cert.value < 0.0)) {
      throw ConsistencyError("test_entanglement: eigenvector witness is not negative");
    }
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (std::abs(x(i)) > 1e-9) cert.indices.push_back(static_cast<std::size_t>(i));
    }
    cert.witness = std::move(x);
  }
  report.certificate = std::move(cert);
  return report;
}

}  // namespace symcov
