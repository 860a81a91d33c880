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

#include "symcov/symstate.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

namespace symcov {

namespace {

using cd = std::complex<double>;

void require_qubits(int n_qubits, int minimum, const char* what) {
  if (n_qubits < minimum) {
    throw DomainError(std::string(what) + ": need at least " + std::to_string(minimum) +
                      " qubits, got " + std::to_string(n_qubits));
  }
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

SymmetricState projector(int n_qubits, const Eigen::VectorXcd& v) {
  return SymmetricState::from_matrix(n_qubits, v * v.adjoint());
}

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

SymmetricState SymmetricState::from_matrix(int n_qubits, Eigen::MatrixXcd dicke_matrix) {
  require_qubits(n_qubits, 1, "SymmetricState");
  const StateDiagnostics diag = validate(n_qubits, dicke_matrix);
  if (!diag.shape_ok) {
    throw DomainError("dicke matrix must be " + std::to_string(n_qubits + 1) + "x" +
                      std::to_string(n_qubits + 1));
  }
  if (!diag.hermitian_ok()) {
    throw DomainError("density matrix is not Hermitian (defect " +
                      std::to_string(diag.hermiticity_defect) + ")");
  }
  if (!diag.trace_ok()) {
    throw DomainError("density matrix trace differs from 1 by " +
                      std::to_string(diag.trace_defect));
  }
  if (!diag.psd_ok()) {
    throw DomainError("density matrix has negative eigenvalue " +
                      std::to_string(diag.min_eigenvalue));
  }
  // Remove the sub-tolerance anti-Hermitian residue so downstream
  // eigensolvers see an exactly Hermitian matrix.
  Eigen::MatrixXcd herm = 0.5 * (dicke_matrix + dicke_matrix.adjoint());
  return SymmetricState(n_qubits, std::move(herm));
}

double SymmetricState::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return matrix_.squaredNorm();
}

StateDiagnostics validate(int n_qubits, const Eigen::MatrixXcd& m) {
  StateDiagnostics d;
  d.shape_ok = n_qubits >= 1 && m.rows() == n_qubits + 1 && m.cols() == n_qubits + 1;
  if (m.rows() != m.cols() || m.size() == 0) {
    d.shape_ok = false;
    d.hermiticity_defect = std::numeric_limits<double>::infinity();
    d.trace_defect = std::numeric_limits<double>::infinity();
    d.min_eigenvalue = -std::numeric_limits<double>::infinity();
    return d;
  }
  d.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  d.trace_defect = std::abs(m.trace() - cd(1.0, 0.0));
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

StateDiagnostics validate(const SymmetricState& rho) {
  return validate(rho.n_qubits(), rho.dicke_matrix());
}

BlochDirection BlochDirection::canonical(double theta, double phi) {
  constexpr double pi = std::numbers::pi;
  theta = std::fmod(theta, 2.0 * pi);
  if (theta < 0.0) theta += 2.0 * pi;
  if (theta > pi) {
    theta = 2.0 * pi - theta;
    phi += pi;
  }
  phi = std::fmod(phi, 2.0 * pi);
  if (phi < 0.0) phi += 2.0 * pi;
  if (phi >= 2.0 * pi) phi = 0.0;
  return {theta, phi};
}

SymmetricState dicke_state(int n_qubits, int p) {
  require_qubits(n_qubits, 1, "dicke_state");
  if (p < 0 || p > n_qubits) {
    throw DomainError("dicke_state: excitation count " + std::to_string(p) +
                      " outside [0, " + std::to_string(n_qubits) + "]");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n_qubits + 1);
  v(p) = 1.0;
  return projector(n_qubits, v);
}

SymmetricState ghz_state(int n_qubits) {
  require_qubits(n_qubits, 2, "ghz_state");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n_qubits + 1);
  v(0) = v(n_qubits) = std::numbers::sqrt2 / 2.0;
  return projector(n_qubits, v);
}

SymmetricState w_state(int n_qubits) {
  require_qubits(n_qubits, 2, "w_state");
  return dicke_state(n_qubits, 1);
}

SymmetricState product_state(int n_qubits, const BlochDirection& dir) {
  require_qubits(n_qubits, 1, "product_state");
  const BlochDirection d = BlochDirection::canonical(dir.theta, dir.phi);
  const double c = std::cos(d.theta / 2.0);
  const cd s = std::polar(std::sin(d.theta / 2.0), d.phi);
  Eigen::VectorXcd v(n_qubits + 1);
  for (int p = 0; p <= n_qubits; ++p) {
    cd amp = std::sqrt(binomial(n_qubits, p));
    for (int i = 0; i < n_qubits - p; ++i) amp *= c;
    for (int i = 0; i < p; ++i) amp *= s;
    v(p) = amp;
  }
  v.normalize();
  return projector(n_qubits, v);
}

SymmetricState noisy_mixture(const SymmetricState& psi, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("noisy_mixture: mixing parameter must lie in [0, 1]");
  }
  if (psi.purity() < 1.0 - kPurityTol) {
    throw PreconditionError("noisy_mixture: base state is not pure (Tr rho^2 = " +
                            std::to_string(psi.purity()) + ")");
  }
  const Eigen::Index d = psi.dim();
  Eigen::MatrixXcd m = (1.0 - x) / static_cast<double>(d) * Eigen::MatrixXcd::Identity(d, d) +
                       x * psi.dicke_matrix();
  return SymmetricState::from_matrix(psi.n_qubits(), std::move(m));
}

SymmetricState reduced_state(const SymmetricState& rho, int n_keep) {
  const int n = rho.n_qubits();
  if (n_keep < 1 || n_keep > n) {
    throw DomainError("reduced_state: n_keep " + std::to_string(n_keep) + " outside [1, " +
                      std::to_string(n) + "]");
  }
  if (n_keep == n) return rho;
  const int n_out = n - n_keep;
  // |D_N^p> = sum_q sqrt(C(n_keep,q) C(n_out,p-q) / C(N,p)) |D_keep^q>|D_out^(p-q)>
  auto split = [&](int q, int r) {
    return std::exp(0.5 * (log_binomial(n_keep, q) + log_binomial(n_out, r) -
                           log_binomial(n, q + r)));
  };
  const Eigen::MatrixXcd& m = rho.dicke_matrix();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n_keep + 1, n_keep + 1);
  for (int q = 0; q <= n_keep; ++q) {
    for (int qp = 0; qp <= n_keep; ++qp) {
      cd acc = 0.0;
      for (int r = 0; r <= n_out; ++r) {
        acc += m(q + r, qp + r) * split(q, r) * split(qp, r);
      }
      out(q, qp) = acc;
    }
  }
  return SymmetricState::from_matrix(n_keep, std::move(out));
}

}  // namespace symcov
