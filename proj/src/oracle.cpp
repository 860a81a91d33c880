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

#include "symcov/oracle.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace symcov::oracle {

namespace {

using cd = std::complex<double>;

void require_full_size(int n_qubits, const char* what) {
  if (n_qubits > kMaxFullQubits) {
    throw ResourceError(std::string(what) + ": " + std::to_string(n_qubits) +
                        " qubits exceeds the full-space cap of " +
                        std::to_string(kMaxFullQubits));
  }
}

// Columns are the normalized Dicke vectors in the computational basis.
Eigen::MatrixXcd dicke_basis(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(dim, n + 1);
  for (Eigen::Index b = 0; b < dim; ++b) {
    d(b, std::popcount(static_cast<std::uint64_t>(b))) = 1.0;
  }
  for (int p = 0; p <= n; ++p) d.col(p).normalize();
  return d;
}

char axis_of(std::size_t code_digit) { return "xyz"[code_digit]; }

// Base-3 digits of `code`, most significant first, as axis characters.
std::string axis_string(std::size_t code, int k) {
  std::string s(static_cast<std::size_t>(k), 'x');
  for (int i = k - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = axis_of(code % 3);
    code /= 3;
  }
  return s;
}

}  // namespace

const Eigen::Matrix2cd& pauli(char axis) {
  static const Eigen::Matrix2cd kI = Eigen::Matrix2cd::Identity();
  static const Eigen::Matrix2cd kX = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd kY = (Eigen::Matrix2cd() << 0, cd(0, -1), cd(0, 1), 0).finished();
  static const Eigen::Matrix2cd kZ = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  switch (axis) {
    case '0': return kI;
    case 'x': return kX;
    case 'y': return kY;
    case 'z': return kZ;
    default: throw DomainError(std::string("unknown Pauli axis '") + axis + "'");
  }
}

FullState embed_full(const SymmetricState& rho) {
  require_full_size(rho.n_qubits(), "embed_full");
  const Eigen::MatrixXcd d = dicke_basis(rho.n_qubits());
  return {rho.n_qubits(), d * rho.dicke_matrix() * d.adjoint()};
}

SymmetricState restrict_to_symmetric(const FullState& fs) {
  const Eigen::MatrixXcd d = dicke_basis(fs.n_qubits);
  return SymmetricState::from_matrix(fs.n_qubits, d.adjoint() * fs.matrix * d);
}

cd product_expectation(const FullState& fs, std::span<const Eigen::Matrix2cd> factors) {
  const int n = fs.n_qubits;
  if (static_cast<int>(factors.size()) != n) {
    throw DomainError("product_expectation: need one factor per qubit");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  // Tr[rho O] = sum_{c, r} rho(c, r) O(r, c); expand the nonzero entries of
  // column c of O = (x)_q M_q one qubit at a time.
  std::vector<std::pair<std::uint64_t, cd>> rows, next;
  cd total = 0.0;
  for (std::uint64_t c = 0; c < dim; ++c) {
    rows.assign(1, {0, cd(1.0)});
    for (int q = 0; q < n; ++q) {
      const int pos = n - 1 - q;
      const int cq = static_cast<int>((c >> pos) & 1u);
      const Eigen::Matrix2cd& m = factors[static_cast<std::size_t>(q)];
      next.clear();
      for (const auto& [r, amp] : rows) {
        for (int b = 0; b < 2; ++b) {
          const cd e = m(b, cq);
          if (e != cd(0.0)) next.emplace_back(r | (std::uint64_t(b) << pos), amp * e);
        }
      }
      rows.swap(next);
      if (rows.empty()) break;
    }
    for (const auto& [r, amp] : rows) {
      total += fs.matrix(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r)) * amp;
    }
  }
  return total;
}

double pauli_expectation(const FullState& fs, std::string_view axes) {
  if (static_cast<int>(axes.size()) != fs.n_qubits) {
    throw DomainError("pauli_expectation: axis string length must equal the qubit count");
  }
  std::vector<Eigen::Matrix2cd> factors;
  factors.reserve(axes.size());
  for (char a : axes) factors.push_back(pauli(a));
  const cd v = product_expectation(fs, factors);
  if (std::abs(v.imag()) > 1e-10) {
    throw ConsistencyError("pauli_expectation: imaginary part " + std::to_string(v.imag()) +
                           " for '" + std::string(axes) + "'");
  }
  return v.real();
}

FullState partial_trace(const FullState& fs, int n_keep) {
  if (n_keep < 1 || n_keep > fs.n_qubits) throw DomainError("partial_trace: bad n_keep");
  const Eigen::Index keep = Eigen::Index{1} << n_keep;
  const Eigen::Index gone = Eigen::Index{1} << (fs.n_qubits - n_keep);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(keep, keep);
  for (Eigen::Index a = 0; a < keep; ++a)
    for (Eigen::Index ap = 0; ap < keep; ++ap)
      for (Eigen::Index b = 0; b < gone; ++b) out(a, ap) += fs.matrix(a * gone + b, ap * gone + b);
  return {n_keep, std::move(out)};
}

FullState permute_qubits(const FullState& fs, std::span<const int> perm) {
  const int n = fs.n_qubits;
  if (static_cast<int>(perm.size()) != n) throw DomainError("permute_qubits: bad permutation");
  const Eigen::Index dim = Eigen::Index{1} << n;
  auto map = [&](Eigen::Index out) {
    Eigen::Index in = 0;
    for (int q = 0; q < n; ++q) {
      const Eigen::Index bit = (out >> (n - 1 - q)) & 1;
      in |= bit << (n - 1 - perm[static_cast<std::size_t>(q)]);
    }
    return in;
  };
  std::vector<Eigen::Index> src(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) src[static_cast<std::size_t>(i)] = map(i);
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      out(i, j) = fs.matrix(src[static_cast<std::size_t>(i)], src[static_cast<std::size_t>(j)]);
  return {n, std::move(out)};
}

FullState conjugate_collective(const FullState& fs, const Eigen::Matrix2cd& u) {
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = 0; q < fs.n_qubits; ++q) {
    Eigen::MatrixXcd next(big.rows() * 2, big.cols() * 2);
    for (Eigen::Index i = 0; i < big.rows(); ++i)
      for (Eigen::Index j = 0; j < big.cols(); ++j) next.block<2, 2>(2 * i, 2 * j) = big(i, j) * u;
    big = std::move(next);
  }
  return {fs.n_qubits, big * fs.matrix * big.adjoint()};
}

Eigen::Matrix3d rotation_from_unitary(const Eigen::Matrix2cd& u) {
  static constexpr char kAxes[3] = {'x', 'y', 'z'};
  Eigen::Matrix3d r;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      r(a, b) = 0.5 * (pauli(kAxes[a]) * u * pauli(kAxes[b]) * u.adjoint()).trace().real();
  return r;
}

Eigen::Matrix2cd random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector4d q(g(rng), g(rng), g(rng), g(rng));
  q.normalize();
  Eigen::Matrix2cd u;
  u << cd(q(0), q(1)), cd(q(2), q(3)), cd(-q(2), q(3)), cd(q(0), -q(1));
  return u;
}

BruteCovariance brute_force_covariance(const FullState& fs, int k) {
  const int n = fs.n_qubits;
  if (k < 1 || 2 * k > n) throw DomainError("brute_force_covariance: need 2k <= N");
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) count *= 3;
  const std::string pad_rest(static_cast<std::size_t>(n - 2 * k), '0');
  const std::string idle(static_cast<std::size_t>(k), '0');

  std::vector<std::string> idx(count);
  Eigen::VectorXd mean_a(static_cast<Eigen::Index>(count));
  Eigen::VectorXd mean_b(static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < count; ++i) {
    idx[i] = axis_string(i, k);
    mean_a(static_cast<Eigen::Index>(i)) = pauli_expectation(fs, idx[i] + idle + pad_rest);
    mean_b(static_cast<Eigen::Index>(i)) = pauli_expectation(fs, idle + idx[i] + pad_rest);
  }

  // 1/2 <{O_i, O_j}> on the group starting at qubit `offset`.
  auto symmetrized = [&](const std::string& si, const std::string& sj, int offset) {
    std::vector<Eigen::Matrix2cd> fij(static_cast<std::size_t>(n), Eigen::Matrix2cd::Identity());
    std::vector<Eigen::Matrix2cd> fji = fij;
    for (int q = 0; q < k; ++q) {
      const auto uq = static_cast<std::size_t>(q);
      fij[static_cast<std::size_t>(offset + q)] = pauli(si[uq]) * pauli(sj[uq]);
      fji[static_cast<std::size_t>(offset + q)] = pauli(sj[uq]) * pauli(si[uq]);
    }
    return 0.5 * (product_expectation(fs, fij) + product_expectation(fs, fji)).real();
  };

  const auto side = static_cast<Eigen::Index>(count);
  BruteCovariance out{Eigen::MatrixXd(side, side), Eigen::MatrixXd(side, side),
                      Eigen::MatrixXd(side, side)};
  for (Eigen::Index i = 0; i < side; ++i) {
    for (Eigen::Index j = 0; j < side; ++j) {
      const auto& si = idx[static_cast<std::size_t>(i)];
      const auto& sj = idx[static_cast<std::size_t>(j)];
      out.c_block(i, j) = pauli_expectation(fs, si + sj + pad_rest) - mean_a(i) * mean_b(j);
      out.a_block(i, j) = symmetrized(si, sj, 0) - mean_a(i) * mean_a(j);
      out.b_block(i, j) = symmetrized(si, sj, k) - mean_b(i) * mean_b(j);
    }
  }
  return out;
}

double ppt_min_eigenvalue(const FullState& rho2) {
  const Eigen::MatrixXcd& m = rho2.matrix;
  if (rho2.n_qubits != 2 || m.rows() != 4 || m.cols() != 4) {
    throw DomainError("ppt_min_eigenvalue: expects a two-qubit (4x4) density matrix");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermiticityTol * 10 ||
      std::abs(m.trace() - cd(1.0)) > kTraceTol * 10) {
    throw DomainError("ppt_min_eigenvalue: input is not a density matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> check(m, Eigen::EigenvaluesOnly);
  if (check.eigenvalues()(0) < -kPsdTol) {
    throw DomainError("ppt_min_eigenvalue: input is not positive semidefinite");
  }
  // rho^{T_B}(a b, a' b') = rho(a b', a' b)
  Eigen::Matrix4cd pt;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp) pt(2 * a + b, 2 * ap + bp) = m(2 * a + bp, 2 * ap + b);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SeparableSample sample_separable(int n_qubits, int terms, std::uint64_t seed) {
  if (n_qubits < 2) throw DomainError("sample_separable: need N >= 2");
  if (terms < 1) throw DomainError("sample_separable: need at least one term");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);

  SeparableEnsemble ens;
  double total = 0.0;
  for (int w = 0; w < terms; ++w) {
    const double cos_theta = 2.0 * unit(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    ens.directions.push_back(BlochDirection::canonical(std::acos(cos_theta), phi));
    ens.weights.push_back(expo(rng));
    total += ens.weights.back();
  }
  for (double& p : ens.weights) p /= total;

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_qubits + 1, n_qubits + 1);
  for (int w = 0; w < terms; ++w) {
    const auto uw = static_cast<std::size_t>(w);
    m += ens.weights[uw] * product_state(n_qubits, ens.directions[uw]).dicke_matrix();
  }
  m /= m.trace().real();
  return {seed, std::move(ens), SymmetricState::from_matrix(n_qubits, std::move(m))};
}

SymmetricState random_symmetric_state(int n_qubits, int rank, std::mt19937_64& rng) {
  if (rank < 1) throw DomainError("random_symmetric_state: rank must be positive");
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n_qubits + 1, rank);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = cd(g(rng), g(rng));
  Eigen::MatrixXcd m = a * a.adjoint();
  m /= m.trace().real();
  return SymmetricState::from_matrix(n_qubits, std::move(m));
}

}  // namespace symcov::oracle
