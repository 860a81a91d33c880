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

#include "symcov/tensors.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>

namespace symcov {

namespace {

using cd = std::complex<double>;

}  // namespace

char axis_char(Axis a) {
  switch (a) {
    case Axis::x: return 'x';
    case Axis::y: return 'y';
    case Axis::z: return 'z';
  }
  return '?';
}

std::size_t pow3(int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

MultiIndex MultiIndex::parse(std::string_view text) {
  std::vector<Axis> axes;
  axes.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'x': case 'X': axes.push_back(Axis::x); break;
      case 'y': case 'Y': axes.push_back(Axis::y); break;
      case 'z': case 'Z': axes.push_back(Axis::z); break;
      default:
        throw DomainError("multi-index '" + std::string(text) + "' contains '" +
                          std::string(1, ch) + "'; expected only x, y, z");
    }
  }
  return MultiIndex(std::move(axes));
}

MultiIndex MultiIndex::decode(int rank, std::size_t code) {
  if (rank < 0 || code >= pow3(rank)) {
    throw DomainError("multi-index code " + std::to_string(code) + " out of range for rank " +
                      std::to_string(rank));
  }
  std::vector<Axis> axes(static_cast<std::size_t>(rank));
  for (int i = rank - 1; i >= 0; --i) {
    axes[static_cast<std::size_t>(i)] = static_cast<Axis>(code % 3);
    code /= 3;
  }
  return MultiIndex(std::move(axes));
}

std::size_t MultiIndex::encode() const {
  std::size_t code = 0;
  for (Axis a : axes_) code = 3 * code + static_cast<std::size_t>(a);
  return code;
}

std::string MultiIndex::str() const {
  std::string s;
  s.reserve(axes_.size());
  for (Axis a : axes_) s.push_back(axis_char(a));
  return s;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  std::vector<Axis> axes = axes_;
  axes.insert(axes.end(), other.axes_.begin(), other.axes_.end());
  return MultiIndex(std::move(axes));
}

CorrelationTensor::CorrelationTensor(int order, std::vector<double> values)
    : order_(order), values_(std::move(values)) {
  if (order < 0 || values_.size() != pow3(order)) {
    throw DomainError("correlation tensor of order " + std::to_string(order) + " needs " +
                      std::to_string(pow3(order)) + " values");
  }
}

double CorrelationTensor::at(const MultiIndex& idx) const {
  if (idx.rank() != order_) {
    throw DomainError("multi-index rank " + std::to_string(idx.rank()) +
                      " does not match tensor order " + std::to_string(order_));
  }
  return values_[idx.encode()];
}

double correlation_entry(const SymmetricState& rho_l, const MultiIndex& axes) {
  const int l = rho_l.n_qubits();
  if (axes.rank() != l) {
    throw DomainError("correlation_entry: multi-index rank must equal the qubit count");
  }
  // Dicke vector p embeds as the uniform superposition of the C(l, p)
  // strings with p ones, so rho_full(b, b') = rho(|b|, |b'|) / sqrt(C C').
  std::vector<double> inv_norm(static_cast<std::size_t>(l) + 1);
  for (int p = 0; p <= l; ++p) inv_norm[static_cast<std::size_t>(p)] = 1.0 / std::sqrt(binomial(l, p));

  // sigma-string maps |c> to phase(c) |c ^ flip>; qubit j is bit l-1-j.
  std::uint32_t flip = 0, ymask = 0, zmask = 0;
  for (int j = 0; j < l; ++j) {
    const std::uint32_t bit = 1u << (l - 1 - j);
    switch (axes[static_cast<std::size_t>(j)]) {
      case Axis::x: flip |= bit; break;
      case Axis::y: flip |= bit; ymask |= bit; break;
      case Axis::z: zmask |= bit; break;
    }
  }
  const int ny = std::popcount(ymask);
  // i^ny * (-1)^(#ones of c under y or z)
  static constexpr cd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cd base = kIPow[ny % 4];

  const Eigen::MatrixXcd& m = rho_l.dicke_matrix();
  cd acc = 0.0;
  const std::uint32_t dim = 1u << l;
  for (std::uint32_t c = 0; c < dim; ++c) {
    const std::uint32_t r = c ^ flip;
    const int pc = std::popcount(c);
    const int pr = std::popcount(r);
    const double sign = (std::popcount(c & (ymask | zmask)) & 1) ? -1.0 : 1.0;
    acc += sign * m(pc, pr) * inv_norm[static_cast<std::size_t>(pc)] *
           inv_norm[static_cast<std::size_t>(pr)];
  }
  return (base * acc).real();
}

CorrelationTensor correlation_tensor(const SymmetricState& rho, int l) {
  if (l < 1 || l > rho.n_qubits()) {
    throw DomainError("correlation_tensor: order " + std::to_string(l) + " outside [1, " +
                      std::to_string(rho.n_qubits()) + "]");
  }
  if (l > 24) throw ResourceError("correlation_tensor: order above 24 is not supported");
  const SymmetricState reduced = reduced_state(rho, l);
  const std::size_t count = pow3(l);
  std::vector<double> values(count);
  for (std::size_t code = 0; code < count; ++code) {
    values[code] = correlation_entry(reduced, MultiIndex::decode(l, code));
  }
  return CorrelationTensor(l, std::move(values));
}

Eigen::MatrixXcd embed_symmetric(const SymmetricState& rho) {
  const int l = rho.n_qubits();
  if (l > 12) throw ResourceError("embed_symmetric: more than 12 qubits");
  const Eigen::Index dim = Eigen::Index{1} << l;
  std::vector<double> inv_norm(static_cast<std::size_t>(l) + 1);
  for (int p = 0; p <= l; ++p) inv_norm[static_cast<std::size_t>(p)] = 1.0 / std::sqrt(binomial(l, p));
  const Eigen::MatrixXcd& m = rho.dicke_matrix();
  Eigen::MatrixXcd full(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const int pb = std::popcount(static_cast<std::uint32_t>(b));
    for (Eigen::Index bp = 0; bp < dim; ++bp) {
      const int pbp = std::popcount(static_cast<std::uint32_t>(bp));
      full(b, bp) = m(pb, pbp) * inv_norm[static_cast<std::size_t>(pb)] *
                    inv_norm[static_cast<std::size_t>(pbp)];
    }
  }
  return full;
}

Eigen::MatrixXcd pauli_string_matrix(const MultiIndex& axes) {
  static const Eigen::Matrix2cd kSigma[3] = {
      (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),
      (Eigen::Matrix2cd() << 0, cd(0, -1), cd(0, 1), 0).finished(),
      (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(),
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (Axis a : axes.axes()) {
    const Eigen::Matrix2cd& s = kSigma[static_cast<int>(a)];
    // out (x) s: the new axis becomes the least significant bit.
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j) next.block<2, 2>(2 * i, 2 * j) = out(i, j) * s;
    out = std::move(next);
  }
  return out;
}

Eigen::VectorXd moment_column(const CorrelationTensor& t) {
  const auto& v = t.values();
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Eigen::MatrixXd moment_matrix(const CorrelationTensor& t) {
  if (t.order() % 2 != 0) {
    throw DomainError("moment_matrix: tensor order " + std::to_string(t.order()) +
                      " is odd");
  }
  const auto side = static_cast<Eigen::Index>(pow3(t.order() / 2));
  // (i, j) -> code i * 3^k + j, i.e. a row-major reshape.
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  return Eigen::Map<const RowMajor>(t.values().data(), side, side);
}

}  // namespace symcov
