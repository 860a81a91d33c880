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
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "symcov/symstate.hpp"

namespace symcov {

enum class Axis : unsigned char { x = 0, y = 1, z = 2 };

char axis_char(Axis a);

/// Ordered tuple of k Cartesian axes. Encodes bijectively to 0..3^k-1 in
/// base 3 with x -> 0, y -> 1, z -> 2 and the leftmost axis most significant.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<Axis> axes) : axes_(std::move(axes)) {}

  /// Parses "xyz"-style strings; throws DomainError on other characters.
  static MultiIndex parse(std::string_view text);
  static MultiIndex decode(int rank, std::size_t code);

  int rank() const { return static_cast<int>(axes_.size()); }
  const std::vector<Axis>& axes() const { return axes_; }
  Axis operator[](std::size_t i) const { return axes_[i]; }

  std::size_t encode() const;
  std::string str() const;

  /// Concatenation i || j.
  MultiIndex operator+(const MultiIndex& other) const;

  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<Axis> axes_;
};

/// 3^n.
std::size_t pow3(int n);

/// Order-l moments T^(l)_{i_1..i_l} = <sigma_{i_1} (x) ... (x) sigma_{i_l}>,
/// stored in MultiIndex encoding order.
class CorrelationTensor {
 public:
  CorrelationTensor(int order, std::vector<double> values);

  int order() const { return order_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t code) const { return values_[code]; }
  double at(const MultiIndex& idx) const;

 private:
  int order_;
  std::vector<double> values_;
};

/// T^(l) of `rho`. Requires 1 <= l <= N.
CorrelationTensor correlation_tensor(const SymmetricState& rho, int l);

/// <sigma-string> on the first l = axes.size() qubits. Exposed for callers
/// that need a handful of entries without building the whole tensor.
double correlation_entry(const SymmetricState& rho_l, const MultiIndex& axes);

/// Dense 2^l x 2^l computational-basis matrix of a symmetric state: Dicke
/// vector p maps to the normalized sum of the C(l, p) strings with p ones.
Eigen::MatrixXcd embed_symmetric(const SymmetricState& rho);

/// sigma_{a_1} (x) ... (x) sigma_{a_k} as a dense 2^k x 2^k matrix, first
/// axis on the most significant bit.
Eigen::MatrixXcd pauli_string_matrix(const MultiIndex& axes);

/// Column of 3^k entries laid out by MultiIndex encoding.
Eigen::VectorXd moment_column(const CorrelationTensor& t);

/// T^(2k) as a 3^k x 3^k matrix with entry (i, j) = T_{i||j}.
Eigen::MatrixXd moment_matrix(const CorrelationTensor& t);

}  // namespace symcov
