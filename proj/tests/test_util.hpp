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

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "symcov/oracle.hpp"
#include "symcov/symstate.hpp"

namespace symcov::testing {

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  return (a - b).cwiseAbs().maxCoeff();
}

/// Mixed or pure state of random rank between 1 and N+1.
inline SymmetricState random_state(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rank(1, n + 1);
  return oracle::random_symmetric_state(n, rank(rng), rng);
}

}  // namespace symcov::testing
