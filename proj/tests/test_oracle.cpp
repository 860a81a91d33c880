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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "symcov/covariance.hpp"
#include "symcov/oracle.hpp"
#include "test_util.hpp"

using namespace symcov;
using symcov::testing::max_abs_diff;

TEST_CASE("pauli_expectation on small states") {
  const oracle::FullState ghz = oracle::embed_full(ghz_state(2));
  CHECK(oracle::pauli_expectation(ghz, "xx") == doctest::Approx(1.0));
  CHECK(oracle::pauli_expectation(ghz, "yy") == doctest::Approx(-1.0));
  CHECK(oracle::pauli_expectation(ghz, "zz") == doctest::Approx(1.0));
  CHECK(oracle::pauli_expectation(ghz, "z0") == doctest::Approx(0.0));
  CHECK(oracle::pauli_expectation(ghz, "00") == doctest::Approx(1.0));

  const oracle::FullState w = oracle::embed_full(w_state(3));
  CHECK(oracle::pauli_expectation(w, "z00") == doctest::Approx(1.0 / 3));
  CHECK(oracle::pauli_expectation(w, "xx0") == doctest::Approx(2.0 / 3));
  CHECK_THROWS_AS(oracle::pauli_expectation(w, "xx"), DomainError);
  CHECK_THROWS_AS(oracle::pauli_expectation(w, "xxq"), DomainError);
}

TEST_CASE("partial transpose of two-qubit states") {
  CHECK(oracle::ppt_min_eigenvalue(oracle::embed_full(ghz_state(2))) == doctest::Approx(-0.5));
  const oracle::FullState w4 = oracle::partial_trace(oracle::embed_full(w_state(4)), 2);
  CHECK(oracle::ppt_min_eigenvalue(w4) == doctest::Approx((1.0 - std::numbers::sqrt2) / 4));
  const oracle::FullState prod = oracle::embed_full(product_state(2, {0.7, 1.9}));
  CHECK(oracle::ppt_min_eigenvalue(prod) >= -1e-12);
  CHECK_THROWS_AS(oracle::ppt_min_eigenvalue(oracle::embed_full(ghz_state(3))), DomainError);
}

TEST_CASE("embedding round trip and resource cap") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 7; ++n) {
    const SymmetricState rho = symcov::testing::random_state(n, rng);
    const SymmetricState back = oracle::restrict_to_symmetric(oracle::embed_full(rho));
    CHECK(max_abs_diff(back.dicke_matrix(), rho.dicke_matrix()) < 1e-12);
  }
  CHECK_THROWS_AS(oracle::embed_full(ghz_state(13)), ResourceError);
}

TEST_CASE("symmetric states are invariant under qubit permutations") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 6; ++n) {
    const oracle::FullState fs = oracle::embed_full(symcov::testing::random_state(n, rng));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(max_abs_diff(oracle::permute_qubits(fs, perm).matrix, fs.matrix) < 1e-12);
    }
  }

  // A non-symmetric product state does change.
  Eigen::Matrix4cd up_down = Eigen::Matrix4cd::Zero();
  up_down(1, 1) = 1.0;  // |01>
  const oracle::FullState fs{2, up_down};
  const std::vector<int> swap{1, 0};
  CHECK(oracle::permute_qubits(fs, swap).matrix(2, 2) == std::complex<double>(1.0));
}

TEST_CASE("rotation_from_unitary is a homomorphism into SO(3)") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Matrix2cd u = oracle::random_su2(rng);
    const Eigen::Matrix2cd v = oracle::random_su2(rng);
    CHECK(max_abs_diff(Eigen::Matrix2cd(u * u.adjoint()), Eigen::Matrix2cd::Identity()) < 1e-12);
    const Eigen::Matrix3d r = oracle::rotation_from_unitary(u);
    CHECK(max_abs_diff(Eigen::Matrix3d(r * r.transpose()), Eigen::Matrix3d::Identity()) < 1e-12);
    CHECK(r.determinant() == doctest::Approx(1.0));
    const Eigen::Matrix3d ruv = oracle::rotation_from_unitary(u * v);
    CHECK(max_abs_diff(ruv, Eigen::Matrix3d(r * oracle::rotation_from_unitary(v))) < 1e-12);
  }
  // exp(-i pi/4 Z) rotates x to y.
  Eigen::Matrix2cd rz = Eigen::Matrix2cd::Zero();
  rz(0, 0) = std::polar(1.0, -std::numbers::pi / 4);
  rz(1, 1) = std::polar(1.0, std::numbers::pi / 4);
  const Eigen::Matrix3d r = oracle::rotation_from_unitary(rz);
  CHECK(r(1, 0) == doctest::Approx(1.0));
  CHECK(r(0, 1) == doctest::Approx(-1.0));
}

TEST_CASE("sample_separable is deterministic and well formed") {
  const auto a = oracle::sample_separable(4, 5, 1234);
  const auto b = oracle::sample_separable(4, 5, 1234);
  const auto c = oracle::sample_separable(4, 5, 1235);
  CHECK(max_abs_diff(a.state.dicke_matrix(), b.state.dicke_matrix()) == 0.0);
  CHECK(max_abs_diff(a.state.dicke_matrix(), c.state.dicke_matrix()) > 1e-6);
  CHECK(a.ensemble.weights.size() == 5);
  CHECK(std::accumulate(a.ensemble.weights.begin(), a.ensemble.weights.end(), 0.0) ==
        doctest::Approx(1.0));
  CHECK(validate(a.state).ok());
  CHECK(oracle::derive_seed(1, 0) != oracle::derive_seed(1, 1));
  CHECK(oracle::derive_seed(1, 0) == oracle::derive_seed(1, 0));
  CHECK_THROWS_AS(oracle::sample_separable(4, 0, 1), DomainError);
}

TEST_CASE("one-term separable samples have vanishing covariance") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = oracle::sample_separable(6, 1, seed);
    for (int k = 1; k <= 3; ++k) {
      CHECK(inter_group_covariance(s.state, k).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("separable samples never produce negative covariance") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const int n = 2 + 2 * static_cast<int>(i % 4);
    const auto s = oracle::sample_separable(n, 1 + static_cast<int>(i % 7),
                                            oracle::derive_seed(99, i));
    for (int k = 1; 2 * k <= n; ++k) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(inter_group_covariance(s.state, k),
                                                        Eigen::EigenvaluesOnly);
      CHECK(es.eigenvalues()(0) >= -1e-9);
    }
  }
}

TEST_CASE("k = 1 covariance negativity agrees with PPT") {
  std::mt19937_64 rng(404);
  int disagreements = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 5;
    const SymmetricState rho = symcov::testing::random_state(n, rng);
    const double ppt = oracle::ppt_min_eigenvalue(oracle::embed_full(reduced_state(rho, 2)));
    const NegativityReport rep = test_entanglement(rho, 1);
    if ((ppt < -1e-9) != rep.entangled) {
      if (std::abs(ppt) > 1e-7 || std::abs(rep.min_eigenvalue) > 1e-7) ++disagreements;
    }
  }
  CHECK(disagreements == 0);
}
