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

#include <cmath>
#include <complex>
#include <numbers>

#include "symcov/oracle.hpp"
#include "symcov/symstate.hpp"
#include "test_util.hpp"

using namespace symcov;
using symcov::testing::max_abs_diff;
using cd = std::complex<double>;

namespace {

void check_invariants(const SymmetricState& rho) {
  const StateDiagnostics d = validate(rho);
  CHECK(d.ok());
  CHECK(d.hermiticity_defect <= 1e-12);
  CHECK(d.trace_defect <= 1e-12);
  CHECK(d.min_eigenvalue >= -1e-10);
}

Eigen::MatrixXcd max_mixed(int n) {
  return Eigen::MatrixXcd::Identity(n + 1, n + 1) / static_cast<double>(n + 1);
}

}  // namespace

TEST_CASE("dicke_state builds basis projectors") {
  const SymmetricState a = dicke_state(1, 0);
  Eigen::MatrixXcd expect(2, 2);
  expect << 1, 0, 0, 0;
  CHECK(max_abs_diff(a.dicke_matrix(), expect) == 0.0);

  const SymmetricState b = dicke_state(4, 2);
  Eigen::MatrixXcd e2 = Eigen::MatrixXcd::Zero(5, 5);
  e2(2, 2) = 1.0;
  CHECK(max_abs_diff(b.dicke_matrix(), e2) == 0.0);

  CHECK_THROWS_AS(dicke_state(3, 4), DomainError);
  CHECK_THROWS_AS(dicke_state(3, -1), DomainError);
}

TEST_CASE("ghz_state has weight 1/2 on the corners") {
  for (int n : {2, 4}) {
    const SymmetricState g = ghz_state(n);
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    expect(0, 0) = expect(0, n) = expect(n, 0) = expect(n, n) = 0.5;
    CHECK(max_abs_diff(g.dicke_matrix(), expect) < 1e-15);
  }
  for (int n = 2; n <= 12; ++n) {
    CHECK(ghz_state(n).purity() == doctest::Approx(1.0).epsilon(1e-14));
    check_invariants(ghz_state(n));
  }
  CHECK_THROWS_AS(ghz_state(1), DomainError);
}

TEST_CASE("w_state is the one-excitation Dicke state") {
  const SymmetricState w3 = w_state(3);
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
  expect(1, 1) = 1.0;
  CHECK(max_abs_diff(w3.dicke_matrix(), expect) == 0.0);

  // (|01> + |10>)/sqrt(2) in the computational basis
  Eigen::Vector4cd psi(0, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, 0);
  const oracle::FullState full = oracle::embed_full(w_state(2));
  CHECK(max_abs_diff(full.matrix, Eigen::Matrix4cd(psi * psi.adjoint())) < 1e-15);

  CHECK(w_state(6).purity() == doctest::Approx(1.0));
  CHECK_THROWS_AS(w_state(1), DomainError);
}

TEST_CASE("product_state expands the coherent spin state") {
  CHECK(max_abs_diff(product_state(3, {0.0, 0.0}).dicke_matrix(),
                     dicke_state(3, 0).dicke_matrix()) < 1e-15);
  CHECK(max_abs_diff(product_state(2, {std::numbers::pi, 0.0}).dicke_matrix(),
                     dicke_state(2, 2).dicke_matrix()) < 1e-15);

  // |+>|+> = (|00> + |01> + |10> + |11>)/2 projects onto Dicke amplitudes
  // <D_0| = 1/2, <D_1| = (1/2 + 1/2)/sqrt(2), <D_2| = 1/2.
  const SymmetricState plus = product_state(2, {std::numbers::pi / 2, 0.0});
  const Eigen::Vector3cd amp(0.5, 1.0 / std::numbers::sqrt2, 0.5);
  CHECK(max_abs_diff(plus.dicke_matrix(), Eigen::Matrix3cd(amp * amp.adjoint())) < 1e-15);
}

TEST_CASE("product_state agrees with an explicit Kronecker power") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 6;
    const double theta = std::numbers::pi * u(rng);
    const double phi = 2 * std::numbers::pi * u(rng);
    Eigen::Vector2cd q(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi));
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXcd next(v.size() * 2);
      for (Eigen::Index j = 0; j < v.size(); ++j) next.segment<2>(2 * j) = v(j) * q;
      v = next;
    }
    const oracle::FullState full = oracle::embed_full(product_state(n, {theta, phi}));
    CHECK(max_abs_diff(full.matrix, Eigen::MatrixXcd(v * v.adjoint())) < 1e-12);
  }
}

TEST_CASE("BlochDirection canonicalizes angles") {
  const BlochDirection a = BlochDirection::canonical(-0.5, 7.0);
  CHECK(a.theta == doctest::Approx(0.5));
  CHECK(a.phi == doctest::Approx(7.0 + std::numbers::pi - 2 * std::numbers::pi));
  const BlochDirection b = BlochDirection::canonical(1.0, -1.0);
  CHECK(b.theta == doctest::Approx(1.0));
  CHECK(b.phi == doctest::Approx(2 * std::numbers::pi - 1.0));
  // Same physical state before and after folding.
  CHECK(max_abs_diff(product_state(3, {-0.5, 7.0}).dicke_matrix(),
                     product_state(3, {a.theta, a.phi}).dicke_matrix()) < 1e-12);
}

TEST_CASE("noisy_mixture") {
  const SymmetricState g = ghz_state(4);
  CHECK(max_abs_diff(noisy_mixture(g, 1.0).dicke_matrix(), g.dicke_matrix()) < 1e-15);
  CHECK(max_abs_diff(noisy_mixture(g, 0.0).dicke_matrix(), max_mixed(4)) < 1e-15);

  Eigen::Matrix3cd expect;
  expect << 1.0 / 6 + 0.25, 0, 0.25, 0, 1.0 / 6, 0, 0.25, 0, 1.0 / 6 + 0.25;
  CHECK(max_abs_diff(noisy_mixture(ghz_state(2), 0.5).dicke_matrix(), expect) < 1e-15);

  CHECK_THROWS_AS(noisy_mixture(g, 1.5), DomainError);
  CHECK_THROWS_AS(noisy_mixture(g, -0.1), DomainError);
  CHECK_THROWS_AS(noisy_mixture(noisy_mixture(g, 0.5), 0.5), PreconditionError);
}

TEST_CASE("reduced_state of W matches the full-space partial trace") {
  for (int n = 3; n <= 6; ++n) {
    const SymmetricState r = reduced_state(w_state(n), 2);
    Eigen::Matrix3cd expect = Eigen::Matrix3cd::Zero();
    expect(0, 0) = (n - 2.0) / n;
    expect(1, 1) = 2.0 / n;
    CHECK(max_abs_diff(r.dicke_matrix(), expect) < 1e-14);

    const oracle::FullState brute = oracle::partial_trace(oracle::embed_full(w_state(n)), 2);
    CHECK(max_abs_diff(oracle::embed_full(r).matrix, brute.matrix) < 1e-14);
  }
}

TEST_CASE("reduced_state identity and sequential consistency") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 7;
    const SymmetricState rho = symcov::testing::random_state(n, rng);
    CHECK(max_abs_diff(reduced_state(rho, n).dicke_matrix(), rho.dicke_matrix()) == 0.0);
    for (int m = 1; m <= n; ++m) {
      const SymmetricState rm = reduced_state(rho, m);
      check_invariants(rm);
      for (int k = 1; k <= m; ++k) {
        CHECK(max_abs_diff(reduced_state(rm, k).dicke_matrix(),
                           reduced_state(rho, k).dicke_matrix()) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(reduced_state(ghz_state(3), 0), DomainError);
  CHECK_THROWS_AS(reduced_state(ghz_state(3), 4), DomainError);
}

TEST_CASE("maximally mixed symmetric state reduces to maximally mixed") {
  for (int n = 1; n <= 10; ++n) {
    const SymmetricState mm = SymmetricState::from_matrix(n, max_mixed(n));
    const oracle::FullState full = oracle::embed_full(mm);
    for (int keep = 1; keep <= n; ++keep) {
      const SymmetricState r = reduced_state(mm, keep);
      CHECK(max_abs_diff(r.dicke_matrix(), max_mixed(keep)) < 1e-12);
      if (n <= 8) {
        CHECK(max_abs_diff(oracle::embed_full(r).matrix,
                           oracle::partial_trace(full, keep).matrix) < 1e-12);
      }
    }
  }
}

TEST_CASE("reduced noisy W has the closed form") {
  for (int n = 2; n <= 8; ++n) {
    for (double x : {0.0, 0.13, 0.5, 0.91, 1.0}) {
      const SymmetricState noisy = noisy_mixture(w_state(n), x);
      for (int drop = 0; drop < n; ++drop) {
        const int m = n - drop;
        const Eigen::MatrixXcd closed =
            (1.0 - x) / (m + 1.0) * Eigen::MatrixXcd::Identity(m + 1, m + 1) +
            x * (double(m) / n * dicke_state(m, 1).dicke_matrix() +
                 double(drop) / n * dicke_state(m, 0).dicke_matrix());
        CHECK(max_abs_diff(reduced_state(noisy, m).dicke_matrix(), closed) < 1e-10);
      }
    }
  }
}

TEST_CASE("validate flags each invariant") {
  CHECK(validate(ghz_state(3)).ok());

  Eigen::MatrixXcd twice = 2.0 * dicke_state(2, 1).dicke_matrix();
  const StateDiagnostics t = validate(2, twice);
  CHECK_FALSE(t.trace_ok());
  CHECK(t.trace_defect == doctest::Approx(1.0));
  CHECK_THROWS_AS(SymmetricState::from_matrix(2, twice), DomainError);

  Eigen::MatrixXcd skew = ghz_state(2).dicke_matrix();
  skew(0, 2) += cd(0.0, 1e-6);
  const StateDiagnostics h = validate(2, skew);
  CHECK_FALSE(h.hermitian_ok());
  CHECK(h.trace_ok());

  Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_FALSE(validate(1, neg).psd_ok());

  CHECK_FALSE(validate(3, Eigen::MatrixXcd::Identity(2, 2)).shape_ok);
  CHECK_FALSE(validate(3, Eigen::MatrixXcd(0, 0)).ok());
}
