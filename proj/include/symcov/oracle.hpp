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

// Brute-force ground truth in the full 2^N computational space. Nothing in
// here calls into the tensors or covariance modules, so it can be used to
// cross-check them.

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "symcov/symstate.hpp"

namespace symcov::oracle {

inline constexpr int kMaxFullQubits = 12;

struct FullState {
  int n_qubits = 0;
  Eigen::MatrixXcd matrix;  // 2^N x 2^N, qubit 1 on the most significant bit
};

/// Dicke basis -> computational basis. Throws ResourceError above 12 qubits.
FullState embed_full(const SymmetricState& rho);

/// Projects a full-space operator onto the Dicke basis: <D_p| rho |D_q>.
/// Only meaningful for states supported on the symmetric subspace.
SymmetricState restrict_to_symmetric(const FullState& fs);

/// Tr[rho (M_1 (x) ... (x) M_N)] for arbitrary 2x2 factors.
std::complex<double> product_expectation(const FullState& fs,
                                         std::span<const Eigen::Matrix2cd> factors);

/// Tr[rho sigma_{a_1} ... sigma_{a_N}] with each a_i in {'0','x','y','z'}.
/// Throws ConsistencyError if the imaginary part exceeds 1e-10.
double pauli_expectation(const FullState& fs, std::string_view axes);

const Eigen::Matrix2cd& pauli(char axis);

/// Keeps the first `n_keep` qubits.
FullState partial_trace(const FullState& fs, int n_keep);

/// Qubit permutation: output qubit q is input qubit perm[q].
FullState permute_qubits(const FullState& fs, std::span<const int> perm);

/// U^{(x) N} rho U^{(x) N dagger}.
FullState conjugate_collective(const FullState& fs, const Eigen::Matrix2cd& u);

/// SO(3) image of U: R_ab = 1/2 Tr[sigma_a U sigma_b U^dagger], so that a
/// Bloch vector t maps to R t under rho -> U rho U^dagger.
Eigen::Matrix3d rotation_from_unitary(const Eigen::Matrix2cd& u);

/// Haar-random SU(2) element.
Eigen::Matrix2cd random_su2(std::mt19937_64& rng);

/// Inter-group and intra-group covariance blocks from full-space
/// expectations, with group a = qubits 1..k and group b = qubits k+1..2k.
struct BruteCovariance {
  Eigen::MatrixXd c_block;
  Eigen::MatrixXd a_block;
  Eigen::MatrixXd b_block;
};
BruteCovariance brute_force_covariance(const FullState& fs, int k);

/// Minimum eigenvalue of the partial transpose (second qubit) of a 4x4
/// density matrix.
double ppt_min_eigenvalue(const FullState& rho2);

struct SeparableEnsemble {
  std::vector<double> weights;
  std::vector<BlochDirection> directions;
};

struct SeparableSample {
  std::uint64_t seed = 0;
  SeparableEnsemble ensemble;
  SymmetricState state;
};

/// sum_w p_w |phi_w><phi_w|^{(x) N} with directions uniform on the sphere
/// and weights uniform on the simplex, deterministic in `seed`.
SeparableSample sample_separable(int n_qubits, int terms, std::uint64_t seed);

/// splitmix64 mix of (seed, index); sub-seeds for independent samples.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Random symmetric state of the given rank (Ginibre construction).
SymmetricState random_symmetric_state(int n_qubits, int rank, std::mt19937_64& rng);

}  // namespace symcov::oracle
