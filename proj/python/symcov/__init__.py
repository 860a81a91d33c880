# Copyright 2026 The symcov Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Covariance-matrix entanglement tests for symmetric multiqubit states."""

from ._core import (
    ConsistencyError,
    CovarianceMatrix,
    DomainError,
    NegativityReport,
    PreconditionError,
    ResourceError,
    ScanResult,
    SymmetricState,
    analytic_thresholds,
    correlation_tensor,
    covariance_matrix,
    dicke_state,
    embed_full,
    ghz_state,
    is_valid,
    moment_matrix,
    noisy_mixture,
    ppt_min_eigenvalue,
    product_state,
    reduced_state,
    reproduction_table,
    run_cli,
    sample_separable,
    scan_threshold,
    test_entanglement,
    w_state,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "CovarianceMatrix",
    "DomainError",
    "NegativityReport",
    "PreconditionError",
    "ResourceError",
    "ScanResult",
    "SymmetricState",
    "analytic_thresholds",
    "correlation_tensor",
    "covariance_matrix",
    "dicke_state",
    "embed_full",
    "ghz_state",
    "is_valid",
    "moment_matrix",
    "noisy_mixture",
    "ppt_min_eigenvalue",
    "product_state",
    "reduced_state",
    "reproduction_table",
    "run_cli",
    "sample_separable",
    "scan_threshold",
    "test_entanglement",
    "w_state",
]
