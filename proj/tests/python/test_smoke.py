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

import json
import math

import numpy as np
import pytest

import symcov


def test_ghz_state_layout():
    rho = symcov.ghz_state(4)
    expect = np.zeros((5, 5))
    expect[[0, 0, 4, 4], [0, 4, 0, 4]] = 0.5
    assert rho.n_qubits == 4
    assert np.allclose(rho.dicke_matrix, expect)
    assert rho.purity() == pytest.approx(1.0)


def test_w_tensor_values():
    t1 = symcov.correlation_tensor(symcov.w_state(4), 1)
    assert np.allclose(t1, [0.0, 0.0, 0.5])
    t2 = symcov.correlation_tensor(symcov.w_state(4), 2)
    assert t2.shape == (3, 3)
    assert np.allclose(t2, np.diag([0.5, 0.5, 0.0]))


def test_tensor_matches_dense_expectation():
    rho = symcov.product_state(3, 0.7, 1.3)
    full = symcov.embed_full(rho)
    x = np.array([[0, 1], [1, 0]])
    z = np.diag([1, -1])
    i2 = np.eye(2)
    op = np.kron(np.kron(x, z), i2)
    t2 = symcov.correlation_tensor(rho, 2)
    assert t2[0, 2] == pytest.approx(np.trace(full @ op).real, abs=1e-12)


def test_ghz_covariance_and_report():
    cm = symcov.covariance_matrix(symcov.ghz_state(2), 1)
    assert np.allclose(cm.c_block, np.diag([1.0, -1.0, 1.0]))
    report = symcov.test_entanglement(symcov.ghz_state(6), 3)
    assert report.entangled
    assert report.min_eigenvalue == pytest.approx(-4.0)
    assert report.certificate["type"] == "minor"
    assert not symcov.test_entanglement(symcov.ghz_state(6), 1).entangled


def test_noisy_ghz_threshold():
    base = symcov.ghz_state(4)
    scan = symcov.scan_threshold(lambda x: symcov.noisy_mixture(base, x), k=2, tol=1e-8)
    assert scan.threshold == pytest.approx(0.0625, abs=1e-6)
    assert scan.monotone


def test_w_ppt_reduction():
    rho2 = symcov.embed_full(symcov.reduced_state(symcov.w_state(4), 2))
    assert symcov.ppt_min_eigenvalue(rho2) == pytest.approx((1 - math.sqrt(2)) / 4)


def test_separable_samples_are_psd():
    for seed in range(20):
        rho = symcov.sample_separable(4, 3, seed)
        for k in (1, 2):
            c = symcov.covariance_matrix(rho, k).c_block
            assert np.linalg.eigvalsh(c).min() >= -1e-9


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        symcov.ghz_state(1)
    with pytest.raises(symcov.DomainError):
        symcov.covariance_matrix(symcov.ghz_state(4), 3)
    with pytest.raises(symcov.PreconditionError):
        symcov.noisy_mixture(symcov.noisy_mixture(symcov.ghz_state(2), 0.5), 0.5)


def test_cli_round_trip():
    code, out, err = symcov.run_cli(["test", "--state", '{"family":"w","n_qubits":6}', "--k", "2"])
    assert code == 0
    assert json.loads(out)["entangled"] is True
    assert err == ""
    code, _, err = symcov.run_cli(["test", "--state", '{"family":"ghz","n_qubits":6}', "--k", "4"])
    assert code == 2
    assert err
