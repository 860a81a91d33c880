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

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symcov/cli.hpp"
#include "symcov/covariance.hpp"
#include "symcov/errors.hpp"
#include "symcov/oracle.hpp"
#include "symcov/reproduce.hpp"
#include "symcov/scanner.hpp"
#include "symcov/symstate.hpp"
#include "symcov/tensors.hpp"

namespace py = pybind11;
using namespace symcov;

namespace {

py::array_t<double> tensor_array(const CorrelationTensor& t) {
  std::vector<py::ssize_t> shape(static_cast<std::size_t>(t.order()), 3);
  py::array_t<double> out(shape);
  std::copy(t.values().begin(), t.values().end(), out.mutable_data());
  return out;
}

py::object certificate_dict(const NegativityReport& r) {
  if (!r.certificate) return py::none();
  const Certificate& c = *r.certificate;
  std::vector<std::string> labels;
  for (std::size_t i : c.indices) labels.push_back(MultiIndex::decode(r.k, i).str());
  py::dict d;
  d["type"] = c.kind == CertificateKind::minor ? "minor" : "eigenvector";
  d["indices"] = labels;
  d["value"] = c.value;
  if (c.kind == CertificateKind::eigenvector) d["witness"] = c.witness;
  return d;
}

Detector make_detector(const std::string& kind, int k, const std::string& index) {
  const Detector::Kind parsed = parse_detector_kind(kind);
  if (parsed == Detector::Kind::min_eig) return Detector::min_eig(k);
  if (index.empty()) throw DomainError("detector '" + kind + "' needs an index");
  const MultiIndex idx = MultiIndex::parse(index);
  return parsed == Detector::Kind::diag ? Detector::diag(idx) : Detector::moment_diag(idx);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Covariance-matrix entanglement tests for symmetric multiqubit states";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::class_<SymmetricState>(m, "SymmetricState")
      .def_static("from_matrix", &SymmetricState::from_matrix, py::arg("n_qubits"),
                  py::arg("dicke_matrix"))
      .def_property_readonly("n_qubits", &SymmetricState::n_qubits)
      .def_property_readonly("dim", &SymmetricState::dim)
      .def_property_readonly("dicke_matrix", &SymmetricState::dicke_matrix)
      .def("purity", &SymmetricState::purity)
      .def("__repr__", [](const SymmetricState& s) {
        return "<SymmetricState n_qubits=" + std::to_string(s.n_qubits()) + ">";
      });

  m.def("dicke_state", &dicke_state, py::arg("n_qubits"), py::arg("p"));
  m.def("ghz_state", &ghz_state, py::arg("n_qubits"));
  m.def("w_state", &w_state, py::arg("n_qubits"));
  m.def(
      "product_state",
      [](int n, double theta, double phi) { return product_state(n, {theta, phi}); },
      py::arg("n_qubits"), py::arg("theta"), py::arg("phi") = 0.0);
  m.def("noisy_mixture", &noisy_mixture, py::arg("psi"), py::arg("x"));
  m.def("reduced_state", &reduced_state, py::arg("rho"), py::arg("n_keep"));
  m.def(
      "is_valid", [](const SymmetricState& rho) { return validate(rho).ok(); }, py::arg("rho"));

  m.def(
      "correlation_tensor",
      [](const SymmetricState& rho, int l) { return tensor_array(correlation_tensor(rho, l)); },
      py::arg("rho"), py::arg("l"),
      "Order-l Pauli correlation tensor as an array of shape (3,) * l, axes ordered x, y, z.");
  m.def(
      "moment_matrix",
      [](const SymmetricState& rho, int l) { return moment_matrix(correlation_tensor(rho, l)); },
      py::arg("rho"), py::arg("l"));

  py::class_<CovarianceMatrix>(m, "CovarianceMatrix")
      .def_readonly("n_qubits", &CovarianceMatrix::n_qubits)
      .def_readonly("k", &CovarianceMatrix::k)
      .def_readonly("c_block", &CovarianceMatrix::c_block)
      .def_readonly("a_block", &CovarianceMatrix::a_block)
      .def("full_variance", &full_variance)
      .def("min_eigenvalue", &min_eigenvalue)
      .def("rotate", &rotate, py::arg("r"));
  m.def("covariance_matrix", &covariance_matrix, py::arg("rho"), py::arg("k"));

  py::class_<NegativityReport>(m, "NegativityReport")
      .def_readonly("n_qubits", &NegativityReport::n_qubits)
      .def_readonly("k", &NegativityReport::k)
      .def_readonly("min_eigenvalue", &NegativityReport::min_eigenvalue)
      .def_readonly("entangled", &NegativityReport::entangled)
      .def_readonly("tolerance", &NegativityReport::tolerance)
      .def_property_readonly("certificate", &certificate_dict);
  m.def("test_entanglement", &test_entanglement, py::arg("rho"), py::arg("k"),
        py::arg("tol") = kDefaultNegativityTol);

  py::class_<ScanResult>(m, "ScanResult")
      .def_readonly("threshold", &ScanResult::threshold)
      .def_readonly("bracket", &ScanResult::bracket)
      .def_readonly("resolution", &ScanResult::resolution)
      .def_readonly("monotone", &ScanResult::monotone)
      .def_readonly("smooth", &ScanResult::smooth)
      .def_readonly("grid_x", &ScanResult::grid_x)
      .def_readonly("grid_values", &ScanResult::grid_values);
  m.def(
      "scan_threshold",
      [](const StateFamily& family, const std::string& detector, int k, const std::string& index,
         double tol, int grid) {
        return scan_threshold(family, make_detector(detector, k, index), tol, grid);
      },
      py::arg("family"), py::arg("detector") = "min_eig", py::arg("k") = 1,
      py::arg("index") = "", py::arg("tol") = kDefaultScanTol, py::arg("grid") = kDefaultScanGrid,
      "Threshold of a one-parameter family x -> SymmetricState on [0, 1].");
  m.def(
      "analytic_thresholds",
      [](int n) {
        const AnalyticThresholds a = analytic_thresholds(n);
        py::dict d;
        d["ghz_diag"] = a.ghz_diag;
        d["w_diag"] = a.w_diag;
        d["w_two_qubit"] = a.w_two_qubit;
        return d;
      },
      py::arg("n_qubits"));

  m.def(
      "embed_full", [](const SymmetricState& rho) { return oracle::embed_full(rho).matrix; },
      py::arg("rho"), "Density matrix in the 2^N computational basis.");
  m.def(
      "ppt_min_eigenvalue",
      [](const Eigen::MatrixXcd& rho2) { return oracle::ppt_min_eigenvalue({2, rho2}); },
      py::arg("rho2"));
  m.def(
      "sample_separable",
      [](int n, int terms, std::uint64_t seed) {
        return oracle::sample_separable(n, terms, seed).state;
      },
      py::arg("n_qubits"), py::arg("terms"), py::arg("seed"));

  m.def("reproduction_table", [] {
    py::list rows;
    for (const ReproductionRow& r : reproduction_table()) {
      py::dict d;
      d["quantity"] = r.quantity;
      d["paper_value"] = r.paper_value;
      d["computed"] = r.computed;
      d["delta"] = r.delta;
      d["precision"] = r.precision;
      d["status"] = to_string(r.status);
      d["note"] = r.note;
      rows.append(d);
    }
    return rows;
  });

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "symcov");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
