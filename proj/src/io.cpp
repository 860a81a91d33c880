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

#include "symcov/io.hpp"

#include <complex>
#include <fstream>
#include <sstream>

namespace symcov::io {

namespace {

using cd = std::complex<double>;

template <typename T>
T required(const json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("state description is missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("state description field \"") + key + "\": " + e.what());
  }
}

std::string family_name(const json& j) {
  if (!j.is_object()) throw DomainError("state description must be a JSON object");
  return required<std::string>(j, "family");
}

SymmetricState deserialize(const json& j) {
  const int n = required<int>(j, "n_qubits");
  if (n < 1) throw DomainError("n_qubits must be positive");
  const json& arr = j.at("dicke_matrix");
  const auto d = static_cast<std::size_t>(n) + 1;
  if (!arr.is_array() || arr.size() != d * d) {
    throw DomainError("dicke_matrix must hold " + std::to_string(d * d) + " [re, im] pairs");
  }
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d * d; ++i) {
    const json& e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw DomainError("dicke_matrix entries must be [re, im] number pairs");
    }
    m(static_cast<Eigen::Index>(i / d), static_cast<Eigen::Index>(i % d)) =
        cd(e[0].get<double>(), e[1].get<double>());
  }
  return SymmetricState::from_matrix(n, std::move(m));
}

std::vector<std::string> index_labels(int k) {
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < pow3(k); ++c) labels.push_back(MultiIndex::decode(k, c).str());
  return labels;
}

json matrix_rows(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string full_precision(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

SymmetricState state_from_json(const json& j) {
  if (j.is_object() && j.contains("dicke_matrix")) return deserialize(j);
  const std::string family = family_name(j);
  if (family == "noisy") {
    if (!j.contains("base")) throw DomainError("noisy description needs a \"base\" state");
    return noisy_mixture(state_from_json(j.at("base")), required<double>(j, "x"));
  }
  const int n = required<int>(j, "n_qubits");
  if (family == "ghz") return ghz_state(n);
  if (family == "w") return w_state(n);
  if (family == "dicke") return dicke_state(n, required<int>(j, "p"));
  if (family == "product") {
    const double theta = required<double>(j, "theta");
    const double phi = j.contains("phi") ? required<double>(j, "phi") : 0.0;
    return product_state(n, BlochDirection::canonical(theta, phi));
  }
  throw DomainError("unknown state family '" + family + "'");
}

StateFamily family_from_json(const json& j) {
  if (family_name(j) != "noisy") {
    throw DomainError("a scan needs a \"noisy\" family description with a \"base\" state");
  }
  if (!j.contains("base")) throw DomainError("noisy description needs a \"base\" state");
  const SymmetricState base = state_from_json(j.at("base"));
  if (base.purity() < 1.0 - kPurityTol) {
    throw DomainError("noisy family base state must be pure");
  }
  return [base](double x) { return noisy_mixture(base, x); };
}

json load_json_argument(const std::string& text) {
  json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!parsed.is_discarded()) return parsed;
  std::ifstream in(text);
  if (!in) throw DomainError("--state is neither valid JSON nor a readable file: " + text);
  parsed = json::parse(in, nullptr, false);
  if (parsed.is_discarded()) throw DomainError("file does not contain valid JSON: " + text);
  return parsed;
}

json to_json(const SymmetricState& rho) {
  json entries = json::array();
  const Eigen::MatrixXcd& m = rho.dicke_matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      entries.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
  return {{"n_qubits", rho.n_qubits()}, {"dicke_matrix", std::move(entries)}};
}

json to_json(const CorrelationTensor& t) {
  return {{"order", t.order()}, {"encoding", "base3-xyz"}, {"values", t.values()}};
}

json to_json(const CovarianceMatrix& cm) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(full_variance(cm), Eigen::EigenvaluesOnly);
  return {{"n_qubits", cm.n_qubits},
          {"k", cm.k},
          {"encoding", "base3-xyz"},
          {"indices", index_labels(cm.k)},
          {"c_block", matrix_rows(cm.c_block)},
          {"a_block", matrix_rows(cm.a_block)},
          {"min_eigenvalue", min_eigenvalue(cm)},
          {"variance_min_eigenvalue", es.eigenvalues()(0)}};
}

json to_json(const NegativityReport& report) {
  json j = {{"n_qubits", report.n_qubits},
            {"k", report.k},
            {"min_eigenvalue", report.min_eigenvalue},
            {"entangled", report.entangled},
            {"certificate", nullptr},
            {"tolerance", report.tolerance}};
  if (report.certificate) {
    const Certificate& c = *report.certificate;
    json indices = json::array();
    for (std::size_t i : c.indices) indices.push_back(MultiIndex::decode(report.k, i).str());
    json cert = {{"type", c.kind == CertificateKind::minor ? "minor" : "eigenvector"},
                 {"indices", std::move(indices)},
                 {"value", c.value}};
    if (c.kind == CertificateKind::eigenvector) {
      cert["witness"] = std::vector<double>(c.witness.data(), c.witness.data() + c.witness.size());
    }
    j["certificate"] = std::move(cert);
  }
  return j;
}

json to_json(const Detector& d) {
  json j = {{"kind", to_string(d.kind)}, {"k", d.k}};
  if (d.index) j["index"] = d.index->str();
  return j;
}

json to_json(const ScanResult& scan, const json& family, std::optional<double> paper_value,
             double agree_tol) {
  json j = {{"family", family},
            {"detector", to_json(scan.detector)},
            {"threshold", nullptr},
            {"bracket", json::array({scan.bracket.first, scan.bracket.second})},
            {"resolution", scan.resolution},
            {"monotone", scan.monotone},
            {"smooth", scan.smooth},
            {"paper_value", nullptr},
            {"agrees", false}};
  if (scan.threshold) j["threshold"] = *scan.threshold;
  if (paper_value) j["paper_value"] = *paper_value;
  if (scan.threshold && paper_value) {
    j["agrees"] = std::abs(*scan.threshold - *paper_value) <= agree_tol;
  }
  return j;
}

std::string to_csv(const SymmetricState& rho) {
  std::ostringstream os;
  os << "row,col,re,im\n";
  const Eigen::MatrixXcd& m = rho.dicke_matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << i << ',' << j << ',' << full_precision(m(i, j).real()) << ','
         << full_precision(m(i, j).imag()) << '\n';
  return os.str();
}

std::string to_csv(const CorrelationTensor& t) {
  std::ostringstream os;
  os << "index,value\n";
  for (std::size_t c = 0; c < t.values().size(); ++c)
    os << MultiIndex::decode(t.order(), c).str() << ',' << full_precision(t[c]) << '\n';
  return os.str();
}

std::string to_csv(const CovarianceMatrix& cm) {
  std::ostringstream os;
  os << "block,row,col,value\n";
  const auto labels = index_labels(cm.k);
  for (const auto& [name, m] : {std::pair{"C", &cm.c_block}, std::pair{"A", &cm.a_block}}) {
    for (Eigen::Index i = 0; i < m->rows(); ++i)
      for (Eigen::Index j = 0; j < m->cols(); ++j)
        os << name << ',' << labels[static_cast<std::size_t>(i)] << ','
           << labels[static_cast<std::size_t>(j)] << ',' << full_precision((*m)(i, j)) << '\n';
  }
  return os.str();
}

std::string to_csv(const NegativityReport& report) {
  std::ostringstream os;
  os << "n_qubits,k,min_eigenvalue,entangled,certificate_type,certificate_indices,"
        "certificate_value,tolerance\n";
  os << report.n_qubits << ',' << report.k << ',' << full_precision(report.min_eigenvalue) << ','
     << (report.entangled ? "true" : "false") << ',';
  if (report.certificate) {
    const Certificate& c = *report.certificate;
    os << (c.kind == CertificateKind::minor ? "minor" : "eigenvector") << ',';
    for (std::size_t i = 0; i < c.indices.size(); ++i) {
      if (i) os << ' ';
      os << MultiIndex::decode(report.k, c.indices[i]).str();
    }
    os << ',' << full_precision(c.value);
  } else {
    os << ",,";
  }
  os << ',' << full_precision(report.tolerance) << '\n';
  return os.str();
}

}  // namespace symcov::io
