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

#include "symcov/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcov/covariance.hpp"
#include "symcov/io.hpp"
#include "symcov/oracle.hpp"
#include "symcov/reproduce.hpp"
#include "symcov/scanner.hpp"
#include "symcov/tensors.hpp"

namespace symcov::cli {

namespace {

using io::json;

struct RunConfig {
  std::string state;
  int k = 1;
  int l = 1;
  double tol = 0.0;  // 0 -> command default
  std::uint64_t seed = 20080101;
  int samples = 1000;
  int terms = 5;
  int grid = kDefaultScanGrid;
  std::vector<int> n_qubits;
  std::string detector = "min_eig";
  std::string index;
  std::optional<double> paper_value;
  std::string format = "json";
  std::string output;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw UsageError("cannot open output file " + cfg.output);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string dump(const json& j) { return j.dump(2); }

bool want_csv(const RunConfig& cfg) { return cfg.format == "csv"; }

SymmetricState load_state(const RunConfig& cfg) {
  if (cfg.state.empty()) throw UsageError("--state is required");
  return io::state_from_json(io::load_json_argument(cfg.state));
}

int cmd_state(const RunConfig& cfg, std::ostream& out) {
  const SymmetricState rho = load_state(cfg);
  emit(cfg, out, want_csv(cfg) ? io::to_csv(rho) : dump(io::to_json(rho)));
  return kExitOk;
}

int cmd_tensor(const RunConfig& cfg, std::ostream& out) {
  const CorrelationTensor t = correlation_tensor(load_state(cfg), cfg.l);
  emit(cfg, out, want_csv(cfg) ? io::to_csv(t) : dump(io::to_json(t)));
  return kExitOk;
}

int cmd_cov(const RunConfig& cfg, std::ostream& out) {
  const CovarianceMatrix cm = covariance_matrix(load_state(cfg), cfg.k);
  emit(cfg, out, want_csv(cfg) ? io::to_csv(cm) : dump(io::to_json(cm)));
  return kExitOk;
}

int cmd_test(const RunConfig& cfg, std::ostream& out) {
  const double tol = cfg.tol > 0.0 ? cfg.tol : kDefaultNegativityTol;
  const NegativityReport report = test_entanglement(load_state(cfg), cfg.k, tol);
  emit(cfg, out, want_csv(cfg) ? io::to_csv(report) : dump(io::to_json(report)));
  return report.entangled ? kExitOk : kExitNotDetected;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  if (cfg.state.empty()) throw UsageError("--state is required");
  const json family = io::load_json_argument(cfg.state);
  const StateFamily fam = io::family_from_json(family);
  const double tol = cfg.tol > 0.0 ? cfg.tol : kDefaultScanTol;

  Detector d;
  d.kind = parse_detector_kind(cfg.detector);
  d.k = cfg.k;
  if (d.kind != Detector::Kind::min_eig) {
    if (cfg.index.empty()) throw UsageError("--index is required for detector " + cfg.detector);
    d.index = MultiIndex::parse(cfg.index);
    if (d.index->rank() != d.k) {
      throw DomainError("--index rank " + std::to_string(d.index->rank()) +
                        " does not match --k " + std::to_string(d.k));
    }
  }
  const ScanResult scan = scan_threshold(fam, d, tol, cfg.grid);
  const json doc = io::to_json(scan, family, cfg.paper_value, std::max(tol, 1e-4));
  if (want_csv(cfg)) {
    std::ostringstream os;
    os << std::setprecision(17) << "threshold,bracket_lo,bracket_hi,paper_value,agrees\n";
    if (scan.threshold) os << *scan.threshold;
    os << ',' << scan.bracket.first << ',' << scan.bracket.second << ',';
    if (cfg.paper_value) os << *cfg.paper_value;
    os << ',' << (doc["agrees"].get<bool>() ? "true" : "false") << '\n';
    emit(cfg, out, os.str());
  } else {
    emit(cfg, out, dump(doc));
  }
  return scan.threshold ? kExitOk : kExitNotDetected;
}

int cmd_validate_theorem(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
  if (cfg.terms < 1) throw UsageError("--terms must be at least 1");
  std::vector<int> sizes = cfg.n_qubits.empty() ? std::vector<int>{2, 4, 6, 8} : cfg.n_qubits;
  for (int n : sizes) {
    if (n < 2 || n > 16) throw UsageError("--n values must lie in [2, 16]");
  }
  const double tol = cfg.tol > 0.0 ? cfg.tol : kDefaultNegativityTol;

  long violations = 0;
  long checks = 0;
  double most_negative = std::numeric_limits<double>::infinity();
  double max_abs_cov = 0.0;
  json worst = nullptr;
  for (int s = 0; s < cfg.samples; ++s) {
    const int n = sizes[static_cast<std::size_t>(s) % sizes.size()];
    const std::uint64_t sub = oracle::derive_seed(cfg.seed, static_cast<std::uint64_t>(s));
    const oracle::SeparableSample sample = oracle::sample_separable(n, cfg.terms, sub);
    for (int k = 1; 2 * k <= n; ++k) {
      const Eigen::MatrixXd c = inter_group_covariance(sample.state, k);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c, Eigen::EigenvaluesOnly);
      const double lo = es.eigenvalues()(0);
      ++checks;
      max_abs_cov = std::max(max_abs_cov, c.cwiseAbs().maxCoeff());
      if (lo < most_negative) {
        most_negative = lo;
        worst = {{"sample", s}, {"seed", sub}, {"n_qubits", n}, {"k", k}};
      }
      if (lo < -tol) ++violations;
    }
  }
  const json summary = {{"seed", cfg.seed},         {"samples", cfg.samples},
                        {"terms", cfg.terms},       {"n_qubits", sizes},
                        {"checks", checks},         {"violations", violations},
                        {"most_negative", most_negative}, {"most_negative_at", worst},
                        {"max_abs_covariance", max_abs_cov}, {"tolerance", tol}};
  if (want_csv(cfg)) {
    std::ostringstream os;
    os << std::setprecision(17)
       << "seed,samples,terms,checks,violations,most_negative,max_abs_covariance,tolerance\n"
       << cfg.seed << ',' << cfg.samples << ',' << cfg.terms << ',' << checks << ','
       << violations << ',' << most_negative << ',' << max_abs_cov << ',' << tol << '\n';
    emit(cfg, out, os.str());
  } else {
    emit(cfg, out, dump(summary));
  }
  return violations == 0 ? kExitOk : kExitNotDetected;
}

std::string format_table(const std::vector<ReproductionRow>& rows) {
  std::size_t width = 8;
  for (const auto& r : rows) width = std::max(width, r.quantity.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "quantity" << "  " << std::setw(14)
     << "paper" << std::setw(20) << "computed" << std::setw(12) << "|delta|" << std::setw(14)
     << "precision" << "status\n";
  os << std::string(width + 80, '-') << '\n';
  for (const auto& r : rows) {
    os << std::left << std::setw(static_cast<int>(width)) << r.quantity << "  " << std::setw(14)
       << std::setprecision(6) << r.paper_value << std::setw(20) << std::setprecision(10)
       << r.computed << std::setw(12) << std::setprecision(3) << r.delta << std::setw(14)
       << r.precision << to_string(r.status);
    if (!r.note.empty()) os << "  (" << r.note << ')';
    os << '\n';
  }
  return os.str();
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
  const std::vector<ReproductionRow> rows = reproduction_table();
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"quantity", r.quantity},
                     {"paper_value", r.paper_value},
                     {"computed", r.computed},
                     {"delta", r.delta},
                     {"precision", r.precision},
                     {"status", to_string(r.status)},
                     {"note", r.note}});
    }
    emit(cfg, out, dump({{"rows", arr}, {"all_passed", all_passed(rows)}}));
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << std::setprecision(17) << "quantity,paper_value,computed,delta,precision,status,note\n";
    for (const auto& r : rows) {
      os << '"' << r.quantity << "\"," << r.paper_value << ',' << r.computed << ',' << r.delta
         << ",\"" << r.precision << "\"," << to_string(r.status) << ",\"" << r.note << "\"\n";
    }
    emit(cfg, out, os.str());
  } else {
    emit(cfg, out, format_table(rows));
  }
  return all_passed(rows) ? kExitOk : kExitNotDetected;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covariance-matrix entanglement tests for symmetric multiqubit states", "symcov"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--state", cfg.state, "state description: inline JSON or file path");
  };
  auto add_output = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(std::move(formats)));
    sub->add_option("--output", cfg.output, "write data here instead of standard output");
  };

  CLI::App* state = app.add_subcommand("state", "build a state and print it in the Dicke basis");
  add_state(state);
  add_output(state, {"json", "csv"});

  CLI::App* tensor = app.add_subcommand("tensor", "dump the order-l correlation tensor");
  add_state(tensor);
  tensor->add_option("--l", cfg.l, "tensor order")->required();
  add_output(tensor, {"json", "csv"});

  CLI::App* cov = app.add_subcommand("cov", "covariance blocks C^(2k) and A^(2k)");
  add_state(cov);
  cov->add_option("--k", cfg.k, "group size")->required();
  add_output(cov, {"json", "csv"});

  CLI::App* test = app.add_subcommand("test", "test C^(2k) for negativity");
  add_state(test);
  test->add_option("--k", cfg.k, "group size")->required();
  test->add_option("--tol", cfg.tol, "base negativity tolerance (default 1e-9)");
  add_output(test, {"json", "csv"});

  CLI::App* scan = app.add_subcommand("scan", "locate the mixing-parameter threshold of a noisy family");
  add_state(scan);
  scan->add_option("--k", cfg.k, "group size")->required();
  scan->add_option("--detector", cfg.detector, "min_eig | diag | moment_diag")
      ->check(CLI::IsMember({"min_eig", "diag", "moment_diag"}));
  scan->add_option("--index", cfg.index, "multi-index for diagonal detectors, e.g. xy");
  scan->add_option("--tol", cfg.tol, "bisection width (default 1e-6)");
  scan->add_option("--grid", cfg.grid, "grid intervals over [0, 1]");
  scan->add_option("--paper-value", cfg.paper_value, "published threshold to compare against");
  add_output(scan, {"json", "csv"});

  CLI::App* validate = app.add_subcommand(
      "validate-theorem", "check C^(2k) >= 0 on seeded separable symmetric states");
  validate->add_option("--samples", cfg.samples, "number of separable samples");
  validate->add_option("--seed", cfg.seed, "64-bit base seed");
  validate->add_option("--terms", cfg.terms, "product terms per sample");
  validate->add_option("--n", cfg.n_qubits, "qubit counts to cycle through (default 2 4 6 8)");
  validate->add_option("--tol", cfg.tol, "violation tolerance (default 1e-9)");
  add_output(validate, {"json", "csv"});

  CLI::App* reproduce = app.add_subcommand("reproduce", "published-versus-computed table");
  cfg.format = "json";
  reproduce->add_option("--format", cfg.format, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  reproduce->add_option("--output", cfg.output, "write data here instead of standard output");
  reproduce->preparse_callback([&](std::size_t) { cfg.format = "table"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (*state) return cmd_state(cfg, out);
    if (*tensor) return cmd_tensor(cfg, out);
    if (*cov) return cmd_cov(cfg, out);
    if (*test) return cmd_test(cfg, out);
    if (*scan) return cmd_scan(cfg, out);
    if (*validate) return cmd_validate_theorem(cfg, out);
    if (*reproduce) return cmd_reproduce(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace symcov::cli
