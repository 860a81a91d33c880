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

#include <string>
#include <vector>

namespace symcov {

enum class RowStatus { pass, fail, known_discrepancy };

std::string to_string(RowStatus s);

/// One published-versus-computed comparison.
struct ReproductionRow {
  std::string quantity;
  double paper_value = 0.0;
  double computed = 0.0;
  double delta = 0.0;       // |computed - paper_value|
  std::string precision;    // e.g. "abs 1e-9", "2 sig. fig."
  RowStatus status = RowStatus::fail;
  std::string note;
};

/// Rounds to `digits` significant figures.
double round_significant(double v, int digits);

/// GHZ/W eigenvalues, diagonal certificates, the noisy-state thresholds and
/// the closed-form threshold families. Rows whose published value is known
/// to disagree with direct evaluation are marked known_discrepancy.
std::vector<ReproductionRow> reproduction_table();

/// True when no row has status fail.
bool all_passed(const std::vector<ReproductionRow>& rows);

}  // namespace symcov
