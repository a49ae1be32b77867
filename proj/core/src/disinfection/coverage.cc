// Copyright 2026 The uvbot Authors.
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

#include "uvbot/disinfection/coverage.h"

#include <algorithm>
#include <limits>

#include "uvbot/common/error.h"

namespace uvbot {

CoverageReport ComputeCoverage(const DoseGrid& dose, const DisinfectionTarget& target,
                               std::span<const CellIndex> uncoverable) {
  if (target.cells.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "coverage of an empty target");
  }
  CoverageReport report;
  report.target_cells = target.cells.size();
  report.uncoverable.assign(uncoverable.begin(), uncoverable.end());
  report.min_dose = std::numeric_limits<double>::infinity();
  std::size_t coverable = 0;
  std::size_t coverable_covered = 0;
  double sum = 0.0;
  for (const CellIndex& c : target.cells) {
    const double d = dose.at(c);
    const bool covered = d >= target.required_dose;
    const bool excluded =
        std::find(uncoverable.begin(), uncoverable.end(), c) != uncoverable.end();
    report.covered_cells += covered ? 1 : 0;
    if (!excluded) {
      ++coverable;
      coverable_covered += covered ? 1 : 0;
    }
    report.min_dose = std::min(report.min_dose, d);
    report.max_dose = std::max(report.max_dose, d);
    sum += d;
  }
  report.mean_dose = sum / static_cast<double>(target.cells.size());
  report.covered_fraction =
      static_cast<double>(report.covered_cells) / static_cast<double>(report.target_cells);
  report.coverable_covered_fraction =
      coverable == 0 ? 1.0
                     : static_cast<double>(coverable_covered) / static_cast<double>(coverable);
  return report;
}

}  // namespace uvbot
