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

#ifndef UVBOT_DISINFECTION_COVERAGE_H_
#define UVBOT_DISINFECTION_COVERAGE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "uvbot/disinfection/dose_grid.h"
#include "uvbot/disinfection/target.h"

namespace uvbot {

struct CoverageReport {
  std::size_t target_cells = 0;
  std::size_t covered_cells = 0;
  // covered / all target cells (a cell exactly at the requirement counts).
  double covered_fraction = 0.0;
  // Same ratio with the known-uncoverable cells left out; 1 when nothing
  // coverable remains.
  double coverable_covered_fraction = 0.0;
  double min_dose = 0.0;
  double mean_dose = 0.0;
  double max_dose = 0.0;
  std::vector<CellIndex> uncoverable;
};

// Throws Error(kInvalidArgument) for an empty target.
CoverageReport ComputeCoverage(const DoseGrid& dose, const DisinfectionTarget& target,
                               std::span<const CellIndex> uncoverable = {});

}  // namespace uvbot

#endif  // UVBOT_DISINFECTION_COVERAGE_H_
