// Copyright 2026 The revtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// One-parameter sweeps over a scenario or an extremal recipe.

#ifndef REVTRI_SWEEP_HPP_
#define REVTRI_SWEEP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "revtri/bounds.hpp"
#include "revtri/scenario.hpp"

namespace revtri {

struct SweepRow {
  double value = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::optional<double> extremal_gap;  // set for recipe sweeps
  Verdict verdict = Verdict::kHolds;
};

struct SweepTable {
  BoundId bound = BoundId::kDominance;
  std::string parameter;
  std::vector<SweepRow> rows;
  std::vector<std::string> warnings;  // values skipped as out of range
};

struct SweepRequest {
  BoundId bound = BoundId::kBall;
  std::string parameter;
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 1;
  // Without a base scenario the sweep runs the extremal recipe of `bound`
  // with default values for the other parameters.
  std::optional<Scenario> base;
};

// Values: from + i (to - from) / (steps - 1), or just `from` when steps = 1.
// Values outside the parameter's range are skipped with a warning. Throws
// InputError when the parameter does not apply to the bound.
SweepTable sweep(const SweepRequest& request);

std::string sweep_csv(const SweepTable& table);

}  // namespace revtri

#endif  // REVTRI_SWEEP_HPP_
