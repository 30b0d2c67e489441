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


// Seeded fuzzing with hypothesis-by-construction generators. Every generated
// scenario satisfies the pointwise hypothesis of its bound at every node, so
// a violated verdict falsifies the bound itself.

#ifndef REVTRI_FUZZ_HPP_
#define REVTRI_FUZZ_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "revtri/bounds.hpp"
#include "revtri/scenario.hpp"

namespace revtri {

struct FuzzConfig {
  BoundId bound = BoundId::kDominance;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t dim = 4;
  Field field = Field::kReal;
  std::size_t family_size = 3;
  std::size_t panels = kDefaultPanels;
};

// Complex and argument bounds always run on d = 1 over C; family bounds
// need family_size <= dim. Throws InputError for other inconsistencies.
FuzzConfig normalized(FuzzConfig config);

struct FuzzCase {
  Scenario scenario;
  Provenance provenance;
};

// Trial `trial` of `config`; a pure function of (config, trial).
FuzzCase generate_trial(const FuzzConfig& config, std::uint64_t trial);

struct FuzzSummary {
  BoundId bound = BoundId::kDominance;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t hypothesis_failed = 0;
  double worst_margin = 0.0;           // min over trials of margin + err_budget
  std::uint64_t worst_trial = 0;
  // Re-form right-hand side above the norm-form one.
  std::uint64_t chain_violations = 0;
  // Defect below minus its combined error.
  std::uint64_t negative_defects = 0;
  double min_defect = 0.0;
  // MULT_C only: margins of the printed form.
  std::optional<double> printed_margin_min;
  std::optional<double> printed_margin_max;
  std::uint64_t printed_margin_negative = 0;
  std::vector<std::uint64_t> failing_trials;
  // Reproducing scenario files of violated trials.
  std::vector<nlohmann::json> violation_dumps;

  bool clean() const {
    return violated == 0 && hypothesis_failed == 0 && chain_violations == 0 &&
           negative_defects == 0;
  }
};

// err_combined for the nonnegativity check of the defect.
double combined_defect_error(const IntegralSummary& integrals, double slack_factor);

using TrialObserver = std::function<void(const FuzzCase&, const RunReport&)>;

FuzzSummary fuzz(const FuzzConfig& config, const TrialObserver& observer = {});

nlohmann::json summary_to_json(const FuzzSummary& summary);

}  // namespace revtri

#endif  // REVTRI_FUZZ_HPP_
