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

// Scenario files and the scenario runner.
//
// A scenario file is a UTF-8 JSON object with exactly the keys
//   id, field, d, interval, N, function, reference, bounds, tolerances.
// See README.md for the full grammar.

#ifndef REVTRI_SCENARIO_HPP_
#define REVTRI_SCENARIO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "revtri/bounds.hpp"
#include "revtri/extremal.hpp"
#include "revtri/function_model.hpp"
#include "revtri/hilbert.hpp"

namespace revtri {

struct Tolerances {
  double hypothesis = kDefaultHypothesisTolerance;     // "tau_hyp"
  double orthonormal = kDefaultOrthonormalTolerance;   // "tau_on"
  double bound_slack = 10.0;                           // multiplier on err_budget
};

struct NoReference {};
struct AlphaBeta {
  double alpha = 1.0;
  double beta = 0.0;
};
using Reference = std::variant<NoReference, HVector, std::vector<HVector>, AlphaBeta>;

// Bound parameters before they are sampled on the scenario grid.
struct ParamSpec {
  std::optional<ProfileExpr> k;
  std::optional<double> rho;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<ProfileExpr> radius;
  std::optional<ProfileExpr> lower_profile;
  std::optional<ProfileExpr> upper_profile;
  std::optional<double> ratio;
  std::optional<double> theta;

  std::vector<ProfileExpr> family_k;
  std::vector<double> family_rho;
  std::vector<double> family_lower;
  std::vector<double> family_upper;
  std::vector<ProfileExpr> family_radius;
  std::vector<ProfileExpr> family_lower_profile;
  std::vector<ProfileExpr> family_upper_profile;
};

BoundParams sample_params(const ParamSpec& spec, const Grid& grid);

struct BoundSpec {
  BoundId id = BoundId::kDominance;
  ParamSpec params;
};

struct Scenario {
  std::string id;
  Field field = Field::kReal;
  std::size_t dim = 1;
  double a = 0.0;
  double b = 1.0;
  std::size_t panels = kDefaultPanels;
  FunctionSpec function;
  Reference reference;
  std::vector<BoundSpec> bounds;
  Tolerances tolerances;

  Grid grid() const { return Grid(a, b, panels); }
};

// Parses and fully validates. Throws ValidationError whose path names the
// offending field ("N", "bounds[1].params.rho", ...).
Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::filesystem::path& path);
// Checks every cross-reference of an in-memory scenario.
void validate_scenario(const Scenario& scenario);

nlohmann::json scenario_to_json(const Scenario& scenario);

// Provenance of generated scenarios.
struct Provenance {
  std::string generator;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

struct IntegralSummary {
  IntegralEstimate<double> norm_integral;
  IntegralEstimate<HVector> integral;
  double integral_norm = 0.0;
  double defect = 0.0;
  double defect_err = 0.0;
};

struct RunReport {
  std::string scenario_id;
  std::vector<BoundResult> results;
  IntegralSummary integrals;
  Verdict rollup = Verdict::kHolds;
  std::optional<Provenance> provenance;
};

// Evaluates every bound of a valid scenario. Evaluation errors are rethrown
// as InputError prefixed with the bound id.
RunReport run(const Scenario& scenario);

// 0 all hold; 1 some bound violated; 2 some hypothesis failed (and nothing
// violated). Input errors map to kExitInputError.
int exit_code(const RunReport& report);
inline constexpr int kExitHolds = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitHypothesisFailed = 2;
inline constexpr int kExitInputError = 3;

nlohmann::json report_to_json(const RunReport& report);
std::string report_csv_header();
// One line per bound: scenario_id,bound_id,lhs,rhs,margin,verdict,err_budget
std::string report_to_csv_rows(const RunReport& report);
// Shortest round-trip decimal form.
std::string format_number(double x);

// Scenario realizing an extremal recipe on the cone (unit bounds) or on the
// symmetric family direction (THM_3_1). Uses standard basis vectors as e, u
// or as the family.
struct ExtremalRequest {
  BoundId bound = BoundId::kBand;
  RecipeParams params;
  double scale = 1.0;            // THM_3_1: constant c
  std::size_t family_size = 2;   // THM_3_1: n
  Field field = Field::kReal;
  std::size_t dim = 2;
  double a = 0.0;
  double b = 1.0;
  std::size_t panels = kDefaultPanels;
};

bool has_extremal(BoundId id);
Scenario make_extremal_scenario(const ExtremalRequest& request);

}  // namespace revtri

#endif  // REVTRI_SCENARIO_HPP_
