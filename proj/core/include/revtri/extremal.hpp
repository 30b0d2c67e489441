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

// Functions attaining equality in the additive bounds.
//
// Unit-vector recipes use the two-direction cone
//   f(t) = alpha e + s(t) beta u,   u orthogonal to e,  s = +1 / -1 on halves,
// so ||f|| and Re<f, e> are constant, the integral is alpha (b - a) e, and
// the pointwise inequality behind each bound is tight at every sample.
// Family recipes point every sample along (e_1 + ... + e_n) / sqrt(n).

#ifndef REVTRI_EXTREMAL_HPP_
#define REVTRI_EXTREMAL_HPP_

#include <optional>
#include <vector>

#include "revtri/bounds.hpp"
#include "revtri/function_model.hpp"
#include "revtri/hilbert.hpp"

namespace revtri {

// Inputs per bound:
//   THM_2_1: k > 0 (constant) and alpha > 0 (free choice, default 1)
//   COR_2_2: rho in (0, 1)
//   COR_2_3: 0 < m <= M
//   COR_2_4: r in (0, 1)      (||f|| = 1 forces r < 2; r < 1 keeps alpha > 1/2)
//   COR_2_5: 0 < m <= M       (constant profiles)
struct RecipeParams {
  std::optional<double> k;
  std::optional<double> alpha;
  std::optional<double> rho;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<double> radius;
};

struct ExtremalRecipe {
  BoundId bound = BoundId::kDominance;
  double alpha = 0.0;  // component along e, > 0
  double beta = 0.0;   // orthogonal amplitude, >= 0
  RecipeParams params;
  double length = 1.0;           // b - a
  double expected_defect = 0.0;  // >= 0
};

// Closed-form (alpha, beta) for which the cone attains equality. Throws
// InputError for bounds without a recipe or parameters out of range.
ExtremalRecipe solve_equality_params(BoundId id, const RecipeParams& params,
                                     double length);

bool has_unit_recipe(BoundId id);

// The cone alpha e + s(t) beta u on `grid`. Throws InputError unless e and u
// are orthonormal and grid length matches the recipe.
GridFunction build_unit_extremal(const ExtremalRecipe& recipe, const HVector& e,
                                 const HVector& u, const Grid& grid);

// Bound parameters matching a recipe (constant profiles on `grid`).
BoundParams recipe_bound_params(const ExtremalRecipe& recipe, const Grid& grid);

struct FamilyExtremal {
  GridFunction f;
  std::vector<ScalarProfile> dominance;  // M_i(t) = c(t) (1 - 1/sqrt(n))
};

// f(t) = c(t) (e_1 + ... + e_n) / sqrt(n); c must be nonnegative.
FamilyExtremal build_family_extremal(const OrthonormalFamily& family,
                                     const ScalarProfile& c);

// Distance to equality of a holding result (its margin). Throws StateError
// unless the verdict is kHolds.
double tightness_gap(const BoundResult& result);

}  // namespace revtri

#endif  // REVTRI_EXTREMAL_HPP_
