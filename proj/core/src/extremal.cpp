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

#include "revtri/extremal.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "revtri/error.hpp"

namespace revtri {

namespace {

double need(const std::optional<double>& x, const char* name) {
  if (!x || !std::isfinite(*x)) {
    throw InputError(std::string("recipe parameter ") + name + " is required");
  }
  return *x;
}

double checked_sqrt(double x) {
  // Rounding can push an exact zero slightly negative.
  assert(x > -1e-12);
  return std::sqrt(std::max(0.0, x));
}

}  // namespace

bool has_unit_recipe(BoundId id) {
  switch (id) {
    case BoundId::kDominance:
    case BoundId::kBall:
    case BoundId::kBand:
    case BoundId::kBallProfile:
    case BoundId::kBandProfile:
      return true;
    default:
      return false;
  }
}

ExtremalRecipe solve_equality_params(BoundId id, const RecipeParams& params,
                                     double length) {
  if (!(length > 0.0)) throw InputError("interval length must be positive");
  ExtremalRecipe r;
  r.bound = id;
  r.length = length;
  switch (id) {
    case BoundId::kDominance: {
      // ||f|| - Re<f, e> = k  with Re<f, e> = alpha.
      const double k = need(params.k, "k");
      const double alpha = params.alpha.value_or(1.0);
      if (!(k > 0.0)) throw InputError("k must be > 0");
      if (!(alpha > 0.0)) throw InputError("alpha must be > 0");
      r.alpha = alpha;
      r.beta = std::sqrt(k * k + 2.0 * alpha * k);
      r.params.k = k;
      r.params.alpha = alpha;
      r.expected_defect = k * length;
      break;
    }
    case BoundId::kBall: {
      // ||f - e|| = rho and ||f|| = sqrt(1 - rho^2).
      const double rho = need(params.rho, "rho");
      const double c = ball_constant(rho);
      r.alpha = 1.0 - rho * rho;
      r.beta = rho * std::sqrt(1.0 - rho * rho);
      r.params.rho = rho;
      r.expected_defect = c * r.alpha * length;
      break;
    }
    case BoundId::kBand: {
      // Band boundary with ||f|| = sqrt(m M).
      const double m = need(params.lower, "m");
      const double big_m = need(params.upper, "M");
      const double c = band_constant(m, big_m);
      r.alpha = 2.0 * m * big_m / (big_m + m);
      r.beta = std::sqrt(m * big_m) * (big_m - m) / (big_m + m);
      r.params.lower = m;
      r.params.upper = big_m;
      r.expected_defect = c * r.alpha * length;
      break;
    }
    case BoundId::kBallProfile: {
      // ||f|| = 1 and ||f - e|| = r.
      const double radius = need(params.radius, "r");
      if (!(radius > 0.0) || !(radius < 1.0)) {
        throw InputError("r must lie in the open interval (0,1)");
      }
      r.alpha = 1.0 - 0.5 * radius * radius;
      r.beta = radius * std::sqrt(1.0 - 0.25 * radius * radius);
      r.params.radius = radius;
      r.expected_defect = 0.5 * radius * radius * length;
      break;
    }
    case BoundId::kBandProfile: {
      // ||f|| = c0 on the disk boundary ||f - c0 e|| = R.
      const double m = need(params.lower, "m");
      const double big_m = need(params.upper, "M");
      if (!(m > 0.0) || !(big_m >= m)) {
        throw InputError("recipe needs 0 < m <= M");
      }
      const double c0 = 0.5 * (big_m + m);
      const double radius = 0.5 * (big_m - m);
      r.alpha = c0 - radius * radius / (2.0 * c0);
      r.beta = checked_sqrt(radius * radius -
                            radius * radius * radius * radius / (4.0 * c0 * c0));
      r.params.lower = m;
      r.params.upper = big_m;
      r.expected_defect = 0.25 * band_profile_integrand(m, big_m) * length;
      break;
    }
    default:
      throw InputError(std::string("no unit-vector extremal recipe for ") +
                       std::string(to_string(id)));
  }
  return r;
}

GridFunction build_unit_extremal(const ExtremalRecipe& recipe, const HVector& e,
                                 const HVector& u, const Grid& grid) {
  if (std::abs(grid.length() - recipe.length) > 1e-12 * std::max(1.0, recipe.length)) {
    throw InputError("grid length does not match the recipe");
  }
  return materialize(ConeSpec{e, u, recipe.alpha, recipe.beta}, grid, e.field(),
                     e.dim());
}

BoundParams recipe_bound_params(const ExtremalRecipe& recipe, const Grid& grid) {
  BoundParams p;
  switch (recipe.bound) {
    case BoundId::kDominance:
      p.k = constant_profile(grid, *recipe.params.k);
      break;
    case BoundId::kBall:
      p.rho = recipe.params.rho;
      break;
    case BoundId::kBand:
      p.lower = recipe.params.lower;
      p.upper = recipe.params.upper;
      break;
    case BoundId::kBallProfile:
      p.radius = constant_profile(grid, *recipe.params.radius);
      break;
    case BoundId::kBandProfile:
      p.lower_profile = constant_profile(grid, *recipe.params.lower);
      p.upper_profile = constant_profile(grid, *recipe.params.upper);
      break;
    default:
      break;
  }
  return p;
}

FamilyExtremal build_family_extremal(const OrthonormalFamily& family,
                                     const ScalarProfile& c) {
  c.for_each_sample([](std::size_t, double v, bool) {
    if (!(v >= 0.0)) throw InputError("scale profile must be nonnegative");
  });
  const double root_n = std::sqrt(static_cast<double>(family.size()));
  const HVector direction = (1.0 / root_n) * family.sum();
  GridFunction f(c.map([&](double v) { return v * direction; }));
  const double slack = 1.0 - 1.0 / root_n;
  ScalarProfile m = c.map([&](double v) { return v * slack; });
  return {std::move(f), std::vector<ScalarProfile>(family.size(), m)};
}

double tightness_gap(const BoundResult& result) {
  if (result.verdict != Verdict::kHolds) {
    throw StateError("tightness gap requested for a result that does not hold");
  }
  return result.margin;
}

}  // namespace revtri
