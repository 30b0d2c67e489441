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


#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "revtri/counter_rng.hpp"
#include "revtri/error.hpp"
#include "revtri/extremal.hpp"

namespace revtri {
namespace {

constexpr double kPi = std::numbers::pi;

// Maximum over the circle |x - (centre, 0)| = radius, upper half plane, of
// ||x|| - slope * x_1. The objective is convex, so the maximum over the disk
// sits on this boundary. Dense scan followed by golden-section refinement.
struct PlanarMax {
  double value;
  double x1;
  double x2;
};

PlanarMax boundary_max(double centre, double radius, double slope) {
  auto point = [&](double phi) {
    return std::pair{centre + radius * std::cos(phi), radius * std::sin(phi)};
  };
  auto objective = [&](double phi) {
    const auto [x, y] = point(phi);
    return std::hypot(x, y) - slope * x;
  };
  constexpr int kScan = 20000;
  int best = 0;
  for (int i = 1; i <= kScan; ++i) {
    if (objective(kPi * i / kScan) > objective(kPi * best / kScan)) best = i;
  }
  double lo = kPi * std::max(0, best - 1) / kScan;
  double hi = kPi * std::min(kScan, best + 1) / kScan;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double p = hi - g * (hi - lo);
    const double q = lo + g * (hi - lo);
    if (objective(p) < objective(q)) {
      lo = p;
    } else {
      hi = q;
    }
  }
  const double phi = 0.5 * (lo + hi);
  const auto [x, y] = point(phi);
  return {objective(phi), x, y};
}

RecipeParams rho(double v) {
  RecipeParams p;
  p.rho = v;
  return p;
}

RecipeParams band(double m, double M) {
  RecipeParams p;
  p.lower = m;
  p.upper = M;
  return p;
}

TEST(Recipe, WorkedValues) {
  auto r = solve_equality_params(BoundId::kBall, rho(0.6), 1.0);
  EXPECT_NEAR(r.alpha, 0.64, 1e-15);
  EXPECT_NEAR(r.beta, 0.48, 1e-15);
  EXPECT_NEAR(r.expected_defect, 0.16, 1e-15);

  r = solve_equality_params(BoundId::kBand, band(1, 4), 1.0);
  EXPECT_NEAR(r.alpha, 1.6, 1e-15);
  EXPECT_NEAR(r.beta, 1.2, 1e-15);
  EXPECT_NEAR(r.expected_defect, 0.4, 1e-15);

  r = solve_equality_params(BoundId::kBandProfile, band(1, 4), 1.0);
  EXPECT_NEAR(r.alpha, 2.05, 1e-15);
  EXPECT_NEAR(r.beta, std::sqrt(2.0475), 1e-15);
  EXPECT_NEAR(r.expected_defect, 0.45, 1e-15);

  RecipeParams p;
  p.radius = 0.5;
  r = solve_equality_params(BoundId::kBallProfile, p, 1.0);
  EXPECT_NEAR(r.alpha, 0.875, 1e-15);
  EXPECT_NEAR(r.beta, 0.5 * std::sqrt(1.0 - 1.0 / 16.0), 1e-15);
  EXPECT_NEAR(r.expected_defect, 0.125, 1e-15);

  p = {};
  p.k = 0.5;
  p.alpha = 1.0;
  r = solve_equality_params(BoundId::kDominance, p, 2.0);
  EXPECT_NEAR(std::hypot(r.alpha, r.beta) - r.alpha, 0.5, 1e-15);
  EXPECT_NEAR(r.expected_defect, 1.0, 1e-15);
}

TEST(Recipe, RejectsOutOfRange) {
  EXPECT_THROW(solve_equality_params(BoundId::kBall, rho(1.0), 1.0), InputError);
  EXPECT_THROW(solve_equality_params(BoundId::kBand, band(4, 1), 1.0), InputError);
  EXPECT_THROW(solve_equality_params(BoundId::kRatio, RecipeParams{}, 1.0), InputError);
  EXPECT_FALSE(has_unit_recipe(BoundId::kFamilyBall));
}

// Each recipe point must be the maximizer of the pointwise excess over the
// hypothesis region, and the maximum must match the bound's integrand.
TEST(Recipe, MatchesPlanarSearchOracle) {
  CounterRng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const double r0 = rng.uniform(0.05, 0.95);
    const double m = rng.uniform(0.2, 3.0);
    const double M = m * rng.uniform(1.1, 8.0);

    auto ball = solve_equality_params(BoundId::kBall, rho(r0), 1.0);
    auto o = boundary_max(1.0, r0, 1.0 + ball_constant(r0));
    EXPECT_NEAR(o.value, 0.0, 1e-9);
    EXPECT_NEAR(o.x1, ball.alpha, 1e-6);
    EXPECT_NEAR(o.x2, ball.beta, 1e-6);

    auto bnd = solve_equality_params(BoundId::kBand, band(m, M), 1.0);
    o = boundary_max(0.5 * (M + m), 0.5 * (M - m), 1.0 + band_constant(m, M));
    EXPECT_NEAR(o.value, 0.0, 1e-9 * M);
    EXPECT_NEAR(o.x1, bnd.alpha, 1e-5 * M);
    EXPECT_NEAR(o.x2, bnd.beta, 1e-5 * M);

    auto prof = solve_equality_params(BoundId::kBandProfile, band(m, M), 1.0);
    o = boundary_max(0.5 * (M + m), 0.5 * (M - m), 1.0);
    EXPECT_NEAR(o.value, 0.25 * (M - m) * (M - m) / (M + m), 1e-9 * M);
    EXPECT_NEAR(o.value, prof.expected_defect, 1e-9 * M);
    EXPECT_NEAR(o.x1, prof.alpha, 1e-5 * M);
    EXPECT_NEAR(o.x2, prof.beta, 1e-5 * M);

    RecipeParams rp;
    rp.radius = r0;
    auto bp = solve_equality_params(BoundId::kBallProfile, rp, 1.0);
    o = boundary_max(1.0, r0, 1.0);
    EXPECT_NEAR(o.value, 0.5 * r0 * r0, 1e-9);
    EXPECT_NEAR(o.x1, bp.alpha, 1e-6);
    EXPECT_NEAR(o.x2, bp.beta, 1e-6);
  }
}

TEST(Recipe, BandProfileIsLocalMaximumOnDiskBoundary) {
  const auto r = solve_equality_params(BoundId::kBandProfile, band(1, 4), 1.0);
  const double phi = std::atan2(r.beta, r.alpha - 2.5);
  auto excess = [](double x, double y) { return std::hypot(x, y) - x; };
  const double at = excess(r.alpha, r.beta);
  for (double dphi : {-0.01, 0.01}) {
    EXPECT_LT(excess(2.5 + 1.5 * std::cos(phi + dphi), 1.5 * std::sin(phi + dphi)), at);
  }
}

HVector random_unit(CounterRng& rng, std::size_t d) {
  std::vector<Scalar> x(d);
  for (auto& c : x) c = Scalar(rng.normal(), rng.normal());
  HVector v(Field::kComplex, x);
  return v * (1.0 / norm(v));
}

TEST(Cone, TightOnRandomRecipes) {
  CounterRng rng(43);
  const BoundId ids[] = {BoundId::kDominance, BoundId::kBall, BoundId::kBand,
                         BoundId::kBallProfile, BoundId::kBandProfile};
  for (int trial = 0; trial < 50; ++trial) {
    const double a = rng.uniform(-2, 2);
    const Grid grid(a, a + rng.uniform(0.2, 3), 128);
    const std::size_t d = 2 + trial % 3;
    const HVector e = random_unit(rng, d);
    HVector u = random_unit(rng, d);
    u -= inner(u, e) * e;
    u *= 1.0 / norm(u);
    for (BoundId id : ids) {
      RecipeParams p;
      p.k = rng.uniform(0.01, 2);
      p.alpha = rng.uniform(0.1, 3);
      p.rho = rng.uniform(0.01, 0.99);
      p.lower = rng.uniform(0.1, 3);
      p.upper = *p.lower * rng.uniform(1, 10);
      p.radius = rng.uniform(0.01, 0.99);
      const auto recipe = solve_equality_params(id, p, grid.length());
      const auto f = build_unit_extremal(recipe, e, u, grid);
      const auto result = eval_unit_bound(f, e, recipe_bound_params(recipe, grid), id);
      const double scale = std::max({1.0, result.lhs, result.rhs});
      ASSERT_EQ(result.verdict, Verdict::kHolds) << to_string(id);
      EXPECT_LE(std::abs(result.lhs - result.rhs), 1e-9 * scale) << to_string(id);
      EXPECT_NEAR(result.lhs, recipe.expected_defect, 1e-9 * scale) << to_string(id);
    }
  }
}

TEST(Cone, RejectsMismatchedGrid) {
  const auto recipe = solve_equality_params(BoundId::kBall, rho(0.5), 1.0);
  EXPECT_THROW(build_unit_extremal(recipe, HVector::real({1, 0}), HVector::real({0, 1}),
                                   Grid(0, 2, 8)),
               InputError);
  EXPECT_THROW(build_unit_extremal(recipe, HVector::real({1, 0}), HVector::real({1, 0}),
                                   Grid(0, 1, 8)),
               InputError);
}

OrthonormalFamily basis_family(std::size_t n) {
  std::vector<HVector> m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(HVector::basis(Field::kReal, n, i));
  return *check_orthonormal(m, 1e-12).family;
}

BoundResult family_result(std::size_t n, const ScalarProfile& c) {
  const auto family = basis_family(n);
  const auto ex = build_family_extremal(family, c);
  BoundParams p;
  p.family_k = ex.dominance;
  return eval_family_bound(ex.f, family, p, BoundId::kFamilyDominance);
}

TEST(FamilyRecipe, Equality) {
  const Grid g(0, 1, 64);
  auto r = family_result(1, constant_profile(g, 1.0));
  EXPECT_NEAR(r.lhs, 1.0, 1e-15);
  EXPECT_NEAR(r.margin, 0.0, 1e-15);

  r = family_result(2, constant_profile(g, 1.0));
  EXPECT_NEAR(r.lhs, 1.0, 1e-14);
  EXPECT_NEAR(r.rhs, 1.0, 1e-14);

  r = family_result(4, profile_of(LinearProfile{1.0, 2.0}, g));
  EXPECT_NEAR(r.lhs, 1.5, 1e-14);
  EXPECT_NEAR(r.rhs, 1.5, 1e-14);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
}

TEST(TightnessGap, SlackAndErrors) {
  const Grid g(0, 3, 8);
  const auto e = HVector::real({1, 0});
  const GridFunction f(g, std::vector<HVector>(g.size(), e));
  BoundParams p;
  p.k = constant_profile(g, 1.0);
  EXPECT_NEAR(tightness_gap(eval_unit_bound(f, e, p, BoundId::kDominance)), 3.0, 1e-14);
  BoundResult failed;
  failed.verdict = Verdict::kHypothesisFailed;
  EXPECT_THROW(tightness_gap(failed), StateError);
}

}  // namespace
}  // namespace revtri
