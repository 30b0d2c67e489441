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

#include "revtri/bounds.hpp"
#include "revtri/counter_rng.hpp"
#include "revtri/error.hpp"

namespace revtri {
namespace {

constexpr double kPi = std::numbers::pi;

const HVector kE = HVector::real({1.0, 0.0});
const HVector kU = HVector::real({0.0, 1.0});

GridFunction constant(const Grid& g, const HVector& x) {
  return GridFunction(g, std::vector<HVector>(g.size(), x));
}

GridFunction cone(double alpha, double beta, const Grid& g = Grid(0, 1, 512)) {
  return materialize(ConeSpec{kE, kU, alpha, beta}, g, Field::kReal, 2);
}

OrthonormalFamily basis_family(std::size_t n, std::size_t d) {
  std::vector<HVector> members;
  for (std::size_t i = 0; i < n; ++i) members.push_back(HVector::basis(Field::kReal, d, i));
  return *check_orthonormal(members, 1e-12).family;
}

BoundParams with_rho(double rho) {
  BoundParams p;
  p.rho = rho;
  return p;
}

BoundParams with_band(double m, double M) {
  BoundParams p;
  p.lower = m;
  p.upper = M;
  return p;
}

TEST(Constants, BallConstantMatchesAlternativeForm) {
  EXPECT_NEAR(ball_constant(0.6), 0.25, 1e-15);
  CounterRng rng(1);
  for (int i = 0; i < 500; ++i) {
    const double rho = rng.uniform(1e-3, 0.999);
    const double oracle = 1.0 / std::sqrt(1.0 - rho * rho) - 1.0;
    EXPECT_NEAR(ball_constant(rho), oracle, 1e-12 * (1 + oracle));
  }
  EXPECT_THROW(ball_constant(1.0), InputError);
  EXPECT_THROW(ball_constant(1.0 - 1e-10), InputError);
}

TEST(Constants, BandConstantMatchesAlternativeForm) {
  EXPECT_NEAR(band_constant(1.0, 4.0), 0.25, 1e-15);
  EXPECT_EQ(band_constant(2.0, 2.0), 0.0);
  CounterRng rng(2);
  for (int i = 0; i < 500; ++i) {
    const double m = rng.uniform(0.01, 5);
    const double M = m * rng.uniform(1, 50);
    const double oracle = (M + m) / (2 * std::sqrt(m * M)) - 1.0;
    EXPECT_NEAR(band_constant(m, M), oracle, 1e-12 * (1 + oracle));
  }
}

TEST(Constants, BandProfileIntegrand) {
  EXPECT_EQ(band_profile_integrand(0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(band_profile_integrand(1.0, 4.0), 1.8);
}

TEST(Validation, RhoRange) {
  try {
    validate_params(BoundId::kBall, with_rho(1.0));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.path(), "rho");
    EXPECT_NE(std::string(e.what()).find("(0,1)"), std::string::npos);
  }
  EXPECT_THROW(validate_params(BoundId::kBall, with_rho(0.0)), ValidationError);
  EXPECT_THROW(validate_params(BoundId::kBall, BoundParams{}), ValidationError);
}

TEST(Validation, BandOrderAndFamilyLengths) {
  EXPECT_THROW(validate_params(BoundId::kBand, with_band(4.0, 1.0)), ValidationError);
  EXPECT_THROW(validate_params(BoundId::kBand, with_band(0.0, 1.0)), ValidationError);
  BoundParams p;
  p.family_rho = {0.5};
  EXPECT_THROW(validate_params(BoundId::kFamilyBall, p, 2), ValidationError);
  p.family_rho = {0.5, 1.5};
  try {
    validate_params(BoundId::kFamilyBall, p, 2);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.path(), "rho[1]");
  }
}

TEST(Names, RoundTrip) {
  for (BoundId id : kAllBounds) EXPECT_EQ(bound_from_string(to_string(id)), id);
  EXPECT_THROW(bound_from_string("THM_9_9"), InputError);
  EXPECT_EQ(to_string(Verdict::kHypothesisFailed), "hypothesis_failed");
}

TEST(UnitBounds, DominanceTrivialEquality) {
  const Grid g(0, 1, 16);
  BoundParams p;
  p.k = constant_profile(g, 0.0);
  const auto r = eval_unit_bound(constant(g, kE), kE, p, BoundId::kDominance);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs, 0.0, 1e-15);
  EXPECT_NEAR(r.rhs, 0.0, 1e-15);
}

TEST(UnitBounds, BallConeEquality) {
  const auto r = eval_unit_bound(cone(0.64, 0.48), kE, with_rho(0.6), BoundId::kBall);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs, 0.16, 1e-12);
  EXPECT_NEAR(r.rhs, 0.16, 1e-12);
  EXPECT_NEAR(r.rhs_terms[0].value, 0.25, 1e-15);
  EXPECT_NEAR(r.rhs_terms[1].value, 0.64, 1e-14);
  EXPECT_LE(r.rhs, *r.diagnostic("weak_rhs") + 1e-15);
}

TEST(UnitBounds, BandConeEquality) {
  const auto r = eval_unit_bound(cone(1.6, 1.2), kE, with_band(1, 4), BoundId::kBand);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs, 0.4, 1e-12);
  EXPECT_NEAR(r.rhs, 0.4, 1e-12);
}

TEST(UnitBounds, BandProfileConeEquality) {
  const Grid g(0, 1, 512);
  BoundParams p;
  p.lower_profile = constant_profile(g, 1.0);
  p.upper_profile = constant_profile(g, 4.0);
  const auto r = eval_unit_bound(cone(2.05, std::sqrt(2.0475), g), kE, p, BoundId::kBandProfile);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs, 0.45, 1e-12);
  EXPECT_NEAR(r.rhs, 0.45, 1e-12);
}

TEST(UnitBounds, HypothesisFailureIsNotJudged) {
  const Grid g(0, 1, 64);
  const auto e3 = HVector::real({1, 0, 0});
  const auto f = materialize(BallPerturbationSpec{e3, 0.9, 1.0, {}, {}}, g, Field::kReal, 3);
  const auto r = eval_unit_bound(f, e3, with_rho(0.6), BoundId::kBall);
  EXPECT_EQ(r.verdict, Verdict::kHypothesisFailed);
  EXPECT_FALSE(r.hypothesis.holds);
}

TEST(UnitBounds, ViolationNeedsALooseTolerance) {
  // Pointwise residual of cone(1, 1) is sqrt(2) - 1 - k.
  const Grid g(0, 1, 64);
  const auto f = cone(1.0, 1.0, g);
  BoundParams p;
  p.k = constant_profile(g, 0.5);
  const auto ok = eval_unit_bound(f, kE, p, BoundId::kDominance);
  EXPECT_EQ(ok.verdict, Verdict::kHolds);
  EXPECT_NEAR(ok.lhs, std::sqrt(2.0) - 1.0, 1e-14);

  p.k = constant_profile(g, 0.1);
  EXPECT_EQ(eval_unit_bound(f, kE, p, BoundId::kDominance).verdict, Verdict::kHypothesisFailed);
  EvalOptions loose;
  loose.hypothesis_tolerance = 1.0;
  const auto bad = eval_unit_bound(f, kE, p, BoundId::kDominance, loose);
  EXPECT_EQ(bad.verdict, Verdict::kViolated);
  EXPECT_LT(bad.margin, -bad.err_budget);
}

TEST(UnitBounds, RatioCorrectedFormTightOnCone) {
  const auto r = eval_unit_bound(cone(1.6, 1.2), kE, with_band(1, 4), BoundId::kRatioBand);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs, 0.4, 1e-12);
  EXPECT_NEAR(r.rhs, 0.2 * 2.0, 1e-12);
  EXPECT_NEAR(*r.diagnostic("multiplicative_margin"), 0.0, 1e-12);
  // The printed form scales the constant by || int f || = 1.6 instead.
  EXPECT_NEAR(*r.diagnostic("printed_rhs"), 0.32, 1e-12);
  EXPECT_LT(*r.diagnostic("printed_margin"), 0.0);
}

TEST(UnitBounds, MultiplicativeBounds) {
  const Grid g(0, 1, 64);
  BoundParams p;
  p.ratio = std::sqrt(2.0);
  auto r = eval_unit_bound(constant(g, HVector::real({1, 1})), kE, p, BoundId::kRatio);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs, std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(r.rhs, 2.0, 1e-14);

  r = eval_unit_bound(cone(0.64, 0.48), kE, with_rho(0.6), BoundId::kRatioBall);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs, 0.64, 1e-12);
  EXPECT_NEAR(r.rhs, 0.64, 1e-12);
}

TEST(UnitBounds, KaramataArc) {
  const Grid g(-kPi / 3, kPi / 3, 512);
  const auto f = materialize(ComplexCurveSpec{ConstantProfile{1.0}, LinearProfile{-kPi / 3, kPi / 3}},
                             g, Field::kComplex, 1);
  BoundParams p;
  p.theta = kPi / 3;
  const auto r = eval_unit_bound(f, HVector::complex({1.0}), p, BoundId::kArgument);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs, 0.5 * 2 * kPi / 3, 1e-10);
  EXPECT_NEAR(r.rhs, std::sqrt(3.0), 1e-10);
}

TEST(FamilyBounds, SymmetricEquality) {
  const Grid g(0, 1, 64);
  const auto family = basis_family(2, 2);
  const auto f = materialize(FamilySymmetricSpec{family.members(), ConstantProfile{1.0}}, g,
                             Field::kReal, 2);
  BoundParams p;
  p.family_k.assign(2, constant_profile(g, 1.0 - 1.0 / std::sqrt(2.0)));
  const auto r = eval_family_bound(f, family, p, BoundId::kFamilyDominance);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs, 1.0, 1e-14);
  EXPECT_NEAR(r.rhs, 1.0, 1e-14);
}

TEST(FamilyBounds, SingleMemberReducesToUnitBound) {
  const Grid g(0, 1, 16);
  const auto family = basis_family(1, 2);
  BoundParams p;
  p.family_k = {constant_profile(g, 0.0)};
  const auto r = eval_family_bound(constant(g, kE), family, p, BoundId::kFamilyDominance);
  EXPECT_NEAR(r.lhs, 1.0, 1e-15);
  EXPECT_NEAR(r.rhs, 1.0, 1e-15);
}

TEST(FamilyBounds, UnequalDominanceProfiles) {
  const Grid g(0, 1, 16);
  const auto family = basis_family(2, 2);
  BoundParams p;
  p.family_k = {constant_profile(g, 0.0), constant_profile(g, 1.0)};
  const auto r = eval_family_bound(constant(g, kE), family, p, BoundId::kFamilyDominance);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs, 1.0, 1e-15);
  EXPECT_NEAR(r.rhs, 1.0 / std::sqrt(2.0) + 0.5, 1e-15);
}

TEST(FamilyBounds, ReductionMatchesUnitBoundOnRandomData) {
  CounterRng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Grid g(0, rng.uniform(0.5, 2), 64);
    const std::size_t d = 1 + trial % 4;
    std::vector<Scalar> ec(d);
    for (auto& c : ec) c = Scalar(rng.normal(), rng.normal());
    HVector e(Field::kComplex, ec);
    e *= 1.0 / norm(e);
    std::vector<HVector> values;
    std::vector<double> k;
    for (std::size_t j = 0; j < g.size(); ++j) {
      std::vector<Scalar> x(d);
      for (auto& c : x) c = Scalar(rng.normal(), rng.normal());
      values.emplace_back(Field::kComplex, x);
      k.push_back(norm(values.back()) - re_inner(values.back(), e) + rng.uniform(0, 0.2));
    }
    const GridFunction f(g, values);
    BoundParams unit;
    unit.k = ScalarProfile(g, k);
    BoundParams fam;
    fam.family_k = {ScalarProfile(g, k)};
    const auto a = eval_unit_bound(f, e, unit, BoundId::kDominance);
    const auto b = eval_family_bound(f, *check_orthonormal({e}, 1e-10).family, fam,
                                     BoundId::kFamilyDominance);
    const double scale = std::max({1.0, b.lhs, b.rhs});
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_NEAR(a.margin, b.margin, 1e-12 * scale) << "trial " << trial;
  }
}

TEST(FamilyBounds, WeightedDirectionChain) {
  const Grid g(0, 1, 32);
  const auto family = basis_family(2, 3);
  const HVector centre = 0.5 * family.sum();
  BoundParams p;
  p.family_rho = {0.75, 0.9};
  const auto r = eval_family_bound(constant(g, centre), family, p, BoundId::kFamilyBall);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_LE(r.rhs, *r.diagnostic("weak_rhs") + 1e-15);
  // Constant f: lhs = || int f || and extra = (c_1 + c_2) / 4.
  const double extra = (ball_constant(0.75) + ball_constant(0.9)) / 4.0;
  EXPECT_NEAR(r.rhs, norm(centre) / std::sqrt(2.0) + extra, 1e-14);
}

TEST(ComplexBounds, BallConstantFunction) {
  const Grid g(0, 1, 16);
  const double s = 1.0 / std::sqrt(2.0);
  const auto f = constant(g, complex_unit(s, s));
  const auto r = eval_complex_bound(f, s, s, with_rho(0.6), BoundId::kComplexBall);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs, 0.0, 1e-15);
  EXPECT_NEAR(r.rhs, 0.25, 1e-15);
  EXPECT_LE(*r.diagnostic("split_form_residual"), 1e-15);
}

TEST(ComplexBounds, DegenerateBox) {
  const Grid g(0, 1, 16);
  const double s = 1.0 / std::sqrt(2.0);
  BoundParams p;
  p.lower_profile = constant_profile(g, 1.0);
  p.upper_profile = constant_profile(g, 1.0);
  const auto r = eval_complex_bound(constant(g, complex_unit(s, s)), s, s, p,
                                    BoundId::kComplexBox);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(r.hypothesis.condition_id, condition::kBoxComplex);
  EXPECT_NEAR(r.lhs, 0.0, 1e-15);
  EXPECT_EQ(r.rhs, 0.0);
}

TEST(ComplexBounds, RejectsRealOrWideData) {
  const Grid g(0, 1, 4);
  EXPECT_THROW(eval_complex_bound(constant(g, kE), 1.0, 0.0, with_rho(0.5), BoundId::kComplexBall),
               InputError);
  EXPECT_THROW(eval_complex_bound(constant(g, HVector::complex({1.0})), 0.6, 0.6, with_rho(0.5),
                                  BoundId::kComplexBall),
               InputError);
}

TEST(ErrorBudget, ScalesWithQuadratureError) {
  const auto coarse = eval_unit_bound(cone(1.6, 1.2, Grid(0, 1, 8)), kE, with_band(1, 4),
                                      BoundId::kBand);
  EXPECT_GE(coarse.err_budget, 1e-12);
  EXPECT_LT(coarse.err_budget, 1e-9);
}

}  // namespace
}  // namespace revtri
