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

// Reverse triangle inequality bounds.
//
// Additive bounds compare the defect  D = int ||f|| - || int f ||  with an
// upper bound; multiplicative bounds compare  c * int ||f||  with
// || int f ||; family bounds compare  int ||f||  with
// || int f || / sqrt(n) + extra. Every evaluation first checks the pointwise
// hypothesis of the bound and embeds that report in the result.

#ifndef REVTRI_BOUNDS_HPP_
#define REVTRI_BOUNDS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "revtri/function_model.hpp"
#include "revtri/hilbert.hpp"
#include "revtri/hypotheses.hpp"
#include "revtri/quadrature.hpp"

namespace revtri {

// Bound identifiers. The string forms ("THM_2_1", ...) are the vocabulary of
// scenario files and reports.
enum class BoundId {
  kDominance,           // THM_2_1:  D <= int k
  kBall,                // COR_2_2:  D <= c(rho) Re<int f, e>
  kBand,                // COR_2_3:  D <= c(m, M) Re<int f, e>
  kBallProfile,         // COR_2_4:  D <= 1/2 int r^2
  kBandProfile,         // COR_2_5:  D <= 1/4 int (M - m)^2 / (M + m)
  kRatio,               // MULT_A:   int ||f|| <= K || int f ||
  kRatioBall,           // MULT_B:   sqrt(1 - rho^2) int ||f|| <= || int f ||
  kRatioBand,           // MULT_C:   D <= (sqrt M - sqrt m)^2 / (M + m) int ||f||
  kArgument,            // KARAMATA: cos(theta) int |f| <= | int f |
  kFamilyDominance,     // THM_3_1
  kFamilyBall,          // COR_3_2
  kFamilyBand,          // COR_3_3
  kFamilyBallProfile,   // COR_3_4
  kFamilyBandProfile,   // COR_3_5
  kComplexBall,         // PROP_4_1
  kComplexBand,         // PROP_4_2
  kComplexBox,          // PROP_4_3
};

inline constexpr BoundId kAllBounds[] = {
    BoundId::kDominance,        BoundId::kBall,
    BoundId::kBand,             BoundId::kBallProfile,
    BoundId::kBandProfile,      BoundId::kRatio,
    BoundId::kRatioBall,        BoundId::kRatioBand,
    BoundId::kArgument,         BoundId::kFamilyDominance,
    BoundId::kFamilyBall,       BoundId::kFamilyBand,
    BoundId::kFamilyBallProfile, BoundId::kFamilyBandProfile,
    BoundId::kComplexBall,      BoundId::kComplexBand,
    BoundId::kComplexBox,
};

std::string_view to_string(BoundId id);
BoundId bound_from_string(std::string_view name);  // throws InputError

enum class BoundKind { kUnit, kFamily, kComplex };
BoundKind kind_of(BoundId id);

// Parameters for every bound; each bound reads only its own fields (see
// validate_params). Family fields carry one entry per family member.
struct BoundParams {
  std::optional<ScalarProfile> k;             // dominance profile k(t)
  std::optional<double> rho;                  // ball radius, (0, 1)
  std::optional<double> lower;                // band m > 0
  std::optional<double> upper;                // band M >= m
  std::optional<ScalarProfile> radius;        // ball radius profile r(t)
  std::optional<ScalarProfile> lower_profile; // m(t)
  std::optional<ScalarProfile> upper_profile; // M(t)
  std::optional<double> ratio;                // K >= 1
  std::optional<double> theta;                // (0, pi/2)

  std::vector<ScalarProfile> family_k;
  std::vector<double> family_rho;
  std::vector<double> family_lower;
  std::vector<double> family_upper;
  std::vector<ScalarProfile> family_radius;
  std::vector<ScalarProfile> family_lower_profile;
  std::vector<ScalarProfile> family_upper_profile;
};

// Throws ValidationError (path = parameter name) when a field required by
// `id` is missing or out of range. `family_size` is checked against the
// length of family fields.
void validate_params(BoundId id, const BoundParams& params,
                     std::size_t family_size = 0);

// rho^2 / (sqrt(1 - rho^2) (1 + sqrt(1 - rho^2))); rejects rho >= 1 - 1e-9.
double ball_constant(double rho);
// (sqrt M - sqrt m)^2 / (2 sqrt(m M))
double band_constant(double lower, double upper);
// (M - m)^2 / (M + m), defined as 0 when M = m = 0.
double band_profile_integrand(double lower, double upper);

enum class Verdict { kHolds, kViolated, kHypothesisFailed };
std::string_view to_string(Verdict v);

struct Term {
  std::string label;
  double value = 0.0;
};

struct BoundResult {
  BoundId bound = BoundId::kDominance;
  double lhs = 0.0;
  double rhs = 0.0;
  std::vector<Term> rhs_terms;
  double margin = 0.0;  // rhs - lhs
  HypothesisReport hypothesis;
  double err_budget = 0.0;
  Verdict verdict = Verdict::kHolds;
  // Secondary quantities: weak (norm-form) right-hand sides, printed-form
  // margins and consistency residuals. Never part of the verdict.
  std::vector<Term> diagnostics;

  std::optional<double> diagnostic(std::string_view label) const;
};

struct EvalOptions {
  Rule rule = Rule::kSimpson;
  double hypothesis_tolerance = kDefaultHypothesisTolerance;
  double orthonormal_tolerance = kDefaultOrthonormalTolerance;
  // err_budget = slack_factor * (first-order propagated quadrature error)
  //            + 1e-12 * max(1, |lhs|, |rhs|, int ||f||)
  double slack_factor = 10.0;
};

// Unit-vector bounds: THM_2_1, COR_2_2..COR_2_5, MULT_A..MULT_C, KARAMATA.
// KARAMATA ignores `e`.
BoundResult eval_unit_bound(const GridFunction& f, const HVector& e,
                            const BoundParams& params, BoundId id,
                            const EvalOptions& options = {});

// Orthonormal family bounds: THM_3_1, COR_3_2..COR_3_5.
BoundResult eval_family_bound(const GridFunction& f,
                              const OrthonormalFamily& family,
                              const BoundParams& params, BoundId id,
                              const EvalOptions& options = {});

// Complex-valued bounds (d = 1 over C, e = alpha + i beta): PROP_4_1..4_3.
BoundResult eval_complex_bound(const GridFunction& f, double alpha, double beta,
                               const BoundParams& params, BoundId id,
                               const EvalOptions& options = {});

}  // namespace revtri

#endif  // REVTRI_BOUNDS_HPP_
