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

// Pointwise hypothesis checkers.
//
// Each checker computes a residual at every sample, positive where the
// condition is violated, and reports the worst one. A condition holds when
// the worst residual does not exceed the tolerance.

#ifndef REVTRI_HYPOTHESES_HPP_
#define REVTRI_HYPOTHESES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revtri/function_model.hpp"
#include "revtri/hilbert.hpp"

namespace revtri {

inline constexpr double kDefaultHypothesisTolerance = 1e-9;

// Condition identifiers used in reports.
namespace condition {
inline constexpr std::string_view kDominance = "dominance";
inline constexpr std::string_view kRatioDominance = "ratio_dominance";
inline constexpr std::string_view kBall = "ball";
inline constexpr std::string_view kBandInner = "band_inner";
inline constexpr std::string_view kBandNorm = "band_norm";
inline constexpr std::string_view kBoxComplex = "box_complex";
inline constexpr std::string_view kArgument = "argument";
}  // namespace condition

struct HypothesisReport {
  std::string condition_id;
  bool holds = true;
  // max(0, worst residual); 0 when every sample satisfies the condition.
  double worst_violation = 0.0;
  std::size_t worst_node = 0;
  // Per-node residual (worst of the node value and its right limit).
  // Negative entries are slack.
  std::vector<double> slack_profile;
  // For family conditions: the member with the worst residual.
  std::optional<std::size_t> family_index;
};

// Builds a report from a sampled residual.
HypothesisReport report_from_residual(std::string_view condition_id,
                                      const ScalarProfile& residual,
                                      double tolerance);

// Combines per-member reports; the result holds iff all hold and points at
// the worst member.
HypothesisReport combine_family_reports(std::vector<HypothesisReport> reports,
                                        double tolerance);

// Throws InputError unless | ||e|| - 1 | <= tolerance.
void require_unit(const HVector& e, double tolerance = kDefaultOrthonormalTolerance);

// ||f(t)|| - Re<f(t), e> <= k(t)
HypothesisReport check_dominance(const GridFunction& f, const HVector& e,
                                 const ScalarProfile& k,
                                 double tolerance = kDefaultHypothesisTolerance);

// ||f(t)|| <= K Re<f(t), e>,  K >= 1
HypothesisReport check_ratio_dominance(const GridFunction& f, const HVector& e,
                                       double ratio,
                                       double tolerance = kDefaultHypothesisTolerance);

// ||f(t) - e|| <= radius(t)
HypothesisReport check_ball(const GridFunction& f, const HVector& e,
                            const ScalarProfile& radius,
                            double tolerance = kDefaultHypothesisTolerance);

enum class BandForm { kInner, kNorm };

// kInner: Re<M(t) e - f(t), f(t) - m(t) e> >= 0
// kNorm:  ||f(t) - (M(t) + m(t))/2 e|| <= (M(t) - m(t))/2
// Throws InputError when M < m at some node.
HypothesisReport check_band(const GridFunction& f, const HVector& e,
                            const ScalarProfile& lower, const ScalarProfile& upper,
                            BandForm form,
                            double tolerance = kDefaultHypothesisTolerance);

// d = 1 over C, e = alpha + i beta with alpha, beta > 0 and unit modulus:
//   m(t) alpha <= Re f(t) <= M(t) alpha,  m(t) beta <= Im f(t) <= M(t) beta.
// The implied band condition (inner form) is checked as well and must hold.
HypothesisReport check_box_complex(const GridFunction& f, double alpha, double beta,
                                   const ScalarProfile& lower,
                                   const ScalarProfile& upper,
                                   double tolerance = kDefaultHypothesisTolerance);

// d = 1 over C: |arg f(t)| <= theta, theta in (0, pi/2). Throws
// DegeneracyError when f vanishes at a sample.
HypothesisReport check_arg(const GridFunction& f, double theta,
                           double tolerance = kDefaultHypothesisTolerance);

// The unit complex number alpha + i beta as a vector of C^1. Throws
// InputError unless alpha^2 + beta^2 = 1 within 1e-12.
HVector complex_unit(double alpha, double beta);

}  // namespace revtri

#endif  // REVTRI_HYPOTHESES_HPP_
