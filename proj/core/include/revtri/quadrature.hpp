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

// Composite quadrature over sampled functions.
//
// Jumps split the grid into pieces that are integrated independently, so a
// piecewise-smooth function is integrated with the full order of the rule.
// Pieces with an odd panel count close with a 3/8 panel triple (Simpson) or
// a trapezoid panel (midpoint). Every error estimate is the difference
// between the full-grid value and the value on every second node.

#ifndef REVTRI_QUADRATURE_HPP_
#define REVTRI_QUADRATURE_HPP_

#include <string_view>

#include "revtri/function_model.hpp"
#include "revtri/hilbert.hpp"

namespace revtri {

enum class Rule { kMidpoint, kTrapezoid, kSimpson };

std::string_view to_string(Rule rule);
Rule rule_from_string(std::string_view name);  // throws InputError

template <typename T>
struct IntegralEstimate {
  T value{};
  double err_est = 0.0;  // absolute, >= 0
};

IntegralEstimate<HVector> bochner_integral(const GridFunction& f,
                                           Rule rule = Rule::kSimpson);
IntegralEstimate<double> norm_integral(const GridFunction& f,
                                       Rule rule = Rule::kSimpson);
IntegralEstimate<double> scalar_integral(const ScalarProfile& p,
                                         Rule rule = Rule::kSimpson);

// The triangle-inequality defect  int ||f|| - || int f ||.
struct DefectEstimate {
  double value = 0.0;
  double err = 0.0;  // err of the norm integral + err of the Bochner integral
  IntegralEstimate<double> norm_integral;
  IntegralEstimate<HVector> integral;
  double integral_norm = 0.0;
};

DefectEstimate defect(const GridFunction& f, Rule rule = Rule::kSimpson);

// Fixed-order pairwise summation; results are bit-stable for a given input.
double pairwise_sum(const double* x, std::size_t n);

}  // namespace revtri

#endif  // REVTRI_QUADRATURE_HPP_
