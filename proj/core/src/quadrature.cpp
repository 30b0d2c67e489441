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

#include "revtri/quadrature.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "revtri/error.hpp"

namespace revtri {

namespace {

// Strided view of piece samples: y(k) = data[k * stride], k = 0..panels.
struct Piece {
  const double* data;
  std::size_t stride;
  std::size_t panels;
  double h;

  double y(std::size_t k) const { return data[k * stride]; }
};

double trapezoid(const Piece& p, std::vector<double>& terms) {
  terms.clear();
  terms.push_back(0.5 * p.y(0));
  for (std::size_t k = 1; k < p.panels; ++k) terms.push_back(p.y(k));
  terms.push_back(0.5 * p.y(p.panels));
  return p.h * pairwise_sum(terms.data(), terms.size());
}

double simpson(const Piece& p, std::vector<double>& terms) {
  if (p.panels == 1) return trapezoid(p, terms);
  const std::size_t even = p.panels % 2 == 0 ? p.panels : p.panels - 3;
  terms.clear();
  if (even > 0) {
    terms.push_back(p.y(0));
    for (std::size_t k = 1; k < even; ++k) terms.push_back((k % 2 ? 4.0 : 2.0) * p.y(k));
    terms.push_back(p.y(even));
  }
  double value = (p.h / 3.0) * pairwise_sum(terms.data(), terms.size());
  if (even != p.panels) {
    const std::size_t k = even;
    value += (3.0 * p.h / 8.0) *
             (p.y(k) + 3.0 * p.y(k + 1) + 3.0 * p.y(k + 2) + p.y(k + 3));
  }
  return value;
}

double midpoint(const Piece& p, std::vector<double>& terms) {
  if (p.panels == 1) return trapezoid(p, terms);
  const std::size_t pairs = p.panels / 2;
  terms.clear();
  for (std::size_t k = 0; k < pairs; ++k) terms.push_back(p.y(2 * k + 1));
  double value = 2.0 * p.h * pairwise_sum(terms.data(), terms.size());
  if (p.panels % 2) {
    value += 0.5 * p.h * (p.y(p.panels - 1) + p.y(p.panels));
  }
  return value;
}

double apply(Rule rule, const Piece& p, std::vector<double>& terms) {
  switch (rule) {
    case Rule::kMidpoint:
      return midpoint(p, terms);
    case Rule::kTrapezoid:
      return trapezoid(p, terms);
    case Rule::kSimpson:
      return simpson(p, terms);
  }
  return 0.0;
}

// Same rule on every second sample of the piece. With an odd panel count the
// last fine panel is integrated by the trapezoid rule in both estimates.
double coarse(Rule rule, const Piece& p, std::vector<double>& terms) {
  if (p.panels < 2) return apply(rule, p, terms);
  const std::size_t even = p.panels - p.panels % 2;
  Piece half{p.data, 2 * p.stride, even / 2, 2.0 * p.h};
  double value = apply(rule, half, terms);
  if (even != p.panels) {
    value += 0.5 * p.h * (p.y(p.panels - 1) + p.y(p.panels));
  }
  return value;
}

struct FineCoarse {
  double fine = 0.0;
  double coarse = 0.0;
};

FineCoarse integrate_pieces(const ScalarProfile& p, Rule rule) {
  const Grid& g = p.grid();
  const double h = g.step();
  std::vector<std::size_t> cuts{0};
  for (const auto& [j, v] : p.right_limits()) cuts.push_back(j);
  cuts.push_back(g.panels());

  std::vector<double> buffer;
  std::vector<double> terms;
  std::vector<double> fine_parts;
  std::vector<double> coarse_parts;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const std::size_t lo = cuts[c];
    const std::size_t hi = cuts[c + 1];
    buffer.assign(p.values().begin() + lo, p.values().begin() + hi + 1);
    buffer.front() = p.right(lo);
    Piece piece{buffer.data(), 1, hi - lo, h};
    fine_parts.push_back(apply(rule, piece, terms));
    coarse_parts.push_back(coarse(rule, piece, terms));
  }
  return {pairwise_sum(fine_parts.data(), fine_parts.size()),
          pairwise_sum(coarse_parts.data(), coarse_parts.size())};
}

}  // namespace

double pairwise_sum(const double* x, std::size_t n) {
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::kMidpoint:
      return "midpoint";
    case Rule::kTrapezoid:
      return "trapezoid";
    case Rule::kSimpson:
      return "simpson";
  }
  return "simpson";
}

Rule rule_from_string(std::string_view name) {
  if (name == "midpoint") return Rule::kMidpoint;
  if (name == "trapezoid") return Rule::kTrapezoid;
  if (name == "simpson") return Rule::kSimpson;
  throw InputError("unknown quadrature rule '" + std::string(name) + "'");
}

IntegralEstimate<double> scalar_integral(const ScalarProfile& p, Rule rule) {
  const FineCoarse fc = integrate_pieces(p, rule);
  return {fc.fine, std::abs(fc.fine - fc.coarse)};
}

IntegralEstimate<HVector> bochner_integral(const GridFunction& f, Rule rule) {
  const std::size_t d = f.dim();
  const bool is_complex = f.field() == Field::kComplex;
  std::vector<Scalar> fine(d);
  double err_sq = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const FineCoarse re =
        integrate_pieces(f.map([i](const HVector& v) { return v[i].real(); }), rule);
    FineCoarse im;
    if (is_complex) {
      im = integrate_pieces(f.map([i](const HVector& v) { return v[i].imag(); }), rule);
    }
    fine[i] = Scalar(re.fine, im.fine);
    const double dre = re.fine - re.coarse;
    const double dim = im.fine - im.coarse;
    err_sq += dre * dre + dim * dim;
  }
  return {HVector(f.field(), std::move(fine)), std::sqrt(err_sq)};
}

IntegralEstimate<double> norm_integral(const GridFunction& f, Rule rule) {
  return scalar_integral(f.map([](const HVector& v) { return norm(v); }), rule);
}

DefectEstimate defect(const GridFunction& f, Rule rule) {
  DefectEstimate out;
  out.norm_integral = norm_integral(f, rule);
  out.integral = bochner_integral(f, rule);
  out.integral_norm = norm(out.integral.value);
  out.value = out.norm_integral.value - out.integral_norm;
  out.err = out.norm_integral.err_est + out.integral.err_est;
  return out;
}

}  // namespace revtri
