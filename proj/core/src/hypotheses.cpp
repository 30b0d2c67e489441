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

#include "revtri/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "revtri/error.hpp"

namespace revtri {

namespace {

void require_scalar_curve(const GridFunction& f, const char* what) {
  if (f.field() != Field::kComplex || f.dim() != 1) {
    throw InputError(std::string(what) + " requires a complex function with d = 1");
  }
}

void require_ordered(const ScalarProfile& lower, const ScalarProfile& upper) {
  zip(lower, upper, [](double m, double big_m) { return big_m - m; })
      .for_each_sample([](std::size_t j, double gap, bool) {
        if (gap < 0.0) {
          std::ostringstream os;
          os << "upper profile below lower profile at node " << j;
          throw InputError(os.str());
        }
      });
}

}  // namespace

HypothesisReport report_from_residual(std::string_view condition_id,
                                      const ScalarProfile& residual,
                                      double tolerance) {
  HypothesisReport out;
  out.condition_id = std::string(condition_id);
  out.slack_profile.assign(residual.size(), -std::numeric_limits<double>::infinity());
  double worst = -std::numeric_limits<double>::infinity();
  residual.for_each_sample([&](std::size_t j, double r, bool) {
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    out.slack_profile[j] = std::max(out.slack_profile[j], r);
    if (r > worst) {
      worst = r;
      out.worst_node = j;
    }
  });
  out.worst_violation = std::max(0.0, worst);
  out.holds = out.worst_violation <= tolerance;
  return out;
}

HypothesisReport combine_family_reports(std::vector<HypothesisReport> reports,
                                        double tolerance) {
  if (reports.empty()) throw InputError("empty family report");
  std::size_t worst = 0;
  double worst_residual = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const double r = reports[i].slack_profile[reports[i].worst_node];
    if (r > worst_residual) {
      worst_residual = r;
      worst = i;
    }
  }
  HypothesisReport out = std::move(reports[worst]);
  out.family_index = worst;
  out.holds = out.worst_violation <= tolerance;
  return out;
}

void require_unit(const HVector& e, double tolerance) {
  if (std::abs(norm(e) - 1.0) > tolerance) {
    throw InputError("reference vector must have unit norm");
  }
}

HypothesisReport check_dominance(const GridFunction& f, const HVector& e,
                                 const ScalarProfile& k, double tolerance) {
  require_compatible(f[0], e);
  require_unit(e);
  auto residual = zip(f, k, [&](const HVector& v, double kv) {
    return norm(v) - re_inner(v, e) - kv;
  });
  return report_from_residual(condition::kDominance, residual, tolerance);
}

HypothesisReport check_ratio_dominance(const GridFunction& f, const HVector& e,
                                       double ratio, double tolerance) {
  require_compatible(f[0], e);
  require_unit(e);
  auto residual = f.map([&](const HVector& v) { return norm(v) - ratio * re_inner(v, e); });
  return report_from_residual(condition::kRatioDominance, residual, tolerance);
}

HypothesisReport check_ball(const GridFunction& f, const HVector& e,
                            const ScalarProfile& radius, double tolerance) {
  require_compatible(f[0], e);
  require_unit(e);
  auto residual = zip(f, radius, [&](const HVector& v, double r) {
    return distance(v, e) - r;
  });
  return report_from_residual(condition::kBall, residual, tolerance);
}

HypothesisReport check_band(const GridFunction& f, const HVector& e,
                            const ScalarProfile& lower, const ScalarProfile& upper,
                            BandForm form, double tolerance) {
  require_compatible(f[0], e);
  require_unit(e);
  require_ordered(lower, upper);
  auto bounds = zip(lower, upper, [](double m, double big_m) {
    return std::pair<double, double>(m, big_m);
  });
  if (form == BandForm::kInner) {
    auto residual = zip(f, bounds, [&](const HVector& v, const std::pair<double, double>& mm) {
      const auto [m, big_m] = mm;
      // Re<M e - f, f - m e> expanded to avoid temporaries.
      const double fe = re_inner(v, e);
      const double ff = norm(v);
      const double value = (big_m + m) * fe - ff * ff - m * big_m;
      return -value;
    });
    return report_from_residual(condition::kBandInner, residual, tolerance);
  }
  auto residual = zip(f, bounds, [&](const HVector& v, const std::pair<double, double>& mm) {
    const auto [m, big_m] = mm;
    return distance(v, (0.5 * (big_m + m)) * e) - 0.5 * (big_m - m);
  });
  return report_from_residual(condition::kBandNorm, residual, tolerance);
}

HVector complex_unit(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) ||
      std::abs(alpha * alpha + beta * beta - 1.0) > 1e-12) {
    throw InputError("alpha^2 + beta^2 must equal 1");
  }
  return HVector(Field::kComplex, {Scalar(alpha, beta)});
}

HypothesisReport check_box_complex(const GridFunction& f, double alpha, double beta,
                                   const ScalarProfile& lower,
                                   const ScalarProfile& upper, double tolerance) {
  require_scalar_curve(f, "box condition");
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw InputError("box condition requires alpha > 0 and beta > 0");
  }
  const HVector e = complex_unit(alpha, beta);
  require_ordered(lower, upper);
  auto bounds = zip(lower, upper, [](double m, double big_m) {
    return std::pair<double, double>(m, big_m);
  });
  auto residual = zip(f, bounds, [&](const HVector& v, const std::pair<double, double>& mm) {
    const auto [m, big_m] = mm;
    const double re = v[0].real();
    const double im = v[0].imag();
    return std::max({m * alpha - re, re - big_m * alpha, m * beta - im, im - big_m * beta});
  });
  HypothesisReport box = report_from_residual(condition::kBoxComplex, residual, tolerance);
  if (box.holds) {
    const HypothesisReport band = check_band(f, e, lower, upper, BandForm::kInner, tolerance);
    if (!band.holds) {
      box.holds = false;
      box.worst_violation = band.worst_violation;
      box.worst_node = band.worst_node;
    }
  }
  return box;
}

HypothesisReport check_arg(const GridFunction& f, double theta, double tolerance) {
  require_scalar_curve(f, "argument condition");
  if (!(theta > 0.0) || !(theta < std::numbers::pi / 2)) {
    throw InputError("theta must lie in (0, pi/2)");
  }
  auto residual = f.map([&](const HVector& v) {
    if (v[0] == Scalar(0.0, 0.0)) {
      throw DegeneracyError("argument undefined where f vanishes");
    }
    return std::abs(std::arg(v[0])) - theta;
  });
  return report_from_residual(condition::kArgument, residual, tolerance);
}

}  // namespace revtri
