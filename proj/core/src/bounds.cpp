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

#include "revtri/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "revtri/error.hpp"

namespace revtri {

namespace {

struct BoundName {
  BoundId id;
  std::string_view name;
};

constexpr BoundName kBoundNames[] = {
    {BoundId::kDominance, "THM_2_1"},
    {BoundId::kBall, "COR_2_2"},
    {BoundId::kBand, "COR_2_3"},
    {BoundId::kBallProfile, "COR_2_4"},
    {BoundId::kBandProfile, "COR_2_5"},
    {BoundId::kRatio, "MULT_A"},
    {BoundId::kRatioBall, "MULT_B"},
    {BoundId::kRatioBand, "MULT_C"},
    {BoundId::kArgument, "KARAMATA"},
    {BoundId::kFamilyDominance, "THM_3_1"},
    {BoundId::kFamilyBall, "COR_3_2"},
    {BoundId::kFamilyBand, "COR_3_3"},
    {BoundId::kFamilyBallProfile, "COR_3_4"},
    {BoundId::kFamilyBandProfile, "COR_3_5"},
    {BoundId::kComplexBall, "PROP_4_1"},
    {BoundId::kComplexBand, "PROP_4_2"},
    {BoundId::kComplexBox, "PROP_4_3"},
};

constexpr double kRhoCeiling = 1.0 - 1e-9;

[[noreturn]] void param_error(const std::string& name, const std::string& reason) {
  throw ValidationError(name, reason);
}

const ScalarProfile& need(const std::optional<ScalarProfile>& p, const char* name) {
  if (!p) param_error(name, "required profile is missing");
  return *p;
}

double need(const std::optional<double>& x, const char* name) {
  if (!x) param_error(name, "required parameter is missing");
  if (!std::isfinite(*x)) param_error(name, "must be finite");
  return *x;
}

void check_nonnegative(const ScalarProfile& p, const std::string& name) {
  p.for_each_sample([&](std::size_t j, double v, bool) {
    if (!(v >= 0.0)) {
      std::ostringstream os;
      os << "must be nonnegative (node " << j << " has " << v << ")";
      param_error(name, os.str());
    }
  });
}

void check_rho(double rho, const std::string& name) {
  if (!(rho > 0.0) || !(rho < kRhoCeiling)) {
    param_error(name, "must lie in the open interval (0,1), below 1 - 1e-9");
  }
}

void check_band(double lower, double upper, const std::string& lname,
                const std::string& uname) {
  if (!(lower > 0.0)) param_error(lname, "must be > 0");
  if (!(upper >= lower)) param_error(uname, "must satisfy M >= m");
}

void check_profile_band(const ScalarProfile& lower, const ScalarProfile& upper,
                        const std::string& lname, const std::string& uname) {
  check_nonnegative(lower, lname);
  check_nonnegative(upper, uname);
  zip(lower, upper, [](double m, double big_m) { return big_m - m; })
      .for_each_sample([&](std::size_t j, double gap, bool) {
        if (gap < 0.0) {
          std::ostringstream os;
          os << "must satisfy M(t) >= m(t) (violated at node " << j << ")";
          param_error(uname, os.str());
        }
      });
}

template <typename T>
void check_family_length(const std::vector<T>& v, std::size_t n, const char* name) {
  if (v.size() != n) {
    std::ostringstream os;
    os << "needs exactly " << n << " entries (one per family member), got "
       << v.size();
    param_error(name, os.str());
  }
}

std::string indexed(const char* name, std::size_t i) {
  std::ostringstream os;
  os << name << "[" << i << "]";
  return os.str();
}

double scale_of(std::initializer_list<double> xs) {
  double s = 1.0;
  for (double x : xs) s = std::max(s, std::abs(x));
  return s;
}

void finish(BoundResult& r, double propagated, double norm_integral,
            const EvalOptions& options) {
  r.margin = r.rhs - r.lhs;
  r.err_budget = options.slack_factor * propagated +
                 1e-12 * scale_of({r.lhs, r.rhs, norm_integral});
  if (!r.hypothesis.holds) {
    r.verdict = Verdict::kHypothesisFailed;
  } else {
    r.verdict = r.margin >= -r.err_budget ? Verdict::kHolds : Verdict::kViolated;
  }
}

ScalarProfile band_integrand(const ScalarProfile& lower, const ScalarProfile& upper) {
  return zip(lower, upper, band_profile_integrand);
}

ScalarProfile squared(const ScalarProfile& p) {
  return p.map([](double x) { return x * x; });
}

}  // namespace

std::string_view to_string(BoundId id) {
  for (const auto& b : kBoundNames) {
    if (b.id == id) return b.name;
  }
  return "?";
}

BoundId bound_from_string(std::string_view name) {
  for (const auto& b : kBoundNames) {
    if (b.name == name) return b.id;
  }
  throw InputError("unknown bound_id '" + std::string(name) + "'");
}

BoundKind kind_of(BoundId id) {
  switch (id) {
    case BoundId::kFamilyDominance:
    case BoundId::kFamilyBall:
    case BoundId::kFamilyBand:
    case BoundId::kFamilyBallProfile:
    case BoundId::kFamilyBandProfile:
      return BoundKind::kFamily;
    case BoundId::kComplexBall:
    case BoundId::kComplexBand:
    case BoundId::kComplexBox:
      return BoundKind::kComplex;
    default:
      return BoundKind::kUnit;
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kHypothesisFailed:
      return "hypothesis_failed";
  }
  return "?";
}

std::optional<double> BoundResult::diagnostic(std::string_view label) const {
  for (const auto& t : diagnostics) {
    if (t.label == label) return t.value;
  }
  return std::nullopt;
}

double ball_constant(double rho) {
  check_rho(rho, "rho");
  const double s = std::sqrt(1.0 - rho * rho);
  return rho * rho / (s * (1.0 + s));
}

double band_constant(double lower, double upper) {
  check_band(lower, upper, "m", "M");
  const double diff = std::sqrt(upper) - std::sqrt(lower);
  return diff * diff / (2.0 * std::sqrt(lower * upper));
}

double band_profile_integrand(double lower, double upper) {
  const double sum = upper + lower;
  if (sum == 0.0) return 0.0;
  const double diff = upper - lower;
  return diff * diff / sum;
}

void validate_params(BoundId id, const BoundParams& p, std::size_t family_size) {
  switch (id) {
    case BoundId::kDominance:
      check_nonnegative(need(p.k, "k"), "k");
      break;
    case BoundId::kBall:
    case BoundId::kRatioBall:
    case BoundId::kComplexBall:
      check_rho(need(p.rho, "rho"), "rho");
      break;
    case BoundId::kBand:
    case BoundId::kRatioBand:
    case BoundId::kComplexBand:
      check_band(need(p.lower, "m"), need(p.upper, "M"), "m", "M");
      break;
    case BoundId::kBallProfile:
      check_nonnegative(need(p.radius, "r"), "r");
      break;
    case BoundId::kBandProfile:
    case BoundId::kComplexBox:
      check_profile_band(need(p.lower_profile, "m"), need(p.upper_profile, "M"), "m", "M");
      break;
    case BoundId::kRatio:
      if (!(need(p.ratio, "K") >= 1.0)) param_error("K", "must be >= 1");
      break;
    case BoundId::kArgument: {
      const double theta = need(p.theta, "theta");
      if (!(theta > 0.0) || !(theta < std::numbers::pi / 2)) {
        param_error("theta", "must lie in the open interval (0, pi/2)");
      }
      break;
    }
    case BoundId::kFamilyDominance:
      check_family_length(p.family_k, family_size, "k");
      for (std::size_t i = 0; i < p.family_k.size(); ++i) {
        check_nonnegative(p.family_k[i], indexed("k", i));
      }
      break;
    case BoundId::kFamilyBall:
      check_family_length(p.family_rho, family_size, "rho");
      for (std::size_t i = 0; i < p.family_rho.size(); ++i) {
        check_rho(p.family_rho[i], indexed("rho", i));
      }
      break;
    case BoundId::kFamilyBand:
      check_family_length(p.family_lower, family_size, "m");
      check_family_length(p.family_upper, family_size, "M");
      for (std::size_t i = 0; i < family_size; ++i) {
        check_band(p.family_lower[i], p.family_upper[i], indexed("m", i), indexed("M", i));
      }
      break;
    case BoundId::kFamilyBallProfile:
      check_family_length(p.family_radius, family_size, "r");
      for (std::size_t i = 0; i < family_size; ++i) {
        check_nonnegative(p.family_radius[i], indexed("r", i));
      }
      break;
    case BoundId::kFamilyBandProfile:
      check_family_length(p.family_lower_profile, family_size, "m");
      check_family_length(p.family_upper_profile, family_size, "M");
      for (std::size_t i = 0; i < family_size; ++i) {
        check_profile_band(p.family_lower_profile[i], p.family_upper_profile[i],
                           indexed("m", i), indexed("M", i));
      }
      break;
  }
}

BoundResult eval_unit_bound(const GridFunction& f, const HVector& e,
                            const BoundParams& params, BoundId id,
                            const EvalOptions& options) {
  if (kind_of(id) != BoundKind::kUnit) {
    throw InputError(std::string(to_string(id)) + " is not a unit-vector bound");
  }
  validate_params(id, params);
  const double tau = options.hypothesis_tolerance;
  if (id != BoundId::kArgument) {
    require_compatible(f[0], e);
    require_unit(e, options.orthonormal_tolerance);
  }

  const DefectEstimate d = defect(f, options.rule);
  const double n_int = d.norm_integral.value;
  const double n_err = d.norm_integral.err_est;
  const double i_err = d.integral.err_est;

  BoundResult r;
  r.bound = id;
  double propagated = 0.0;

  switch (id) {
    case BoundId::kDominance: {
      const ScalarProfile& k = *params.k;
      r.hypothesis = check_dominance(f, e, k, tau);
      const auto k_int = scalar_integral(k, options.rule);
      r.lhs = d.value;
      r.rhs = k_int.value;
      r.rhs_terms = {{"int_k", k_int.value}};
      propagated = d.err + k_int.err_est;
      break;
    }
    case BoundId::kBall:
    case BoundId::kBand: {
      double c = 0.0;
      if (id == BoundId::kBall) {
        r.hypothesis = check_ball(f, e, constant_profile(f.grid(), *params.rho), tau);
        c = ball_constant(*params.rho);
      } else {
        r.hypothesis = check_band(f, e, constant_profile(f.grid(), *params.lower),
                                  constant_profile(f.grid(), *params.upper),
                                  BandForm::kNorm, tau);
        c = band_constant(*params.lower, *params.upper);
      }
      const double re = re_inner(d.integral.value, e);
      r.lhs = d.value;
      r.rhs = c * re;
      r.rhs_terms = {{"constant", c}, {"re_integral_e", re}};
      const double weak = c * d.integral_norm;
      r.diagnostics = {{"weak_rhs", weak}, {"weak_margin", weak - d.value}};
      propagated = d.err + c * i_err;
      break;
    }
    case BoundId::kBallProfile: {
      const ScalarProfile& radius = *params.radius;
      r.hypothesis = check_ball(f, e, radius, tau);
      const auto sq = scalar_integral(squared(radius), options.rule);
      r.lhs = d.value;
      r.rhs = 0.5 * sq.value;
      r.rhs_terms = {{"int_r_squared", sq.value}};
      propagated = d.err + 0.5 * sq.err_est;
      break;
    }
    case BoundId::kBandProfile: {
      const ScalarProfile& lower = *params.lower_profile;
      const ScalarProfile& upper = *params.upper_profile;
      r.hypothesis = check_band(f, e, lower, upper, BandForm::kNorm, tau);
      const auto q = scalar_integral(band_integrand(lower, upper), options.rule);
      r.lhs = d.value;
      r.rhs = 0.25 * q.value;
      r.rhs_terms = {{"int_band_integrand", q.value}};
      propagated = d.err + 0.25 * q.err_est;
      break;
    }
    case BoundId::kRatio: {
      const double ratio = *params.ratio;
      r.hypothesis = check_ratio_dominance(f, e, ratio, tau);
      r.lhs = n_int;
      r.rhs = ratio * d.integral_norm;
      r.rhs_terms = {{"K", ratio}, {"norm_integral_f", d.integral_norm}};
      propagated = n_err + ratio * i_err;
      break;
    }
    case BoundId::kRatioBall: {
      const double rho = *params.rho;
      r.hypothesis = check_ball(f, e, constant_profile(f.grid(), rho), tau);
      const double s = std::sqrt(1.0 - rho * rho);
      r.lhs = s * n_int;
      r.rhs = d.integral_norm;
      r.rhs_terms = {{"norm_integral_f", d.integral_norm}};
      propagated = s * n_err + i_err;
      break;
    }
    case BoundId::kRatioBand: {
      const double m = *params.lower;
      const double big_m = *params.upper;
      r.hypothesis = check_band(f, e, constant_profile(f.grid(), m),
                                constant_profile(f.grid(), big_m), BandForm::kNorm, tau);
      const double root_diff = std::sqrt(big_m) - std::sqrt(m);
      const double coef = root_diff * root_diff / (big_m + m);
      const double q = 2.0 * std::sqrt(m * big_m) / (big_m + m);
      // Certified form: the defect against int ||f||.
      r.lhs = d.value;
      r.rhs = coef * n_int;
      r.rhs_terms = {{"constant", coef}, {"int_norm_f", n_int}};
      const double printed = coef * d.integral_norm;
      r.diagnostics = {
          {"multiplicative_lhs", q * n_int},
          {"multiplicative_margin", d.integral_norm - q * n_int},
          {"printed_rhs", printed},
          {"printed_margin", printed - d.value},
      };
      propagated = d.err + coef * n_err;
      break;
    }
    case BoundId::kArgument: {
      const double theta = *params.theta;
      r.hypothesis = check_arg(f, theta, tau);
      r.lhs = std::cos(theta) * n_int;
      r.rhs = d.integral_norm;
      r.rhs_terms = {{"abs_integral_f", d.integral_norm}};
      propagated = std::cos(theta) * n_err + i_err;
      break;
    }
    default:
      break;
  }
  finish(r, propagated, n_int, options);
  return r;
}

BoundResult eval_family_bound(const GridFunction& f, const OrthonormalFamily& family,
                              const BoundParams& params, BoundId id,
                              const EvalOptions& options) {
  if (kind_of(id) != BoundKind::kFamily) {
    throw InputError(std::string(to_string(id)) + " is not a family bound");
  }
  const std::size_t n = family.size();
  validate_params(id, params, n);
  require_compatible(f[0], family[0]);
  const double tau = options.hypothesis_tolerance;
  const double nd = static_cast<double>(n);
  const double root_n = std::sqrt(nd);

  const DefectEstimate d = defect(f, options.rule);
  const double n_int = d.norm_integral.value;

  BoundResult r;
  r.bound = id;
  r.lhs = n_int;
  const double base = d.integral_norm / root_n;
  double extra = 0.0;
  double propagated = d.norm_integral.err_est + d.integral.err_est / root_n;
  std::vector<HypothesisReport> reports;
  reports.reserve(n);
  r.rhs_terms.push_back({"norm_integral_over_sqrt_n", base});

  auto add_profile_sum = [&](const char* label, double weight,
                             auto&& profile_for, auto&& check_for) {
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto integral = scalar_integral(profile_for(i), options.rule);
      r.rhs_terms.push_back({indexed(label, i), integral.value});
      extra += weight * integral.value;
      err += weight * integral.err_est;
      reports.push_back(check_for(i));
    }
    propagated += err;
  };

  // Re<int f, (1/n) sum c_i e_i> with its weak (Schwarz) and printed forms.
  auto add_weighted_direction = [&](const std::vector<double>& c) {
    HVector direction = HVector::zeros(family.field(), family.dim());
    double sum_c = 0.0;
    double sum_c2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      direction += (c[i] / nd) * family[i];
      sum_c += c[i];
      sum_c2 += c[i] * c[i];
      r.rhs_terms.push_back({indexed("constant", i), c[i]});
    }
    extra = re_inner(d.integral.value, direction);
    propagated += norm(direction) * d.integral.err_est;
    const double weak = base * (1.0 + std::sqrt(sum_c2 / nd));
    const double printed = base * (1.0 + std::sqrt(sum_c / nd));
    r.diagnostics = {
        {"weak_rhs", weak},
        {"weak_margin", weak - n_int},
        {"printed_weak_rhs", printed},
        {"printed_weak_margin", printed - n_int},
    };
  };

  switch (id) {
    case BoundId::kFamilyDominance:
      add_profile_sum(
          "int_k", 1.0 / nd, [&](std::size_t i) -> const ScalarProfile& { return params.family_k[i]; },
          [&](std::size_t i) { return check_dominance(f, family[i], params.family_k[i], tau); });
      break;
    case BoundId::kFamilyBall: {
      std::vector<double> c;
      for (std::size_t i = 0; i < n; ++i) {
        c.push_back(ball_constant(params.family_rho[i]));
        reports.push_back(check_ball(f, family[i],
                                     constant_profile(f.grid(), params.family_rho[i]), tau));
      }
      add_weighted_direction(c);
      break;
    }
    case BoundId::kFamilyBand: {
      std::vector<double> c;
      for (std::size_t i = 0; i < n; ++i) {
        c.push_back(band_constant(params.family_lower[i], params.family_upper[i]));
        reports.push_back(check_band(f, family[i],
                                     constant_profile(f.grid(), params.family_lower[i]),
                                     constant_profile(f.grid(), params.family_upper[i]),
                                     BandForm::kNorm, tau));
      }
      add_weighted_direction(c);
      break;
    }
    case BoundId::kFamilyBallProfile:
      add_profile_sum(
          "int_r_squared", 0.5 / nd,
          [&](std::size_t i) { return squared(params.family_radius[i]); },
          [&](std::size_t i) { return check_ball(f, family[i], params.family_radius[i], tau); });
      break;
    case BoundId::kFamilyBandProfile:
      add_profile_sum(
          "int_band_integrand", 0.25 / nd,
          [&](std::size_t i) {
            return band_integrand(params.family_lower_profile[i],
                                  params.family_upper_profile[i]);
          },
          [&](std::size_t i) {
            return check_band(f, family[i], params.family_lower_profile[i],
                              params.family_upper_profile[i], BandForm::kNorm, tau);
          });
      break;
    default:
      break;
  }
  r.rhs = base + extra;
  r.rhs_terms.push_back({"extra", extra});
  r.hypothesis = combine_family_reports(std::move(reports), tau);
  finish(r, propagated, n_int, options);
  return r;
}

BoundResult eval_complex_bound(const GridFunction& f, double alpha, double beta,
                               const BoundParams& params, BoundId id,
                               const EvalOptions& options) {
  if (kind_of(id) != BoundKind::kComplex) {
    throw InputError(std::string(to_string(id)) + " is not a complex-valued bound");
  }
  if (f.field() != Field::kComplex || f.dim() != 1) {
    throw InputError(std::string(to_string(id)) +
                     " requires a complex function with d = 1");
  }
  validate_params(id, params);
  const HVector e = complex_unit(alpha, beta);

  BoundId delegate = BoundId::kBall;
  if (id == BoundId::kComplexBand) delegate = BoundId::kBand;
  if (id == BoundId::kComplexBox) delegate = BoundId::kBandProfile;

  BoundResult r = eval_unit_bound(f, e, params, delegate, options);
  r.bound = id;
  if (id == BoundId::kComplexBox) {
    // The stated hypothesis is the box condition, which implies the band.
    r.hypothesis = check_box_complex(f, alpha, beta, *params.lower_profile,
                                     *params.upper_profile,
                                     options.hypothesis_tolerance);
    if (!r.hypothesis.holds) {
      r.verdict = Verdict::kHypothesisFailed;
    } else {
      r.verdict = r.margin >= -r.err_budget ? Verdict::kHolds : Verdict::kViolated;
    }
    return r;
  }
  // alpha int Re f + beta int Im f, which equals Re<int f, e>.
  const auto integral = bochner_integral(f, options.rule).value;
  const double split = alpha * integral[0].real() + beta * integral[0].imag();
  const double re = re_inner(integral, e);
  r.rhs_terms.push_back({"alpha_int_re_plus_beta_int_im", split});
  r.diagnostics.push_back({"split_form_residual", std::abs(split - re)});
  return r;
}

}  // namespace revtri
