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


#include "revtri/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "revtri/counter_rng.hpp"
#include "revtri/error.hpp"

namespace revtri {
namespace {

constexpr std::size_t kMaxHarmonics = 8;

class TrialGenerator {
 public:
  TrialGenerator(const FuzzConfig& config, std::uint64_t trial)
      : config_(config), rng_(config.seed, trial) {
    a_ = rng_.uniform(-1.0, 1.0);
    b_ = a_ + rng_.uniform(0.5, 2.5);
    nodes_.resize(config.panels + 1);
    for (std::size_t j = 0; j <= config.panels; ++j) {
      nodes_[j] = static_cast<double>(j) / static_cast<double>(config.panels);
    }
  }

  double a() const { return a_; }
  double b() const { return b_; }
  std::size_t size() const { return nodes_.size(); }
  Field field() const { return config_.field; }
  std::size_t dim() const { return config_.dim; }
  CounterRng& rng() { return rng_; }

  // Trigonometric polynomial in the normalized time, at most kMaxHarmonics
  // terms, coefficients decaying like 1/(1+h).
  std::vector<double> series() {
    const auto harmonics = static_cast<std::size_t>(rng_.integer(1, kMaxHarmonics));
    std::vector<double> cos_c(harmonics), sin_c(harmonics);
    for (std::size_t h = 0; h < harmonics; ++h) {
      cos_c[h] = rng_.normal() / static_cast<double>(1 + h);
      sin_c[h] = h == 0 ? 0.0 : rng_.normal() / static_cast<double>(1 + h);
    }
    std::vector<double> out(size());
    for (std::size_t j = 0; j < size(); ++j) {
      double v = 0.0;
      for (std::size_t h = 0; h < harmonics; ++h) {
        const double x = 2.0 * std::numbers::pi * static_cast<double>(h) * nodes_[j];
        v += cos_c[h] * std::cos(x) + sin_c[h] * std::sin(x);
      }
      out[j] = v;
    }
    return out;
  }

  // Smooth values spanning [0, 1].
  std::vector<double> unit_series() {
    auto v = series();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double min = *lo;
    const double span = *hi - *lo;
    for (auto& x : v) x = span > 0.0 ? std::clamp((x - min) / span, 0.0, 1.0) : 0.5;
    return v;
  }

  std::vector<double> signed_series() {
    auto v = unit_series();
    for (auto& x : v) x = 2.0 * x - 1.0;
    return v;
  }

  std::vector<double> positive_series(double lo, double hi) {
    auto v = unit_series();
    for (auto& x : v) x = lo + (hi - lo) * x;
    return v;
  }

  std::vector<HVector> vector_series() {
    const std::size_t parts = field() == Field::kComplex ? 2 : 1;
    std::vector<std::vector<double>> coords;
    for (std::size_t c = 0; c < dim() * parts; ++c) coords.push_back(series());
    std::vector<HVector> out;
    out.reserve(size());
    for (std::size_t j = 0; j < size(); ++j) {
      std::vector<Scalar> x(dim());
      for (std::size_t i = 0; i < dim(); ++i) {
        x[i] = parts == 2 ? Scalar(coords[2 * i][j], coords[2 * i + 1][j])
                          : Scalar(coords[i][j], 0.0);
      }
      out.emplace_back(field(), std::move(x));
    }
    return out;
  }

  // Smooth field with max node norm exactly 1 (or identically zero).
  std::vector<HVector> unit_ball_series() {
    auto w = vector_series();
    double peak = 0.0;
    for (const auto& x : w) peak = std::max(peak, norm(x));
    if (peak > 0.0) {
      for (auto& x : w) x *= 1.0 / peak;
    }
    return w;
  }

  HVector random_vector() {
    std::vector<Scalar> x(dim());
    for (auto& c : x) {
      c = field() == Field::kComplex ? Scalar(rng_.normal(), rng_.normal())
                                     : Scalar(rng_.normal(), 0.0);
    }
    return HVector(field(), std::move(x));
  }

  HVector random_unit() {
    for (;;) {
      HVector x = random_vector();
      const double n = norm(x);
      if (n > 1e-3) return x * (1.0 / n);
    }
  }

  // Unit vector with Re<v, e> = 0; nullopt when no such direction exists.
  std::optional<HVector> re_orthogonal_unit(const HVector& e) {
    if (field() == Field::kReal && dim() == 1) return std::nullopt;
    for (;;) {
      HVector x = random_vector();
      x -= re_inner(x, e) * e;
      const double n = norm(x);
      if (n > 1e-3) return x * (1.0 / n);
    }
  }

  std::vector<HVector> random_family(std::size_t n) {
    for (;;) {
      std::vector<HVector> seed;
      for (std::size_t i = 0; i < n; ++i) seed.push_back(random_vector());
      try {
        const auto family = orthonormalize(seed);
        return {family.members().begin(), family.members().end()};
      } catch (const DegeneracyError&) {
      }
    }
  }

  double angle_in_quadrant() { return rng_.uniform(0.05, std::numbers::pi / 2 - 0.05); }

 private:
  FuzzConfig config_;
  CounterRng rng_;
  double a_ = 0.0;
  double b_ = 1.0;
  std::vector<double> nodes_;
};

HVector sum_of(const std::vector<HVector>& family) {
  HVector s = HVector::zeros(family.front().field(), family.front().dim());
  for (const auto& e : family) s += e;
  return s;
}

ProfileExpr samples(std::vector<double> values) { return SampledProfile{std::move(values)}; }

// Ball data around e: f = e + radius * u * w.
std::vector<HVector> ball_data(TrialGenerator& g, const HVector& e,
                               const std::vector<double>& radius) {
  const double u = g.rng().uniform();
  const auto w = g.unit_ball_series();
  std::vector<HVector> f;
  for (std::size_t j = 0; j < g.size(); ++j) f.push_back(e + (radius[j] * u) * w[j]);
  return f;
}

// Data inside the disk | f - (M+m)/2 e | <= (M-m)/2 at every node.
std::vector<HVector> band_data(TrialGenerator& g, const HVector& e,
                               const std::vector<double>& lower,
                               const std::vector<double>& upper) {
  const double u = g.rng().uniform();
  const auto w = g.unit_ball_series();
  std::vector<HVector> f;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double centre = 0.5 * (upper[j] + lower[j]);
    const double radius = 0.5 * (upper[j] - lower[j]);
    f.push_back(centre * e + (radius * u) * w[j]);
  }
  return f;
}

std::vector<double> dominance_profile(TrialGenerator& g, const std::vector<HVector>& f,
                                      const HVector& e) {
  const double slack = g.rng().uniform() < 0.5 ? 0.0 : g.rng().uniform(0.0, 0.3);
  const auto s = g.unit_series();
  std::vector<double> k(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    k[j] = std::max(0.0, norm(f[j]) - re_inner(f[j], e)) + slack * s[j];
  }
  return k;
}

std::vector<HVector> free_data(TrialGenerator& g, const HVector& centre) {
  const double shift = g.rng().uniform(-0.5, 2.0);
  const double amplitude = g.rng().uniform(0.1, 2.0);
  const auto w = g.vector_series();
  std::vector<HVector> f;
  for (const auto& x : w) f.push_back(shift * centre + amplitude * x);
  return f;
}

// Family band data: centres c_i above max ||f||^2 / (2 Re<f, e_i>), radii
// between the data spread and c_i.
struct FamilyBand {
  std::vector<double> lower;
  std::vector<double> upper;
};

FamilyBand family_band(TrialGenerator& g, const std::vector<HVector>& f, const HVector& e) {
  const double gamma = g.rng().uniform(0.01, 1.0);
  double centre = 0.0;
  for (const auto& x : f) centre = std::max(centre, norm(x) * norm(x) / (2.0 * re_inner(x, e)));
  centre *= 1.0 + gamma;
  double spread = 0.0;
  for (const auto& x : f) spread = std::max(spread, distance(x, centre * e));
  const double radius = spread + 0.9 * g.rng().uniform() * (centre - spread);
  return {{centre - radius}, {centre + radius}};
}

FamilyBand family_band_profile(TrialGenerator& g, const std::vector<HVector>& f,
                               const HVector& e) {
  const auto gamma = g.positive_series(0.01, 1.0);
  const auto v = g.unit_series();
  FamilyBand out;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double centre = (1.0 + gamma[j]) * norm(f[j]) * norm(f[j]) / (2.0 * re_inner(f[j], e));
    const double spread = distance(f[j], centre * e);
    const double radius = spread + 0.9 * v[j] * (centre - spread);
    out.lower.push_back(centre - radius);
    out.upper.push_back(centre + radius);
  }
  return out;
}

}  // namespace

FuzzConfig normalized(FuzzConfig c) {
  if (c.trials == 0) throw InputError("trials must be >= 1");
  if (c.panels == 0 || c.panels % 2 != 0) throw InputError("panels must be positive and even");
  if (kind_of(c.bound) == BoundKind::kComplex || c.bound == BoundId::kArgument) {
    c.field = Field::kComplex;
    c.dim = 1;
  }
  if (c.dim == 0) throw InputError("dimension must be >= 1");
  if (kind_of(c.bound) == BoundKind::kFamily) {
    if (c.family_size == 0 || c.family_size > c.dim) {
      throw InfeasibleError("family size must lie in [1, d]");
    }
  }
  return c;
}

FuzzCase generate_trial(const FuzzConfig& config, std::uint64_t trial) {
  const FuzzConfig c = normalized(config);
  TrialGenerator g(c, trial);
  auto& rng = g.rng();

  Scenario s;
  s.id = "fuzz_" + std::string(to_string(c.bound)) + "_s" + std::to_string(c.seed) + "_t" +
         std::to_string(trial);
  s.field = c.field;
  s.dim = c.dim;
  s.a = g.a();
  s.b = g.b();
  s.panels = c.panels;

  BoundSpec b;
  b.id = c.bound;
  ParamSpec& p = b.params;
  std::vector<HVector> f;

  switch (c.bound) {
    case BoundId::kDominance: {
      const HVector e = g.random_unit();
      f = free_data(g, e);
      p.k = samples(dominance_profile(g, f, e));
      s.reference = e;
      break;
    }
    case BoundId::kBall:
    case BoundId::kRatioBall:
    case BoundId::kComplexBall: {
      const double rho = rng.uniform(0.05, 0.95);
      HVector e = g.random_unit();
      if (c.bound == BoundId::kComplexBall) {
        const double phi = rng.uniform(-std::numbers::pi, std::numbers::pi);
        s.reference = AlphaBeta{std::cos(phi), std::sin(phi)};
        e = complex_unit(std::cos(phi), std::sin(phi));
      } else {
        s.reference = e;
      }
      f = ball_data(g, e, std::vector<double>(g.size(), rho));
      p.rho = rho;
      break;
    }
    case BoundId::kBand:
    case BoundId::kRatioBand:
    case BoundId::kComplexBand: {
      const double m = rng.uniform(0.2, 2.0);
      const double M = m * rng.uniform(1.05, 6.0);
      HVector e = g.random_unit();
      if (c.bound == BoundId::kComplexBand) {
        const double phi = rng.uniform(-std::numbers::pi, std::numbers::pi);
        s.reference = AlphaBeta{std::cos(phi), std::sin(phi)};
        e = complex_unit(std::cos(phi), std::sin(phi));
      } else {
        s.reference = e;
      }
      f = band_data(g, e, std::vector<double>(g.size(), m), std::vector<double>(g.size(), M));
      p.lower = m;
      p.upper = M;
      break;
    }
    case BoundId::kBallProfile: {
      const HVector e = g.random_unit();
      const double r0 = rng.uniform(0.05, 1.5);
      auto radius = g.positive_series(0.2 * r0, r0);
      f = ball_data(g, e, radius);
      p.radius = samples(std::move(radius));
      s.reference = e;
      break;
    }
    case BoundId::kBandProfile: {
      const HVector e = g.random_unit();
      auto lower = g.positive_series(0.2, 2.0);
      auto upper = g.positive_series(1.05, 5.0);
      for (std::size_t j = 0; j < upper.size(); ++j) upper[j] *= lower[j];
      f = band_data(g, e, lower, upper);
      p.lower_profile = samples(std::move(lower));
      p.upper_profile = samples(std::move(upper));
      s.reference = e;
      break;
    }
    case BoundId::kComplexBox: {
      const double phi = g.angle_in_quadrant();
      const double alpha = std::cos(phi);
      const double beta = std::sin(phi);
      auto lower = g.positive_series(0.2, 2.0);
      auto upper = g.positive_series(1.05, 5.0);
      for (std::size_t j = 0; j < upper.size(); ++j) upper[j] *= lower[j];
      const auto u1 = g.unit_series();
      const auto u2 = g.unit_series();
      for (std::size_t j = 0; j < g.size(); ++j) {
        const double spread = upper[j] - lower[j];
        f.push_back(HVector::complex({Scalar((lower[j] + u1[j] * spread) * alpha,
                                             (lower[j] + u2[j] * spread) * beta)}));
      }
      p.lower_profile = samples(std::move(lower));
      p.upper_profile = samples(std::move(upper));
      s.reference = AlphaBeta{alpha, beta};
      break;
    }
    case BoundId::kRatio: {
      const double K = rng.uniform(1.0, 4.0);
      const HVector e = g.random_unit();
      const auto v = g.re_orthogonal_unit(e);
      const auto amp = g.positive_series(0.2, 2.2);
      const auto tilt = g.signed_series();
      const double lean = std::sqrt(K * K - 1.0);
      for (std::size_t j = 0; j < g.size(); ++j) {
        HVector x = e;
        if (v) x += (lean * tilt[j]) * *v;
        f.push_back(amp[j] * x);
      }
      p.ratio = K;
      s.reference = e;
      break;
    }
    case BoundId::kArgument: {
      const double theta = rng.uniform(0.1, 1.45);
      const auto modulus = g.positive_series(0.2, 2.2);
      const auto phase = g.signed_series();
      for (std::size_t j = 0; j < g.size(); ++j) {
        f.push_back(HVector::complex({std::polar(modulus[j], theta * phase[j])}));
      }
      p.theta = theta;
      s.reference = NoReference{};
      break;
    }
    case BoundId::kFamilyDominance: {
      const auto family = g.random_family(c.family_size);
      const HVector direction =
          sum_of(family) * (1.0 / std::sqrt(static_cast<double>(family.size())));
      f = free_data(g, direction);
      for (const auto& e : family) p.family_k.push_back(samples(dominance_profile(g, f, e)));
      s.reference = family;
      break;
    }
    case BoundId::kFamilyBall: {
      const auto family = g.random_family(c.family_size);
      const double n = static_cast<double>(family.size());
      const HVector centre = sum_of(family) * (1.0 / n);
      const double reach = 0.9 * (1.0 - std::sqrt((n - 1.0) / n));
      f = ball_data(g, centre, std::vector<double>(g.size(), reach));
      for (const auto& e : family) {
        double spread = 0.0;
        for (const auto& x : f) spread = std::max(spread, distance(x, e));
        p.family_rho.push_back(spread + rng.uniform() * (1.0 - 1e-6 - spread));
      }
      s.reference = family;
      break;
    }
    case BoundId::kFamilyBand:
    case BoundId::kFamilyBandProfile: {
      const auto family = g.random_family(c.family_size);
      const double scale = rng.uniform(0.5, 2.0);
      const auto w = g.unit_ball_series();
      const double u = 0.9 * rng.uniform();
      const HVector total = sum_of(family);
      for (const auto& x : w) f.push_back(scale * total + (scale * u) * x);
      for (const auto& e : family) {
        if (c.bound == BoundId::kFamilyBand) {
          const FamilyBand band = family_band(g, f, e);
          p.family_lower.push_back(band.lower.front());
          p.family_upper.push_back(band.upper.front());
        } else {
          FamilyBand band = family_band_profile(g, f, e);
          p.family_lower_profile.push_back(samples(std::move(band.lower)));
          p.family_upper_profile.push_back(samples(std::move(band.upper)));
        }
      }
      s.reference = family;
      break;
    }
    case BoundId::kFamilyBallProfile: {
      const auto family = g.random_family(c.family_size);
      const HVector centre =
          sum_of(family) * (1.0 / static_cast<double>(family.size()));
      const double amplitude = rng.uniform(0.1, 1.5);
      const auto w = g.unit_ball_series();
      for (const auto& x : w) f.push_back(centre + amplitude * x);
      for (const auto& e : family) {
        const double slack = rng.uniform(0.0, 0.3);
        const auto s_j = g.unit_series();
        std::vector<double> radius(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) radius[j] = distance(f[j], e) + slack * s_j[j];
        p.family_radius.push_back(samples(std::move(radius)));
      }
      s.reference = family;
      break;
    }
  }

  s.function = SamplesSpec{std::move(f)};
  s.bounds.push_back(std::move(b));
  return {std::move(s), Provenance{"fuzz/" + std::string(to_string(c.bound)), c.seed, trial}};
}

double combined_defect_error(const IntegralSummary& in, double slack_factor) {
  return slack_factor * in.defect_err +
         1e-12 * std::max({1.0, in.norm_integral.value, in.integral_norm});
}

FuzzSummary fuzz(const FuzzConfig& config, const TrialObserver& observer) {
  const FuzzConfig c = normalized(config);
  FuzzSummary out;
  out.bound = c.bound;
  out.seed = c.seed;
  out.trials = c.trials;
  out.worst_margin = std::numeric_limits<double>::infinity();
  out.min_defect = std::numeric_limits<double>::infinity();

  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const FuzzCase fc = generate_trial(c, t);
    RunReport report = run(fc.scenario);
    report.provenance = fc.provenance;
    const BoundResult& r = report.results.front();

    switch (r.verdict) {
      case Verdict::kHolds: ++out.holds; break;
      case Verdict::kViolated: ++out.violated; break;
      case Verdict::kHypothesisFailed: ++out.hypothesis_failed; break;
    }
    if (r.verdict != Verdict::kHypothesisFailed && r.margin + r.err_budget < out.worst_margin) {
      out.worst_margin = r.margin + r.err_budget;
      out.worst_trial = t;
    }
    if (const auto weak = r.diagnostic("weak_rhs")) {
      if (r.rhs > *weak + 1e-12 * std::max(1.0, std::abs(*weak))) ++out.chain_violations;
    }
    const auto& in = report.integrals;
    out.min_defect = std::min(out.min_defect, in.defect);
    if (in.defect < -combined_defect_error(in, fc.scenario.tolerances.bound_slack)) {
      ++out.negative_defects;
    }
    if (const auto printed = r.diagnostic("printed_margin")) {
      out.printed_margin_min = std::min(out.printed_margin_min.value_or(*printed), *printed);
      out.printed_margin_max = std::max(out.printed_margin_max.value_or(*printed), *printed);
      if (*printed < 0.0) ++out.printed_margin_negative;
    }
    if (r.verdict != Verdict::kHolds) {
      out.failing_trials.push_back(t);
      out.violation_dumps.push_back(scenario_to_json(fc.scenario));
    }
    if (observer) observer(fc, report);
  }
  return out;
}

nlohmann::json summary_to_json(const FuzzSummary& s) {
  nlohmann::json out{
      {"bound_id", std::string(to_string(s.bound))},
      {"seed", s.seed},
      {"trials", s.trials},
      {"holds", s.holds},
      {"violated", s.violated},
      {"hypothesis_failed", s.hypothesis_failed},
      {"worst_margin_plus_budget", s.worst_margin},
      {"worst_trial", s.worst_trial},
      {"chain_violations", s.chain_violations},
      {"negative_defects", s.negative_defects},
      {"min_defect", s.min_defect},
      {"failing_trials", s.failing_trials},
      {"violation_dumps", s.violation_dumps},
  };
  if (s.printed_margin_min) {
    out["printed_form"] = {{"margin_min", *s.printed_margin_min},
                           {"margin_max", *s.printed_margin_max},
                           {"negative_count", s.printed_margin_negative}};
  }
  return out;
}

}  // namespace revtri
