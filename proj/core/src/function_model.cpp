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

#include "revtri/function_model.hpp"

#include <cmath>
#include <sstream>

#include "overloaded.hpp"

namespace revtri {

namespace {

constexpr double kUnitTolerance = 1e-10;

using detail::overloaded;

void require_shape(const HVector& v, Field field, std::size_t dim,
                   const char* what) {
  if (v.field() != field || v.dim() != dim) {
    std::ostringstream os;
    os << what << " must be a " << to_string(field) << " vector of dimension "
       << dim;
    throw InputError(os.str());
  }
}

void require_unit(const HVector& v, const char* what) {
  if (std::abs(norm(v) - 1.0) > kUnitTolerance) {
    throw InputError(std::string(what) + " must be a unit vector");
  }
}

GridFunction cone(const ConeSpec& spec, const Grid& grid, Field field,
                  std::size_t dim) {
  require_shape(spec.e, field, dim, "cone e");
  require_shape(spec.u, field, dim, "cone u");
  require_unit(spec.e, "cone e");
  require_unit(spec.u, "cone u");
  if (std::abs(inner(spec.u, spec.e)) > kUnitTolerance) {
    throw InputError("cone u must be orthogonal to e");
  }
  if (!std::isfinite(spec.alpha) || !std::isfinite(spec.beta)) {
    throw InputError("cone amplitudes must be finite");
  }
  const HVector plus = spec.alpha * spec.e + spec.beta * spec.u;
  const HVector minus = spec.alpha * spec.e - spec.beta * spec.u;
  const std::size_t mid = grid.midpoint_index();
  std::vector<HVector> values;
  values.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    values.push_back(j <= mid ? plus : minus);
  }
  std::map<std::size_t, HVector> jumps;
  if (spec.beta != 0.0) jumps.emplace(mid, minus);
  return GridFunction(grid, std::move(values), std::move(jumps));
}

GridFunction ball_perturbation(const BallPerturbationSpec& spec,
                               const Grid& grid, Field field,
                               std::size_t dim) {
  if (dim < 3) {
    throw InfeasibleError("ball_perturbation needs dimension >= 3");
  }
  require_shape(spec.e, field, dim, "ball_perturbation e");
  require_unit(spec.e, "ball_perturbation e");
  if (!(spec.rho >= 0.0) || !std::isfinite(spec.rho)) {
    throw InputError("ball_perturbation rho must be nonnegative");
  }
  if (spec.u.has_value() != spec.v.has_value()) {
    throw InputError("ball_perturbation needs both u and v, or neither");
  }
  HVector u;
  HVector v;
  if (spec.u) {
    require_shape(*spec.u, field, dim, "ball_perturbation u");
    require_shape(*spec.v, field, dim, "ball_perturbation v");
    auto check = check_orthonormal({spec.e, *spec.u, *spec.v}, kUnitTolerance);
    if (!check.ok()) {
      throw InputError("ball_perturbation e, u, v must be orthonormal");
    }
    u = *spec.u;
    v = *spec.v;
  } else {
    auto triple = complete_orthonormal({spec.e}, 3);
    u = triple[1];
    v = triple[2];
  }
  std::vector<HVector> values;
  values.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid.node(j);
    values.push_back(spec.e + spec.rho * (std::cos(spec.omega * t) * u +
                                          std::sin(spec.omega * t) * v));
  }
  return GridFunction(grid, std::move(values));
}

GridFunction family_symmetric(const FamilySymmetricSpec& spec,
                              const Grid& grid, Field field, std::size_t dim) {
  if (spec.family.empty()) throw InputError("family must be nonempty");
  for (const auto& e : spec.family) require_shape(e, field, dim, "family member");
  auto check = check_orthonormal(spec.family, kDefaultOrthonormalTolerance);
  if (!check.ok()) throw InputError("family must be orthonormal");
  const double n = static_cast<double>(spec.family.size());
  const HVector direction = (1.0 / std::sqrt(n)) * check.family->sum();
  const ScalarProfile c = profile_of(spec.scale, grid);
  std::vector<HVector> values;
  values.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) values.push_back(c[j] * direction);
  return GridFunction(grid, std::move(values));
}

GridFunction complex_curve(const ComplexCurveSpec& spec, const Grid& grid,
                           Field field, std::size_t dim) {
  if (field != Field::kComplex || dim != 1) {
    throw InputError("complex_curve requires field complex and d = 1");
  }
  const ScalarProfile r = profile_of(spec.modulus, grid);
  const ScalarProfile phi = evaluate_profile(spec.phase, grid);
  std::vector<HVector> values;
  values.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    values.push_back(HVector(Field::kComplex, {std::polar(r[j], phi[j])}));
  }
  return GridFunction(grid, std::move(values));
}

}  // namespace

Grid::Grid(double a, double b, std::size_t panels) : a_(a), b_(b), panels_(panels) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw InputError("interval must satisfy a < b");
  }
  if (panels == 0 || panels % 2 != 0) {
    throw InputError("panel count N must be positive and even");
  }
}

double Grid::node(std::size_t j) const {
  if (j == panels_) return b_;
  return a_ + static_cast<double>(j) * step();
}

GridFunction::GridFunction(Grid grid, std::vector<HVector> values,
                           std::map<std::size_t, HVector> right_limits)
    : Sampled<HVector>(grid, std::move(values), std::move(right_limits)) {
  validate();
}

GridFunction::GridFunction(Sampled<HVector> samples)
    : Sampled<HVector>(std::move(samples)) {
  validate();
}

void GridFunction::validate() const {
  const HVector& first = (*this)[0];
  for_each_sample([&](std::size_t, const HVector& v, bool) {
    require_compatible(first, v);
  });
}

ScalarProfile constant_profile(const Grid& grid, double value) {
  return ScalarProfile(grid, std::vector<double>(grid.size(), value));
}

ScalarProfile evaluate_profile(const ProfileExpr& expr, const Grid& grid) {
  std::vector<double> values(grid.size());
  std::visit(
      overloaded{
          [&](const ConstantProfile& p) {
            for (auto& v : values) v = p.value;
          },
          [&](const LinearProfile& p) {
            for (std::size_t j = 0; j < grid.size(); ++j) {
              const double s = (grid.node(j) - grid.a()) / grid.length();
              values[j] = p.start + (p.end - p.start) * s;
            }
            values.back() = p.end;
          },
          [&](const SinusoidProfile& p) {
            for (std::size_t j = 0; j < grid.size(); ++j) {
              values[j] = p.offset + p.amplitude * std::sin(p.frequency * grid.node(j));
            }
          },
          [&](const SampledProfile& p) {
            if (p.values.size() != grid.size()) {
              std::ostringstream os;
              os << "sampled profile has " << p.values.size()
                 << " values, grid needs " << grid.size();
              throw InputError(os.str());
            }
            values = p.values;
          },
      },
      expr);
  for (double v : values) {
    if (!std::isfinite(v)) throw InputError("profile values must be finite");
  }
  return ScalarProfile(grid, std::move(values));
}

ScalarProfile profile_of(const ProfileExpr& expr, const Grid& grid) {
  ScalarProfile p = evaluate_profile(expr, grid);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] < 0.0) {
      std::ostringstream os;
      os << "profile is negative at node " << j << " (value " << p[j] << ")";
      throw InputError(os.str());
    }
  }
  return p;
}

GridFunction materialize(const FunctionSpec& spec, const Grid& grid,
                         Field field, std::size_t dim) {
  if (dim == 0) throw InputError("dimension must be >= 1");
  return std::visit(
      overloaded{
          [&](const SamplesSpec& s) {
            for (const auto& v : s.values) require_shape(v, field, dim, "sample");
            return GridFunction(grid, s.values);
          },
          [&](const ConeSpec& s) { return cone(s, grid, field, dim); },
          [&](const BallPerturbationSpec& s) {
            return ball_perturbation(s, grid, field, dim);
          },
          [&](const FamilySymmetricSpec& s) {
            return family_symmetric(s, grid, field, dim);
          },
          [&](const ComplexCurveSpec& s) {
            return complex_curve(s, grid, field, dim);
          },
      },
      spec);
}

}  // namespace revtri
