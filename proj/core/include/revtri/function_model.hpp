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

// Sampled functions on a uniform grid over [a, b].
//
// A pointwise condition "for almost every t" is evaluated at every sample:
// each grid node, plus the one-sided value on the right of any node where
// the function jumps.

#ifndef REVTRI_FUNCTION_MODEL_HPP_
#define REVTRI_FUNCTION_MODEL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "revtri/error.hpp"
#include "revtri/hilbert.hpp"

namespace revtri {

inline constexpr std::size_t kDefaultPanels = 512;

class Grid {
 public:
  // Throws InputError unless b > a (both finite) and panels is positive and
  // even.
  Grid(double a, double b, std::size_t panels = kDefaultPanels);

  double a() const { return a_; }
  double b() const { return b_; }
  double length() const { return b_ - a_; }
  std::size_t panels() const { return panels_; }
  std::size_t size() const { return panels_ + 1; }
  double step() const { return (b_ - a_) / static_cast<double>(panels_); }
  // Node j; node(panels()) is exactly b.
  double node(std::size_t j) const;
  std::size_t midpoint_index() const { return panels_ / 2; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double a_;
  double b_;
  std::size_t panels_;
};

// Node samples of a piecewise-smooth function. `right_limits` records, for
// interior nodes where the function jumps, the limit from the right; the node
// value itself is the limit from the left.
template <typename T>
class Sampled {
 public:
  using value_type = T;

  Sampled(Grid grid, std::vector<T> values, std::map<std::size_t, T> right_limits = {})
      : grid_(grid), values_(std::move(values)), right_limits_(std::move(right_limits)) {
    if (values_.size() != grid_.size()) {
      throw InputError("sample count must equal panels + 1");
    }
    for (const auto& [j, v] : right_limits_) {
      if (j == 0 || j >= grid_.panels()) {
        throw InputError("jumps are only allowed at interior nodes");
      }
    }
  }

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }
  const T& operator[](std::size_t j) const { return values_[j]; }
  const std::map<std::size_t, T>& right_limits() const { return right_limits_; }
  bool has_jumps() const { return !right_limits_.empty(); }

  // Value used on the panel to the right of node j.
  const T& right(std::size_t j) const {
    auto it = right_limits_.find(j);
    return it == right_limits_.end() ? values_[j] : it->second;
  }

  // Visits every sample: fn(node index, value, is_right_limit).
  template <typename Fn>
  void for_each_sample(Fn&& fn) const {
    for (std::size_t j = 0; j < values_.size(); ++j) {
      fn(j, values_[j], false);
      auto it = right_limits_.find(j);
      if (it != right_limits_.end()) fn(j, it->second, true);
    }
  }

  template <typename Fn>
  auto map(Fn&& fn) const -> Sampled<std::decay_t<std::invoke_result_t<Fn, const T&>>> {
    using R = std::decay_t<std::invoke_result_t<Fn, const T&>>;
    std::vector<R> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(fn(v));
    std::map<std::size_t, R> jumps;
    for (const auto& [j, v] : right_limits_) jumps.emplace(j, fn(v));
    return Sampled<R>(grid_, std::move(out), std::move(jumps));
  }

 private:
  Grid grid_;
  std::vector<T> values_;
  std::map<std::size_t, T> right_limits_;
};

// Pointwise combination of two sampled functions on the same grid. Jumps of
// either operand become jumps of the result.
template <typename A, typename B, typename Fn>
auto zip(const Sampled<A>& x, const Sampled<B>& y, Fn&& fn)
    -> Sampled<std::decay_t<std::invoke_result_t<Fn, const A&, const B&>>> {
  using R = std::decay_t<std::invoke_result_t<Fn, const A&, const B&>>;
  if (!(x.grid() == y.grid())) throw InputError("grid mismatch");
  std::vector<R> out;
  out.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out.push_back(fn(x[j], y[j]));
  std::map<std::size_t, R> jumps;
  for (const auto& [j, v] : x.right_limits()) jumps.emplace(j, fn(v, y.right(j)));
  for (const auto& [j, v] : y.right_limits()) {
    if (!jumps.count(j)) jumps.emplace(j, fn(x.right(j), v));
  }
  return Sampled<R>(x.grid(), std::move(out), std::move(jumps));
}

using ScalarProfile = Sampled<double>;

// A sampled H-valued function. All samples share one field and dimension.
class GridFunction : public Sampled<HVector> {
 public:
  GridFunction(Grid grid, std::vector<HVector> values,
               std::map<std::size_t, HVector> right_limits = {});
  explicit GridFunction(Sampled<HVector> samples);

  Field field() const { return (*this)[0].field(); }
  std::size_t dim() const { return (*this)[0].dim(); }

 private:
  void validate() const;
};

ScalarProfile constant_profile(const Grid& grid, double value);

// Scalar profile expressions, evaluated node-wise.
struct ConstantProfile {
  double value = 0.0;
};
// Affine from `start` at a to `end` at b.
struct LinearProfile {
  double start = 0.0;
  double end = 0.0;
};
// offset + amplitude * sin(frequency * t)
struct SinusoidProfile {
  double offset = 0.0;
  double amplitude = 0.0;
  double frequency = 1.0;
};
struct SampledProfile {
  std::vector<double> values;
};
using ProfileExpr =
    std::variant<ConstantProfile, LinearProfile, SinusoidProfile, SampledProfile>;

// Evaluates without sign restrictions (e.g. phase functions).
ScalarProfile evaluate_profile(const ProfileExpr& expr, const Grid& grid);
// As evaluate_profile, but rejects any negative node value with InputError.
ScalarProfile profile_of(const ProfileExpr& expr, const Grid& grid);

struct SamplesSpec {
  std::vector<HVector> values;
};
// alpha * e + s(t) * beta * u, with s = +1 on [a, mid] and -1 on (mid, b].
struct ConeSpec {
  HVector e;
  HVector u;
  double alpha = 1.0;
  double beta = 0.0;
};
// e + rho * (cos(omega t) u + sin(omega t) v). When u, v are omitted they are
// chosen deterministically to complete e to an orthonormal triple.
struct BallPerturbationSpec {
  HVector e;
  double rho = 0.0;
  double omega = 1.0;
  std::optional<HVector> u;
  std::optional<HVector> v;
};
// c(t) * (e_1 + ... + e_n) / sqrt(n)
struct FamilySymmetricSpec {
  std::vector<HVector> family;
  ProfileExpr scale = ConstantProfile{1.0};
};
// r(t) * exp(i phase(t)), d = 1 over C.
struct ComplexCurveSpec {
  ProfileExpr modulus = ConstantProfile{1.0};
  ProfileExpr phase = ConstantProfile{0.0};
};
using FunctionSpec = std::variant<SamplesSpec, ConeSpec, BallPerturbationSpec,
                                  FamilySymmetricSpec, ComplexCurveSpec>;

// Deterministic; throws InputError on inconsistent parameters and
// InfeasibleError when `dim` is too small for the variant.
GridFunction materialize(const FunctionSpec& spec, const Grid& grid,
                         Field field, std::size_t dim);

}  // namespace revtri

#endif  // REVTRI_FUNCTION_MODEL_HPP_
