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

#include "revtri/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "revtri/error.hpp"

namespace revtri {

std::string_view to_string(Field field) {
  return field == Field::kReal ? "real" : "complex";
}

Field field_from_string(std::string_view name) {
  if (name == "real") return Field::kReal;
  if (name == "complex") return Field::kComplex;
  throw InputError("unknown field '" + std::string(name) +
                   "' (expected real or complex)");
}

HVector::HVector(Field field, std::vector<Scalar> coords)
    : field_(field), coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("vector dimension must be >= 1");
  for (auto& c : coords_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InputError("vector coordinates must be finite");
    }
    if (field_ == Field::kReal) {
      if (c.imag() != 0.0) {
        throw InputError("real-field vector with nonzero imaginary part");
      }
      c = Scalar(c.real(), 0.0);
    }
  }
}

HVector HVector::zeros(Field field, std::size_t dim) {
  return HVector(field, std::vector<Scalar>(dim, Scalar(0.0, 0.0)));
}

HVector HVector::basis(Field field, std::size_t dim, std::size_t index) {
  if (index >= dim) throw InputError("basis index out of range");
  std::vector<Scalar> coords(dim, Scalar(0.0, 0.0));
  coords[index] = Scalar(1.0, 0.0);
  return HVector(field, std::move(coords));
}

HVector HVector::real(std::initializer_list<double> coords) {
  std::vector<Scalar> c;
  c.reserve(coords.size());
  for (double x : coords) c.emplace_back(x, 0.0);
  return HVector(Field::kReal, std::move(c));
}

HVector HVector::complex(std::initializer_list<Scalar> coords) {
  return HVector(Field::kComplex, std::vector<Scalar>(coords));
}

void require_compatible(const HVector& x, const HVector& y) {
  if (x.field() != y.field()) {
    throw InputError("field mismatch between vectors");
  }
  if (x.dim() != y.dim()) {
    std::ostringstream os;
    os << "dimension mismatch: " << x.dim() << " vs " << y.dim();
    throw InputError(os.str());
  }
}

HVector& HVector::operator+=(const HVector& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

HVector& HVector::operator-=(const HVector& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

HVector& HVector::operator*=(double s) {
  for (auto& c : coords_) c = Scalar(c.real() * s, c.imag() * s);
  if (field_ == Field::kReal) {
    for (auto& c : coords_) c = Scalar(c.real(), 0.0);
  }
  return *this;
}

HVector& HVector::operator*=(Scalar s) {
  if (field_ == Field::kReal) {
    if (s.imag() != 0.0) {
      throw InputError("complex scalar applied to a real-field vector");
    }
    return *this *= s.real();
  }
  for (auto& c : coords_) c *= s;
  return *this;
}

Scalar inner(const HVector& x, const HVector& y) {
  require_compatible(x, y);
  if (x.field() == Field::kReal) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) acc += x[i].real() * y[i].real();
    return Scalar(acc, 0.0);
  }
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    // x_i * conj(y_i)
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].imag() * y[i].real() - x[i].real() * y[i].imag();
  }
  return Scalar(re, im);
}

double re_inner(const HVector& x, const HVector& y) {
  require_compatible(x, y);
  double re = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
  }
  return re;
}

double norm(const HVector& x) {
  // Scaled accumulation avoids overflow for large coordinates.
  const double scale = max_abs(x);
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (const auto& c : x.coords()) {
    const double re = c.real() / scale;
    const double im = c.imag() / scale;
    acc += re * re + im * im;
  }
  return scale * std::sqrt(acc);
}

double distance(const HVector& x, const HVector& y) {
  require_compatible(x, y);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double re = x[i].real() - y[i].real();
    const double im = x[i].imag() - y[i].imag();
    acc += re * re + im * im;
  }
  return std::sqrt(acc);
}

double max_abs(const HVector& x) {
  double m = 0.0;
  for (const auto& c : x.coords()) {
    m = std::max({m, std::abs(c.real()), std::abs(c.imag())});
  }
  return m;
}

HVector OrthonormalFamily::sum() const {
  HVector s = HVector::zeros(field(), dim());
  for (const auto& e : members_) s += e;
  return s;
}

OrthonormalCheck check_orthonormal(std::vector<HVector> family,
                                   double tolerance) {
  if (family.empty()) throw InputError("orthonormal family must be nonempty");
  if (!(tolerance >= 0.0)) throw InputError("tolerance must be nonnegative");
  for (const auto& v : family) require_compatible(family.front(), v);
  const std::size_t n = family.size();
  const std::size_t d = family.front().dim();
  if (n > d) {
    std::ostringstream os;
    os << "no " << n << " orthonormal vectors exist in dimension " << d;
    throw InfeasibleError(os.str());
  }

  OrthonormalCheck out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double r = i == j ? std::abs(norm(family[i]) - 1.0)
                              : std::abs(inner(family[i], family[j]));
      if (r > out.worst.residual) out.worst = {i, j, r};
    }
  }
  HVector s = HVector::zeros(family.front().field(), d);
  for (const auto& e : family) s += e;
  const double sn = norm(s);
  out.sum_norm_residual = std::abs(sn * sn - static_cast<double>(n));

  if (out.worst.residual <= tolerance &&
      out.sum_norm_residual <= static_cast<double>(n) * tolerance) {
    out.family = OrthonormalFamily(std::move(family), tolerance);
  }
  return out;
}

namespace {

// Removes the components of `v` along each member of `basis` (assumed
// orthonormal), in order.
void project_out(HVector& v, const std::vector<HVector>& basis) {
  for (const auto& q : basis) {
    const Scalar c = inner(v, q);
    v -= c * q;
  }
}

}  // namespace

OrthonormalFamily orthonormalize(const std::vector<HVector>& family) {
  if (family.empty()) throw InputError("orthonormal family must be nonempty");
  for (const auto& v : family) require_compatible(family.front(), v);
  if (family.size() > family.front().dim()) {
    throw InfeasibleError("more vectors than the dimension of the space");
  }
  double scale = 0.0;
  for (const auto& v : family) scale = std::max(scale, norm(v));
  if (scale == 0.0) throw DegeneracyError("family consists of zero vectors");

  std::vector<HVector> q;
  q.reserve(family.size());
  for (std::size_t k = 0; k < family.size(); ++k) {
    HVector v = family[k];
    project_out(v, q);
    project_out(v, q);
    const double pivot = norm(v);
    if (pivot < 1e-12 * scale) {
      std::ostringstream os;
      os << "family is rank deficient at member " << k << " (pivot " << pivot
         << ")";
      throw DegeneracyError(os.str());
    }
    q.push_back((1.0 / pivot) * v);
  }
  auto checked = check_orthonormal(std::move(q), kDefaultOrthonormalTolerance);
  if (!checked.ok()) {
    throw DegeneracyError("orthonormalization lost orthogonality");
  }
  return *std::move(checked.family);
}

std::vector<HVector> complete_orthonormal(std::vector<HVector> seed,
                                          std::size_t count) {
  if (seed.empty()) throw InputError("seed family must be nonempty");
  const Field field = seed.front().field();
  const std::size_t d = seed.front().dim();
  if (count > d) {
    std::ostringstream os;
    os << "cannot complete to " << count << " orthonormal vectors in dimension "
       << d;
    throw InfeasibleError(os.str());
  }
  for (std::size_t i = 0; i < d && seed.size() < count; ++i) {
    HVector v = HVector::basis(field, d, i);
    project_out(v, seed);
    project_out(v, seed);
    const double n = norm(v);
    // Standard basis vectors have unit length; a remainder this small means
    // e_i is (numerically) in the current span.
    if (n < 1e-6) continue;
    seed.push_back((1.0 / n) * v);
  }
  return seed;
}

}  // namespace revtri
