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

// Finite-dimensional model of a Hilbert space over the real or complex field.
//
// Vectors live in K^d. The inner product is linear in the first argument and
// conjugate-linear in the second: <x, y> = sum_i x_i * conj(y_i). For d = 1
// over C this reduces to <z, w> = z * conj(w).

#ifndef REVTRI_HILBERT_HPP_
#define REVTRI_HILBERT_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace revtri {

enum class Field { kReal, kComplex };

std::string_view to_string(Field field);
Field field_from_string(std::string_view name);  // throws InputError

// Real-field scalars are stored with imag() == 0 exactly.
using Scalar = std::complex<double>;

class HVector {
 public:
  HVector() = default;
  // Throws InputError if `coords` is empty, or if `field` is real and some
  // coordinate has a nonzero imaginary part.
  HVector(Field field, std::vector<Scalar> coords);

  static HVector zeros(Field field, std::size_t dim);
  static HVector basis(Field field, std::size_t dim, std::size_t index);
  static HVector real(std::initializer_list<double> coords);
  static HVector complex(std::initializer_list<Scalar> coords);

  Field field() const { return field_; }
  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Scalar> coords() const { return coords_; }

  HVector& operator+=(const HVector& other);
  HVector& operator-=(const HVector& other);
  HVector& operator*=(double s);
  // Throws InputError when a complex factor is applied to a real vector.
  HVector& operator*=(Scalar s);

  friend HVector operator+(HVector x, const HVector& y) { return x += y; }
  friend HVector operator-(HVector x, const HVector& y) { return x -= y; }
  friend HVector operator*(double s, HVector x) { return x *= s; }
  friend HVector operator*(HVector x, double s) { return x *= s; }
  friend HVector operator*(Scalar s, HVector x) { return x *= s; }
  friend HVector operator-(HVector x) { return x *= -1.0; }

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  Field field_ = Field::kReal;
  std::vector<Scalar> coords_;
};

// Throws InputError unless x and y share field and dimension.
void require_compatible(const HVector& x, const HVector& y);

Scalar inner(const HVector& x, const HVector& y);
// Re<x, y> without forming the imaginary part.
double re_inner(const HVector& x, const HVector& y);
double norm(const HVector& x);
// ||x - y|| without allocating the difference.
double distance(const HVector& x, const HVector& y);
// Largest coordinate modulus; 0 for the zero vector.
double max_abs(const HVector& x);

// Worst entry of the Gram residual G - I. For i != j the residual is
// |<e_i, e_j>|; for i == j it is | ||e_i|| - 1 |. Indices are zero-based.
struct GramResidual {
  std::size_t i = 0;
  std::size_t j = 0;
  double residual = 0.0;
};

struct OrthonormalCheck;
OrthonormalCheck check_orthonormal(std::vector<HVector> family,
                                   double tolerance);

class OrthonormalFamily {
 public:
  const std::vector<HVector>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const HVector& operator[](std::size_t i) const { return members_[i]; }
  double tolerance() const { return tolerance_; }
  Field field() const { return members_.front().field(); }
  std::size_t dim() const { return members_.front().dim(); }

  // Sum of the members.
  HVector sum() const;

 private:
  friend OrthonormalCheck check_orthonormal(std::vector<HVector>, double);
  OrthonormalFamily(std::vector<HVector> members, double tolerance)
      : members_(std::move(members)), tolerance_(tolerance) {}

  std::vector<HVector> members_;
  double tolerance_ = 0.0;
};

struct OrthonormalCheck {
  std::optional<OrthonormalFamily> family;  // set iff the family is valid
  GramResidual worst;
  // | ||sum e_i||^2 - n |, bounded by n * tolerance for a valid family.
  double sum_norm_residual = 0.0;

  bool ok() const { return family.has_value(); }
};

inline constexpr double kDefaultOrthonormalTolerance = 1e-10;

// Throws InputError on an empty or inconsistent family and InfeasibleError
// when more than d vectors are supplied.
OrthonormalCheck check_orthonormal(std::vector<HVector> family,
                                   double tolerance);

// Modified Gram-Schmidt with one reorthogonalization pass. The result spans
// the same subspace and passes check_orthonormal at 1e-10. Throws
// DegeneracyError when a pivot norm falls below 1e-12 of the input scale.
OrthonormalFamily orthonormalize(const std::vector<HVector>& family);

// Extends `seed` (already orthonormal) with standard basis directions until
// it has `count` members. Deterministic; used to pick complementary
// directions u, v for a given reference vector.
std::vector<HVector> complete_orthonormal(std::vector<HVector> seed,
                                          std::size_t count);

}  // namespace revtri

#endif  // REVTRI_HILBERT_HPP_
