// Copyright 2026 The sectiondim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECTIONDIM_GAUSS_RATIONAL_HPP
#define SECTIONDIM_GAUSS_RATIONAL_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sectiondim {

/// Exact complex number re + im*i with arbitrary-precision rational parts.
/// Parts are always kept in lowest terms.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re) : re_(std::move(re)) {  // NOLINT
    re_.canonicalize();
  }
  GaussRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return GaussRational(0, 1); }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  /// |z|^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  /// Throws DomainError on division by zero.
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) {
    return a += b;
  }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) {
    return a -= b;
  }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) {
    return a *= b;
  }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) {
    return a /= b;
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total bit length of numerators and denominators; pivot-size heuristic.
  std::size_t bit_size() const;

  /// `p/q` when real, `r/s*i` when purely imaginary, `p/q+r/s*i` otherwise
  /// (`/q` omitted when the denominator is 1).
  std::string to_string() const;
  /// Accepts the to_string() forms and a bare `r/s*i`.
  static GaussRational parse(std::string_view text);

 private:
  mpq_class re_;
  mpq_class im_;
};

/// `p/q` with `/q` omitted when q = 1.
std::string rational_to_string(const mpq_class& q);
/// Parses `p` or `p/q` with an optional sign; throws ParseError.
mpq_class parse_rational(std::string_view text);
/// Decimal rendering with `digits` significant digits, rounded half away from
/// zero. Exact values whose expansion terminates earlier are not padded.
std::string to_decimal(const mpq_class& q, int digits = 20);

}  // namespace sectiondim

#endif  // SECTIONDIM_GAUSS_RATIONAL_HPP
