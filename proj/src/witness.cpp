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

#include "sectiondim/witness.hpp"

#include "sectiondim/errors.hpp"
#include "sectiondim/finite_section.hpp"
#include "sectiondim/foelner.hpp"

namespace sectiondim {

namespace {

struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  mpz_class norm() const { return re * re + im * im; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// floor(x / d + 1/2), d > 0
mpz_class round_div(const mpz_class& x, const mpz_class& d) {
  mpz_class q;
  mpz_class t = 2 * x + d;
  mpz_class dd = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), dd.get_mpz_t());
  return q;
}

// Nearest-lattice-point quotient of a / b.
GaussInt quotient(const GaussInt& a, const GaussInt& b) {
  const mpz_class n = b.norm();
  const GaussInt num = mul(a, GaussInt{b.re, -b.im});
  return {round_div(num.re, n), round_div(num.im, n)};
}

GaussInt gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt q = quotient(a, b);
    GaussInt qb = mul(q, b);
    GaussInt r{a.re - qb.re, a.im - qb.im};
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  const mpz_class n = b.norm();
  GaussInt num = mul(a, GaussInt{b.re, -b.im});
  mpz_divexact(num.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(num.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
  return num;
}

}  // namespace

RingElement normalize_witness(std::span<const GroupElement> labels,
                              const SparseRow& vector) {
  RingElement out;
  if (vector.empty()) return out;

  mpz_class denom = 1;
  for (const auto& [col, c] : vector) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.im().get_den_mpz_t());
  }
  std::vector<GaussInt> ints;
  ints.reserve(vector.size());
  GaussInt content{0, 0};
  for (const auto& [col, c] : vector) {
    mpq_class re = c.re() * denom;
    mpq_class im = c.im() * denom;
    ints.push_back({re.get_num(), im.get_num()});
    content = gcd(content, ints.back());
  }
  for (auto& z : ints) z = exact_div(z, content);

  // Rotate by the unit that moves the leading coefficient to re > 0, im >= 0.
  GaussInt& lead = ints.front();
  GaussInt unit{1, 0};
  if (sgn(lead.re) <= 0 && sgn(lead.im) > 0) {
    unit = {0, -1};
  } else if (sgn(lead.re) < 0 && sgn(lead.im) <= 0) {
    unit = {-1, 0};
  } else if (sgn(lead.re) >= 0 && sgn(lead.im) < 0) {
    unit = {0, 1};
  }
  for (std::size_t k = 0; k < vector.size(); ++k) {
    GaussInt z = mul(ints[k], unit);
    out.set(labels[vector[k].first],
            GaussRational(mpq_class(z.re), mpq_class(z.im)));
  }
  return out;
}

bool verify_witness(const GroupSpec& spec, const RingElement& alpha,
                    const RingElement& gamma) {
  if (gamma.is_zero()) return false;
  return convolve(spec, alpha, gamma).is_zero();
}

WitnessResult find_witness(const GroupSpec& spec, const RingElement& alpha,
                           std::size_t n_max, std::size_t cap) {
  if (alpha.is_zero()) throw DomainError("find_witness: alpha must be nonzero");
  WitnessResult result;
  for (std::size_t n = 1; n <= n_max; ++n) {
    result.n = n;
    const FoelnerWindow window = foelner_set(spec, n, cap);
    const ExactMatrix m = full_kernel_matrix(spec, alpha, window, cap);
    if (exact_rank(m) == window.size()) continue;
    const Nullspace ns = exact_nullspace(m);
    result.found = true;
    result.gamma = normalize_witness(window.elements(), ns.basis.front());
    result.certified = verify_witness(spec, alpha, result.gamma);
    return result;
  }
  return result;
}

}  // namespace sectiondim
