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

// Test-only oracles and random generators. Nothing here calls into the code
// paths it is used to check: word lengths come from raw word enumeration,
// Heisenberg products from 3x3 integer matrices, convolutions from the
// pointwise formula (alpha beta)(g) = sum_v alpha(g v^-1) beta(v).

#ifndef SECTIONDIM_TESTS_SUPPORT_HPP
#define SECTIONDIM_TESTS_SUPPORT_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <vector>

#include "sectiondim/cayley.hpp"
#include "sectiondim/foelner.hpp"
#include "sectiondim/group.hpp"
#include "sectiondim/group_ring.hpp"

namespace sectiondim::testing {

inline std::uint64_t seed() {
  if (const char* s = std::getenv("SECTIONDIM_SEED")) {
    return std::strtoull(s, nullptr, 10);
  }
  return 20261017;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(seed());
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline std::vector<GroupSpec> all_presets() {
  return {GroupSpec::free_abelian(1), GroupSpec::free_abelian(2),
          GroupSpec::heisenberg(), GroupSpec::z_cross_z2(),
          GroupSpec::lamplighter()};
}

/// p/q in lowest terms (two-argument mpq_class does not canonicalize).
inline mpq_class frac(long p, long q) {
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

using Mat3 = std::array<std::array<std::int64_t, 3>, 3>;

inline Mat3 to_matrix(const HeisElement& h) {
  return {{{1, h.a, h.c}, {0, 1, h.b}, {0, 0, 1}}};
}

inline Mat3 mat_mul(const Mat3& x, const Mat3& y) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

/// Inverse of an integer unitriangular 3x3 matrix by the adjugate.
inline Mat3 unitriangular_inverse(const Mat3& m) {
  const std::int64_t a = m[0][1], b = m[1][2], c = m[0][2];
  return {{{1, -a, a * b - c}, {0, 1, -b}, {0, 0, 1}}};
}

/// Minimal word lengths of every element reachable by words of length at
/// most `radius`, by enumerating all words (no breadth-first pruning).
inline std::map<GroupElement, std::size_t> word_enumeration(
    const GroupSpec& spec, std::size_t radius) {
  std::map<GroupElement, std::size_t> best;
  const auto& gens = spec.generators();
  std::vector<std::size_t> word;
  for (std::size_t len = 0; len <= radius; ++len) {
    word.assign(len, 0);
    while (true) {
      GroupElement g = identity(spec);
      for (auto k : word) g = multiply(spec, g, gens[k]);
      best.try_emplace(g, len);
      std::size_t i = 0;
      while (i < len && ++word[i] == gens.size()) word[i++] = 0;
      if (i == len) break;
    }
  }
  return best;
}

inline GaussRational random_coefficient(bool complex = true) {
  auto part = [] {
    std::int64_t p = 0;
    while (p == 0) p = uniform(-3, 3);
    return mpq_class(p, uniform(1, 3));
  };
  mpq_class re = part();
  mpq_class im = complex && uniform(0, 2) == 0 ? part() : mpq_class(0);
  re.canonicalize();
  return GaussRational(re, im);
}

/// Random nonzero element supported in ball(radius) with up to max_terms
/// terms.
inline RingElement random_element(const GroupSpec& spec, std::size_t radius,
                                  std::size_t max_terms, bool complex = true) {
  const Ball b = ball(spec, radius);
  RingElement out;
  while (out.is_zero()) {
    const auto terms = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_terms)));
    for (std::size_t k = 0; k < terms; ++k) {
      const auto idx = static_cast<std::size_t>(
          uniform(0, static_cast<std::int64_t>(b.entries.size()) - 1));
      out.add(b.entries[idx].element, random_coefficient(complex));
    }
  }
  return out;
}

/// Random nonzero element supported on the given set.
inline RingElement random_supported(std::span<const GroupElement> where,
                                    std::size_t max_terms) {
  RingElement out;
  while (out.is_zero()) {
    const auto terms = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_terms)));
    for (std::size_t k = 0; k < terms; ++k) {
      const auto idx = static_cast<std::size_t>(
          uniform(0, static_cast<std::int64_t>(where.size()) - 1));
      out.add(where[idx], random_coefficient());
    }
  }
  return out;
}

/// (alpha beta)(g) = sum over v in supp(beta) of alpha(g v^-1) beta(v).
inline GaussRational pointwise_product(const GroupSpec& spec,
                                       const RingElement& alpha,
                                       const RingElement& beta,
                                       const GroupElement& g) {
  GaussRational s;
  for (const auto& [v, b] : beta.terms()) {
    s += alpha[multiply(spec, g, inverse(spec, v))] * b;
  }
  return s;
}

}  // namespace sectiondim::testing

#endif  // SECTIONDIM_TESTS_SUPPORT_HPP
