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

#ifndef SECTIONDIM_GROUP_RING_HPP
#define SECTIONDIM_GROUP_RING_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sectiondim/cayley.hpp"
#include "sectiondim/gauss_rational.hpp"
#include "sectiondim/group.hpp"

namespace sectiondim {

/// Finitely supported function G -> Q(i), i.e. an element of the group ring
/// with Gaussian-rational coefficients. Zero coefficients are never stored.
class RingElement {
 public:
  using Terms = std::map<GroupElement, GaussRational>;

  RingElement() = default;

  /// c * delta_g
  static RingElement delta(const GroupElement& g, GaussRational c = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }
  std::vector<GroupElement> support() const;
  const Terms& terms() const noexcept { return terms_; }

  /// Coefficient at g (zero off the support).
  GaussRational operator[](const GroupElement& g) const;
  void set(const GroupElement& g, GaussRational c);
  void add(const GroupElement& g, const GaussRational& c);

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  Terms terms_;
};

/// c1 * alpha + c2 * beta
RingElement combine(const GaussRational& c1, const RingElement& alpha,
                     const GaussRational& c2, const RingElement& beta);

/// (alpha beta)(g) = sum over u v = g of alpha(u) beta(v).
RingElement convolve(const GroupSpec& spec, const RingElement& alpha,
                     const RingElement& beta);

/// max |g| over the support. Throws DomainError for alpha = 0 and
/// CapExceeded when some support element is longer than r_max.
std::size_t width(const GroupSpec& spec, const RingElement& alpha,
                  std::size_t r_max = 64, std::size_t cap = kDefaultCap);

/// `c*elem + c*elem - c*elem`; `0` for the zero element.
std::string format_ring_element(const RingElement& alpha);
RingElement parse_ring_element(const GroupSpec& spec, std::string_view text);

/// File form: one `re im element` line per term.
void write_ring_element_file(std::ostream& os, const RingElement& alpha);
RingElement read_ring_element_file(const GroupSpec& spec, std::istream& is);

}  // namespace sectiondim

#endif  // SECTIONDIM_GROUP_RING_HPP
