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

#ifndef SECTIONDIM_FOELNER_HPP
#define SECTIONDIM_FOELNER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "sectiondim/cayley.hpp"
#include "sectiondim/group.hpp"

namespace sectiondim {

/// A finite window F with the deterministic index order used for matrix rows
/// and columns: word length first, normal form second.
class FoelnerWindow {
 public:
  /// Orders `elements` (duplicates are dropped). `n` is informational; it is
  /// the preset index for windows built by foelner_set and 0 otherwise.
  FoelnerWindow(GroupSpec spec, std::size_t n, std::vector<GroupElement> elements,
                std::size_t cap = kDefaultCap);

  const GroupSpec& spec() const noexcept { return spec_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::span<const GroupElement> elements() const noexcept { return elements_; }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const GroupElement& g) const { return index_.contains(g); }
  std::optional<std::size_t> index_of(const GroupElement& g) const;

 private:
  GroupSpec spec_;
  std::size_t n_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, ElementHash> index_;
};

/// Preset exhaustions:
///   z:d   [-n,n]^d
///   heis  |a| <= n, |b| <= n, |c| <= n^2
///   zxz2  [-n,n] x {0,1}
///   lamp  position x in (-n,0], lamps in [x,x+n); the inverse of the
///         box {lamps in [0,n), position in [0,n)}, which is Foelner only
///         for right translates
FoelnerWindow foelner_set(const GroupSpec& spec, std::size_t n,
                          std::size_t cap = kDefaultCap);

/// Closed-form membership in the preset window F_n.
bool in_preset_window(const GroupSpec& spec, std::size_t n,
                      const GroupElement& g);

/// Number of elements of the preset window F_n, without enumerating it.
std::size_t preset_window_size(const GroupSpec& spec, std::size_t n);

/// d(g, G \ F) <= r, i.e. some u with |u| <= r moves g out of F by u g.
/// Elements come back in window order; empty for r = 0.
std::vector<GroupElement> r_boundary(const FoelnerWindow& window, std::size_t r,
                                     std::size_t cap = kDefaultCap);

/// F minus its r-boundary, in window order.
std::vector<GroupElement> interior(const FoelnerWindow& window, std::size_t r,
                                   std::size_t cap = kDefaultCap);

/// |boundary_r F_n| / |F_n| for the preset window.
mpq_class foelner_ratio(const GroupSpec& spec, std::size_t n, std::size_t r,
                        std::size_t cap = kDefaultCap);

}  // namespace sectiondim

#endif  // SECTIONDIM_FOELNER_HPP
