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

#ifndef SECTIONDIM_CAYLEY_HPP
#define SECTIONDIM_CAYLEY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sectiondim/group.hpp"

namespace sectiondim {

/// Default bound on the number of elements a breadth-first enumeration may
/// visit before giving up with CapExceeded.
inline constexpr std::size_t kDefaultCap = 5'000'000;

struct BallEntry {
  GroupElement element;
  std::size_t distance = 0;
};

/// All g with |g| <= radius, sorted by (distance, normal form).
struct Ball {
  std::size_t radius = 0;
  std::vector<BallEntry> entries;
};

/// Deterministic element order: word length first, normal form second.
inline bool cayley_less(std::size_t da, const GroupElement& a, std::size_t db,
                        const GroupElement& b) {
  return da != db ? da < db : a < b;
}

Ball ball(const GroupSpec& spec, std::size_t radius,
          std::size_t cap = kDefaultCap);

/// Word length |g| with respect to the preset generators, or nullopt when
/// |g| > r_max.
std::optional<std::size_t> word_length(const GroupSpec& spec,
                                       const GroupElement& g, std::size_t r_max,
                                       std::size_t cap = kDefaultCap);

/// Word lengths of many elements from a single breadth-first sweep that stops
/// as soon as every target has been reached. Throws CapExceeded if the sweep
/// visits more than `cap` elements first, or if some target is longer than
/// `max_radius`.
std::vector<std::size_t> word_lengths(const GroupSpec& spec,
                                      std::span<const GroupElement> targets,
                                      std::size_t cap = kDefaultCap,
                                      std::size_t max_radius = SIZE_MAX);

}  // namespace sectiondim

#endif  // SECTIONDIM_CAYLEY_HPP
