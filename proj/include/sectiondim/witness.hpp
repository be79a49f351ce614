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

#ifndef SECTIONDIM_WITNESS_HPP
#define SECTIONDIM_WITNESS_HPP

#include <cstddef>
#include <span>

#include "sectiondim/cayley.hpp"
#include "sectiondim/group_ring.hpp"
#include "sectiondim/linalg.hpp"

namespace sectiondim {

/// Outcome of searching the preset windows F_1, F_2, ... for a nonzero gamma
/// with alpha * gamma = 0.
struct WitnessResult {
  bool found = false;
  RingElement gamma;         // nonzero iff found
  std::size_t n = 0;         // window index of the hit, or the last searched
  bool certified = false;    // gamma passed verify_witness
};

/// Scans n = 1..n_max and returns the first basis vector of the kernel of the
/// full kernel matrix at the first n with positive nullity, normalized by
/// normalize_witness.
WitnessResult find_witness(const GroupSpec& spec, const RingElement& alpha,
                           std::size_t n_max, std::size_t cap = kDefaultCap);

/// gamma != 0 and alpha * gamma == 0, by direct convolution.
bool verify_witness(const GroupSpec& spec, const RingElement& alpha,
                    const RingElement& gamma);

/// Canonical scaling of a kernel vector whose entries are indexed by
/// `labels`: clear denominators, divide by the Gaussian-integer content,
/// then multiply by the unit that puts the coefficient of the first nonzero
/// position (in label order) into the quadrant re > 0, im >= 0.
RingElement normalize_witness(std::span<const GroupElement> labels,
                              const SparseRow& vector);

}  // namespace sectiondim

#endif  // SECTIONDIM_WITNESS_HPP
