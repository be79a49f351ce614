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

#ifndef SECTIONDIM_DIM_ESTIMATOR_HPP
#define SECTIONDIM_DIM_ESTIMATOR_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "sectiondim/group_ring.hpp"
#include "sectiondim/linalg.hpp"

namespace sectiondim {

/// Finite-dimensional W = span(vectors) inside l^2(G), plus the finite set
/// A the diagonal projection coefficients are averaged over.
struct SpannedSubspace {
  std::vector<RingElement> vectors;
  std::vector<GroupElement> window;
};

/// Orthogonal projection onto span(vectors), computed exactly.
///
/// A linearly independent basis b_1..b_k is extracted first, then the
/// diagonal coefficient is
///
///   <P 1_g, 1_g> = sum_{i,j} b_i(g) (Gram^-1)_{ij} conj(b_j(g)),
///   Gram_{ij} = <b_i, b_j> = sum_h conj(b_i(h)) b_j(h).
class Projector {
 public:
  explicit Projector(const std::vector<RingElement>& vectors);

  std::size_t dimension() const noexcept { return basis_.size(); }
  /// <P 1_g, 1_g>; real and in [0, 1].
  GaussRational diagonal(const GroupElement& g) const;

 private:
  std::vector<GroupElement> coords_;  // union of supports, sorted
  std::vector<SparseRow> basis_;      // over coords_
  std::vector<std::vector<GaussRational>> gram_inverse_;
};

/// <P_W 1_g, 1_g>
GaussRational project_coeff(const SpannedSubspace& w, const GroupElement& g);

/// Average of project_coeff over the window. Throws DomainError when the
/// window is empty.
mpq_class dim_A(const SpannedSubspace& w);

}  // namespace sectiondim

#endif  // SECTIONDIM_DIM_ESTIMATOR_HPP
