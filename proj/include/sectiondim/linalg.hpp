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

#ifndef SECTIONDIM_LINALG_HPP
#define SECTIONDIM_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "sectiondim/gauss_rational.hpp"

namespace sectiondim {

/// Sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, GaussRational>>;

/// Row echelon form of a sparse system.
///
/// Columns are eliminated in their natural order, so the reduced form is the
/// unique RREF of the input. Within a column the pivot row is the one with
/// the fewest nonzeros, ties broken by the smallest leading-coefficient bit
/// size; this only affects the unreduced intermediate, never the RREF.
struct EchelonForm {
  std::size_t cols = 0;
  /// Strictly increasing; rows[k] leads at pivot_cols[k].
  std::vector<std::size_t> pivot_cols;
  std::vector<SparseRow> rows;

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Forward elimination, or full reduction (leading 1s, zeros above every
/// pivot) when `reduced` is set. Throws DomainError on a column index out of
/// range.
EchelonForm row_echelon(std::vector<SparseRow> rows, std::size_t cols,
                        bool reduced);

/// Basis of the right nullspace read off a reduced echelon form: one vector
/// per free column f with a 1 at f, zeros at the other free columns.
std::vector<SparseRow> nullspace_basis(const EchelonForm& rref);

/// r <- r + factor * p
void axpy(SparseRow& r, const GaussRational& factor, const SparseRow& p);

/// Inverse of a dense square matrix; throws DomainError when singular.
std::vector<std::vector<GaussRational>> dense_inverse(
    const std::vector<std::vector<GaussRational>>& m);

}  // namespace sectiondim

#endif  // SECTIONDIM_LINALG_HPP
