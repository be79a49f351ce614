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

#ifndef SECTIONDIM_FINITE_SECTION_HPP
#define SECTIONDIM_FINITE_SECTION_HPP

// Finite sections of the left-multiplication operator M_alpha on l^2(G).
//
// For a window F and r = width(alpha), let G_F be the interior of F at
// radius r. Left multiplication by alpha maps functions supported on G_F
// into functions supported on F; its matrix is the section matrix. The full
// kernel matrix instead takes every function supported on F and records all
// of alpha*beta, so its nullspace is exactly the part of ker M_alpha living
// on F. With |F| as normalizer,
//
//   nullity_V / |F|  <=  dim ker M_alpha  <=  1 - rank / |F|
//
// and the gap is at most |boundary_r F| / |F|.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "sectiondim/foelner.hpp"
#include "sectiondim/group_ring.hpp"
#include "sectiondim/linalg.hpp"

namespace sectiondim {

/// Sparse exact matrix whose rows and columns are labelled by group elements.
class ExactMatrix {
 public:
  ExactMatrix(std::vector<GroupElement> row_labels,
              std::vector<GroupElement> col_labels, std::vector<SparseRow> rows);

  std::size_t row_count() const noexcept { return row_labels_.size(); }
  std::size_t col_count() const noexcept { return col_labels_.size(); }
  std::span<const GroupElement> row_labels() const noexcept { return row_labels_; }
  std::span<const GroupElement> col_labels() const noexcept { return col_labels_; }
  const std::vector<SparseRow>& rows() const noexcept { return rows_; }

  GaussRational at(std::size_t row, std::size_t col) const;
  std::size_t nonzeros() const noexcept;

  /// Dense matrix-vector product; x.size() must equal col_count().
  std::vector<GaussRational> apply(std::span<const GaussRational> x) const;

 private:
  std::vector<GroupElement> row_labels_;
  std::vector<GroupElement> col_labels_;
  std::vector<SparseRow> rows_;
};

/// Rows F (window order), columns interior(F, width(alpha)),
/// entry(g, v) = alpha(g v^-1).
ExactMatrix section_matrix(const GroupSpec& spec, const RingElement& alpha,
                           const FoelnerWindow& window,
                           std::size_t cap = kDefaultCap);

/// Rows supp(alpha) F (cayley order), columns F, entry(g, v) = alpha(g v^-1).
ExactMatrix full_kernel_matrix(const GroupSpec& spec, const RingElement& alpha,
                               const FoelnerWindow& window,
                               std::size_t cap = kDefaultCap);

struct Nullspace {
  std::size_t nullity = 0;
  std::size_t rank = 0;
  /// Reduced-echelon basis, one sparse vector per free column, ordered by
  /// free column.
  std::vector<SparseRow> basis;
};

Nullspace exact_nullspace(const ExactMatrix& m);
std::size_t exact_rank(const ExactMatrix& m);

struct SectionReport {
  std::size_t n = 0;
  std::size_t window_size = 0;    // |F_n|
  std::size_t boundary_size = 0;  // |boundary_w F_n|, w = width(alpha)
  std::size_t interior_size = 0;  // |G_n|
  std::size_t nullity_w = 0;      // dim ker of the section matrix
  std::size_t nullity_v = 0;      // dim of ker M_alpha among functions on F_n
  std::size_t rank = 0;           // rank of the section matrix
  mpq_class lower;                // nullity_v / |F_n|
  mpq_class upper;                // 1 - rank / |F_n|

  friend bool operator==(const SectionReport&, const SectionReport&) = default;
};

SectionReport dim_bounds(const GroupSpec& spec, const RingElement& alpha,
                         std::size_t n, std::size_t cap = kDefaultCap);

std::vector<SectionReport> convergence_report(const GroupSpec& spec,
                                              const RingElement& alpha,
                                              std::span<const std::size_t> ns,
                                              std::size_t cap = kDefaultCap);

/// Header `n |F| |dF| |G| nullity_W nullity_V rank lower upper`, tab
/// separated, exact `p/q` values. With `decimal_digits`, two extra columns
/// carry decimal renderings of lower and upper.
void write_reports_tsv(std::ostream& os, std::span<const SectionReport> reports,
                       std::optional<int> decimal_digits = std::nullopt);

}  // namespace sectiondim

#endif  // SECTIONDIM_FINITE_SECTION_HPP
