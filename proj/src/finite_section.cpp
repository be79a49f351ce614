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

#include "sectiondim/finite_section.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <tuple>

#include "sectiondim/errors.hpp"

namespace sectiondim {

namespace {

struct Triplet {
  std::size_t row;
  std::size_t col;
  GaussRational value;
};

std::vector<SparseRow> assemble(std::size_t row_count, std::vector<Triplet> t) {
  std::sort(t.begin(), t.end(), [](const Triplet& x, const Triplet& y) {
    return std::tie(x.row, x.col) < std::tie(y.row, y.col);
  });
  std::vector<SparseRow> rows(row_count);
  for (auto& e : t) rows[e.row].emplace_back(e.col, std::move(e.value));
  return rows;
}

void require_nonzero(const RingElement& alpha, const char* op) {
  if (alpha.is_zero()) {
    throw DomainError(std::string(op) + ": alpha must be nonzero");
  }
}

}  // namespace

ExactMatrix::ExactMatrix(std::vector<GroupElement> row_labels,
                         std::vector<GroupElement> col_labels,
                         std::vector<SparseRow> rows)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      rows_(std::move(rows)) {
  if (rows_.size() != row_labels_.size()) {
    throw DomainError("ExactMatrix: row count does not match labels");
  }
  for (const auto& row : rows_) {
    if (!row.empty() && row.back().first >= col_labels_.size()) {
      throw DomainError("ExactMatrix: column index out of range");
    }
  }
}

GaussRational ExactMatrix::at(std::size_t row, std::size_t col) const {
  const auto& r = rows_.at(row);
  auto it = std::lower_bound(
      r.begin(), r.end(), col,
      [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? it->second : GaussRational();
}

std::size_t ExactMatrix::nonzeros() const noexcept {
  std::size_t nnz = 0;
  for (const auto& r : rows_) nnz += r.size();
  return nnz;
}

std::vector<GaussRational> ExactMatrix::apply(
    std::span<const GaussRational> x) const {
  if (x.size() != col_count()) {
    throw DomainError("ExactMatrix::apply: vector length mismatch");
  }
  std::vector<GaussRational> y(row_count());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [j, v] : rows_[i]) {
      if (!x[j].is_zero()) y[i] += v * x[j];
    }
  }
  return y;
}

ExactMatrix section_matrix(const GroupSpec& spec, const RingElement& alpha,
                           const FoelnerWindow& window, std::size_t cap) {
  require_nonzero(alpha, "section_matrix");
  const std::size_t w = width(spec, alpha, SIZE_MAX, cap);
  std::vector<GroupElement> cols = interior(window, w, cap);
  std::vector<Triplet> t;
  t.reserve(cols.size() * alpha.support_size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [u, a] : alpha.terms()) {
      auto row = window.index_of(multiply(spec, u, cols[j]));
      if (!row) {
        // Interior points are mapped into F by every u with |u| <= width.
        throw DomainError("section_matrix: translate left the window");
      }
      t.push_back({*row, j, a});
    }
  }
  std::vector<GroupElement> rows(window.elements().begin(), window.elements().end());
  return ExactMatrix(std::move(rows), std::move(cols),
                     assemble(window.size(), std::move(t)));
}

ExactMatrix full_kernel_matrix(const GroupSpec& spec, const RingElement& alpha,
                               const FoelnerWindow& window, std::size_t cap) {
  require_nonzero(alpha, "full_kernel_matrix");
  std::vector<GroupElement> products;
  products.reserve(window.size() * alpha.support_size());
  for (const auto& [u, a] : alpha.terms()) {
    for (const auto& v : window.elements()) products.push_back(multiply(spec, u, v));
  }
  const FoelnerWindow row_set(spec, 0, std::move(products), cap);
  std::vector<Triplet> t;
  t.reserve(window.size() * alpha.support_size());
  for (std::size_t j = 0; j < window.size(); ++j) {
    for (const auto& [u, a] : alpha.terms()) {
      t.push_back({*row_set.index_of(multiply(spec, u, window[j])), j, a});
    }
  }
  std::vector<GroupElement> rows(row_set.elements().begin(), row_set.elements().end());
  std::vector<GroupElement> cols(window.elements().begin(), window.elements().end());
  return ExactMatrix(std::move(rows), std::move(cols),
                     assemble(row_set.size(), std::move(t)));
}

Nullspace exact_nullspace(const ExactMatrix& m) {
  EchelonForm rref = row_echelon(m.rows(), m.col_count(), true);
  Nullspace out;
  out.rank = rref.rank();
  out.basis = nullspace_basis(rref);
  out.nullity = out.basis.size();
  return out;
}

std::size_t exact_rank(const ExactMatrix& m) {
  return row_echelon(m.rows(), m.col_count(), false).rank();
}

SectionReport dim_bounds(const GroupSpec& spec, const RingElement& alpha,
                         std::size_t n, std::size_t cap) {
  require_nonzero(alpha, "dim_bounds");
  if (n < 1) throw DomainError("dim_bounds: n must be >= 1");
  const FoelnerWindow window = foelner_set(spec, n, cap);
  const ExactMatrix section = section_matrix(spec, alpha, window, cap);
  const ExactMatrix full = full_kernel_matrix(spec, alpha, window, cap);

  SectionReport r;
  r.n = n;
  r.window_size = window.size();
  r.interior_size = section.col_count();
  r.boundary_size = r.window_size - r.interior_size;
  r.rank = exact_rank(section);
  r.nullity_w = r.interior_size - r.rank;
  r.nullity_v = r.window_size - exact_rank(full);
  const mpq_class size(static_cast<unsigned long>(r.window_size));
  r.lower = mpq_class(static_cast<unsigned long>(r.nullity_v)) / size;
  r.upper = 1 - mpq_class(static_cast<unsigned long>(r.rank)) / size;
  return r;
}

std::vector<SectionReport> convergence_report(const GroupSpec& spec,
                                              const RingElement& alpha,
                                              std::span<const std::size_t> ns,
                                              std::size_t cap) {
  std::vector<SectionReport> out;
  out.reserve(ns.size());
  for (auto n : ns) out.push_back(dim_bounds(spec, alpha, n, cap));
  return out;
}

void write_reports_tsv(std::ostream& os, std::span<const SectionReport> reports,
                       std::optional<int> decimal_digits) {
  os << "n\t|F|\t|dF|\t|G|\tnullity_W\tnullity_V\trank\tlower\tupper";
  if (decimal_digits) os << "\tlower_decimal\tupper_decimal";
  os << '\n';
  for (const auto& r : reports) {
    os << r.n << '\t' << r.window_size << '\t' << r.boundary_size << '\t'
       << r.interior_size << '\t' << r.nullity_w << '\t' << r.nullity_v << '\t'
       << r.rank << '\t' << rational_to_string(r.lower) << '\t'
       << rational_to_string(r.upper);
    if (decimal_digits) {
      os << '\t' << to_decimal(r.lower, *decimal_digits) << '\t'
         << to_decimal(r.upper, *decimal_digits);
    }
    os << '\n';
  }
}

}  // namespace sectiondim
