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

#include "sectiondim/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "sectiondim/errors.hpp"

namespace sectiondim {

namespace {

const GaussRational* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

void axpy(SparseRow& r, const GaussRational& factor, const SparseRow& p) {
  if (factor.is_zero() || p.empty()) return;
  SparseRow out;
  out.reserve(r.size() + p.size());
  auto a = r.begin();
  auto b = p.begin();
  while (a != r.end() || b != p.end()) {
    if (b == p.end() || (a != r.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == r.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      GaussRational v = std::move(a->second);
      v += factor * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  r = std::move(out);
}

EchelonForm row_echelon(std::vector<SparseRow> rows, std::size_t cols,
                        bool reduced) {
  EchelonForm ef;
  ef.cols = cols;
  // Active rows bucketed by leading column.
  std::vector<std::vector<SparseRow>> buckets(cols);
  for (auto& row : rows) {
    if (row.empty()) continue;
    if (row.back().first >= cols) {
      throw DomainError("row_echelon: column index " +
                        std::to_string(row.back().first) + " out of range");
    }
    buckets[row.front().first].push_back(std::move(row));
  }
  for (std::size_t c = 0; c < cols; ++c) {
    auto bucket = std::move(buckets[c]);
    if (bucket.empty()) continue;
    auto pivot_it = std::min_element(
        bucket.begin(), bucket.end(), [](const SparseRow& x, const SparseRow& y) {
          if (x.size() != y.size()) return x.size() < y.size();
          return x.front().second.bit_size() < y.front().second.bit_size();
        });
    std::swap(*pivot_it, bucket.front());
    SparseRow& pivot = bucket.front();
    for (std::size_t i = 1; i < bucket.size(); ++i) {
      SparseRow& r = bucket[i];
      GaussRational factor = -(r.front().second / pivot.front().second);
      axpy(r, factor, pivot);
      if (!r.empty()) buckets[r.front().first].push_back(std::move(r));
    }
    ef.pivot_cols.push_back(c);
    ef.rows.push_back(std::move(pivot));
  }
  if (!reduced) return ef;

  for (auto& row : ef.rows) {
    const GaussRational lead = row.front().second;
    if (lead == GaussRational(1)) continue;
    for (auto& [col, v] : row) v /= lead;
  }
  for (std::size_t k = ef.rows.size(); k-- > 0;) {
    const std::size_t pc = ef.pivot_cols[k];
    for (std::size_t j = 0; j < k; ++j) {
      if (const GaussRational* v = find_entry(ef.rows[j], pc)) {
        GaussRational factor = -*v;
        axpy(ef.rows[j], factor, ef.rows[k]);
      }
    }
  }
  return ef;
}

std::vector<SparseRow> nullspace_basis(const EchelonForm& rref) {
  std::vector<std::size_t> slot(rref.cols, SIZE_MAX);
  std::vector<SparseRow> basis;
  {
    std::size_t k = 0;
    for (std::size_t c = 0; c < rref.cols; ++c) {
      if (k < rref.pivot_cols.size() && rref.pivot_cols[k] == c) {
        ++k;
        continue;
      }
      slot[c] = basis.size();
      basis.push_back({});
    }
  }
  // Entries are appended in increasing column order per vector: pivot rows
  // are visited in pivot order and the free 1 is merged in afterwards.
  for (std::size_t k = 0; k < rref.rows.size(); ++k) {
    for (const auto& [col, v] : rref.rows[k]) {
      if (slot[col] != SIZE_MAX) basis[slot[col]].emplace_back(rref.pivot_cols[k], -v);
    }
  }
  for (std::size_t c = 0; c < rref.cols; ++c) {
    if (slot[c] == SIZE_MAX) continue;
    auto& vec = basis[slot[c]];
    auto at = std::lower_bound(
        vec.begin(), vec.end(), c,
        [](const auto& e, std::size_t col) { return e.first < col; });
    vec.emplace(at, c, GaussRational(1));
  }
  return basis;
}

std::vector<std::vector<GaussRational>> dense_inverse(
    const std::vector<std::vector<GaussRational>>& m) {
  const std::size_t n = m.size();
  std::vector<SparseRow> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("dense_inverse: matrix not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[i][j].is_zero()) aug[i].emplace_back(j, m[i][j]);
    }
    aug[i].emplace_back(n + i, GaussRational(1));
  }
  EchelonForm ef = row_echelon(std::move(aug), 2 * n, true);
  if (ef.rank() < n || (n > 0 && ef.pivot_cols[n - 1] != n - 1)) {
    throw DomainError("dense_inverse: matrix is singular");
  }
  std::vector<std::vector<GaussRational>> inv(n, std::vector<GaussRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [col, v] : ef.rows[i]) {
      if (col >= n) inv[i][col - n] = v;
    }
  }
  return inv;
}

}  // namespace sectiondim
