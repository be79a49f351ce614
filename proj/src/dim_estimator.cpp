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

#include "sectiondim/dim_estimator.hpp"

#include <algorithm>

#include "sectiondim/errors.hpp"

namespace sectiondim {

Projector::Projector(const std::vector<RingElement>& vectors) {
  for (const auto& v : vectors)
    for (const auto& [g, c] : v.terms()) coords_.push_back(g);
  std::sort(coords_.begin(), coords_.end());
  coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());

  std::vector<SparseRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    SparseRow row;
    for (const auto& [g, c] : v.terms()) {
      auto idx = static_cast<std::size_t>(
          std::lower_bound(coords_.begin(), coords_.end(), g) - coords_.begin());
      row.emplace_back(idx, c);
    }
    rows.push_back(std::move(row));  // terms() and coords_ share the order
  }
  // Row space of the spanning set; the echelon rows are independent.
  basis_ = row_echelon(std::move(rows), coords_.size(), false).rows;

  const std::size_t k = basis_.size();
  std::vector<std::vector<GaussRational>> gram(k, std::vector<GaussRational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      GaussRational s;
      auto a = basis_[i].begin();
      auto b = basis_[j].begin();
      while (a != basis_[i].end() && b != basis_[j].end()) {
        if (a->first < b->first) {
          ++a;
        } else if (b->first < a->first) {
          ++b;
        } else {
          s += a->second.conj() * b->second;
          ++a;
          ++b;
        }
      }
      gram[j][i] = s.conj();
      gram[i][j] = std::move(s);
    }
  }
  gram_inverse_ = dense_inverse(gram);
}

GaussRational Projector::diagonal(const GroupElement& g) const {
  auto it = std::lower_bound(coords_.begin(), coords_.end(), g);
  if (it == coords_.end() || *it != g) return {};
  const auto col = static_cast<std::size_t>(it - coords_.begin());
  // b_i(g) for every basis vector.
  std::vector<GaussRational> at_g(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& row = basis_[i];
    auto e = std::lower_bound(
        row.begin(), row.end(), col,
        [](const auto& x, std::size_t c) { return x.first < c; });
    if (e != row.end() && e->first == col) at_g[i] = e->second;
  }
  GaussRational sum;
  for (std::size_t i = 0; i < at_g.size(); ++i) {
    if (at_g[i].is_zero()) continue;
    for (std::size_t j = 0; j < at_g.size(); ++j) {
      if (at_g[j].is_zero()) continue;
      sum += at_g[i] * gram_inverse_[i][j] * at_g[j].conj();
    }
  }
  return sum;
}

GaussRational project_coeff(const SpannedSubspace& w, const GroupElement& g) {
  return Projector(w.vectors).diagonal(g);
}

mpq_class dim_A(const SpannedSubspace& w) {
  if (w.window.empty()) throw DomainError("dim_A: window must be nonempty");
  const Projector p(w.vectors);
  mpq_class total;
  for (const auto& g : w.window) {
    GaussRational d = p.diagonal(g);
    if (!d.is_real()) throw DomainError("dim_A: projection coefficient not real");
    total += d.re();
  }
  return total / mpq_class(static_cast<unsigned long>(w.window.size()));
}

}  // namespace sectiondim
