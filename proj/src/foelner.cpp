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

#include "sectiondim/foelner.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "sectiondim/errors.hpp"

namespace sectiondim {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (a != 0 && b > cap / a) {
    throw CapExceeded("window size exceeds the cap of " + std::to_string(cap));
  }
  return a * b;
}

std::size_t window_size_capped(const GroupSpec& spec, std::size_t n,
                               std::size_t cap) {
  const std::size_t side = 2 * n + 1;
  std::size_t size = 1;
  switch (spec.preset()) {
    case Preset::FreeAbelian:
      for (int i = 0; i < spec.rank(); ++i) size = checked_mul(size, side, cap);
      break;
    case Preset::Heisenberg:
      size = checked_mul(checked_mul(side, side, cap),
                         checked_mul(2, checked_mul(n, n, cap), cap) + 1, cap);
      break;
    case Preset::ZCrossZ2:
      size = checked_mul(side, 2, cap);
      break;
    case Preset::Lamplighter:
      if (n >= 62) throw CapExceeded("lamplighter window n=" + std::to_string(n));
      size = checked_mul(n, std::size_t{1} << n, cap);
      break;
  }
  if (size > cap) {
    throw CapExceeded("window size " + std::to_string(size) +
                      " exceeds the cap of " + std::to_string(cap));
  }
  return size;
}

std::vector<GroupElement> enumerate_preset(const GroupSpec& spec, std::size_t n,
                                           std::size_t cap) {
  std::vector<GroupElement> out;
  out.reserve(window_size_capped(spec, n, cap));
  const auto k = static_cast<std::int64_t>(n);
  switch (spec.preset()) {
    case Preset::FreeAbelian: {
      std::vector<std::int64_t> v(spec.rank(), -k);
      while (true) {
        out.emplace_back(ZnElement{v});
        std::size_t i = 0;
        while (i < v.size() && v[i] == k) v[i++] = -k;
        if (i == v.size()) break;
        ++v[i];
      }
      break;
    }
    case Preset::Heisenberg:
      for (std::int64_t a = -k; a <= k; ++a)
        for (std::int64_t b = -k; b <= k; ++b)
          for (std::int64_t c = -k * k; c <= k * k; ++c)
            out.emplace_back(HeisElement{a, b, c});
      break;
    case Preset::ZCrossZ2:
      for (std::int64_t m = -k; m <= k; ++m)
        for (std::uint8_t e : {0, 1}) out.emplace_back(ZxZ2Element{m, e});
      break;
    case Preset::Lamplighter:
      for (std::int64_t x = 1 - k; x <= 0; ++x) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          std::vector<std::int64_t> lamps;
          for (std::int64_t p = 0; p < k; ++p)
            if ((mask >> p) & 1U) lamps.push_back(x + p);
          out.emplace_back(LampElement{std::move(lamps), x});
        }
      }
      break;
  }
  return out;
}

}  // namespace

FoelnerWindow::FoelnerWindow(GroupSpec spec, std::size_t n,
                             std::vector<GroupElement> elements, std::size_t cap)
    : spec_(std::move(spec)), n_(n) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const auto lengths = word_lengths(spec_, elements, cap);
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return cayley_less(lengths[i], elements[i], lengths[j], elements[j]);
  });
  elements_.reserve(elements.size());
  index_.reserve(elements.size());
  for (auto i : order) {
    index_.emplace(elements[i], elements_.size());
    elements_.push_back(std::move(elements[i]));
  }
}

std::optional<std::size_t> FoelnerWindow::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FoelnerWindow foelner_set(const GroupSpec& spec, std::size_t n, std::size_t cap) {
  if (n < 1) throw DomainError("foelner_set: n must be >= 1");
  return FoelnerWindow(spec, n, enumerate_preset(spec, n, cap), cap);
}

bool in_preset_window(const GroupSpec& spec, std::size_t n,
                      const GroupElement& g) {
  if (!spec.valid(g)) return false;
  const auto k = static_cast<std::int64_t>(n);
  switch (spec.preset()) {
    case Preset::FreeAbelian: {
      const auto& c = std::get<ZnElement>(g).coords;
      return std::all_of(c.begin(), c.end(),
                         [k](std::int64_t v) { return v >= -k && v <= k; });
    }
    case Preset::Heisenberg: {
      const auto& h = std::get<HeisElement>(g);
      return std::abs(h.a) <= k && std::abs(h.b) <= k && std::abs(h.c) <= k * k;
    }
    case Preset::ZCrossZ2:
      return std::abs(std::get<ZxZ2Element>(g).m) <= k;
    case Preset::Lamplighter: {
      const auto& l = std::get<LampElement>(g);
      return l.pos > -k && l.pos <= 0 &&
             (l.lamps.empty() ||
              (l.lamps.front() >= l.pos && l.lamps.back() < l.pos + k));
    }
  }
  return false;
}

std::size_t preset_window_size(const GroupSpec& spec, std::size_t n) {
  return window_size_capped(spec, n, SIZE_MAX);
}

std::vector<GroupElement> r_boundary(const FoelnerWindow& window, std::size_t r,
                                     std::size_t cap) {
  std::vector<GroupElement> out;
  if (r == 0) return out;
  const Ball translates = ball(window.spec(), r, cap);
  for (const auto& g : window.elements()) {
    for (const auto& u : translates.entries) {
      if (!window.contains(multiply(window.spec(), u.element, g))) {
        out.push_back(g);
        break;
      }
    }
  }
  return out;
}

std::vector<GroupElement> interior(const FoelnerWindow& window, std::size_t r,
                                   std::size_t cap) {
  std::vector<GroupElement> out;
  if (r == 0) {
    out.assign(window.elements().begin(), window.elements().end());
    return out;
  }
  const Ball translates = ball(window.spec(), r, cap);
  for (const auto& g : window.elements()) {
    bool inside = std::all_of(
        translates.entries.begin(), translates.entries.end(),
        [&](const BallEntry& u) {
          return window.contains(multiply(window.spec(), u.element, g));
        });
    if (inside) out.push_back(g);
  }
  return out;
}

mpq_class foelner_ratio(const GroupSpec& spec, std::size_t n, std::size_t r,
                        std::size_t cap) {
  if (n < 1) throw DomainError("foelner_ratio: n must be >= 1");
  const auto elements = enumerate_preset(spec, n, cap);
  std::size_t boundary = 0;
  if (r > 0) {
    const Ball translates = ball(spec, r, cap);
    for (const auto& g : elements) {
      for (const auto& u : translates.entries) {
        if (!in_preset_window(spec, n, multiply(spec, u.element, g))) {
          ++boundary;
          break;
        }
      }
    }
  }
  mpq_class ratio(static_cast<unsigned long>(boundary),
                  static_cast<unsigned long>(elements.size()));
  ratio.canonicalize();
  return ratio;
}

}  // namespace sectiondim
