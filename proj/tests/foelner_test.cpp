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

#include <algorithm>

#include "doctest.h"
#include "sectiondim/errors.hpp"
#include "sectiondim/foelner.hpp"
#include "support.hpp"

using namespace sectiondim;

namespace {

std::vector<std::int64_t> z_values(const std::vector<GroupElement>& v) {
  std::vector<std::int64_t> out;
  for (const auto& g : v) out.push_back(std::get<ZnElement>(g).coords[0]);
  std::sort(out.begin(), out.end());
  return out;
}

mpq_class q(long p, long d) {
  mpq_class r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("preset window sizes") {
  const auto z1 = GroupSpec::free_abelian(1);
  const auto w = foelner_set(z1, 3);
  CHECK(w.size() == 7);
  CHECK(z_values({w.elements().begin(), w.elements().end()}) ==
        std::vector<std::int64_t>{-3, -2, -1, 0, 1, 2, 3});
  CHECK(foelner_set(GroupSpec::heisenberg(), 2).size() == 225);
  CHECK(foelner_set(GroupSpec::lamplighter(), 3).size() == 24);
  CHECK(foelner_set(GroupSpec::z_cross_z2(), 4).size() == 18);
  CHECK(foelner_set(GroupSpec::free_abelian(2), 2).size() == 25);
  for (const auto& spec : sectiondim::testing::all_presets()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(preset_window_size(spec, n) == foelner_set(spec, n).size());
    }
  }
  CHECK_THROWS_AS(foelner_set(z1, 0), DomainError);
  CHECK_THROWS_AS(foelner_set(GroupSpec::lamplighter(), 20, 1000), CapExceeded);
}

TEST_CASE("window order follows word length then normal form") {
  for (const auto& spec : sectiondim::testing::all_presets()) {
    CAPTURE(spec.name());
    const auto w = foelner_set(spec, 2);
    const auto lengths = word_lengths(spec, w.elements());
    for (std::size_t i = 1; i < w.size(); ++i) {
      REQUIRE(cayley_less(lengths[i - 1], w[i - 1], lengths[i], w[i]));
    }
    for (std::size_t i = 0; i < w.size(); ++i) REQUIRE(w.index_of(w[i]) == i);
  }
}

TEST_CASE("windows are nested") {
  for (const auto& spec : sectiondim::testing::all_presets()) {
    CAPTURE(spec.name());
    for (std::size_t n = 1; n < 4; ++n) {
      const auto small = foelner_set(spec, n);
      const auto big = foelner_set(spec, n + 1);
      for (const auto& g : small.elements()) REQUIRE(big.contains(g));
      for (const auto& g : big.elements()) {
        REQUIRE(in_preset_window(spec, n + 1, g));
      }
    }
  }
}

TEST_CASE("boundary examples") {
  const auto z1 = GroupSpec::free_abelian(1);
  const auto w = foelner_set(z1, 3);
  CHECK(z_values(r_boundary(w, 1)) == std::vector<std::int64_t>{-3, 3});
  CHECK(z_values(interior(w, 1)) == std::vector<std::int64_t>{-2, -1, 0, 1, 2});
  CHECK(r_boundary(w, 0).empty());
  CHECK(interior(w, 0).size() == w.size());

  CHECK(r_boundary(foelner_set(GroupSpec::free_abelian(2), 2), 1).size() == 16);

  const auto zz = GroupSpec::z_cross_z2();
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto boundary = r_boundary(foelner_set(zz, n), 1);
    const auto k = static_cast<std::int64_t>(n);
    std::vector<GroupElement> expect{ZxZ2Element{-k, 0}, ZxZ2Element{-k, 1},
                                     ZxZ2Element{k, 0}, ZxZ2Element{k, 1}};
    std::vector<GroupElement> got = boundary;
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
  const auto inner = interior(foelner_set(zz, 5), 1);
  CHECK(inner.size() == 18);
  for (const auto& g : inner) CHECK(std::abs(std::get<ZxZ2Element>(g).m) <= 4);
}

TEST_CASE("hand-built windows use the generic boundary path") {
  const auto zz = GroupSpec::z_cross_z2();
  const FoelnerWindow torsion(zz, 0, {ZxZ2Element{0, 0}, ZxZ2Element{0, 1}});
  CHECK(r_boundary(torsion, 0).empty());
  // s moves both points out
  CHECK(r_boundary(torsion, 1).size() == 2);
}

TEST_CASE("interior elements stay inside under every short translate") {
  for (const auto& spec : sectiondim::testing::all_presets()) {
    CAPTURE(spec.name());
    for (std::size_t r : {1u, 2u}) {
      const auto w = foelner_set(spec, 3);
      const auto inner = interior(w, r);
      const auto translates = ball(spec, r);
      for (const auto& g : inner) {
        for (const auto& u : translates.entries) {
          REQUIRE(w.contains(multiply(spec, u.element, g)));
        }
      }
      REQUIRE(inner.size() + r_boundary(w, r).size() == w.size());
    }
  }
}

TEST_CASE("foelner_ratio values") {
  const auto z1 = GroupSpec::free_abelian(1);
  CHECK(foelner_ratio(z1, 3, 1) == q(2, 7));
  CHECK(foelner_ratio(z1, 10, 1) == q(2, 21));
  CHECK(foelner_ratio(GroupSpec::free_abelian(2), 2, 1) == q(16, 25));
  CHECK(foelner_ratio(z1, 4, 0) == 0);
  // lamp, r = 1: only the two extreme positions x = 0 and x = 1-n can be
  // pushed out by m^{+-1}; the toggle a never leaves the window.
  CHECK(foelner_ratio(GroupSpec::lamplighter(), 1, 1) == 1);
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(foelner_ratio(GroupSpec::lamplighter(), n, 1) == q(2, static_cast<long>(n)));
  }
}

TEST_CASE("foelner_ratio matches the ordered window") {
  for (const auto& spec : sectiondim::testing::all_presets()) {
    CAPTURE(spec.name());
    for (std::size_t r : {1u, 2u}) {
      const auto w = foelner_set(spec, 3);
      mpq_class expect(static_cast<unsigned long>(r_boundary(w, r).size()),
                       static_cast<unsigned long>(w.size()));
      expect.canonicalize();
      REQUIRE(foelner_ratio(spec, 3, r) == expect);
    }
  }
}

TEST_CASE("ratio decays on doubling") {
  for (const auto& spec : {GroupSpec::free_abelian(1), GroupSpec::free_abelian(2),
                           GroupSpec::heisenberg(), GroupSpec::z_cross_z2()}) {
    CAPTURE(spec.name());
    for (std::size_t r : {1u, 2u}) {
      for (std::size_t n = 2; n <= 8; ++n) {
        REQUIRE(foelner_ratio(spec, 2 * n, r) < foelner_ratio(spec, n, r));
      }
    }
  }
}

TEST_CASE("lamplighter ratio at r = 2 saturates on small windows") {
  const auto lamp = GroupSpec::lamplighter();
  // ball(2) = {e, a, m, m^-1, am, ma, am^-1, m^-1 a, m^2, m^-2}
  CHECK(ball(lamp, 2).entries.size() == 10);
  CHECK(preset_window_size(lamp, 2) == 8);
  CHECK(foelner_ratio(lamp, 2, 2) == 1);
  CHECK(foelner_ratio(lamp, 4, 2) == 1);
  CHECK(foelner_ratio(lamp, 8, 2) == q(1, 2));
  for (std::size_t n = 4; n <= 8; ++n) {
    CHECK(foelner_ratio(lamp, 2 * n, 2) < foelner_ratio(lamp, n, 2));
    CHECK(foelner_ratio(lamp, 2 * n, 1) < foelner_ratio(lamp, n, 1));
  }
}
