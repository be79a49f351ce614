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

#include <sstream>

#include "doctest.h"
#include "sectiondim/errors.hpp"
#include "sectiondim/group_ring.hpp"
#include "support.hpp"

using namespace sectiondim;
using sectiondim::testing::random_element;

namespace {

GroupElement z(std::int64_t k) { return ZnElement{{k}}; }

RingElement poly(std::initializer_list<std::pair<std::int64_t, long>> terms) {
  RingElement out;
  for (auto [k, c] : terms) out.add(z(k), GaussRational(c));
  return out;
}

}  // namespace

TEST_CASE("GaussRational arithmetic") {
  const GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  CHECK((GaussRational(1) + i) * (GaussRational(1) - i) == GaussRational(2));
  CHECK(GaussRational(1) / (GaussRational(1) + i) ==
        GaussRational(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK(GaussRational(mpq_class(2, 4)).re() == mpq_class(1, 2));
  CHECK(GaussRational(mpq_class(3), mpq_class(4)).norm() == 25);
  CHECK_THROWS_AS(GaussRational(1) / GaussRational(), DomainError);
}

TEST_CASE("GaussRational text") {
  CHECK(GaussRational(mpq_class(-3, 4)).to_string() == "-3/4");
  CHECK(GaussRational(mpq_class(1, 2), mpq_class(-3)).to_string() == "1/2-3*i");
  CHECK(GaussRational(mpq_class(0), mpq_class(1)).to_string() == "1*i");
  CHECK(GaussRational::parse("0+1*i") == GaussRational::i());
  CHECK(GaussRational::parse("1/2+3/4*i") == GaussRational(mpq_class(1, 2), mpq_class(3, 4)));
  CHECK(GaussRational::parse("-5/3*i") == GaussRational(mpq_class(0), mpq_class(-5, 3)));
  CHECK(GaussRational::parse("4/6") == GaussRational(mpq_class(2, 3)));
  CHECK_THROWS_AS(GaussRational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(GaussRational::parse("abc"), ParseError);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(mpq_class(1, 2)) == "0.5");
  CHECK(to_decimal(mpq_class(2, 3)) == "0.66666666666666666667");
  CHECK(to_decimal(mpq_class(-13, 22), 5) == "-0.59091");
  CHECK(to_decimal(mpq_class(123456, 1), 3) == "123000");
  CHECK(to_decimal(mpq_class(999, 1000), 2) == "1");
  CHECK(to_decimal(mpq_class(1, 3000), 3) == "0.000333");
  CHECK(to_decimal(mpq_class(0)) == "0");
}

TEST_CASE("combine") {
  const auto spec = GroupSpec::free_abelian(1);
  const RingElement alpha = poly({{0, 1}, {1, -1}});
  CHECK(combine(1, alpha, -1, alpha).is_zero());
  const RingElement two = combine(1, RingElement::delta(z(0)), 1, RingElement::delta(z(3)));
  CHECK(two.support_size() == 2);
  CHECK(combine(GaussRational(mpq_class(1, 2)), RingElement::delta(z(0), 2), 0,
                random_element(spec, 2, 3)) == RingElement::delta(z(0)));
}

TEST_CASE("convolve examples") {
  const auto z1 = GroupSpec::free_abelian(1);
  CHECK(convolve(z1, poly({{0, 1}, {1, -1}}), poly({{0, 1}, {1, 1}, {2, 1}})) ==
        poly({{0, 1}, {3, -1}}));
  const auto zz = GroupSpec::z_cross_z2();
  const GroupElement e = ZxZ2Element{0, 0}, t = ZxZ2Element{0, 1};
  CHECK(convolve(zz, combine(1, RingElement::delta(e), -1, RingElement::delta(t)),
                 combine(1, RingElement::delta(e), 1, RingElement::delta(t)))
            .is_zero());
  for (const auto& spec : sectiondim::testing::all_presets()) {
    const auto beta = random_element(spec, 2, 5);
    CHECK(convolve(spec, RingElement::delta(identity(spec)), beta) == beta);
    CHECK(convolve(spec, beta, RingElement::delta(identity(spec))) == beta);
  }
}

TEST_CASE("convolve matches the pointwise formula") {
  for (const auto& spec : sectiondim::testing::all_presets()) {
    CAPTURE(spec.name());
    for (int trial = 0; trial < 20; ++trial) {
      const auto alpha = random_element(spec, 2, 4);
      const auto beta = random_element(spec, 2, 4);
      const auto product = convolve(spec, alpha, beta);
      // every candidate point u v, plus the supports themselves
      std::vector<GroupElement> points;
      for (const auto& [u, a] : alpha.terms())
        for (const auto& [v, b] : beta.terms()) points.push_back(multiply(spec, u, v));
      for (const auto& g : points) {
        REQUIRE(product[g] == sectiondim::testing::pointwise_product(spec, alpha, beta, g));
      }
      for (const auto& [g, c] : product.terms()) {
        REQUIRE(std::find(points.begin(), points.end(), g) != points.end());
      }
    }
  }
}

TEST_CASE("ring axioms on random sparse elements") {
  for (const auto& spec : sectiondim::testing::all_presets()) {
    CAPTURE(spec.name());
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = random_element(spec, 2, 4);
      const auto b = random_element(spec, 2, 4);
      const auto c = random_element(spec, 2, 4);
      REQUIRE(convolve(spec, convolve(spec, a, b), c) ==
              convolve(spec, a, convolve(spec, b, c)));
      const auto k1 = sectiondim::testing::random_coefficient();
      const auto k2 = sectiondim::testing::random_coefficient();
      REQUIRE(convolve(spec, a, combine(k1, b, k2, c)) ==
              combine(k1, convolve(spec, a, b), k2, convolve(spec, a, c)));
      REQUIRE(convolve(spec, combine(k1, a, k2, b), c) ==
              combine(k1, convolve(spec, a, c), k2, convolve(spec, b, c)));
    }
  }
}

TEST_CASE("width") {
  const auto z1 = GroupSpec::free_abelian(1);
  CHECK(width(z1, RingElement::delta(z(0))) == 0);
  CHECK(width(z1, poly({{0, 1}, {1, -1}})) == 1);
  const auto heis = GroupSpec::heisenberg();
  const auto alpha = combine(1, RingElement::delta(HeisElement{}), -1,
                             RingElement::delta(HeisElement{0, 0, 1}));
  CHECK(width(heis, alpha) == 4);
  CHECK_THROWS_AS(width(heis, RingElement()), DomainError);
  CHECK_THROWS_AS(width(heis, alpha, 3), CapExceeded);
}

TEST_CASE("width is subadditive") {
  for (const auto& spec : sectiondim::testing::all_presets()) {
    CAPTURE(spec.name());
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_element(spec, 2, 4);
      const auto b = random_element(spec, 2, 4);
      const auto ab = convolve(spec, a, b);
      if (ab.is_zero()) continue;
      REQUIRE(width(spec, ab) <= width(spec, a) + width(spec, b));
    }
  }
}

TEST_CASE("support propagation from the interior") {
  for (const auto& spec : sectiondim::testing::all_presets()) {
    CAPTURE(spec.name());
    const auto window = foelner_set(spec, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const auto alpha = random_element(spec, 2, 4);
      const auto inner = interior(window, width(spec, alpha));
      if (inner.empty()) continue;
      const auto beta = sectiondim::testing::random_supported(inner, 6);
      const auto product = convolve(spec, alpha, beta);
      for (const auto& [g, c] : product.terms()) {
        REQUIRE(window.contains(g));
      }
    }
  }
}

TEST_CASE("expression text") {
  const auto z1 = GroupSpec::free_abelian(1);
  CHECK(parse_ring_element(z1, "1*(0) - 1*(1)") == poly({{0, 1}, {1, -1}}));
  CHECK(format_ring_element(poly({{0, 1}, {1, -1}})) == "1*(0) - 1*(1)");
  CHECK(format_ring_element(RingElement()) == "0");
  CHECK(parse_ring_element(z1, "0").is_zero());
  CHECK(parse_ring_element(z1, "-2*(0)") == poly({{0, -2}}));
  CHECK(parse_ring_element(z1, "1*(0) + 1*(0)") == poly({{0, 2}}));

  const auto zz = GroupSpec::z_cross_z2();
  const auto a = parse_ring_element(zz, "1/2+3/4*i*(0;1) + 2*(0;0) - 1/3*i*(1;0)");
  CHECK(a[ZxZ2Element{0, 1}] == GaussRational(mpq_class(1, 2), mpq_class(3, 4)));
  CHECK(a[ZxZ2Element{0, 0}] == GaussRational(2));
  CHECK(a[ZxZ2Element{1, 0}] == GaussRational(mpq_class(0), mpq_class(-1, 3)));
  const auto b = parse_ring_element(zz, "-1/2-3*i*(2;1)");
  CHECK(b[ZxZ2Element{2, 1}] == GaussRational(mpq_class(-1, 2), mpq_class(-3)));
  CHECK(format_ring_element(b) == "-1/2-3*i*(2;1)");
  const auto c = parse_ring_element(zz, "1*(0;0) - 2*i*(0;1) - 1/2+1*i*(1;1)");
  CHECK(c[ZxZ2Element{0, 1}] == GaussRational(mpq_class(0), mpq_class(-2)));
  CHECK(c[ZxZ2Element{1, 1}] == GaussRational(mpq_class(-1, 2), mpq_class(1)));
  CHECK(format_ring_element(c) == "1*(0;0) - 2*i*(0;1) - 1/2+1*i*(1;1)");

  CHECK_THROWS_AS(parse_ring_element(z1, ""), ParseError);
  CHECK_THROWS_AS(parse_ring_element(z1, "1*(0) 1*(1)"), ParseError);
  CHECK_THROWS_AS(parse_ring_element(z1, "1 + 2*(0)"), ParseError);
  CHECK_THROWS_AS(parse_ring_element(z1, "1*(0,1)"), ParseError);
  CHECK_THROWS_AS(parse_ring_element(z1, "x*(0)"), ParseError);
}

TEST_CASE("text and file forms round-trip losslessly") {
  for (const auto& spec : sectiondim::testing::all_presets()) {
    CAPTURE(spec.name());
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_element(spec, 3, 6);
      REQUIRE(parse_ring_element(spec, format_ring_element(a)) == a);
      std::stringstream file;
      write_ring_element_file(file, a);
      REQUIRE(read_ring_element_file(spec, file) == a);
    }
  }
}

TEST_CASE("file form") {
  const auto lamp = GroupSpec::lamplighter();
  std::istringstream in("# comment\n1 0 ({};0)\n\n-1/2 3 ({0,2};1)\n");
  const auto a = read_ring_element_file(lamp, in);
  CHECK(a.support_size() == 2);
  CHECK(a[LampElement{{0, 2}, 1}] == GaussRational(mpq_class(-1, 2), mpq_class(3)));
  std::istringstream bad("1 0\n");
  CHECK_THROWS_AS(read_ring_element_file(lamp, bad), ParseError);
}
