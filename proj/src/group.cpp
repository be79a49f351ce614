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

#include "sectiondim/group.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <iterator>
#include <sstream>

#include "sectiondim/errors.hpp"

namespace sectiondim {

namespace {

void hash_mix(std::size_t& seed, std::uint64_t v) {
  seed ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
          (seed >> 2);
}

template <class T>
const T& as(const GroupElement& g, const char* op) {
  const T* p = std::get_if<T>(&g);
  if (p == nullptr) {
    throw DomainError(std::string(op) + ": element shape does not match group");
  }
  return *p;
}

std::vector<std::int64_t> symmetric_difference(
    const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
  std::vector<std::int64_t> out;
  out.reserve(x.size() + y.size());
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(),
                                std::back_inserter(out));
  return out;
}

std::vector<std::int64_t> shifted(std::vector<std::int64_t> lamps,
                                  std::int64_t by) {
  for (auto& p : lamps) p += by;
  return lamps;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') out.push_back(c);
  }
  return out;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + std::string(s) + "' in element '" +
                     std::string(whole) + "'");
  }
  return v;
}

std::vector<std::int64_t> parse_int_list(std::string_view s,
                                         std::string_view whole) {
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start), whole));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::size_t ElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t seed = g.index();
  std::visit(
      [&seed](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, ZnElement>) {
          for (auto v : e.coords) hash_mix(seed, static_cast<std::uint64_t>(v));
        } else if constexpr (std::is_same_v<T, HeisElement>) {
          hash_mix(seed, static_cast<std::uint64_t>(e.a));
          hash_mix(seed, static_cast<std::uint64_t>(e.b));
          hash_mix(seed, static_cast<std::uint64_t>(e.c));
        } else if constexpr (std::is_same_v<T, ZxZ2Element>) {
          hash_mix(seed, static_cast<std::uint64_t>(e.m));
          hash_mix(seed, e.eps);
        } else {
          hash_mix(seed, e.lamps.size());
          for (auto v : e.lamps) hash_mix(seed, static_cast<std::uint64_t>(v));
          hash_mix(seed, static_cast<std::uint64_t>(e.pos));
        }
      },
      g);
  return seed;
}

GroupSpec::GroupSpec(Preset preset, int rank) : preset_(preset), rank_(rank) {
  switch (preset_) {
    case Preset::FreeAbelian:
      for (int i = 0; i < rank_; ++i) {
        for (std::int64_t s : {1, -1}) {
          ZnElement e{std::vector<std::int64_t>(rank_, 0)};
          e.coords[i] = s;
          generators_.emplace_back(std::move(e));
        }
      }
      break;
    case Preset::Heisenberg:
      generators_ = {HeisElement{1, 0, 0}, HeisElement{-1, 0, 0},
                     HeisElement{0, 1, 0}, HeisElement{0, -1, 0}};
      break;
    case Preset::ZCrossZ2:
      generators_ = {ZxZ2Element{1, 0}, ZxZ2Element{-1, 0},
                     ZxZ2Element{0, 1}};
      break;
    case Preset::Lamplighter:
      generators_ = {LampElement{{0}, 0}, LampElement{{}, 1},
                     LampElement{{}, -1}};
      break;
  }
}

GroupSpec GroupSpec::free_abelian(int d) {
  if (d < 1) throw DomainError("free-abelian rank must be >= 1");
  return GroupSpec(Preset::FreeAbelian, d);
}
GroupSpec GroupSpec::heisenberg() { return GroupSpec(Preset::Heisenberg, 0); }
GroupSpec GroupSpec::z_cross_z2() { return GroupSpec(Preset::ZCrossZ2, 0); }
GroupSpec GroupSpec::lamplighter() { return GroupSpec(Preset::Lamplighter, 0); }

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s == "heis") return heisenberg();
  if (s == "zxz2") return z_cross_z2();
  if (s == "lamp") return lamplighter();
  if (s.size() > 2 && s.compare(0, 2, "z:") == 0) {
    int d = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), d);
    if (ec == std::errc() && ptr == s.data() + s.size() && d >= 1 && d <= 64) {
      return free_abelian(d);
    }
  }
  throw ParseError("unknown group spec '" + std::string(text) +
                   "' (expected z:<d>, heis, zxz2 or lamp)");
}

std::string GroupSpec::name() const {
  switch (preset_) {
    case Preset::FreeAbelian:
      return "z:" + std::to_string(rank_);
    case Preset::Heisenberg:
      return "heis";
    case Preset::ZCrossZ2:
      return "zxz2";
    case Preset::Lamplighter:
      return "lamp";
  }
  return {};
}

bool GroupSpec::valid(const GroupElement& g) const noexcept {
  switch (preset_) {
    case Preset::FreeAbelian: {
      const auto* e = std::get_if<ZnElement>(&g);
      return e != nullptr && e->coords.size() == static_cast<std::size_t>(rank_);
    }
    case Preset::Heisenberg:
      return std::holds_alternative<HeisElement>(g);
    case Preset::ZCrossZ2: {
      const auto* e = std::get_if<ZxZ2Element>(&g);
      return e != nullptr && e->eps <= 1;
    }
    case Preset::Lamplighter: {
      const auto* e = std::get_if<LampElement>(&g);
      return e != nullptr &&
             std::adjacent_find(e->lamps.begin(), e->lamps.end(),
                                std::greater_equal<>()) == e->lamps.end();
    }
  }
  return false;
}

GroupElement identity(const GroupSpec& spec) {
  switch (spec.preset()) {
    case Preset::FreeAbelian:
      return ZnElement{std::vector<std::int64_t>(spec.rank(), 0)};
    case Preset::Heisenberg:
      return HeisElement{};
    case Preset::ZCrossZ2:
      return ZxZ2Element{};
    case Preset::Lamplighter:
      return LampElement{};
  }
  return {};
}

GroupElement multiply(const GroupSpec& spec, const GroupElement& a,
                      const GroupElement& b) {
  if (!spec.valid(a) || !spec.valid(b)) {
    throw DomainError("multiply: element shape does not match " + spec.name());
  }
  switch (spec.preset()) {
    case Preset::FreeAbelian: {
      const auto& x = as<ZnElement>(a, "multiply");
      const auto& y = as<ZnElement>(b, "multiply");
      ZnElement r{x.coords};
      for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
      return r;
    }
    case Preset::Heisenberg: {
      const auto& x = as<HeisElement>(a, "multiply");
      const auto& y = as<HeisElement>(b, "multiply");
      return HeisElement{x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b};
    }
    case Preset::ZCrossZ2: {
      const auto& x = as<ZxZ2Element>(a, "multiply");
      const auto& y = as<ZxZ2Element>(b, "multiply");
      return ZxZ2Element{x.m + y.m, static_cast<std::uint8_t>(x.eps ^ y.eps)};
    }
    case Preset::Lamplighter: {
      const auto& x = as<LampElement>(a, "multiply");
      const auto& y = as<LampElement>(b, "multiply");
      return LampElement{symmetric_difference(x.lamps, shifted(y.lamps, x.pos)),
                         x.pos + y.pos};
    }
  }
  return {};
}

GroupElement inverse(const GroupSpec& spec, const GroupElement& a) {
  if (!spec.valid(a)) {
    throw DomainError("inverse: element shape does not match " + spec.name());
  }
  switch (spec.preset()) {
    case Preset::FreeAbelian: {
      ZnElement r = as<ZnElement>(a, "inverse");
      for (auto& v : r.coords) v = -v;
      return r;
    }
    case Preset::Heisenberg: {
      const auto& x = as<HeisElement>(a, "inverse");
      return HeisElement{-x.a, -x.b, -x.c + x.a * x.b};
    }
    case Preset::ZCrossZ2: {
      const auto& x = as<ZxZ2Element>(a, "inverse");
      return ZxZ2Element{-x.m, x.eps};
    }
    case Preset::Lamplighter: {
      const auto& x = as<LampElement>(a, "inverse");
      return LampElement{shifted(x.lamps, -x.pos), -x.pos};
    }
  }
  return {};
}

std::string format_element(const GroupElement& g) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, ZnElement>) {
          os << '(';
          for (std::size_t i = 0; i < e.coords.size(); ++i) {
            if (i != 0) os << ',';
            os << e.coords[i];
          }
          os << ')';
        } else if constexpr (std::is_same_v<T, HeisElement>) {
          os << '(' << e.a << ',' << e.b << ',' << e.c << ')';
        } else if constexpr (std::is_same_v<T, ZxZ2Element>) {
          os << '(' << e.m << ';' << static_cast<int>(e.eps) << ')';
        } else {
          os << "({";
          for (std::size_t i = 0; i < e.lamps.size(); ++i) {
            if (i != 0) os << ',';
            os << e.lamps[i];
          }
          os << "};" << e.pos << ')';
        }
      },
      g);
  return os.str();
}

GroupElement parse_element(const GroupSpec& spec, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("element literal must be parenthesized: '" +
                     std::string(text) + "'");
  }
  std::string_view body(s.data() + 1, s.size() - 2);
  switch (spec.preset()) {
    case Preset::FreeAbelian:
    case Preset::Heisenberg: {
      auto v = parse_int_list(body, text);
      std::size_t want =
          spec.preset() == Preset::Heisenberg ? 3 : static_cast<std::size_t>(spec.rank());
      if (v.size() != want) {
        throw ParseError("element '" + std::string(text) + "' needs " +
                         std::to_string(want) + " coordinates for " +
                         spec.name());
      }
      if (spec.preset() == Preset::Heisenberg) return HeisElement{v[0], v[1], v[2]};
      return ZnElement{std::move(v)};
    }
    case Preset::ZCrossZ2: {
      auto semi = body.find(';');
      if (semi == std::string_view::npos) {
        throw ParseError("zxz2 element must look like (m;0) or (m;1): '" +
                         std::string(text) + "'");
      }
      auto m = parse_int(body.substr(0, semi), text);
      auto eps = parse_int(body.substr(semi + 1), text);
      if (eps != 0 && eps != 1) {
        throw ParseError("zxz2 torsion bit must be 0 or 1: '" +
                         std::string(text) + "'");
      }
      return ZxZ2Element{m, static_cast<std::uint8_t>(eps)};
    }
    case Preset::Lamplighter: {
      auto close = body.find('}');
      if (body.empty() || body.front() != '{' || close == std::string_view::npos ||
          close + 1 >= body.size() || body[close + 1] != ';') {
        throw ParseError("lamp element must look like ({0,2};3): '" +
                         std::string(text) + "'");
      }
      auto lamps = parse_int_list(body.substr(1, close - 1), text);
      std::sort(lamps.begin(), lamps.end());
      lamps.erase(std::unique(lamps.begin(), lamps.end()), lamps.end());
      return LampElement{std::move(lamps), parse_int(body.substr(close + 2), text)};
    }
  }
  throw ParseError("unreachable");
}

}  // namespace sectiondim
