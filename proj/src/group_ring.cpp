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

#include "sectiondim/group_ring.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "sectiondim/errors.hpp"

namespace sectiondim {

RingElement RingElement::delta(const GroupElement& g, GaussRational c) {
  RingElement out;
  out.set(g, std::move(c));
  return out;
}

std::vector<GroupElement> RingElement::support() const {
  std::vector<GroupElement> out;
  out.reserve(terms_.size());
  for (const auto& [g, c] : terms_) out.push_back(g);
  return out;
}

GaussRational RingElement::operator[](const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? GaussRational() : it->second;
}

void RingElement::set(const GroupElement& g, GaussRational c) {
  if (c.is_zero()) {
    terms_.erase(g);
  } else {
    terms_.insert_or_assign(g, std::move(c));
  }
}

void RingElement::add(const GroupElement& g, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RingElement combine(const GaussRational& c1, const RingElement& alpha,
                     const GaussRational& c2, const RingElement& beta) {
  RingElement out;
  if (!c1.is_zero()) {
    for (const auto& [g, c] : alpha.terms()) out.add(g, c1 * c);
  }
  if (!c2.is_zero()) {
    for (const auto& [g, c] : beta.terms()) out.add(g, c2 * c);
  }
  return out;
}

RingElement convolve(const GroupSpec& spec, const RingElement& alpha,
                     const RingElement& beta) {
  RingElement out;
  for (const auto& [u, a] : alpha.terms()) {
    for (const auto& [v, b] : beta.terms()) {
      out.add(multiply(spec, u, v), a * b);
    }
  }
  return out;
}

std::size_t width(const GroupSpec& spec, const RingElement& alpha,
                  std::size_t r_max, std::size_t cap) {
  if (alpha.is_zero()) throw DomainError("width of the zero element is undefined");
  const auto support = alpha.support();
  const auto lengths = word_lengths(spec, support, cap, r_max);
  return *std::max_element(lengths.begin(), lengths.end());
}

std::string format_ring_element(const RingElement& alpha) {
  if (alpha.is_zero()) return "0";
  // Each term reads literally: the separator sign belongs to the real part
  // (or to the imaginary part when the real part is zero).
  std::string out;
  bool first = true;
  for (const auto& [g, c] : alpha.terms()) {
    const bool real = sgn(c.re()) != 0;
    const mpq_class& lead = real ? c.re() : c.im();
    const bool negative = sgn(lead) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += rational_to_string(abs(lead));
    if (!real) {
      out += "*i";
    } else if (sgn(c.im()) != 0) {
      out += sgn(c.im()) < 0 ? '-' : '+';
      out += rational_to_string(abs(c.im()));
      out += "*i";
    }
    out += '*';
    out += format_element(g);
    first = false;
  }
  return out;
}

namespace {

class ExprParser {
 public:
  ExprParser(const GroupSpec& spec, std::string_view text)
      : spec_(spec), original_(text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  RingElement parse() {
    RingElement out;
    if (s_ == "0") return out;
    if (s_.empty()) fail("empty expression");
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = s_[pos_++] == '-';
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      GaussRational c = coefficient(negative);
      if (!consume('*')) fail("expected '*' before element");
      GroupElement g = element();
      out.add(g, c);
      first = false;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(original_) + "'");
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool starts_with(std::string_view lit) const {
    return s_.compare(pos_, lit.size(), lit) == 0;
  }

  // Unsigned `p` or `p/q`; returns empty view when absent.
  std::string_view unsigned_rational() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) return {};
    if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return std::string_view(s_).substr(start, pos_ - start);
  }

  // The sign in front of a term belongs to the rational right after it.
  GaussRational coefficient(bool negative) {
    auto first = unsigned_rational();
    if (first.empty()) fail("expected coefficient");
    mpq_class lead = parse_rational(first);
    if (negative) lead = -lead;
    if (starts_with("*i")) {
      pos_ += 2;
      return {mpq_class(0), lead};
    }
    // `p/q+r/s*i`: commit only when the second rational is followed by *i.
    if (peek() == '+' || peek() == '-') {
      std::size_t save = pos_;
      const bool minus = s_[pos_++] == '-';
      auto second = unsigned_rational();
      if (!second.empty() && starts_with("*i")) {
        pos_ += 2;
        mpq_class im = parse_rational(second);
        return {lead, minus ? mpq_class(-im) : im};
      }
      pos_ = save;
    }
    return GaussRational(lead);
  }

  GroupElement element() {
    if (peek() != '(') fail("expected '(' opening an element");
    std::size_t close = s_.find(')', pos_);
    if (close == std::string::npos) fail("unterminated element literal");
    GroupElement g = parse_element(spec_, std::string_view(s_).substr(pos_, close + 1 - pos_));
    pos_ = close + 1;
    return g;
  }

  const GroupSpec& spec_;
  std::string_view original_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_ring_element(const GroupSpec& spec, std::string_view text) {
  return ExprParser(spec, text).parse();
}

void write_ring_element_file(std::ostream& os, const RingElement& alpha) {
  for (const auto& [g, c] : alpha.terms()) {
    os << rational_to_string(c.re()) << ' ' << rational_to_string(c.im()) << ' '
       << format_element(g) << '\n';
  }
}

RingElement read_ring_element_file(const GroupSpec& spec, std::istream& is) {
  RingElement out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string re, im;
    if (!(ls >> re)) continue;
    if (re.front() == '#') continue;
    std::string rest;
    if (!(ls >> im) || !std::getline(ls, rest)) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected `re im element`");
    }
    GroupElement g = parse_element(spec, rest);
    out.add(g, GaussRational(parse_rational(re), parse_rational(im)));
  }
  return out;
}

}  // namespace sectiondim
