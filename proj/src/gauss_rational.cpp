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

#include "sectiondim/gauss_rational.hpp"

#include <cctype>

#include "sectiondim/errors.hpp"

namespace sectiondim {

namespace {

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

bool is_rational_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool digits = false, slash = false, den_digits = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? den_digits : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      return false;
    }
  }
  return digits && (!slash || den_digits);
}

}  // namespace

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw DomainError("division by zero Gaussian rational");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::size_t GaussRational::bit_size() const {
  return mpz_sizeinbase(re_.get_num_mpz_t(), 2) +
         mpz_sizeinbase(re_.get_den_mpz_t(), 2) +
         mpz_sizeinbase(im_.get_num_mpz_t(), 2) +
         mpz_sizeinbase(im_.get_den_mpz_t(), 2);
}

std::string GaussRational::to_string() const {
  if (is_real()) return rational_to_string(re_);
  if (sgn(re_) == 0) return rational_to_string(im_) + "*i";
  std::string out = rational_to_string(re_);
  if (sgn(im_) > 0) out += '+';
  out += rational_to_string(im_);
  out += "*i";
  return out;
}

GaussRational GaussRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0) {
    std::string body = s.substr(0, s.size() - 2);
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if (body[k] == '+' || body[k] == '-') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) return {mpq_class(0), parse_rational(body)};
    return {parse_rational(body.substr(0, split)),
            parse_rational(body.substr(split))};
  }
  return GaussRational(parse_rational(s));
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

mpq_class parse_rational(std::string_view text) {
  if (!is_rational_literal(text)) {
    throw ParseError("bad rational '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_decimal(const mpq_class& q, int digits) {
  if (digits < 1) digits = 1;
  if (sgn(q) == 0) return "0";
  const mpz_class num = abs(q.get_num());
  const mpz_class& den = q.get_den();
  // e = floor(log10 |q|)
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto at_least_pow = [&](long k) {  // |q| >= 10^k
    return k >= 0 ? num >= den * pow10(k) : num * pow10(-k) >= den;
  };
  while (!at_least_pow(e)) --e;
  while (at_least_pow(e + 1)) ++e;

  auto scaled_for = [&](long shift) {
    mpz_class top = 2 * num, bottom = 2 * den;
    if (shift >= 0) {
      top *= pow10(shift);
    } else {
      bottom *= pow10(-shift);
    }
    mpz_class r;
    mpz_class t = top + bottom / 2;
    mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), bottom.get_mpz_t());
    return r;
  };
  long shift = digits - 1 - e;
  mpz_class scaled = scaled_for(shift);
  if (scaled >= pow10(digits)) {
    ++e;
    shift = digits - 1 - e;
    scaled = scaled_for(shift);
  }

  std::string s = scaled.get_str();
  if (shift > 0) {
    if (s.size() <= static_cast<std::size_t>(shift)) {
      s.insert(0, static_cast<std::size_t>(shift) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(shift), 1, '.');
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  } else if (shift < 0) {
    s.append(static_cast<std::size_t>(-shift), '0');
  }
  if (sgn(q) < 0) s.insert(0, 1, '-');
  return s;
}

}  // namespace sectiondim
