// Copyright 2026 The qgrass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgrass/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qgrass/errors.hpp"

namespace qgrass {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

IntPolynomial IntPolynomial::monomial(Integer coeff, int degree) {
  if (coeff == 0) return {};
  std::vector<Integer> c(degree + 1, 0);
  c[degree] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

int IntPolynomial::valuation() const {
  int v = 0;
  while (v < static_cast<int>(coeffs_.size()) && coeffs_[v] == 0) ++v;
  return v;
}

IntPolynomial IntPolynomial::strip_valuation() const {
  const int v = valuation();
  if (v == 0) return *this;
  return IntPolynomial(std::vector<Integer>(coeffs_.begin() + v, coeffs_.end()));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const Integer& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> c = coeffs_;
  for (Integer& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

Integer IntPolynomial::evaluate_at_one() const {
  Integer acc = 0;
  for (const Integer& c : coeffs_) acc += c;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> c = coeffs_;
  for (Integer& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const Integer& k) {
  std::vector<Integer> c = a.coeffs_;
  for (Integer& x : c) x *= k;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& a,
                                          const IntPolynomial& b) {
  if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw NotDivisible("polynomial degree too low");
  std::vector<Integer> rem = a.coeffs_;
  std::vector<Integer> quot(a.degree() - b.degree() + 1, 0);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Integer& top = rem[k + b.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
      throw NotDivisible("inexact polynomial division");
    }
    const Integer f = top / b.leading();
    quot[k] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= f * b.coeffs_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& x) { return x != 0; })) {
    throw NotDivisible("nonzero polynomial remainder");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::pseudo_remainder(const IntPolynomial& a,
                                              const IntPolynomial& b) {
  std::vector<Integer> rem = a.coeffs_;
  const int db = b.degree();
  for (int top = static_cast<int>(rem.size()) - 1; top >= db; --top) {
    if (rem[top] == 0) continue;
    const Integer f = rem[top];
    for (Integer& x : rem) x *= b.leading();
    for (int j = 0; j <= db; ++j) rem[top - db + j] -= f * b.coeffs_[j];
  }
  return IntPolynomial(std::move(rem));
}

IntPolynomial IntPolynomial::gcd(const IntPolynomial& a,
                                 const IntPolynomial& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  Integer g;
  const Integer ca = a.content();
  const Integer cb = b.content();
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part() * g;
}

namespace {

void append_term(std::ostringstream& os, const Integer& c, int exponent,
                 std::string_view var, bool first) {
  Integer mag = abs(c);
  if (c < 0) {
    os << '-';
  } else if (!first) {
    os << '+';
  }
  if (exponent == 0) {
    os << mag;
    return;
  }
  if (mag != 1) os << mag << '*';
  os << var;
  if (exponent != 1) os << '^' << exponent;
}

}  // namespace

std::string IntPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (coeffs_[k] == 0) continue;
    append_term(os, coeffs_[k], k, var, first);
    first = false;
  }
  return os.str();
}

IntPolynomial IntPolynomial::parse(std::string_view text,
                                   std::string_view var) {
  std::vector<Integer> coeffs;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("cannot parse polynomial '" + std::string(text) +
                      "': " + why);
  };
  auto add = [&](Integer c, int exponent) {
    if (exponent < 0) throw fail("negative exponent");
    if (coeffs.size() <= static_cast<std::size_t>(exponent)) {
      coeffs.resize(exponent + 1, 0);
    }
    coeffs[exponent] += c;
  };
  if (text == "0") return {};
  if (text.empty()) throw fail("empty");
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos++];
    }
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    int exponent = 0;
    if (!digits.empty() && pos < text.size() && text[pos] == '*') ++pos;
    if (text.substr(pos, var.size()) == var) {
      pos += var.size();
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::string e;
        if (pos < text.size() && text[pos] == '-') e += text[pos++];
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          e += text[pos++];
        }
        if (e.empty() || e == "-") throw fail("missing exponent");
        exponent = std::stoi(e);
      }
    } else if (digits.empty()) {
      throw fail("expected a coefficient or '" + std::string(var) + "'");
    }
    add(c * sign, exponent);
    if (pos < text.size() && text[pos] != '+' && text[pos] != '-') {
      throw fail("unexpected character");
    }
  }
  return IntPolynomial(std::move(coeffs));
}

LaurentPolynomial::LaurentPolynomial(long constant) : body_(constant) {}

LaurentPolynomial::LaurentPolynomial(int shift, IntPolynomial body)
    : shift_(shift), body_(std::move(body)) {
  normalize();
}

void LaurentPolynomial::normalize() {
  if (body_.is_zero()) {
    shift_ = 0;
    return;
  }
  const int v = body_.valuation();
  if (v > 0) {
    shift_ += v;
    body_ = body_.strip_valuation();
  }
}

LaurentPolynomial LaurentPolynomial::monomial(Integer coeff, int exponent) {
  return LaurentPolynomial(exponent, IntPolynomial(std::vector<Integer>{std::move(coeff)}));
}

Integer LaurentPolynomial::coeff(int exponent) const {
  return body_.coeff(exponent - shift_);
}

bool LaurentPolynomial::is_unit_monomial(int* exponent) const {
  if (!body_.is_one()) return false;
  if (exponent) *exponent = shift_;
  return true;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  if (is_zero()) return {};
  LaurentPolynomial out = *this;
  out.shift_ += k;
  return out;
}

Rational LaurentPolynomial::evaluate(const Rational& x) const {
  Rational scale = 1;
  Rational base = shift_ >= 0 ? x : 1 / x;
  for (int i = 0; i < std::abs(shift_); ++i) scale *= base;
  return scale * body_.evaluate(x);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  return LaurentPolynomial(shift_, -body_);
}

LaurentPolynomial operator+(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int low = std::min(a.shift_, b.shift_);
  IntPolynomial pa = a.body_ * IntPolynomial::monomial(1, a.shift_ - low);
  IntPolynomial pb = b.body_ * IntPolynomial::monomial(1, b.shift_ - low);
  return LaurentPolynomial(low, pa + pb);
}

LaurentPolynomial operator-(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  return a + (-b);
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPolynomial(a.shift_ + b.shift_, a.body_ * b.body_);
}

std::string LaurentPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= body_.degree(); ++k) {
    if (body_.coeffs()[k] == 0) continue;
    append_term(os, body_.coeffs()[k], shift_ + k, var, first);
    first = false;
  }
  return os.str();
}

}  // namespace qgrass
