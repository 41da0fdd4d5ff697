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

#include "qgrass/qcoefficient.hpp"

#include "qgrass/errors.hpp"

namespace qgrass {

namespace {

constexpr std::string_view kVar = "u";
constexpr std::string_view kDot = "·";

}  // namespace

QCoefficient::QCoefficient(long constant) : num_(constant) {}

QCoefficient::QCoefficient(const LaurentPolynomial& p)
    : shift_(p.shift()), num_(p.body()) {
  normalize();
}

QCoefficient::QCoefficient(int shift, IntPolynomial num, IntPolynomial den)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("QCoefficient with zero denominator");
  normalize();
}

QCoefficient QCoefficient::u_power(int k) {
  QCoefficient c(1);
  c.shift_ = k;
  return c;
}

void QCoefficient::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = IntPolynomial(1);
    return;
  }
  const int vn = num_.valuation();
  const int vd = den_.valuation();
  shift_ += vn - vd;
  if (vn) num_ = num_.strip_valuation();
  if (vd) den_ = den_.strip_valuation();
  if (!den_.is_one()) {
    const IntPolynomial g = IntPolynomial::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = IntPolynomial::divide_exact(num_, g);
      den_ = IntPolynomial::divide_exact(den_, g);
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
}

std::optional<LaurentPolynomial> QCoefficient::as_laurent() const {
  if (!is_laurent()) return std::nullopt;
  return LaurentPolynomial(shift_, num_);
}

Rational QCoefficient::at_one() const {
  const Integer d = den_.evaluate_at_one();
  if (d == 0) {
    throw PoleAtOne("coefficient " + to_string() + " has a pole at u = 1");
  }
  Rational r(num_.evaluate_at_one(), d);
  r.canonicalize();
  return r;
}

QCoefficient QCoefficient::operator-() const {
  QCoefficient c = *this;
  c.num_ = -c.num_;
  return c;
}

QCoefficient operator+(const QCoefficient& a, const QCoefficient& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int low = std::min(a.shift_, b.shift_);
  const IntPolynomial xa = IntPolynomial::monomial(1, a.shift_ - low);
  const IntPolynomial xb = IntPolynomial::monomial(1, b.shift_ - low);
  if (a.den_ == b.den_) {
    return QCoefficient(low, a.num_ * xa + b.num_ * xb, a.den_);
  }
  return QCoefficient(low, a.num_ * xa * b.den_ + b.num_ * xb * a.den_,
                      a.den_ * b.den_);
}

QCoefficient operator-(const QCoefficient& a, const QCoefficient& b) {
  return a + (-b);
}

QCoefficient operator*(const QCoefficient& a, const QCoefficient& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) {
    QCoefficient c;
    c.shift_ = a.shift_ + b.shift_;
    c.num_ = a.num_ * b.num_;
    return c;
  }
  return QCoefficient(a.shift_ + b.shift_, a.num_ * b.num_, a.den_ * b.den_);
}

QCoefficient operator/(const QCoefficient& a, const QCoefficient& b) {
  if (b.is_zero()) throw NotDivisible("division by a zero coefficient");
  if (a.is_zero()) return {};
  return QCoefficient(a.shift_ - b.shift_, a.num_ * b.den_, a.den_ * b.num_);
}

std::string QCoefficient::to_string() const {
  return "u^" + std::to_string(shift_) + std::string(kDot) + "(" +
         num_.to_string(kVar) + ")/(" + den_.to_string(kVar) + ")";
}

QCoefficient QCoefficient::parse(std::string_view text) {
  auto fail = [&] {
    return ParseError("cannot parse coefficient '" + std::string(text) + "'");
  };
  if (text.substr(0, 2) != "u^") throw fail();
  const std::size_t dot = text.find(kDot);
  if (dot == std::string_view::npos) throw fail();
  int shift = 0;
  try {
    shift = std::stoi(std::string(text.substr(2, dot - 2)));
  } catch (const std::exception&) {
    throw fail();
  }
  std::string_view rest = text.substr(dot + kDot.size());
  const std::size_t mid = rest.find(")/(");
  if (rest.empty() || rest.front() != '(' || rest.back() != ')' ||
      mid == std::string_view::npos) {
    throw fail();
  }
  const IntPolynomial num = IntPolynomial::parse(rest.substr(1, mid - 1), kVar);
  const IntPolynomial den = IntPolynomial::parse(
      rest.substr(mid + 3, rest.size() - mid - 4), kVar);
  if (den.is_zero()) throw fail();
  return QCoefficient(shift, num, den);
}

}  // namespace qgrass
