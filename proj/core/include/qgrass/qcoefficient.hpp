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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qgrass/numeric.hpp"
#include "qgrass/polynomial.hpp"

namespace qgrass {

/// Element of Q(u), u = q^{1/2}, kept as u^shift * num(u) / den(u) with
/// num(0) != 0, den(0) != 0, gcd(num, den) = 1 in Z[u] and den having a
/// positive leading coefficient. This form is unique, so == is value
/// equality.
class QCoefficient {
 public:
  QCoefficient() = default;
  QCoefficient(long constant);  // NOLINT(google-explicit-constructor)
  explicit QCoefficient(const LaurentPolynomial& p);
  QCoefficient(int shift, IntPolynomial num, IntPolynomial den);

  /// u^k.
  static QCoefficient u_power(int k);
  /// q^h = u^{2h} for a half-integer h.
  static QCoefficient q_power(HalfInt h) {
    return u_power(static_cast<int>(h.twice));
  }

  bool is_zero() const { return num_.is_zero(); }
  int shift() const { return shift_; }
  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }
  /// True when the value lies in Z[u, u^-1].
  bool is_laurent() const { return den_.is_one(); }
  /// The value as a Laurent polynomial in u, if it is one.
  std::optional<LaurentPolynomial> as_laurent() const;

  /// Value at u = 1; throws PoleAtOne if the denominator vanishes there.
  Rational at_one() const;

  QCoefficient operator-() const;
  friend QCoefficient operator+(const QCoefficient& a, const QCoefficient& b);
  friend QCoefficient operator-(const QCoefficient& a, const QCoefficient& b);
  friend QCoefficient operator*(const QCoefficient& a, const QCoefficient& b);
  friend QCoefficient operator/(const QCoefficient& a, const QCoefficient& b);
  QCoefficient& operator+=(const QCoefficient& b) { return *this = *this + b; }
  QCoefficient& operator-=(const QCoefficient& b) { return *this = *this - b; }
  friend bool operator==(const QCoefficient&, const QCoefficient&) = default;

  /// Canonical text "u^k·(num)/(den)"; parse() inverts it.
  std::string to_string() const;
  static QCoefficient parse(std::string_view text);

 private:
  void normalize();

  int shift_ = 0;
  IntPolynomial num_;
  IntPolynomial den_{1};
};

}  // namespace qgrass
