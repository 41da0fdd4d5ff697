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

#include <string>
#include <string_view>
#include <vector>

#include "qgrass/numeric.hpp"

namespace qgrass {

/// Univariate polynomial with integer coefficients, ascending order. No
/// trailing zero coefficients are stored; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(long constant);  // NOLINT(google-explicit-constructor)

  static IntPolynomial monomial(Integer coeff, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& leading() const { return coeffs_.back(); }
  Integer coeff(int k) const;
  /// Number of factors of the variable dividing the polynomial.
  int valuation() const;
  /// Divides out x^valuation().
  IntPolynomial strip_valuation() const;

  Integer content() const;
  IntPolynomial primitive_part() const;
  Rational evaluate(const Rational& x) const;
  Integer evaluate_at_one() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const Integer& c);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) =
      default;

  /// a / b when b divides a exactly in Z[x]; throws NotDivisible otherwise.
  static IntPolynomial divide_exact(const IntPolynomial& a,
                                    const IntPolynomial& b);
  /// Pseudo-remainder of a by b (b nonzero).
  static IntPolynomial pseudo_remainder(const IntPolynomial& a,
                                        const IntPolynomial& b);
  /// gcd in Z[x], with positive leading coefficient.
  static IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

  /// Descending-degree text such as "u^2-2*u+1".
  std::string to_string(std::string_view var) const;
  static IntPolynomial parse(std::string_view text, std::string_view var);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Laurent polynomial x^shift * body with body(0) != 0 (or zero).
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(int shift, IntPolynomial body);

  static LaurentPolynomial monomial(Integer coeff, int exponent);

  bool is_zero() const { return body_.is_zero(); }
  int low_degree() const { return shift_; }
  int high_degree() const { return shift_ + body_.degree(); }
  Integer coeff(int exponent) const;
  int shift() const { return shift_; }
  const IntPolynomial& body() const { return body_; }
  /// Returns the exponent k if this equals x^k, otherwise nothing.
  bool is_unit_monomial(int* exponent) const;

  LaurentPolynomial shifted(int k) const;
  Integer evaluate_at_one() const { return body_.evaluate_at_one(); }
  Rational evaluate(const Rational& x) const;

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  LaurentPolynomial& operator+=(const LaurentPolynomial& b) {
    return *this = *this + b;
  }
  friend bool operator==(const LaurentPolynomial&,
                         const LaurentPolynomial&) = default;

  /// Ascending text such as "-q^-1+q".
  std::string to_string(std::string_view var) const;

 private:
  void normalize();
  int shift_ = 0;
  IntPolynomial body_;
};

}  // namespace qgrass
