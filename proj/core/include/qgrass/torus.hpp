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

// The based quantum torus T(L): basis X^a, a in Z^N, with
//   X^a = q^{gamma(a)} X_1^{a_1} ... X_N^{a_N},
//   gamma(a) = 1/2 sum_{i>j} a_i a_j lambda_ij,
//   X^a X^b = q^{1/2 sum_{i>j} (a_i b_j - b_i a_j) lambda_ij} X^{a+b}.
// Coefficients live in Q(u), u = q^{1/2}.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "qgrass/numeric.hpp"
#include "qgrass/qcoefficient.hpp"

namespace qgrass {

using Exponent = std::vector<int>;
using LambdaPtr = std::shared_ptr<const IntMatrix>;

HalfInt gamma(std::span<const int> a, const IntMatrix& L);

struct MonomialProduct {
  HalfInt q_exponent;
  Exponent exponent;
};

/// X^a X^b = q^{result.q_exponent} X^{result.exponent}.
MonomialProduct mul_monomials(std::span<const int> a, std::span<const int> b,
                              const IntMatrix& L);

/// Finite linear combination of based monomials X^a. Terms are kept in
/// lexicographic exponent order (coordinate 1 most significant) and zero
/// coefficients are never stored.
class TorusElement {
 public:
  using Terms = std::map<Exponent, QCoefficient>;

  explicit TorusElement(LambdaPtr ambient);

  static TorusElement monomial(LambdaPtr ambient, Exponent a,
                               QCoefficient coeff = 1);
  /// The generator X_i (0-based).
  static TorusElement generator(LambdaPtr ambient, std::size_t i);

  std::size_t dim() const { return ambient_->rows(); }
  const LambdaPtr& ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& a, const QCoefficient& c);
  TorusElement scaled(const QCoefficient& c) const;

  /// Every coefficient lies in Z[u, u^-1].
  bool is_laurent() const;
  /// Coefficient of the ordered product X_1^{a_1}...X_N^{a_N}, that is the
  /// based coefficient times q^{gamma(a)}.
  QCoefficient ordered_coefficient(const Exponent& a) const;

  friend TorusElement operator+(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator-(const TorusElement& a, const TorusElement& b);
  friend bool operator==(const TorusElement& a, const TorusElement& b);

 private:
  LambdaPtr ambient_;
  Terms terms_;
};

TorusElement torus_mul(const TorusElement& p, const TorusElement& q);

/// Coordinate-wise bounds of the exponent support.
struct SupportBox {
  Exponent low;
  Exponent high;
};
SupportBox support_box(const TorusElement& p);

/// The unique Q with torus_mul(Q, d) == p. Throws NotDivisible otherwise.
TorusElement right_divide(const TorusElement& p, const TorusElement& d);

/// Coefficients at u = 1 (zero results dropped). Throws PoleAtOne.
std::map<Exponent, Rational> specialize_q1(const TorusElement& p);

/// Value at q = 1 with X_i replaced by commuting numbers values[i].
Rational evaluate_classical(const TorusElement& p,
                            std::span<const Rational> values);

}  // namespace qgrass
