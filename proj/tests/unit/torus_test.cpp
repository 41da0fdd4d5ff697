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

#include <gtest/gtest.h>

#include <random>

#include "qgrass/errors.hpp"
#include "qgrass/grassmannian.hpp"
#include "qgrass/torus.hpp"

namespace qgrass {
namespace {

LambdaPtr ambient(IntMatrix L) {
  return std::make_shared<const IntMatrix>(std::move(L));
}

IntMatrix random_skew(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  IntMatrix L(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      L(i, j) = d(rng);
      L(j, i) = -L(i, j);
    }
  return L;
}

TorusElement random_element(const LambdaPtr& amb, std::size_t terms,
                            std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-3, 3), c(-3, 3), s(-2, 2);
  TorusElement out(amb);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent a(amb->rows());
    for (auto& x : a) x = e(rng);
    const int k = c(rng);
    out.add_term(a, QCoefficient(k == 0 ? 1 : k) * QCoefficient::u_power(s(rng)));
  }
  return out;
}

const IntMatrix kGr24L = initial_seed(GrassParams(2, 4), false).L();

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma(Exponent{0, 3, 0, 0, 0}, kGr24L), HalfInt{0});
  EXPECT_EQ(gamma(Exponent{1, 1, 0, 1, 0}, kGr24L), HalfInt::from_twice(-2));
  const Exponent a{-1, 1, 0, 1, 0};
  const Exponent neg{1, -1, 0, -1, 0};
  EXPECT_EQ(gamma(a, kGr24L), gamma(neg, kGr24L));
  EXPECT_THROW(gamma(Exponent{1, 1}, kGr24L), DimMismatch);
}

TEST(MulMonomials, Examples) {
  const IntMatrix L{{0, -1}, {1, 0}};
  const auto p = mul_monomials(Exponent{1, 0}, Exponent{0, 1}, L);
  EXPECT_EQ(p.q_exponent, HalfInt::from_twice(-1));
  EXPECT_EQ(p.exponent, (Exponent{1, 1}));
  const auto r = mul_monomials(Exponent{0, 1}, Exponent{1, 0}, L);
  EXPECT_EQ(r.q_exponent, HalfInt::from_twice(1));
  // X1 X2 = q^{lambda_12} X2 X1.
  EXPECT_EQ(p.q_exponent - r.q_exponent, HalfInt{2 * L(0, 1)});
  EXPECT_EQ(mul_monomials(Exponent{2, 1}, Exponent{2, 1}, L).q_exponent,
            HalfInt{0});
  EXPECT_THROW(mul_monomials(Exponent{1}, Exponent{1, 0}, L), DimMismatch);
}

TEST(TorusMul, UnitCommutationAndBilinearity) {
  auto amb = ambient(IntMatrix{{0, -1, 2}, {1, 0, 1}, {-2, -1, 0}});
  const TorusElement one = TorusElement::monomial(amb, Exponent{0, 0, 0});
  const TorusElement x1 = TorusElement::generator(amb, 0);
  const TorusElement x2 = TorusElement::generator(amb, 1);
  const TorusElement x3 = TorusElement::generator(amb, 2);
  EXPECT_EQ(torus_mul(x1, one), x1);
  EXPECT_EQ(torus_mul(x1, x2),
            torus_mul(x2, x1).scaled(QCoefficient::u_power(2 * -1)));
  const TorusElement sum = x1 + x2;
  EXPECT_EQ(torus_mul(sum, x3), torus_mul(x1, x3) + torus_mul(x2, x3));
  const auto p = mul_monomials(Exponent{1, 0, 0}, Exponent{0, 0, 1}, *amb);
  EXPECT_EQ(torus_mul(x1, x3).terms().at(p.exponent),
            QCoefficient::q_power(p.q_exponent));

  auto other = ambient(IntMatrix{{0, 1}, {-1, 0}});
  EXPECT_THROW(torus_mul(x1, TorusElement::generator(other, 0)),
               AmbientMismatch);
  EXPECT_THROW(TorusElement(ambient(IntMatrix{{0, 1}, {1, 0}})),
               InvalidMatrix);
}

TEST(TorusMul, Associative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto amb = ambient(random_skew(4, rng));
    const auto a = random_element(amb, 3, rng);
    const auto b = random_element(amb, 3, rng);
    const auto c = random_element(amb, 3, rng);
    ASSERT_EQ(torus_mul(torus_mul(a, b), c), torus_mul(a, torus_mul(b, c)));
  }
}

TEST(RightDivide, RandomRoundTripAndSupportBox) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> dim(1, 7), terms(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    auto amb = ambient(random_skew(dim(rng), rng));
    const auto q = random_element(amb, terms(rng), rng);
    const auto d = random_element(amb, terms(rng), rng);
    if (q.is_zero() || d.is_zero()) continue;  // repeated exponents cancelled
    const auto p = torus_mul(q, d);
    ASSERT_EQ(right_divide(p, d), q);
    const auto bp = support_box(p), bq = support_box(q), bd = support_box(d);
    for (std::size_t i = 0; i < amb->rows(); ++i) {
      ASSERT_EQ(bp.low[i], bq.low[i] + bd.low[i]);
      ASSERT_EQ(bp.high[i], bq.high[i] + bd.high[i]);
    }
  }
}

TEST(RightDivide, MonomialAndFailureCases) {
  auto amb = ambient(IntMatrix{{0, 1}, {-1, 0}});
  const auto p = TorusElement::monomial(amb, Exponent{1, 1});
  const auto d = TorusElement::monomial(amb, Exponent{0, 1});
  const auto q = right_divide(p, d);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q.terms().begin()->first, (Exponent{1, 0}));
  EXPECT_EQ(torus_mul(q, d), p);

  // Monomials are units, so dividing by X^(2,0) always succeeds.
  const auto sum = TorusElement::monomial(amb, Exponent{1, 0}) +
                   TorusElement::monomial(amb, Exponent{0, 1});
  const auto square = TorusElement::monomial(amb, Exponent{2, 0});
  EXPECT_EQ(torus_mul(right_divide(sum, square), square), sum);

  // 1 + X1 does not divide X1.
  const auto binomial = TorusElement::monomial(amb, Exponent{0, 0}) +
                        TorusElement::monomial(amb, Exponent{1, 0});
  EXPECT_THROW(right_divide(TorusElement::generator(amb, 0), binomial),
               NotDivisible);
  // (1 + X1)(1 + X2) is not divisible by 1 - X1.
  const auto diff = TorusElement::monomial(amb, Exponent{0, 0}) -
                    TorusElement::monomial(amb, Exponent{1, 0});
  const auto prod =
      torus_mul(binomial, TorusElement::monomial(amb, Exponent{0, 0}) +
                              TorusElement::generator(amb, 1));
  EXPECT_THROW(right_divide(prod, diff), NotDivisible);
  EXPECT_THROW(right_divide(p, TorusElement(amb)), NotDivisible);
}

TEST(Specialize, ValuesAndPoles) {
  auto amb = ambient(IntMatrix{{0, 1}, {-1, 0}});
  TorusElement p(amb);
  p.add_term(Exponent{1, 0}, QCoefficient::u_power(3));
  p.add_term(Exponent{-1, 1}, QCoefficient(2));
  const auto s = specialize_q1(p);
  EXPECT_EQ(s.at(Exponent{1, 0}), 1);
  EXPECT_EQ(s.at(Exponent{-1, 1}), 2);
  const std::vector<Rational> values{Rational(5), Rational(3)};
  EXPECT_EQ(evaluate_classical(p, values), Rational(5) + Rational(6, 5));
  const std::vector<Rational> zero{Rational(0), Rational(3)};
  EXPECT_THROW(evaluate_classical(p, zero), ZeroValueAtNegativeExponent);

  TorusElement pole(amb);
  pole.add_term(Exponent{0, 0},
                QCoefficient(0, IntPolynomial(1),
                             IntPolynomial(std::vector<Integer>{-1, 1})));
  EXPECT_THROW(specialize_q1(pole), PoleAtOne);
}

TEST(TorusElement, OrderedCoefficient) {
  auto amb = std::make_shared<const IntMatrix>(kGr24L);
  const Exponent a{-1, 1, 0, 1, 0};
  const auto x = TorusElement::monomial(amb, a);
  EXPECT_EQ(x.ordered_coefficient(a),
            QCoefficient::q_power(gamma(a, kGr24L)));
  EXPECT_EQ(x.ordered_coefficient(a), QCoefficient::u_power(-2));
}

}  // namespace
}  // namespace qgrass
