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
#include "qgrass/seed.hpp"
#include "support/oracles.hpp"

namespace qgrass {
namespace {

QuantumSeed gr(int m, int n, bool vars = true) {
  return initial_seed(GrassParams(m, n), vars);
}

TEST(CheckCompatible, Examples) {
  const QuantumSeed s = gr(2, 4);
  EXPECT_EQ(check_compatible(s.B(), s.L()), std::vector<std::int64_t>{2});
  const ExchangeMatrix zero(IntMatrix(5, 1));
  try {
    check_compatible(zero, s.L());
    FAIL() << "expected NotCompatible";
  } catch (const NotCompatible& e) {
    EXPECT_EQ(e.k(), 0u);
    EXPECT_EQ(e.l(), 0u);
  }
  EXPECT_THROW(check_compatible(s.B(), IntMatrix(4, 4)), DimMismatch);
  EXPECT_THROW(ExchangeMatrix(IntMatrix{{0, 1}, {1, 0}}), InvalidMatrix);
}

TEST(EFMatrices, Examples) {
  const QuantumSeed s = gr(2, 4);
  const IntMatrix E = e_matrix(s.B(), 0);
  std::vector<std::int64_t> col;
  for (std::size_t i = 0; i < 5; ++i) col.push_back(E(i, 0));
  EXPECT_EQ(col, (std::vector<std::int64_t>{-1, 1, 0, 1, 0}));
  EXPECT_EQ(f_matrix(s.B(), 0), IntMatrix{{-1}});
  EXPECT_THROW(e_matrix(s.B(), 1), FrozenIndex);

  const ExchangeMatrix zero(IntMatrix(3, 2));
  IntMatrix expected = IntMatrix::identity(3);
  expected(1, 1) = -1;
  EXPECT_EQ(e_matrix(zero, 1), expected);
}

TEST(MutateBL, Gr24ExampleAndInvolution) {
  const QuantumSeed s = gr(2, 4);
  const auto once = mutate_BL(s.B(), s.L(), 0);
  EXPECT_EQ(once.L(0, 1), -1);
  EXPECT_EQ(check_compatible(once.B, once.L), std::vector<std::int64_t>{2});
  const auto twice = mutate_BL(once.B, once.L, 0);
  EXPECT_EQ(twice.B, s.B());
  EXPECT_EQ(twice.L, s.L());
}

TEST(MutateBL, MatchesClassicalMatrixMutation) {
  std::mt19937_64 rng(17);
  for (auto [m, n] : {std::pair{2, 6}, std::pair{3, 6}, std::pair{3, 7}}) {
    QuantumSeed seed = gr(m, n, false);
    std::uniform_int_distribution<std::size_t> pick(0,
                                                    seed.mutable_count() - 1);
    for (int step = 0; step < 30; ++step) {
      const std::size_t k = pick(rng);
      const auto next = mutate_BL(seed.B(), seed.L(), k);
      ASSERT_EQ(next.B.matrix(),
                testing::classical_mutation(seed.B().matrix(), k));
      ASSERT_EQ(check_compatible(next.B, next.L),
                std::vector<std::int64_t>(seed.mutable_count(), 2));
      const auto back = mutate_BL(next.B, next.L, k);
      ASSERT_EQ(back.B, seed.B());
      ASSERT_EQ(back.L, seed.L());
      seed = mutate_seed(seed, k);
    }
  }
}

TEST(ExchangeExponents, Gr24) {
  const QuantumSeed s = gr(2, 4);
  const auto ex = exchange_exponents(s.B(), 0);
  EXPECT_EQ(ex.plus, (Exponent{-1, 1, 0, 1, 0}));
  EXPECT_EQ(ex.minus, (Exponent{-1, 0, 1, 0, 1}));
  const auto z = exchange_exponents(ExchangeMatrix(IntMatrix(3, 1)), 0);
  EXPECT_EQ(z.plus, (Exponent{-1, 0, 0}));
  EXPECT_EQ(z.minus, (Exponent{-1, 0, 0}));
}

TEST(MutateSeed, Gr24ExchangeVariable) {
  const QuantumSeed s = gr(2, 4);
  const QuantumSeed t = mutate_seed(s, 0);
  EXPECT_EQ(t.positions()[0].label, IndexSubset({2, 4}, 4));
  EXPECT_EQ(t.history(), std::vector<std::size_t>{0});
  const TorusElement& x = t.variable(0);
  ASSERT_EQ(x.size(), 2u);
  const Exponent plus{-1, 1, 0, 1, 0};
  const Exponent minus{-1, 0, 1, 0, 1};
  // Based coefficients are 1; the ordered-product coefficients are q^gamma.
  EXPECT_EQ(x.terms().at(plus), QCoefficient(1));
  EXPECT_EQ(x.terms().at(minus), QCoefficient(1));
  EXPECT_EQ(x.ordered_coefficient(plus), QCoefficient::u_power(-2));
  EXPECT_EQ(x.ordered_coefficient(minus), QCoefficient::u_power(2));

  const QuantumSeed back = mutate_seed(t, 0);
  EXPECT_TRUE(back.same_state(s));
  EXPECT_FALSE(back == s);  // history differs
  EXPECT_THROW(mutate_seed(s, 1), FrozenIndex);
}

TEST(MutateSeed, ClassicalSpecializationIsPluckerMinor) {
  const QuantumSeed s = gr(2, 4);
  const QuantumSeed t = mutate_seed(s, 0);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix M(2, std::vector<Rational>(4));
    for (auto& row : M)
      for (auto& x : row) x = d(rng);
    const auto values = minor_values(M, s.labels());
    if (std::any_of(values.begin(), values.end(),
                    [](const Rational& v) { return v == 0; }))
      continue;
    EXPECT_EQ(evaluate_classical(t.variable(0), values),
              classical_plucker_eval(M, IndexSubset({2, 4}, 4)));
  }
  const auto at_one = specialize_q1(t.variable(0));
  for (const auto& [a, c] : at_one) EXPECT_EQ(c, 1);
}

TEST(MutateSeed, WithoutVariablesTracksOnlyMatricesAndLabels) {
  const QuantumSeed s = gr(2, 5, false);
  const QuantumSeed t = mutate_seed(s, 1);
  EXPECT_FALSE(t.tracks_variables());
  EXPECT_EQ(t.positions()[1].label, IndexSubset({3, 5}, 5));
  EXPECT_THROW(t.variable(0), Error);
}

TEST(MutateSeed, NonDividingVariableIsLaurentViolation) {
  const QuantumSeed s = gr(2, 4);
  auto amb = s.variable(0).ambient();
  std::vector<VariablePtr> vars = s.variables();
  vars[0] = std::make_shared<const TorusElement>(
      TorusElement::generator(amb, 0) + TorusElement::generator(amb, 1));
  const QuantumSeed bad(s.params(), s.positions(), s.B(), s.L(), vars);
  EXPECT_THROW(mutate_seed(bad, 0), LaurentViolation);
}

TEST(QuantumSeed, ValidatesLayout) {
  const QuantumSeed s = gr(2, 4);
  auto positions = s.positions();
  positions[0].frozen = true;
  EXPECT_THROW(QuantumSeed(s.params(), positions, s.B(), s.L(), {}),
               InvalidParams);
  EXPECT_THROW(
      QuantumSeed(s.params(), s.positions(), s.B(), IntMatrix(5, 5), {}),
      NotCompatible);
}

TEST(MutateSeed, VariablesQuasiCommuteAlongRandomPaths) {
  std::mt19937_64 rng(23);
  for (auto [m, n] : {std::pair{2, 5}, std::pair{3, 6}}) {
    QuantumSeed seed = gr(m, n);
    std::uniform_int_distribution<std::size_t> pick(0,
                                                    seed.mutable_count() - 1);
    for (int step = 0; step < 5; ++step) {
      seed = mutate_seed(seed, pick(rng));
      for (std::size_t i = 0; i < seed.size(); ++i)
        for (std::size_t j = 0; j < seed.size(); ++j)
          ASSERT_TRUE(variables_quasi_commute(seed, i, j));
      // No loops or 2-cycles: the principal part stays skew-symmetric.
      for (std::size_t i = 0; i < seed.mutable_count(); ++i)
        ASSERT_EQ(seed.B()(i, i), 0);
    }
  }
}

TEST(QuiverArrows, Gr24) {
  const QuantumSeed s = gr(2, 4);
  // Column (0,1,-1,1,-1): arrows 1 -> {1,2}, 1 -> {3,4}, and {2,3} -> 1,
  // {1,4} -> 1 (0-based positions).
  auto arrows = quiver_arrows(s.B());
  std::sort(arrows.begin(), arrows.end());
  const std::vector<std::pair<std::size_t, std::size_t>> expected{
      {0, 1}, {0, 3}, {2, 0}, {4, 0}};
  EXPECT_EQ(arrows, expected);
}

}  // namespace
}  // namespace qgrass
