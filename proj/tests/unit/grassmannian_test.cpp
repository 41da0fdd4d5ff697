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

#include <deque>
#include <map>
#include <random>
#include <set>

#include "qgrass/errors.hpp"
#include "qgrass/grassmannian.hpp"
#include "qgrass/rank_one.hpp"
#include "support/oracles.hpp"

namespace qgrass {
namespace {

IndexSubset S(std::vector<int> e, int n) { return IndexSubset(std::move(e), n); }

TEST(InitialSeed, Gr24) {
  const QuantumSeed s = initial_seed(GrassParams(2, 4));
  const std::vector<IndexSubset> labels{S({1, 3}, 4), S({1, 2}, 4),
                                        S({2, 3}, 4), S({3, 4}, 4),
                                        S({1, 4}, 4)};
  EXPECT_EQ(s.labels(), labels);
  EXPECT_EQ(s.B().matrix(), (IntMatrix{{0}, {1}, {-1}, {1}, {-1}}));
  EXPECT_EQ(s.mutable_count(), 1u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s.variable(i), TorusElement::generator(s.variable(0).ambient(), i));
  }
}

TEST(InitialSeed, Gr25Labels) {
  const QuantumSeed s = initial_seed(GrassParams(2, 5));
  const auto labels = s.labels();
  EXPECT_EQ(labels[0], S({1, 3}, 5));
  EXPECT_EQ(labels[1], S({1, 4}, 5));
  std::set<IndexSubset> frozen(labels.begin() + 2, labels.end());
  std::set<IndexSubset> intervals;
  for (int a = 1; a <= 5; ++a) intervals.insert(cyclic_interval(GrassParams(2, 5), a));
  EXPECT_EQ(frozen, intervals);
}

TEST(InitialSeed, CompatibleWithDegreeTwoEverywhere) {
  for (int n = 2; n <= 12; ++n)
    for (int m = 1; m < n; ++m) {
      if (m * (n - m) > 20) continue;
      const QuantumSeed s = initial_seed(GrassParams(m, n), false);
      ASSERT_EQ(s.size(), static_cast<std::size_t>(m * (n - m) + 1));
      ASSERT_EQ(s.size() - s.mutable_count(), static_cast<std::size_t>(n));
      ASSERT_EQ(check_compatible(s.B(), s.L()),
                std::vector<std::int64_t>(s.mutable_count(), 2))
          << m << "," << n;
      ASSERT_TRUE(is_maximal(s.labels()));
    }
  EXPECT_THROW(initial_seed(GrassParams(3, 3)), InvalidParams);
}

TEST(LFromLabels, Gr24Rows) {
  const std::vector<IndexSubset> labels{S({1, 3}, 4), S({1, 2}, 4),
                                        S({2, 3}, 4), S({3, 4}, 4),
                                        S({1, 4}, 4)};
  const IntMatrix L = L_from_labels(labels);
  std::vector<std::int64_t> r0, r1;
  for (std::size_t j = 0; j < 5; ++j) {
    r0.push_back(L(0, j));
    r1.push_back(L(1, j));
  }
  EXPECT_EQ(r0, (std::vector<std::int64_t>{0, -1, 1, 1, 1}));
  EXPECT_EQ(r1, (std::vector<std::int64_t>{1, 0, 1, 2, 1}));
  const std::vector<IndexSubset> single{S({2, 4}, 5)};
  EXPECT_EQ(L_from_labels(single), IntMatrix(1, 1));
  const std::vector<IndexSubset> crossing{S({1, 3}, 4), S({2, 4}, 4)};
  EXPECT_THROW(L_from_labels(crossing), CrossingPair);
}

TEST(Relabel, Examples) {
  const QuantumSeed s24 = initial_seed(GrassParams(2, 4), false);
  const auto ex = geometric_exchange(s24, 0);
  ASSERT_TRUE(ex);
  EXPECT_EQ(ex->common, S({}, 4));
  EXPECT_EQ((std::vector<int>{ex->a, ex->b, ex->c, ex->d}),
            (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(relabel_after_exchange(s24, 0), S({2, 4}, 4));

  const QuantumSeed s25 = initial_seed(GrassParams(2, 5), false);
  EXPECT_EQ(relabel_after_exchange(s25, 1), S({3, 5}, 5));
  const QuantumSeed t25 = mutate_seed(s25, 1);
  EXPECT_EQ(L_from_labels(t25.labels()), t25.L());

  // The six-valent centre of the Gr(3,6) rectangle seed is not a geometric
  // exchange; after mutating it, its neighbours lose the pattern as well.
  const QuantumSeed s36 = initial_seed(GrassParams(3, 6), false);
  EXPECT_EQ(s36.positions()[3].label, S({1, 4, 5}, 6));
  EXPECT_FALSE(relabel_after_exchange(s36, 3));
  const QuantumSeed t36 = mutate_seed(s36, 3);
  EXPECT_FALSE(t36.positions()[3].label);
  EXPECT_FALSE(relabel_after_exchange(t36, 0));
  EXPECT_THROW(relabel_after_exchange(t36, 3), NoLabel);
  EXPECT_THROW(geometric_exchange(s36, 4), FrozenIndex);
  EXPECT_EQ(mutate_seed(t36, 3).positions(), s36.positions());
}

TEST(Explore, FiniteTypeCounts) {
  const auto a2 = explore_exchange_graph(GrassParams(2, 5), 1000, 50, true);
  EXPECT_EQ(a2.seeds, 5u);
  EXPECT_EQ(a2.labels.size(), 5u);
  EXPECT_FALSE(a2.truncated);
  const auto a3 = explore_exchange_graph(GrassParams(2, 6), 1000, 50, true);
  EXPECT_EQ(a3.seeds, 14u);
  EXPECT_EQ(a3.labels.size(), 9u);
  const auto one = explore_exchange_graph(GrassParams(2, 5), 1, 50, true);
  EXPECT_EQ(one.seeds, 1u);
  EXPECT_TRUE(one.truncated);
  const auto shallow = explore_exchange_graph(GrassParams(2, 6), 1000, 1, true);
  EXPECT_TRUE(shallow.truncated);
  EXPECT_EQ(shallow.depth, 1);
  EXPECT_THROW(explore_exchange_graph(GrassParams(2, 5), 0, 5, true),
               InvalidParams);
}

TEST(Explore, UnrestrictedGr36FindsAllClusters) {
  // Finite type D4: 50 clusters, 16 mutable cluster variables.
  const auto d4 = explore_exchange_graph(GrassParams(3, 6), 1000, 50, false);
  EXPECT_EQ(d4.seeds, 50u);
  EXPECT_FALSE(d4.truncated);
  // 14 of the 16 are labeled minors; the two others are unlabeled.
  EXPECT_EQ(d4.labels.size(), 14u);
}

// Collections reached by geometric exchanges are maximal weakly separated,
// and a label always carries the same variable expansion whichever path
// reaches it.
TEST(Explore, CollectionsMaximalAndVariablesWellDefined) {
  for (auto [m, n] : {std::pair{2, 6}, std::pair{3, 6}}) {
    const QuantumSeed start = initial_seed(GrassParams(m, n));
    std::map<IndexSubset, TorusElement> expansion;
    std::set<std::vector<IndexSubset>> seen;
    std::deque<QuantumSeed> frontier{start};
    auto key = [](const QuantumSeed& s) {
      auto l = s.labels();
      std::sort(l.begin(), l.end());
      return l;
    };
    seen.insert(key(start));
    std::size_t checked = 0;
    while (!frontier.empty()) {
      QuantumSeed seed = frontier.front();
      frontier.pop_front();
      ASSERT_TRUE(is_maximal(seed.labels()));
      for (std::size_t i = 0; i < seed.size(); ++i) {
        const auto [it, fresh] =
            expansion.try_emplace(*seed.positions()[i].label, seed.variable(i));
        if (!fresh) {
          ASSERT_EQ(it->second, seed.variable(i));
          ++checked;
        }
      }
      for (std::size_t k = 0; k < seed.mutable_count(); ++k) {
        if (!geometric_exchange(seed, k)) continue;
        QuantumSeed next = mutate_seed(seed, k);
        if (seen.insert(key(next)).second) frontier.push_back(std::move(next));
      }
    }
    EXPECT_GT(checked, 0u);
  }
}

TEST(ClassicalPlucker, Examples) {
  const RationalMatrix id{{1, 0, 0, 0}, {0, 1, 0, 0}};
  EXPECT_EQ(classical_plucker_eval(id, S({1, 2}, 4)), 1);
  const RationalMatrix row{{Rational(3, 2), 5, 7}};
  EXPECT_EQ(classical_plucker_eval(row, S({2}, 3)), 5);
  EXPECT_THROW(classical_plucker_eval(id, S({1}, 4)), SizeMismatch);

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    RationalMatrix M(2, std::vector<Rational>(4));
    for (auto& r : M)
      for (auto& x : r) x = d(rng);
    auto P = [&](int a, int b) { return classical_plucker_eval(M, S({a, b}, 4)); };
    EXPECT_EQ(P(1, 3) * P(2, 4) - P(1, 2) * P(3, 4) - P(1, 4) * P(2, 3), 0);
  }
  for (int trial = 0; trial < 50; ++trial) {
    RationalMatrix M(3, std::vector<Rational>(5));
    for (auto& r : M)
      for (auto& x : r) x = d(rng);
    const IndexSubset I = S({1, 3, 5}, 5);
    std::vector<std::vector<Rational>> sub(3, std::vector<Rational>(3));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) sub[r][c] = M[r][I.elements()[c] - 1];
    EXPECT_EQ(classical_plucker_eval(M, I), testing::leibniz_det(sub));
  }
}

}  // namespace
}  // namespace qgrass
