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

// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact (integer or rational equality); the only tolerances are wall-clock
// budgets.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qgrass/combinatorics.hpp"
#include "qgrass/grassmannian.hpp"
#include "qgrass/qmatrix.hpp"
#include "qgrass/rank_one.hpp"
#include "qgrass/verify.hpp"

namespace {

using namespace qgrass;

// Pinned tolerances.
constexpr long kExactTolerance = 0;  // all checks are exact equalities
constexpr double kBudgetLz = 600.0;
constexpr double kBudgetCompatPerSeed = 1.0;
constexpr double kBudgetMutation = 120.0;
constexpr double kBudgetPlucker = 600.0;
constexpr double kBudgetLaurent = 300.0;
constexpr double kBudgetFiniteType = 60.0;
constexpr double kBudgetKappa = 60.0;
constexpr std::uint64_t kRngSeed = 20260418;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!ok) detail << "; ";
    ok = false;
    detail << why;
  }
};

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

void lz_agreement(Outcome& out) {
  for (auto [m, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
    QuantumMatrixAlgebra algebra(m, n);
    const LzReport r = algebra.verify_lz();
    out.detail << "Gr(" << m << "," << n << ") " << r.pairs << " pairs/"
               << r.violations.size() << " violations ";
    if (!r.violations.empty()) {
      out.fail("violation " + to_json(r.violations.front().I).dump() + " " +
               to_json(r.violations.front().J).dump());
    }
  }
}

void compat_degree_two(Outcome& out) {
  for (auto [m, n] :
       {std::pair{2, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}, {4, 8}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const QuantumSeed s = initial_seed(GrassParams(m, n), false);
    const IntMatrix BtL = s.B().matrix().transpose() * s.L();
    IntMatrix expected(s.mutable_count(), s.size());
    for (std::size_t k = 0; k < s.mutable_count(); ++k) expected(k, k) = 2;
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    out.detail << "Gr(" << m << "," << n << ") ";
    if (!(BtL == expected)) out.fail("B^t L != [2I|0] for Gr(" +
                                     std::to_string(m) + "," +
                                     std::to_string(n) + ")");
    if (secs > kBudgetCompatPerSeed) out.fail("seed over 1 s");
  }
}

void mutation_consistency(Outcome& out) {
  for (auto [m, n] : {std::pair{2, 6}, {3, 6}}) {
    const SuiteReport r = verify_compat(GrassParams(m, n), 6, 100, kRngSeed);
    out.detail << "Gr(" << m << "," << n << ") " << r.checks << " steps ";
    if (!r.ok()) out.fail(r.violations.front().dump());
  }
}

void exchange_is_plucker(Outcome& out) {
  for (auto [m, n] : {std::pair{2, 5}, {3, 6}}) {
    const SuiteReport r = verify_plucker(GrassParams(m, n), 3, 3, kRngSeed);
    out.detail << "Gr(" << m << "," << n << ") " << r.checks << " checks ";
    if (!r.ok()) out.fail(r.violations.front().dump());
    if (r.checks == 0) out.fail("no exchanges found");
  }
}

void laurent_and_involution(Outcome& out) {
  const SuiteReport r = verify_laurent(GrassParams(2, 6), 8, 50, kRngSeed);
  out.detail << "Gr(2,6) " << r.checks << " steps ";
  if (!r.ok()) out.fail(r.violations.front().dump());
}

void finite_type_counts(Outcome& out) {
  struct Expect {
    int m, n;
    std::size_t seeds, labels;
  };
  for (const Expect& e : {Expect{2, 5, 5, 5}, {2, 6, 14, 9}, {2, 7, 42, 14}}) {
    const auto s =
        explore_exchange_graph(GrassParams(e.m, e.n), 100000, 1000, true);
    out.detail << "Gr(" << e.m << "," << e.n << ") " << s.seeds << "/"
               << s.labels.size() << " ";
    if (s.truncated || s.seeds != e.seeds || s.labels.size() != e.labels) {
      out.fail("unexpected count");
    }
  }
}

void kappa_oracles(Outcome& out) {
  std::size_t pairs = 0;
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m < n; ++m) {
      const auto subsets = all_subsets(GrassParams(m, n));
      for (const auto& I : subsets)
        for (const auto& J : subsets) {
          ++pairs;
          const long diff = kappa(I, J) - kappa_truncated_oracle(I, J, 2 * n);
          if (std::labs(diff) > kExactTolerance) {
            out.fail("truncated oracle " + I.to_string() + " " + J.to_string());
          }
        }
    }
  out.detail << pairs << " oracle pairs, ";
  std::size_t diag = 0;
  for (auto [m, n] : {std::pair{2, 6}, {3, 6}}) {
    const auto subsets = all_subsets(GrassParams(m, n));
    for (const auto& I : subsets)
      for (const auto& J : subsets) {
        ++diag;
        if (kappa(J, I) !=
            max_diag(partition_from_subset(J), partition_from_subset(I))) {
          out.fail("MaxDiag " + I.to_string() + " " + J.to_string());
        }
      }
  }
  out.detail << diag << " MaxDiag pairs";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "quasi-commutation of minors matches c(I,J) and lambda", kBudgetLz,
       lz_agreement},
      {2, "rectangle seeds satisfy B^t L = [2 Id | 0]",
       6 * kBudgetCompatPerSeed, compat_degree_two},
      {3, "mutated L matches labels and lambda along geometric paths",
       kBudgetMutation, mutation_consistency},
      {4, "geometric exchanges satisfy quantum and classical Plucker",
       kBudgetPlucker, exchange_is_plucker},
      {5, "Laurent expansions and involution on random paths", kBudgetLaurent,
       laurent_and_involution},
      {6, "finite type seed and label counts", kBudgetFiniteType,
       finite_type_counts},
      {7, "kappa equals truncated oracle and MaxDiag", kBudgetKappa,
       kappa_oracles},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (secs > c.budget_seconds) {
      outcome.fail("over budget of " + std::to_string(c.budget_seconds) + " s");
    }
    if (!outcome.ok) ++failures;
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " [" << c.number << "] "
              << c.name << " (" << secs << " s, budget " << c.budget_seconds
              << " s): " << outcome.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
