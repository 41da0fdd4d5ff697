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

// The quantum matrix algebra C_q[M_{m x n}] with its straightening law:
// for (i,j) lexicographically smaller than (s,t),
//   x_ij x_st = q x_st x_ij                        (i = s, j < t)
//   x_ij x_st = q x_st x_ij                        (i < s, j = t)
//   x_ij x_st = x_st x_ij                          (i < s, j > t)
//   x_ij x_st = x_st x_ij + (q - q^-1) x_sj x_it   (i < s, j < t)
// Normal words list generators in descending row-major order.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgrass/combinatorics.hpp"
#include "qgrass/polynomial.hpp"

namespace qgrass {

/// A word in the generators; letter (i-1)*n + (j-1) stands for x_ij.
using QWord = std::vector<std::uint8_t>;

/// Linear combination of words with coefficients in Z[q, q^-1].
class QMatrixElement {
 public:
  using Terms = std::map<QWord, LaurentPolynomial>;

  QMatrixElement() = default;
  static QMatrixElement word(QWord w, LaurentPolynomial coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const QWord& w, const LaurentPolynomial& c);
  QMatrixElement scaled(const LaurentPolynomial& c) const;

  friend QMatrixElement operator+(const QMatrixElement& a,
                                  const QMatrixElement& b);
  friend QMatrixElement operator-(const QMatrixElement& a,
                                  const QMatrixElement& b);
  friend bool operator==(const QMatrixElement&, const QMatrixElement&) =
      default;

 private:
  Terms terms_;
};

struct LzViolation {
  IndexSubset I;
  IndexSubset J;
  std::optional<int> expected;  // c(I, J), absent for crossing pairs
  std::optional<int> got;       // oracle exponent, or lambda_pair
  std::string check;            // "oracle" or "lambda"
};

struct LzReport {
  std::size_t pairs = 0;
  std::vector<LzViolation> violations;
};

class QuantumMatrixAlgebra {
 public:
  /// Which out-of-order adjacent pair is rewritten first.
  enum class Strategy { kLeftmost, kRightmost };

  QuantumMatrixAlgebra(int m, int n, Strategy strategy = Strategy::kLeftmost);

  int m() const { return m_; }
  int n() const { return n_; }

  std::uint8_t letter(int i, int j) const;
  std::pair<int, int> generator_of(std::uint8_t letter) const;
  /// Word x_{i1 j1} x_{i2 j2} ...; throws IndexOutOfRange.
  QWord word(const std::vector<std::pair<int, int>>& generators) const;
  bool is_normal(const QWord& w) const;

  /// Straightens every word; the result only contains normal words.
  QMatrixElement normal_form(const QMatrixElement& expr);
  QMatrixElement normal_form(const QWord& w);
  /// Normal form of the product a * b.
  QMatrixElement multiply(const QMatrixElement& a, const QMatrixElement& b);

  /// sum over permutations s of {1..m} of (-q)^{l(s)} x_{1,i_s(1)} ...
  /// x_{m,i_s(m)}, normal-formed. Throws SizeMismatch unless |I| = m.
  QMatrixElement quantum_minor(const IndexSubset& I);

  /// c with a b = q^c b a, or nothing if no such c exists.
  std::optional<int> quasi_comm_exponent(const QMatrixElement& a,
                                         const QMatrixElement& b);

  /// Checks the short quantum Plucker relation for J and the cyclically
  /// ordered a, b, c, d: for a < b < c < d,
  ///   D_Jac D_Jbd = q^-1 D_Jab D_Jcd + q D_Jad D_Jbc,
  /// and for d < a < b < c,
  ///   D_Jbd D_Jac = q^-1 D_Jad D_Jbc + q D_Jcd D_Jab.
  /// Rotates (a,b,c,d) to (c,d,a,b) when a > c. Throws BadConfiguration.
  bool verify_short_plucker(const IndexSubset& J, int a, int b, int c, int d);

  /// Compares oracle quasi-commutation against non-crossing, c_exponent and
  /// lambda_pair over all unordered pairs of distinct m-subsets.
  LzReport verify_lz();

  std::size_t cache_size() const { return cache_.size(); }

 private:
  const QMatrixElement& normal_form_cached(const QWord& w);
  const QMatrixElement& minor_cached(const IndexSubset& I);

  int m_;
  int n_;
  Strategy strategy_;
  std::map<QWord, QMatrixElement> cache_;
  std::map<std::vector<int>, QMatrixElement> minors_;
};

}  // namespace qgrass
