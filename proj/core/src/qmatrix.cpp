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

#include "qgrass/qmatrix.hpp"

#include <algorithm>
#include <numeric>

#include "qgrass/errors.hpp"
#include "qgrass/rank_one.hpp"

namespace qgrass {

QMatrixElement QMatrixElement::word(QWord w, LaurentPolynomial coeff) {
  QMatrixElement e;
  e.add_term(w, coeff);
  return e;
}

void QMatrixElement::add_term(const QWord& w, const LaurentPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QMatrixElement QMatrixElement::scaled(const LaurentPolynomial& c) const {
  QMatrixElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff * c);
  return out;
}

QMatrixElement operator+(const QMatrixElement& a, const QMatrixElement& b) {
  QMatrixElement out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

QMatrixElement operator-(const QMatrixElement& a, const QMatrixElement& b) {
  return a + b.scaled(-1);
}

QuantumMatrixAlgebra::QuantumMatrixAlgebra(int m, int n, Strategy strategy)
    : m_(m), n_(n), strategy_(strategy) {
  if (m < 1 || n < 1 || m * n > 255) {
    throw InvalidParams("quantum matrix algebra size out of range");
  }
}

std::uint8_t QuantumMatrixAlgebra::letter(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_) {
    throw IndexOutOfRange("generator x_" + std::to_string(i) + "," +
                          std::to_string(j) + " out of range");
  }
  return static_cast<std::uint8_t>((i - 1) * n_ + (j - 1));
}

std::pair<int, int> QuantumMatrixAlgebra::generator_of(
    std::uint8_t letter) const {
  return {letter / n_ + 1, letter % n_ + 1};
}

QWord QuantumMatrixAlgebra::word(
    const std::vector<std::pair<int, int>>& generators) const {
  QWord w;
  w.reserve(generators.size());
  for (const auto& [i, j] : generators) w.push_back(letter(i, j));
  return w;
}

bool QuantumMatrixAlgebra::is_normal(const QWord& w) const {
  return std::is_sorted(w.begin(), w.end(), std::greater<>());
}

const QMatrixElement& QuantumMatrixAlgebra::normal_form_cached(
    const QWord& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;

  // Locate an adjacent pair in increasing order.
  std::optional<std::size_t> at;
  if (strategy_ == Strategy::kLeftmost) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p] < w[p + 1]) {
        at = p;
        break;
      }
  } else {
    for (std::size_t p = w.size(); p-- > 1;)
      if (w[p - 1] < w[p]) {
        at = p - 1;
        break;
      }
  }
  QMatrixElement result;
  if (!at) {
    result.add_term(w, 1);
  } else {
    const std::size_t p = *at;
    const auto [i, j] = generator_of(w[p]);
    const auto [s, t] = generator_of(w[p + 1]);
    QWord swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    const LaurentPolynomial q = LaurentPolynomial::monomial(1, 1);
    if (i == s || j == t) {
      result = normal_form_cached(swapped).scaled(q);
    } else if (j > t) {
      result = normal_form_cached(swapped);
    } else {
      QWord cross = w;
      cross[p] = letter(s, j);
      cross[p + 1] = letter(i, t);
      const LaurentPolynomial q_minus_inv =
          q - LaurentPolynomial::monomial(1, -1);
      // Copy before recursing again: the cache may rehash.
      QMatrixElement first = normal_form_cached(swapped);
      result = first + normal_form_cached(cross).scaled(q_minus_inv);
    }
  }
  return cache_.emplace(w, std::move(result)).first->second;
}

QMatrixElement QuantumMatrixAlgebra::normal_form(const QWord& w) {
  for (std::uint8_t l : w) {
    if (l >= m_ * n_) throw IndexOutOfRange("letter out of range");
  }
  return normal_form_cached(w);
}

QMatrixElement QuantumMatrixAlgebra::normal_form(const QMatrixElement& expr) {
  QMatrixElement out;
  for (const auto& [w, c] : expr.terms()) {
    for (const auto& [v, d] : normal_form(w).terms()) out.add_term(v, c * d);
  }
  return out;
}

QMatrixElement QuantumMatrixAlgebra::multiply(const QMatrixElement& a,
                                              const QMatrixElement& b) {
  QMatrixElement out;
  QWord w;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      w.assign(wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      const LaurentPolynomial c = ca * cb;
      for (const auto& [v, d] : normal_form_cached(w).terms()) {
        out.add_term(v, c * d);
      }
    }
  }
  return out;
}

const QMatrixElement& QuantumMatrixAlgebra::minor_cached(const IndexSubset& I) {
  if (I.m() != m_ || I.n() != n_) {
    throw SizeMismatch("minor label " + I.to_string() +
                       " does not match the algebra size");
  }
  if (auto it = minors_.find(I.elements()); it != minors_.end()) {
    return it->second;
  }
  std::vector<int> perm(m_);
  std::iota(perm.begin(), perm.end(), 0);
  const LaurentPolynomial minus_q = LaurentPolynomial::monomial(-1, 1);
  QMatrixElement sum;
  do {
    int inversions = 0;
    for (int x = 0; x < m_; ++x)
      for (int y = x + 1; y < m_; ++y)
        if (perm[x] > perm[y]) ++inversions;
    LaurentPolynomial sign = 1;
    for (int k = 0; k < inversions; ++k) sign = sign * minus_q;
    QWord w;
    for (int r = 0; r < m_; ++r) w.push_back(letter(r + 1, I.elements()[perm[r]]));
    for (const auto& [v, d] : normal_form_cached(w).terms()) {
      sum.add_term(v, sign * d);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return minors_.emplace(I.elements(), std::move(sum)).first->second;
}

QMatrixElement QuantumMatrixAlgebra::quantum_minor(const IndexSubset& I) {
  return minor_cached(I);
}

std::optional<int> QuantumMatrixAlgebra::quasi_comm_exponent(
    const QMatrixElement& a, const QMatrixElement& b) {
  const QMatrixElement ab = multiply(a, b);
  const QMatrixElement ba = multiply(b, a);
  if (ab.size() != ba.size()) return std::nullopt;
  if (ab.is_zero()) return 0;
  std::optional<int> c;
  auto it = ba.terms().begin();
  for (const auto& [w, coeff] : ab.terms()) {
    if (it->first != w) return std::nullopt;
    const int shift = coeff.low_degree() - it->second.low_degree();
    if (c && *c != shift) return std::nullopt;
    if (it->second.shifted(shift) != coeff) return std::nullopt;
    c = shift;
    ++it;
  }
  return c;
}

bool QuantumMatrixAlgebra::verify_short_plucker(const IndexSubset& J, int a,
                                                int b, int c, int d) {
  if (J.n() != n_ || J.m() != m_ - 2) {
    throw BadConfiguration("J must have m - 2 elements of {1..n}");
  }
  for (int x : {a, b, c, d}) {
    if (x < 1 || x > n_ || J.contains(x)) {
      throw BadConfiguration("index " + std::to_string(x) +
                             " is out of range or lies in J");
    }
  }
  if (a > c) {
    std::swap(a, c);
    std::swap(b, d);
  }
  const bool first = a < b && b < c && c < d;
  const bool second = d < a && a < b && b < c;
  if (!first && !second) {
    throw BadConfiguration("indices are not cyclically ordered as a, b, c, d");
  }
  auto label = [&](int x, int y) {
    std::vector<int> els = J.elements();
    els.push_back(x);
    els.push_back(y);
    std::sort(els.begin(), els.end());
    return IndexSubset(std::move(els), n_);
  };
  const QMatrixElement& ac = minor_cached(label(a, c));
  const QMatrixElement& bd = minor_cached(label(b, d));
  const QMatrixElement& ab = minor_cached(label(a, b));
  const QMatrixElement& cd = minor_cached(label(c, d));
  const QMatrixElement& ad = minor_cached(label(a, d));
  const QMatrixElement& bc = minor_cached(label(b, c));
  const LaurentPolynomial q = LaurentPolynomial::monomial(1, 1);
  const LaurentPolynomial q_inv = LaurentPolynomial::monomial(1, -1);
  if (first) {
    return multiply(ac, bd) ==
           multiply(ab, cd).scaled(q_inv) + multiply(ad, bc).scaled(q);
  }
  return multiply(bd, ac) ==
         multiply(ad, bc).scaled(q_inv) + multiply(cd, ab).scaled(q);
}

LzReport QuantumMatrixAlgebra::verify_lz() {
  LzReport report;
  const std::vector<IndexSubset> subsets = all_subsets(GrassParams(m_, n_));
  for (std::size_t x = 0; x < subsets.size(); ++x) {
    for (std::size_t y = x + 1; y < subsets.size(); ++y) {
      const IndexSubset& I = subsets[x];
      const IndexSubset& J = subsets[y];
      ++report.pairs;
      const auto cls = classify_noncrossing(I, J);
      const std::optional<int> got =
          quasi_comm_exponent(minor_cached(I), minor_cached(J));
      if (got != cls.c) {
        report.violations.push_back({I, J, cls.c, got, "oracle"});
      }
      if (cls.c) {
        const int lambda = lambda_pair(I, J);
        if (lambda != *cls.c) {
          report.violations.push_back({I, J, cls.c, lambda, "lambda"});
        }
      }
    }
  }
  return report;
}

}  // namespace qgrass
