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

#include "qgrass/rank_one.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "qgrass/errors.hpp"

namespace qgrass {

namespace {

void require_same_size(const IndexSubset& I, const IndexSubset& J) {
  if (I.m() != J.m() || I.n() != J.n()) {
    throw SizeMismatch("rank-one modules " + I.to_string() + " and " +
                       J.to_string() + " have different (m, n)");
  }
}

// Rank over Q of a dense integer matrix, by fraction-free elimination.
std::size_t rank(std::vector<std::vector<Integer>> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Integer a = rows[r][c];
      const Integer b = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        rows[i][j] = rows[i][j] * a - rows[r][j] * b;
      }
      Integer g = 0;
      for (std::size_t j = c; j < cols; ++j) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rows[i][j].get_mpz_t());
      }
      if (g > 1)
        for (std::size_t j = c; j < cols; ++j) rows[i][j] /= g;
    }
    ++r;
  }
  return r;
}

// Reduced row echelon basis of the null space of `rows` (cols unknowns),
// over Q. Each basis vector is returned with rational entries.
std::vector<std::vector<Rational>> null_space(
    std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v[pivot_cols[i]] = -rows[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

ExponentVector min_exponent_vector(const IndexSubset& I,
                                   const IndexSubset& J) {
  require_same_size(I, J);
  const int n = I.n();
  std::vector<int> values(n, 0);
  int current = 0;
  for (int a = 1; a < n; ++a) {
    const bool in_i = I.contains(a);
    const bool in_j = J.contains(a);
    if (in_i && !in_j) ++current;
    if (in_j && !in_i) --current;
    values[a] = current;
  }
  const int low = *std::min_element(values.begin(), values.end());
  for (int& v : values) v -= low;
  return ExponentVector{std::move(values)};
}

int kappa(const IndexSubset& I, const IndexSubset& J) {
  return min_exponent_vector(I, J).at(0);
}

int lambda_pair(const IndexSubset& I, const IndexSubset& J) {
  return kappa(J, I) - kappa(I, J);
}

IntMatrix lambda_matrix(std::span<const IndexSubset> labels) {
  IntMatrix out(labels.size(), labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      out(i, j) = lambda_pair(labels[i], labels[j]);
  return out;
}

int kappa_truncated_oracle(const IndexSubset& I, const IndexSubset& J,
                           int truncation) {
  require_same_size(I, J);
  const int n = I.n();
  const int D = truncation;
  if (D <= n) {
    throw TruncationTooSmall("truncation order " + std::to_string(D) +
                             " must exceed n = " + std::to_string(n));
  }
  // Unknown f_v in k[t]/(t^D) at each vertex v, coefficient d of t^d at
  // column v * D + d.
  const std::size_t cols = static_cast<std::size_t>(n) * D;
  auto col = [D](int vertex, int degree) {
    return static_cast<std::size_t>(vertex) * D + degree;
  };
  std::vector<std::vector<Rational>> rows;
  // Adds the coefficient equations of t^s f_u = t^r f_w.
  auto add_square = [&](int u, int s, int w, int r) {
    for (int d = 0; d < D; ++d) {
      std::vector<Rational> row(cols, 0);
      if (d - s >= 0) row[col(u, d - s)] += 1;
      if (d - r >= 0) row[col(w, d - r)] -= 1;
      if (std::any_of(row.begin(), row.end(),
                      [](const Rational& x) { return x != 0; })) {
        rows.push_back(std::move(row));
      }
    }
  };
  for (int a = 1; a <= n; ++a) {
    const int tail = a - 1;
    const int head = a % n;
    const bool in_i = I.contains(a);
    const bool in_j = J.contains(a);
    // x_a : tail -> head acts by 1 on a in-label edge and by t otherwise.
    add_square(head, in_i ? 0 : 1, tail, in_j ? 0 : 1);
    // y_a : head -> tail acts by t on an in-label edge and by 1 otherwise.
    add_square(tail, in_i ? 1 : 0, head, in_j ? 1 : 0);
  }

  const auto homs = null_space(std::move(rows), cols);
  std::vector<std::vector<Integer>> restricted;
  restricted.reserve(homs.size());
  for (const auto& h : homs) {
    Integer lcm = 1;
    for (int d = 0; d < D; ++d) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              h[col(0, d)].get_den_mpz_t());
    }
    std::vector<Integer> row(D);
    for (int d = 0; d < D; ++d) {
      const Rational scaled = h[col(0, d)] * lcm;
      row[d] = scaled.get_num();
    }
    restricted.push_back(std::move(row));
  }
  return D - static_cast<int>(rank(std::move(restricted), D));
}

}  // namespace qgrass
