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

// Subset, partition and weak-separation combinatorics for Gr(m, n).

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace qgrass {

/// Minor size m and ambient size n, with 1 <= m < n.
class GrassParams {
 public:
  GrassParams(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  /// m(n - m) + 1, the size of a maximal weakly separated collection.
  std::size_t cluster_size() const;

  friend bool operator==(const GrassParams&, const GrassParams&) = default;

 private:
  int m_;
  int n_;
};

/// A strictly increasing subset of {1, ..., n}. The size m is implied.
class IndexSubset {
 public:
  IndexSubset(std::vector<int> elements, int n);

  const std::vector<int>& elements() const { return elements_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(elements_.size()); }
  bool contains(int a) const;

  /// Subset with every index shifted by `shift` modulo n (kept in 1..n).
  IndexSubset rotated(int shift) const;

  std::string to_string() const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
  friend auto operator<=>(const IndexSubset& a, const IndexSubset& b) {
    return a.elements_ <=> b.elements_;
  }

 private:
  std::vector<int> elements_;
  int n_;
};

std::ostream& operator<<(std::ostream& os, const IndexSubset& s);

/// All m-subsets of {1..n} in lexicographic order.
std::vector<IndexSubset> all_subsets(const GrassParams& params);

/// The m consecutive indices starting at `start`, read cyclically.
IndexSubset cyclic_interval(const GrassParams& params, int start);

struct NoncrossingClassification {
  struct Split {
    std::vector<int> lower;  // J' (case i) or I' (case ii)
    std::vector<int> upper;  // J'' (case i) or I'' (case ii)
  };

  bool crossing = false;
  std::optional<Split> case_i;   // splits J \ I around I \ J
  std::optional<Split> case_ii;  // splits I \ J around J \ I
  std::optional<int> c;
};

/// Decides whether I and J are weakly separated. Case (i) holds iff no
/// element of J \ I lies strictly between min(I \ J) and max(I \ J); case (ii)
/// symmetrically. Equal subsets satisfy both cases with c = 0.
NoncrossingClassification classify_noncrossing(const IndexSubset& I,
                                               const IndexSubset& J);

bool is_noncrossing(const IndexSubset& I, const IndexSubset& J);

/// Exponent in Delta_I Delta_J = q^c Delta_J Delta_I. Throws CrossingPair.
int c_exponent(const IndexSubset& I, const IndexSubset& J);

/// Weakly decreasing nonnegative parts; trailing zeros are dropped so that
/// (1, 0) and (1) compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Parts padded with zeros to `length` entries.
  std::vector<int> padded(std::size_t length) const;
  /// Part i (0-based), zero beyond the stored parts.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }
  int size() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// lambda_{m+1-k} = i_k - k for I = {i_1 < ... < i_m}.
Partition partition_from_subset(const IndexSubset& I);

/// Inverse of partition_from_subset. Throws BoxOverflow if p does not fit in
/// the m x (n - m) box.
IndexSubset subset_from_partition(const Partition& p,
                                  const GrassParams& params);

/// Largest number of boxes of diagram(outer) \ diagram(inner) lying on one
/// diagonal c - r = const.
int max_diag(const Partition& outer, const Partition& inner);

/// Pairwise non-crossing. Throws MixedParams on non-uniform (m, n).
bool is_ws_collection(std::span<const IndexSubset> labels);
/// Pairwise non-crossing with exactly m(n - m) + 1 distinct labels.
bool is_maximal(std::span<const IndexSubset> labels);

}  // namespace qgrass
