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

#include "qgrass/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qgrass/errors.hpp"

namespace qgrass {

GrassParams::GrassParams(int m, int n) : m_(m), n_(n) {
  if (m < 1 || m >= n) {
    throw InvalidParams("need 1 <= m < n, got m=" + std::to_string(m) +
                        " n=" + std::to_string(n));
  }
}

std::size_t GrassParams::cluster_size() const {
  return static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_ - m_) + 1;
}

IndexSubset::IndexSubset(std::vector<int> elements, int n)
    : elements_(std::move(elements)), n_(n) {
  if (n < 1) throw InvalidSubset("ambient size must be positive");
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] < 1 || elements_[k] > n) {
      throw InvalidSubset("index " + std::to_string(elements_[k]) +
                          " outside [1, " + std::to_string(n) + "]");
    }
    if (k > 0 && elements_[k - 1] >= elements_[k]) {
      throw InvalidSubset("subset must be strictly increasing: " +
                          to_string());
    }
  }
}

bool IndexSubset::contains(int a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

IndexSubset IndexSubset::rotated(int shift) const {
  std::vector<int> out;
  out.reserve(elements_.size());
  for (int a : elements_) out.push_back(((a - 1 + shift) % n_ + n_) % n_ + 1);
  std::sort(out.begin(), out.end());
  return IndexSubset(std::move(out), n_);
}

std::string IndexSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (k) os << ',';
    os << elements_[k];
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IndexSubset& s) {
  return os << s.to_string();
}

std::vector<IndexSubset> all_subsets(const GrassParams& params) {
  const int m = params.m();
  const int n = params.n();
  std::vector<IndexSubset> out;
  std::vector<int> cur(m);
  for (int k = 0; k < m; ++k) cur[k] = k + 1;
  while (true) {
    out.emplace_back(cur, n);
    int k = m - 1;
    while (k >= 0 && cur[k] == n - m + k + 1) --k;
    if (k < 0) break;
    ++cur[k];
    for (int r = k + 1; r < m; ++r) cur[r] = cur[r - 1] + 1;
  }
  return out;
}

IndexSubset cyclic_interval(const GrassParams& params, int start) {
  std::vector<int> els;
  for (int k = 0; k < params.m(); ++k)
    els.push_back((start - 1 + k) % params.n() + 1);
  std::sort(els.begin(), els.end());
  return IndexSubset(std::move(els), params.n());
}

namespace {

void require_same_params(const IndexSubset& I, const IndexSubset& J) {
  if (I.n() != J.n() || I.m() != J.m()) {
    throw MixedParams("subsets " + I.to_string() + " and " + J.to_string() +
                      " belong to different Grassmannians");
  }
}

std::vector<int> difference(const IndexSubset& a, const IndexSubset& b) {
  std::vector<int> out;
  std::set_difference(a.elements().begin(), a.elements().end(),
                      b.elements().begin(), b.elements().end(),
                      std::back_inserter(out));
  return out;
}

// Splits `outer` around the span of `inner`, or nothing if some element of
// `outer` falls strictly inside that span.
std::optional<NoncrossingClassification::Split> split_around(
    const std::vector<int>& outer, const std::vector<int>& inner) {
  NoncrossingClassification::Split split;
  if (inner.empty()) {
    split.lower = outer;
    return split;
  }
  const int lo = inner.front();
  const int hi = inner.back();
  for (int a : outer) {
    if (a < lo) {
      split.lower.push_back(a);
    } else if (a > hi) {
      split.upper.push_back(a);
    } else {
      return std::nullopt;
    }
  }
  return split;
}

}  // namespace

NoncrossingClassification classify_noncrossing(const IndexSubset& I,
                                               const IndexSubset& J) {
  require_same_params(I, J);
  const std::vector<int> i_minus_j = difference(I, J);
  const std::vector<int> j_minus_i = difference(J, I);

  NoncrossingClassification out;
  out.case_i = split_around(j_minus_i, i_minus_j);
  out.case_ii = split_around(i_minus_j, j_minus_i);
  out.crossing = !out.case_i && !out.case_ii;
  if (out.case_i) {
    out.c = static_cast<int>(out.case_i->upper.size()) -
            static_cast<int>(out.case_i->lower.size());
  } else if (out.case_ii) {
    out.c = static_cast<int>(out.case_ii->lower.size()) -
            static_cast<int>(out.case_ii->upper.size());
  }
  return out;
}

bool is_noncrossing(const IndexSubset& I, const IndexSubset& J) {
  return !classify_noncrossing(I, J).crossing;
}

int c_exponent(const IndexSubset& I, const IndexSubset& J) {
  const auto cls = classify_noncrossing(I, J);
  if (cls.crossing) {
    throw CrossingPair(I.to_string() + " and " + J.to_string() + " cross");
  }
  return *cls.c;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidParams("negative partition part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidParams("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

std::vector<int> Partition::padded(std::size_t length) const {
  std::vector<int> out = parts_;
  if (out.size() < length) out.resize(length, 0);
  return out;
}

int Partition::size() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  return os << ')';
}

Partition partition_from_subset(const IndexSubset& I) {
  const int m = I.m();
  std::vector<int> parts(m);
  for (int k = 1; k <= m; ++k) parts[m - k] = I.elements()[k - 1] - k;
  return Partition(std::move(parts));
}

IndexSubset subset_from_partition(const Partition& p,
                                  const GrassParams& params) {
  const int m = params.m();
  if (p.parts().size() > static_cast<std::size_t>(m) ||
      (!p.empty() && p.parts().front() > params.n() - m)) {
    std::ostringstream os;
    os << "partition " << p << " does not fit in the " << m << "x"
       << params.n() - m << " box";
    throw BoxOverflow(os.str());
  }
  std::vector<int> els(m);
  for (int k = 1; k <= m; ++k) els[k - 1] = p.part(m - k) + k;
  return IndexSubset(std::move(els), params.n());
}

int max_diag(const Partition& outer, const Partition& inner) {
  std::map<int, int> per_diagonal;
  for (std::size_t r = 0; r < outer.parts().size(); ++r) {
    for (int c = inner.part(r); c < outer.part(r); ++c) {
      ++per_diagonal[c - static_cast<int>(r)];
    }
  }
  int best = 0;
  for (const auto& [d, count] : per_diagonal) best = std::max(best, count);
  return best;
}

bool is_ws_collection(std::span<const IndexSubset> labels) {
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      require_same_params(labels[a], labels[b]);
      if (!is_noncrossing(labels[a], labels[b])) return false;
    }
  }
  return true;
}

bool is_maximal(std::span<const IndexSubset> labels) {
  if (labels.empty()) return false;
  if (!is_ws_collection(labels)) return false;
  std::vector<IndexSubset> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  const GrassParams params(labels.front().m(), labels.front().n());
  return sorted.size() == params.cluster_size();
}

}  // namespace qgrass
