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

#include "qgrass/grassmannian.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "qgrass/errors.hpp"
#include "qgrass/json_io.hpp"

namespace qgrass {

std::vector<GridPosition> grid_layout(const GrassParams& params) {
  const int m = params.m();
  const int w = params.n() - m;
  std::vector<GridPosition> out;
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < w; ++j) out.push_back({i, j, false});

  std::vector<GridPosition> frozen;
  frozen.push_back({0, 0, true});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= w; ++j)
      if (i == m || j == w) frozen.push_back({i, j, false});
  // Order frozen positions by the start of their cyclic interval.
  auto start_of = [&](const GridPosition& p) {
    const IndexSubset s = grid_label(params, p);
    for (int start = 1; start <= params.n(); ++start)
      if (cyclic_interval(params, start) == s) return start;
    throw Error("frozen grid label " + s.to_string() +
                " is not a cyclic interval");
  };
  std::stable_sort(frozen.begin(), frozen.end(),
                   [&](const GridPosition& x, const GridPosition& y) {
                     return start_of(x) < start_of(y);
                   });
  out.insert(out.end(), frozen.begin(), frozen.end());
  return out;
}

IndexSubset grid_label(const GrassParams& params, const GridPosition& p) {
  if (p.base) return subset_from_partition(Partition{}, params);
  return subset_from_partition(Partition(std::vector<int>(p.i, p.j)), params);
}

IntMatrix L_from_labels(std::span<const IndexSubset> labels) {
  IntMatrix L(labels.size(), labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      L(i, j) = c_exponent(labels[i], labels[j]);
  return L;
}

QuantumSeed initial_seed(const GrassParams& params, bool track_variables) {
  const std::vector<GridPosition> layout = grid_layout(params);
  const int m = params.m();
  const int w = params.n() - m;
  const std::size_t total = layout.size();
  const std::size_t mutable_count =
      static_cast<std::size_t>((m - 1) * (w - 1));

  std::map<std::pair<int, int>, std::size_t> index;
  std::size_t base_index = 0;
  std::vector<Position> positions;
  std::vector<IndexSubset> labels;
  for (std::size_t k = 0; k < total; ++k) {
    const GridPosition& p = layout[k];
    if (p.base) {
      base_index = k;
    } else {
      index[{p.i, p.j}] = k;
    }
    labels.push_back(grid_label(params, p));
    positions.push_back(Position{labels.back(), k >= mutable_count});
  }

  IntMatrix b(total, mutable_count);
  auto add_arrow = [&](std::size_t from, std::size_t to) {
    if (to < mutable_count) b(from, to) -= 1;
    if (from < mutable_count) b(to, from) += 1;
  };
  auto cell = [&](int i, int j) -> std::optional<std::size_t> {
    auto it = index.find({i, j});
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& [ij, k] : index) {
    const auto [i, j] = ij;
    if (auto right = cell(i, j + 1)) add_arrow(*right, k);
    if (auto below = cell(i + 1, j)) add_arrow(*below, k);
    if (auto diag = cell(i + 1, j + 1)) add_arrow(k, *diag);
  }
  if (auto corner = cell(1, 1)) add_arrow(*corner, base_index);

  IntMatrix L = L_from_labels(labels);
  std::vector<VariablePtr> variables;
  if (track_variables) {
    auto ambient = std::make_shared<const IntMatrix>(L);
    for (std::size_t k = 0; k < total; ++k) {
      variables.push_back(std::make_shared<const TorusElement>(
          TorusElement::generator(ambient, k)));
    }
  }
  QuantumSeed seed(params, std::move(positions), ExchangeMatrix(std::move(b)),
                   std::move(L), std::move(variables));
  for (std::int64_t d : seed.degrees()) {
    if (d != 2) throw Error("rectangle seed has a compatibility degree != 2");
  }
  return seed;
}

std::optional<GeometricExchange> geometric_exchange(const QuantumSeed& seed,
                                                    std::size_t k) {
  if (k >= seed.mutable_count()) {
    throw FrozenIndex("position " + std::to_string(k + 1) + " is frozen");
  }
  const auto& pos = seed.positions();
  if (!pos[k].label) {
    throw NoLabel("position " + std::to_string(k + 1) + " has no label");
  }
  const IndexSubset& center = *pos[k].label;
  const int n = center.n();
  const int m = center.m();
  if (m < 2) return std::nullopt;

  const ExchangeExponents ex = exchange_exponents(seed.B(), k);
  auto side = [&](const Exponent& a) -> std::optional<std::vector<IndexSubset>> {
    std::vector<IndexSubset> out;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j == k || a[j] == 0) continue;
      if (a[j] != 1 || !pos[j].label) return std::nullopt;
      out.push_back(*pos[j].label);
    }
    if (out.size() != 2) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto plus = side(ex.plus);
  const auto minus = side(ex.minus);
  if (!plus || !minus) return std::nullopt;

  std::vector<int> common = center.elements();
  std::set<int> all(center.elements().begin(), center.elements().end());
  for (const auto* group : {&*plus, &*minus}) {
    for (const IndexSubset& s : *group) {
      std::vector<int> next;
      std::set_intersection(common.begin(), common.end(), s.elements().begin(),
                            s.elements().end(), std::back_inserter(next));
      common = std::move(next);
      all.insert(s.elements().begin(), s.elements().end());
    }
  }
  if (static_cast<int>(common.size()) != m - 2 ||
      all.size() != common.size() + 4) {
    return std::nullopt;
  }
  std::vector<int> ac, bd;
  for (int x : all) {
    if (std::binary_search(common.begin(), common.end(), x)) continue;
    (center.contains(x) ? ac : bd).push_back(x);
  }
  if (ac.size() != 2 || bd.size() != 2) return std::nullopt;
  const int a = ac[0];
  const int c = ac[1];
  const bool first_inside = a < bd[0] && bd[0] < c;
  const bool second_inside = a < bd[1] && bd[1] < c;
  if (first_inside == second_inside) return std::nullopt;
  const int b = first_inside ? bd[0] : bd[1];
  const int d = first_inside ? bd[1] : bd[0];

  auto with = [&](int x, int y) {
    std::vector<int> els = common;
    els.push_back(x);
    els.push_back(y);
    std::sort(els.begin(), els.end());
    return IndexSubset(std::move(els), n);
  };
  std::vector<IndexSubset> outer_pair{with(a, b), with(c, d)};
  std::vector<IndexSubset> side_pair{with(a, d), with(b, c)};
  std::sort(outer_pair.begin(), outer_pair.end());
  std::sort(side_pair.begin(), side_pair.end());
  const bool matches = (*plus == outer_pair && *minus == side_pair) ||
                       (*plus == side_pair && *minus == outer_pair);
  if (!matches) return std::nullopt;
  return GeometricExchange{IndexSubset(common, n), a, b, c, d, center,
                           with(b, d)};
}

std::optional<IndexSubset> relabel_after_exchange(const QuantumSeed& seed,
                                                  std::size_t k) {
  auto ex = geometric_exchange(seed, k);
  if (!ex) return std::nullopt;
  return ex->new_label;
}

namespace {

// With tracked variables every position is keyed by its expansion, so a
// minor reached without its label still identifies the same seed.
std::vector<std::string> seed_key(const QuantumSeed& seed) {
  std::vector<std::string> key;
  key.reserve(seed.size());
  for (std::size_t i = 0; i < seed.size(); ++i) {
    const auto& label = seed.positions()[i].label;
    if (seed.tracks_variables()) {
      key.push_back(to_json(seed.variable(i)).dump());
    } else if (label) {
      key.push_back(label->to_string());
    } else {
      key.push_back("position:" + std::to_string(i));
    }
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

ExchangeGraphSummary explore_exchange_graph(const GrassParams& params,
                                            std::size_t max_seeds,
                                            int max_depth,
                                            bool geometric_only) {
  if (max_seeds == 0 || max_depth < 0) {
    throw InvalidParams("exploration bounds must be positive");
  }
  ExchangeGraphSummary summary;
  std::set<std::vector<std::string>> seen;
  std::set<IndexSubset> labels;
  std::deque<std::pair<QuantumSeed, int>> frontier;

  auto record = [&](const QuantumSeed& s) {
    for (std::size_t i = 0; i < s.mutable_count(); ++i)
      if (s.positions()[i].label) labels.insert(*s.positions()[i].label);
  };

  QuantumSeed start = initial_seed(params, !geometric_only);
  seen.insert(seed_key(start));
  record(start);
  frontier.emplace_back(std::move(start), 0);

  while (!frontier.empty()) {
    auto [seed, depth] = std::move(frontier.front());
    frontier.pop_front();
    summary.depth = std::max(summary.depth, depth);
    for (std::size_t k = 0; k < seed.mutable_count(); ++k) {
      if (geometric_only && (!seed.positions()[k].label ||
                             !geometric_exchange(seed, k))) {
        continue;
      }
      QuantumSeed next = mutate_seed(seed, k);
      auto key = seed_key(next);
      if (seen.count(key)) continue;
      if (depth >= max_depth || seen.size() >= max_seeds) {
        summary.truncated = true;
        continue;
      }
      seen.insert(std::move(key));
      record(next);
      frontier.emplace_back(std::move(next), depth + 1);
    }
  }
  summary.seeds = seen.size();
  summary.labels.assign(labels.begin(), labels.end());
  return summary;
}

Rational classical_plucker_eval(const RationalMatrix& matrix,
                                const IndexSubset& I) {
  const std::size_t m = matrix.size();
  if (static_cast<std::size_t>(I.m()) != m) {
    throw SizeMismatch("label size must equal the number of matrix rows");
  }
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
  for (std::size_t r = 0; r < m; ++r) {
    if (matrix[r].size() < static_cast<std::size_t>(I.n())) {
      throw DimMismatch("matrix has fewer than n columns");
    }
    for (std::size_t c = 0; c < m; ++c) a[r][c] = matrix[r][I.elements()[c] - 1];
  }
  Rational det = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t pivot = c;
    while (pivot < m && a[pivot][c] == 0) ++pivot;
    if (pivot == m) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < m; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < m; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

std::vector<Rational> minor_values(const RationalMatrix& matrix,
                                   std::span<const IndexSubset> labels) {
  std::vector<Rational> out;
  out.reserve(labels.size());
  for (const IndexSubset& I : labels) {
    out.push_back(classical_plucker_eval(matrix, I));
  }
  return out;
}

}  // namespace qgrass
