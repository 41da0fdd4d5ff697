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

// Rectangle seeds for Gr(m, n), geometric exchanges and exchange graph
// exploration.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qgrass/combinatorics.hpp"
#include "qgrass/numeric.hpp"
#include "qgrass/seed.hpp"

namespace qgrass {

/// Cell (i, j) of the m x (n - m) grid, or the base position.
struct GridPosition {
  int i = 0;
  int j = 0;
  bool base = false;

  friend bool operator==(const GridPosition&, const GridPosition&) = default;
};

/// Positions of the rectangle seed in seed order: mutable cells row-major,
/// then the base {1..m}, then the frozen cells ordered by the start of
/// their cyclic interval.
std::vector<GridPosition> grid_layout(const GrassParams& params);

/// Label of a grid position: the rectangle partition with i parts equal to
/// j, or {1..m} for the base.
IndexSubset grid_label(const GrassParams& params, const GridPosition& p);

/// Rectangle seed. Arrows (i,j+1)->(i,j), (i+1,j)->(i,j), (i,j)->(i+1,j+1)
/// and (1,1)->base, skipping arrows between frozen positions. Throws
/// InvalidParams unless 1 <= m < n; throws Error if the pair is not
/// compatible with all d_k = 2.
QuantumSeed initial_seed(const GrassParams& params,
                         bool track_variables = true);

/// lambda_ij = c(I_i, I_j). Throws CrossingPair.
IntMatrix L_from_labels(std::span<const IndexSubset> labels);

/// Local data of a geometric exchange Jac -> Jbd.
struct GeometricExchange {
  IndexSubset common;  // J
  int a, b, c, d;      // cyclically ordered, a < c
  IndexSubset old_label;
  IndexSubset new_label;
};

/// Recognizes the exchange pattern {Jab, Jcd} / {Jad, Jbc} around Jac at
/// mutable position k. Throws NoLabel if position k is unlabeled.
std::optional<GeometricExchange> geometric_exchange(const QuantumSeed& seed,
                                                    std::size_t k);

/// New label Jbd when the exchange at k is geometric, otherwise nothing.
std::optional<IndexSubset> relabel_after_exchange(const QuantumSeed& seed,
                                                  std::size_t k);

struct ExchangeGraphSummary {
  std::size_t seeds = 0;
  std::vector<IndexSubset> labels;  // distinct labels at mutable positions
  int depth = 0;
  bool truncated = false;
};

/// Breadth-first exploration from the rectangle seed. With geometric_only
/// seeds are identified by their label set; otherwise variables are tracked
/// and seeds are identified by the set of variable expansions.
ExchangeGraphSummary explore_exchange_graph(const GrassParams& params,
                                            std::size_t max_seeds,
                                            int max_depth,
                                            bool geometric_only);

/// Rational m x n matrix, row-major rows.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Determinant of the columns I of an m x n matrix.
Rational classical_plucker_eval(const RationalMatrix& matrix,
                                const IndexSubset& I);

/// Classical minors of `matrix` for every label, in order.
std::vector<Rational> minor_values(const RationalMatrix& matrix,
                                   std::span<const IndexSubset> labels);

}  // namespace qgrass
