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

// Compatible pairs (B, L), their mutation, and quantum seeds whose cluster
// variables are tracked as elements of the initial based quantum torus.
//
// Indices are 0-based throughout the C++ API; positions
// [0, mutable_count()) are mutable and the rest frozen.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qgrass/combinatorics.hpp"
#include "qgrass/numeric.hpp"
#include "qgrass/torus.hpp"

namespace qgrass {

/// N_total x N_mut integer matrix whose principal N_mut x N_mut block is
/// skew-symmetric.
class ExchangeMatrix {
 public:
  ExchangeMatrix(IntMatrix entries);  // NOLINT(google-explicit-constructor)

  const IntMatrix& matrix() const { return entries_; }
  std::size_t total() const { return entries_.rows(); }
  std::size_t mutable_count() const { return entries_.cols(); }
  std::int64_t operator()(std::size_t i, std::size_t k) const {
    return entries_(i, k);
  }

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) =
      default;

 private:
  IntMatrix entries_;
};

/// Returns d with sum_j b_jk lambda_jl = delta_kl d_k, every d_k > 0.
/// Throws NotCompatible naming the first failing (k, l).
std::vector<std::int64_t> check_compatible(const ExchangeMatrix& B,
                                           const IntMatrix& L);

/// e_ij = delta_ij (j != k), e_kk = -1, e_ik = max(0, b_ik) (i != k).
IntMatrix e_matrix(const ExchangeMatrix& B, std::size_t k);
/// f_ij = delta_ij (i != k), f_kk = -1, f_kj = max(0, -b_kj) (j != k).
IntMatrix f_matrix(const ExchangeMatrix& B, std::size_t k);

struct CompatiblePair {
  ExchangeMatrix B;
  IntMatrix L;
};

/// mu_k(B, L) = (E B F, E^t L E).
CompatiblePair mutate_BL(const ExchangeMatrix& B, const IntMatrix& L,
                         std::size_t k);

/// Exponents of the two based monomials in X_k^* = X^{a'} + X^{a''}.
struct ExchangeExponents {
  Exponent plus;   // a'_j = max(0, b_jk)
  Exponent minus;  // a''_j = max(0, -b_jk)
};
ExchangeExponents exchange_exponents(const ExchangeMatrix& B, std::size_t k);

struct Position {
  std::optional<IndexSubset> label;
  bool frozen = false;

  friend bool operator==(const Position&, const Position&) = default;
};

using VariablePtr = std::shared_ptr<const TorusElement>;

class QuantumSeed {
 public:
  /// Validates shapes, frozen layout and compatibility. `variables` may be
  /// empty, in which case mutation only updates (B, L) and labels.
  QuantumSeed(GrassParams params, std::vector<Position> positions,
              ExchangeMatrix B, IntMatrix L, std::vector<VariablePtr> variables,
              std::vector<std::size_t> history = {});

  const GrassParams& params() const { return params_; }
  const std::vector<Position>& positions() const { return positions_; }
  const ExchangeMatrix& B() const { return B_; }
  const IntMatrix& L() const { return L_; }
  const std::vector<VariablePtr>& variables() const { return variables_; }
  const TorusElement& variable(std::size_t i) const;
  const std::vector<std::size_t>& history() const { return history_; }
  /// d_k of the compatible pair, fixed at construction.
  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  std::size_t size() const { return positions_.size(); }
  std::size_t mutable_count() const { return B_.mutable_count(); }
  bool tracks_variables() const { return !variables_.empty(); }
  bool fully_labeled() const;
  /// Labels of all positions; throws NoLabel if some position is unlabeled.
  std::vector<IndexSubset> labels() const;

  /// Same (B, L), positions and variable expansions; history ignored.
  bool same_state(const QuantumSeed& other) const;
  friend bool operator==(const QuantumSeed& a, const QuantumSeed& b) {
    return a.same_state(b) && a.history_ == b.history_;
  }

 private:
  friend QuantumSeed mutate_seed(const QuantumSeed& seed, std::size_t k);

  GrassParams params_;
  std::vector<Position> positions_;
  ExchangeMatrix B_;
  IntMatrix L_;
  std::vector<VariablePtr> variables_;
  std::vector<std::size_t> history_;
  std::vector<std::int64_t> degrees_;
  // Label at history().back() before the last mutation; not part of the
  // state compared by same_state.
  std::optional<IndexSubset> replaced_label_;
};

/// Mutation in direction k: mutates (B, L), computes the new cluster
/// variable in the initial torus by exact right division, and relabels the
/// position when the exchange is geometric. Mutating again in the direction
/// just mutated restores the previous label even for non-geometric
/// exchanges; other non-geometric exchanges clear the label. Throws
/// FrozenIndex for frozen k and LaurentViolation if the new variable is not
/// an integer Laurent polynomial.
QuantumSeed mutate_seed(const QuantumSeed& seed, std::size_t k);

/// Arrows (from, to) of the quiver encoded by B, with multiplicity; arrows
/// between two frozen positions are not represented.
std::vector<std::pair<std::size_t, std::size_t>> quiver_arrows(
    const ExchangeMatrix& B);

/// True if variables i and j satisfy P_i P_j = q^{lambda_ij} P_j P_i.
bool variables_quasi_commute(const QuantumSeed& seed, std::size_t i,
                             std::size_t j);

}  // namespace qgrass
