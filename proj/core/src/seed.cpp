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

#include "qgrass/seed.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "qgrass/errors.hpp"
#include "qgrass/grassmannian.hpp"

namespace qgrass {

namespace {

void require_mutable(const ExchangeMatrix& B, std::size_t k) {
  if (k >= B.total()) {
    throw IndexOutOfRange("position " + std::to_string(k + 1) +
                          " out of range");
  }
  if (k >= B.mutable_count()) {
    throw FrozenIndex("position " + std::to_string(k + 1) + " is frozen");
  }
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(IntMatrix entries)
    : entries_(std::move(entries)) {
  const std::size_t m = entries_.cols();
  if (m > entries_.rows()) {
    throw InvalidMatrix("exchange matrix has more columns than rows");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (entries_(i, j) != -entries_(j, i)) {
        throw InvalidMatrix("principal part of B is not skew-symmetric");
      }
    }
  }
}

std::vector<std::int64_t> check_compatible(const ExchangeMatrix& B,
                                           const IntMatrix& L) {
  if (L.rows() != B.total() || L.cols() != B.total()) {
    throw DimMismatch("L must be square of the same size as B's row count");
  }
  if (!L.is_skew_symmetric()) throw InvalidMatrix("L is not skew-symmetric");
  const IntMatrix product = B.matrix().transpose() * L;
  std::vector<std::int64_t> d(B.mutable_count());
  for (std::size_t k = 0; k < product.rows(); ++k) {
    for (std::size_t l = 0; l < product.cols(); ++l) {
      const std::int64_t v = product(k, l);
      const bool ok = (k == l) ? v > 0 : v == 0;
      if (!ok) {
        std::ostringstream os;
        os << "(B^t L)[" << k + 1 << "][" << l + 1 << "] = " << v
           << (k == l ? ", expected a positive value" : ", expected 0");
        throw NotCompatible(k, l, os.str());
      }
    }
    d[k] = product(k, k);
  }
  return d;
}

IntMatrix e_matrix(const ExchangeMatrix& B, std::size_t k) {
  require_mutable(B, k);
  IntMatrix E = IntMatrix::identity(B.total());
  for (std::size_t i = 0; i < B.total(); ++i) {
    E(i, k) = i == k ? -1 : std::max<std::int64_t>(0, B(i, k));
  }
  return E;
}

IntMatrix f_matrix(const ExchangeMatrix& B, std::size_t k) {
  require_mutable(B, k);
  IntMatrix F = IntMatrix::identity(B.mutable_count());
  for (std::size_t j = 0; j < B.mutable_count(); ++j) {
    F(k, j) = j == k ? -1 : std::max<std::int64_t>(0, -B(k, j));
  }
  return F;
}

CompatiblePair mutate_BL(const ExchangeMatrix& B, const IntMatrix& L,
                         std::size_t k) {
  const IntMatrix E = e_matrix(B, k);
  const IntMatrix F = f_matrix(B, k);
  const IntMatrix Et = E.transpose();
  // B' = E B F; the transpose only enters the L update.
  return CompatiblePair{ExchangeMatrix(E * B.matrix() * F), Et * L * E};
}

ExchangeExponents exchange_exponents(const ExchangeMatrix& B, std::size_t k) {
  require_mutable(B, k);
  ExchangeExponents out{Exponent(B.total(), 0), Exponent(B.total(), 0)};
  for (std::size_t j = 0; j < B.total(); ++j) {
    if (j == k) {
      out.plus[j] = -1;
      out.minus[j] = -1;
    } else {
      out.plus[j] = static_cast<int>(std::max<std::int64_t>(0, B(j, k)));
      out.minus[j] = static_cast<int>(std::max<std::int64_t>(0, -B(j, k)));
    }
  }
  return out;
}

QuantumSeed::QuantumSeed(GrassParams params, std::vector<Position> positions,
                         ExchangeMatrix B, IntMatrix L,
                         std::vector<VariablePtr> variables,
                         std::vector<std::size_t> history)
    : params_(params),
      positions_(std::move(positions)),
      B_(std::move(B)),
      L_(std::move(L)),
      variables_(std::move(variables)),
      history_(std::move(history)) {
  if (positions_.size() != B_.total()) {
    throw DimMismatch("one position per row of B required");
  }
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i].frozen != (i >= B_.mutable_count())) {
      throw InvalidParams("frozen positions must be exactly the last " +
                          std::to_string(B_.total() - B_.mutable_count()));
    }
  }
  if (!variables_.empty()) {
    if (variables_.size() != positions_.size()) {
      throw DimMismatch("one variable per position required");
    }
    for (const auto& v : variables_) {
      if (!v || v->dim() != positions_.size()) {
        throw DimMismatch("variables must live in a torus of rank N");
      }
    }
  }
  degrees_ = check_compatible(B_, L_);
}

const TorusElement& QuantumSeed::variable(std::size_t i) const {
  if (variables_.empty()) throw Error("seed does not track variables");
  return *variables_.at(i);
}

bool QuantumSeed::fully_labeled() const {
  return std::all_of(positions_.begin(), positions_.end(),
                     [](const Position& p) { return p.label.has_value(); });
}

std::vector<IndexSubset> QuantumSeed::labels() const {
  std::vector<IndexSubset> out;
  out.reserve(positions_.size());
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (!positions_[i].label) {
      throw NoLabel("position " + std::to_string(i + 1) + " has no label");
    }
    out.push_back(*positions_[i].label);
  }
  return out;
}

bool QuantumSeed::same_state(const QuantumSeed& other) const {
  if (!(params_ == other.params_) || positions_ != other.positions_ ||
      !(B_ == other.B_) || !(L_ == other.L_) ||
      variables_.size() != other.variables_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] != other.variables_[i] &&
        !(*variables_[i] == *other.variables_[i])) {
      return false;
    }
  }
  return true;
}

namespace {

// Expansion in the initial torus of the based monomial X^a X_k of the
// current cluster, where a is an exchange exponent (a_k = -1, a_j >= 0).
TorusElement exchange_term_times_xk(const QuantumSeed& seed,
                                    const Exponent& a, std::size_t k) {
  const IntMatrix& L = seed.L();
  Exponent unit(a.size(), 0);
  unit[k] = 1;
  // X^a X_k = q^s X^c with c = a + e_k >= 0, and X^c = q^{gamma(c)} times
  // the ordered product of current variables.
  const MonomialProduct prod = mul_monomials(a, unit, L);
  const Exponent& c = prod.exponent;
  const HalfInt scalar = prod.q_exponent + gamma(c, L);

  const auto& ambient = seed.variable(0).ambient();
  TorusElement acc =
      TorusElement::monomial(ambient, Exponent(a.size(), 0),
                             QCoefficient::q_power(scalar));
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (int p = 0; p < c[i]; ++p) acc = torus_mul(acc, seed.variable(i));
  }
  return acc;
}

}  // namespace

QuantumSeed mutate_seed(const QuantumSeed& seed, std::size_t k) {
  require_mutable(seed.B(), k);

  std::optional<IndexSubset> new_label;
  if (seed.positions()[k].label) new_label = relabel_after_exchange(seed, k);
  // Undoing the previous mutation brings back the previous variable, so its
  // label is known even when the exchange pattern is not geometric.
  if (!new_label && !seed.history().empty() && seed.history().back() == k) {
    new_label = seed.replaced_label_;
  }

  CompatiblePair mutated = mutate_BL(seed.B(), seed.L(), k);

  std::vector<VariablePtr> variables = seed.variables();
  if (seed.tracks_variables()) {
    const ExchangeExponents ex = exchange_exponents(seed.B(), k);
    const TorusElement numerator = exchange_term_times_xk(seed, ex.plus, k) +
                                   exchange_term_times_xk(seed, ex.minus, k);
    TorusElement fresh(numerator.ambient());
    try {
      fresh = right_divide(numerator, seed.variable(k));
    } catch (const NotDivisible& e) {
      throw LaurentViolation("exchange at position " + std::to_string(k + 1) +
                             " is not divisible: " + e.what());
    }
    if (!fresh.is_laurent()) {
      throw LaurentViolation("exchange at position " + std::to_string(k + 1) +
                             " produced a non-Laurent coefficient");
    }
    variables[k] = std::make_shared<const TorusElement>(std::move(fresh));
  }

  std::vector<Position> positions = seed.positions();
  positions[k].label = std::move(new_label);
  std::vector<std::size_t> history = seed.history();
  history.push_back(k);

  QuantumSeed out(seed.params(), std::move(positions), std::move(mutated.B),
                  std::move(mutated.L), std::move(variables),
                  std::move(history));
  out.replaced_label_ = seed.positions()[k].label;
  if (out.degrees() != seed.degrees()) {
    throw Error("mutation changed the compatibility degrees");
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> quiver_arrows(
    const ExchangeMatrix& B) {
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t k = 0; k < B.mutable_count(); ++k) {
    for (std::size_t j = 0; j < B.total(); ++j) {
      const std::int64_t b = B(j, k);
      // Arrows among mutable positions are read from the column of their
      // source only, so each is listed once.
      if (b > 0) {
        for (std::int64_t r = 0; r < b; ++r) arrows.emplace_back(k, j);
      } else if (b < 0 && j >= B.mutable_count()) {
        for (std::int64_t r = 0; r < -b; ++r) arrows.emplace_back(j, k);
      }
    }
  }
  return arrows;
}

bool variables_quasi_commute(const QuantumSeed& seed, std::size_t i,
                             std::size_t j) {
  const TorusElement& a = seed.variable(i);
  const TorusElement& b = seed.variable(j);
  const HalfInt lambda{2 * seed.L()(i, j)};
  return torus_mul(a, b) ==
         torus_mul(b, a).scaled(QCoefficient::q_power(lambda));
}

}  // namespace qgrass
