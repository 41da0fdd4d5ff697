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

#include "qgrass/torus.hpp"

#include <algorithm>
#include <string>

#include "qgrass/errors.hpp"

namespace qgrass {

namespace {

void require_dim(std::span<const int> a, const IntMatrix& L) {
  if (a.size() != L.rows()) {
    throw DimMismatch("exponent of length " + std::to_string(a.size()) +
                      " in a torus of rank " + std::to_string(L.rows()));
  }
}

void require_same_ambient(const TorusElement& a, const TorusElement& b) {
  if (a.ambient() != b.ambient() && !(*a.ambient() == *b.ambient())) {
    throw AmbientMismatch("torus elements over different L matrices");
  }
}

Rational power(const Rational& base, int exponent) {
  Rational out = 1;
  Rational b = exponent >= 0 ? base : 1 / base;
  for (int k = 0; k < std::abs(exponent); ++k) out *= b;
  return out;
}

}  // namespace

HalfInt gamma(std::span<const int> a, const IntMatrix& L) {
  require_dim(a, L);
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < i; ++j) {
      twice += static_cast<std::int64_t>(a[i]) * a[j] * L(i, j);
    }
  }
  return HalfInt{twice};
}

MonomialProduct mul_monomials(std::span<const int> a, std::span<const int> b,
                              const IntMatrix& L) {
  require_dim(a, L);
  require_dim(b, L);
  std::int64_t twice = 0;
  Exponent sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum[i] = a[i] + b[i];
    for (std::size_t j = 0; j < i; ++j) {
      const std::int64_t w =
          static_cast<std::int64_t>(a[i]) * b[j] -
          static_cast<std::int64_t>(b[i]) * a[j];
      if (w != 0) twice += w * L(i, j);
    }
  }
  return MonomialProduct{HalfInt{twice}, std::move(sum)};
}

TorusElement::TorusElement(LambdaPtr ambient) : ambient_(std::move(ambient)) {
  if (!ambient_ || !ambient_->is_skew_symmetric()) {
    throw InvalidMatrix("torus ambient L must be skew-symmetric");
  }
}

TorusElement TorusElement::monomial(LambdaPtr ambient, Exponent a,
                                    QCoefficient coeff) {
  TorusElement out(std::move(ambient));
  require_dim(a, *out.ambient_);
  out.add_term(a, coeff);
  return out;
}

TorusElement TorusElement::generator(LambdaPtr ambient, std::size_t i) {
  Exponent a(ambient->rows(), 0);
  a.at(i) = 1;
  return monomial(std::move(ambient), std::move(a));
}

void TorusElement::add_term(const Exponent& a, const QCoefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement TorusElement::scaled(const QCoefficient& c) const {
  TorusElement out(ambient_);
  if (c.is_zero()) return out;
  for (const auto& [a, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), a, coeff * c);
  return out;
}

bool TorusElement::is_laurent() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_laurent(); });
}

QCoefficient TorusElement::ordered_coefficient(const Exponent& a) const {
  auto it = terms_.find(a);
  if (it == terms_.end()) return {};
  return it->second * QCoefficient::q_power(gamma(a, *ambient_));
}

TorusElement operator+(const TorusElement& a, const TorusElement& b) {
  require_same_ambient(a, b);
  TorusElement out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

TorusElement operator-(const TorusElement& a, const TorusElement& b) {
  return a + b.scaled(-1);
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  if (a.ambient_ != b.ambient_ && !(*a.ambient_ == *b.ambient_)) return false;
  return a.terms_ == b.terms_;
}

TorusElement torus_mul(const TorusElement& p, const TorusElement& q) {
  require_same_ambient(p, q);
  const IntMatrix& L = *p.ambient();
  TorusElement out(p.ambient());
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      MonomialProduct prod = mul_monomials(a, b, L);
      out.add_term(prod.exponent,
                   ca * cb * QCoefficient::q_power(prod.q_exponent));
    }
  }
  return out;
}

SupportBox support_box(const TorusElement& p) {
  SupportBox box;
  if (p.is_zero()) return box;
  box.low = p.terms().begin()->first;
  box.high = box.low;
  for (const auto& [a, c] : p.terms()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      box.low[i] = std::min(box.low[i], a[i]);
      box.high[i] = std::max(box.high[i], a[i]);
    }
  }
  return box;
}

TorusElement right_divide(const TorusElement& p, const TorusElement& d) {
  require_same_ambient(p, d);
  if (d.is_zero()) throw NotDivisible("division by zero torus element");
  TorusElement quotient(p.ambient());
  if (p.is_zero()) return quotient;

  // T(L) is a domain graded by each coordinate, so extreme slices of a
  // product never cancel: the quotient support is confined to this box.
  const SupportBox pb = support_box(p);
  const SupportBox db = support_box(d);
  const std::size_t n = p.dim();
  Exponent low(n), high(n);
  for (std::size_t i = 0; i < n; ++i) {
    low[i] = pb.low[i] - db.low[i];
    high[i] = pb.high[i] - db.high[i];
    if (low[i] > high[i]) {
      throw NotDivisible("quotient support box is empty in coordinate " +
                         std::to_string(i + 1));
    }
  }

  const IntMatrix& L = *p.ambient();
  const auto& [d_lead, d_coeff] = *d.terms().rbegin();
  TorusElement remainder = p;
  while (!remainder.is_zero()) {
    const Exponent r_lead = remainder.terms().rbegin()->first;
    const QCoefficient r_coeff = remainder.terms().rbegin()->second;
    Exponent step(n);
    for (std::size_t i = 0; i < n; ++i) {
      step[i] = r_lead[i] - d_lead[i];
      if (step[i] < low[i] || step[i] > high[i]) {
        throw NotDivisible("required quotient monomial leaves the support box");
      }
    }
    const MonomialProduct prod = mul_monomials(step, d_lead, L);
    const QCoefficient c =
        r_coeff / (d_coeff * QCoefficient::q_power(prod.q_exponent));
    quotient.add_term(step, c);
    for (const auto& [b, cb] : d.terms()) {
      const MonomialProduct sub = mul_monomials(step, b, L);
      remainder.add_term(sub.exponent,
                         -(c * cb * QCoefficient::q_power(sub.q_exponent)));
    }
  }
  return quotient;
}

std::map<Exponent, Rational> specialize_q1(const TorusElement& p) {
  std::map<Exponent, Rational> out;
  for (const auto& [a, c] : p.terms()) {
    Rational v = c.at_one();
    if (v != 0) out.emplace(a, std::move(v));
  }
  return out;
}

Rational evaluate_classical(const TorusElement& p,
                            std::span<const Rational> values) {
  if (values.size() != p.dim()) {
    throw DimMismatch("need one value per torus generator");
  }
  Rational total = 0;
  for (const auto& [a, c] : specialize_q1(p)) {
    Rational term = c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (values[i] == 0 && a[i] < 0) {
        throw ZeroValueAtNegativeExponent(
            "generator " + std::to_string(i + 1) +
            " has value 0 but appears with a negative exponent");
      }
      term *= power(values[i], a[i]);
    }
    total += term;
  }
  return total;
}

}  // namespace qgrass
