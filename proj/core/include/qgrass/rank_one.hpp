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

// kappa and lambda for rank-one modules M_I over the doubled cycle quiver.
// The distinguished vertex is 0; edge a joins vertices a - 1 and a.

#include <span>
#include <vector>

#include "qgrass/combinatorics.hpp"
#include "qgrass/numeric.hpp"

namespace qgrass {

/// Minimal exponent vector alpha with t^alpha generating Hom(M_I, M_J),
/// indexed by vertices 0..n-1.
struct ExponentVector {
  std::vector<int> values;

  int at(int vertex) const { return values.at(vertex); }
  friend bool operator==(const ExponentVector&, const ExponentVector&) =
      default;
};

/// Walking 0 -> 1 -> ... -> n-1 -> 0, the value rises by one across edges in
/// I \ J and falls by one across edges in J \ I; shifted so the minimum is 0.
ExponentVector min_exponent_vector(const IndexSubset& I, const IndexSubset& J);

/// kappa(M_I, M_J): the minimal exponent vector at vertex 0.
int kappa(const IndexSubset& I, const IndexSubset& J);

/// lambda(M_I, M_J) = kappa(M_J, M_I) - kappa(M_I, M_J).
int lambda_pair(const IndexSubset& I, const IndexSubset& J);

/// Matrix (lambda_pair(I_i, I_j))_{ij}.
IntMatrix lambda_matrix(std::span<const IndexSubset> labels);

/// kappa(M_I, M_J) by linear algebra over k[t]/(t^D): solves for all
/// module homomorphisms and measures the codimension of their vertex-0
/// components. Throws TruncationTooSmall when D <= n.
int kappa_truncated_oracle(const IndexSubset& I, const IndexSubset& J,
                           int truncation);

}  // namespace qgrass
