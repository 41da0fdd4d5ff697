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

// Randomized and exhaustive consistency suites over the seed engine, shared
// by the command-line tool and the acceptance tests.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qgrass/combinatorics.hpp"
#include "qgrass/json_io.hpp"

namespace qgrass {

struct SuiteReport {
  std::size_t checks = 0;
  std::vector<Json> violations;

  bool ok() const { return violations.empty(); }
  Json to_json() const;
};

/// Random geometric-exchange paths of length up to `depth` from the
/// rectangle seed. After every step the mutated L, the matrix of c(I, J) over
/// the new labels and the matrix of lambda_pair over the new labels must
/// agree.
SuiteReport verify_compat(const GrassParams& params, int depth,
                          std::size_t samples, std::uint64_t rng_seed);

/// Every geometric exchange performed within the first `depth` steps from
/// the rectangle seed: the short quantum Plucker relation holds in the
/// quantum matrix algebra, and the new variable at q = 1, evaluated at the
/// minors of `matrices` random integer matrices, equals the classical minor
/// of the new label.
SuiteReport verify_plucker(const GrassParams& params, int depth,
                           std::size_t matrices, std::uint64_t rng_seed);

/// Random unrestricted mutation paths: every variable stays an integer
/// Laurent polynomial and mutating twice in the same direction restores the
/// seed.
SuiteReport verify_laurent(const GrassParams& params, int depth,
                           std::size_t samples, std::uint64_t rng_seed);

}  // namespace qgrass
