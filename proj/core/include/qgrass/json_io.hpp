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

// JSON encodings shared by the command-line tool and the service. External
// encodings use 1-based positions; subsets are lists of their elements.

#include <nlohmann/json.hpp>

#include "qgrass/combinatorics.hpp"
#include "qgrass/grassmannian.hpp"
#include "qgrass/numeric.hpp"
#include "qgrass/qmatrix.hpp"
#include "qgrass/seed.hpp"
#include "qgrass/torus.hpp"

namespace qgrass {

using Json = nlohmann::json;

Json to_json(const IndexSubset& s);
Json to_json(const Partition& p);
Json to_json(const IntMatrix& m);
/// [{exponents, coeff, orderedCoeff}], coefficients as canonical strings.
Json to_json(const TorusElement& p);
/// {m, n, positions: [{label, frozen}], B, L, history}.
Json to_json(const QuantumSeed& seed);
Json to_json(const ExchangeGraphSummary& summary);
Json to_json(const LzReport& report);
Json to_json(const GeometricExchange& ex);

IndexSubset subset_from_json(const Json& j, int n);
IntMatrix int_matrix_from_json(const Json& j);
TorusElement torus_from_json(const Json& j, LambdaPtr ambient);

/// Rebuilds a seed from its JSON form by replaying the recorded history on
/// the rectangle seed, then checks that B, L and labels match. Throws
/// ParseError on mismatch.
QuantumSeed seed_from_json(const Json& j, bool track_variables = true);

}  // namespace qgrass
