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

#include "qgrass/json_io.hpp"

#include <string>

#include "qgrass/errors.hpp"

namespace qgrass {

Json to_json(const IndexSubset& s) { return Json(s.elements()); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const TorusElement& p) {
  Json out = Json::array();
  for (const auto& [a, c] : p.terms()) {
    out.push_back({{"exponents", a},
                   {"coeff", c.to_string()},
                   {"orderedCoeff", p.ordered_coefficient(a).to_string()}});
  }
  return out;
}

Json to_json(const QuantumSeed& seed) {
  Json positions = Json::array();
  for (const Position& p : seed.positions()) {
    positions.push_back({{"label", p.label ? to_json(*p.label) : Json()},
                         {"frozen", p.frozen}});
  }
  Json history = Json::array();
  for (std::size_t k : seed.history()) history.push_back(k + 1);
  return {{"m", seed.params().m()},
          {"n", seed.params().n()},
          {"positions", std::move(positions)},
          {"B", to_json(seed.B().matrix())},
          {"L", to_json(seed.L())},
          {"history", std::move(history)}};
}

Json to_json(const ExchangeGraphSummary& summary) {
  Json labels = Json::array();
  for (const IndexSubset& s : summary.labels) labels.push_back(to_json(s));
  return {{"seeds", summary.seeds},
          {"labels", std::move(labels)},
          {"truncated", summary.truncated},
          {"depth", summary.depth}};
}

Json to_json(const LzReport& report) {
  Json violations = Json::array();
  auto opt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(); };
  for (const LzViolation& v : report.violations) {
    violations.push_back({{"I", to_json(v.I)},
                          {"J", to_json(v.J)},
                          {"expected", opt(v.expected)},
                          {"got", opt(v.got)},
                          {"check", v.check}});
  }
  return {{"pairs", report.pairs}, {"violations", std::move(violations)}};
}

Json to_json(const GeometricExchange& ex) {
  return {{"J", to_json(ex.common)},
          {"abcd", {ex.a, ex.b, ex.c, ex.d}},
          {"oldLabel", to_json(ex.old_label)},
          {"newLabel", to_json(ex.new_label)}};
}

IndexSubset subset_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("subset must be an array of integers");
  try {
    return IndexSubset(j.get<std::vector<int>>(), n);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad subset: ") + e.what());
  }
}

IntMatrix int_matrix_from_json(const Json& j) {
  try {
    const auto rows = j.get<std::vector<std::vector<std::int64_t>>>();
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix out(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ParseError("ragged matrix");
      for (std::size_t k = 0; k < cols; ++k) out(i, k) = rows[i][k];
    }
    return out;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad matrix: ") + e.what());
  }
}

TorusElement torus_from_json(const Json& j, LambdaPtr ambient) {
  if (!j.is_array()) throw ParseError("torus element must be an array");
  TorusElement out(ambient);
  try {
    for (const Json& term : j) {
      auto a = term.at("exponents").get<Exponent>();
      if (a.size() != out.dim()) throw DimMismatch("exponent length");
      out.add_term(a, QCoefficient::parse(term.at("coeff").get<std::string>()));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad torus element: ") + e.what());
  }
  return out;
}

QuantumSeed seed_from_json(const Json& j, bool track_variables) {
  try {
    const GrassParams params(j.at("m").get<int>(), j.at("n").get<int>());
    QuantumSeed seed = initial_seed(params, track_variables);
    for (int k : j.at("history").get<std::vector<int>>()) {
      if (k < 1 || static_cast<std::size_t>(k) > seed.mutable_count()) {
        throw ParseError("history entry out of range");
      }
      seed = mutate_seed(seed, static_cast<std::size_t>(k - 1));
    }
    Json replayed = to_json(seed);
    for (const char* key : {"positions", "B", "L"}) {
      if (j.contains(key) && j.at(key) != replayed.at(key)) {
        throw ParseError(std::string("seed field '") + key +
                         "' does not match its history");
      }
    }
    return seed;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad seed: ") + e.what());
  }
}

}  // namespace qgrass
