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

#include "qgrass/verify.hpp"

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "qgrass/errors.hpp"
#include "qgrass/grassmannian.hpp"
#include "qgrass/qmatrix.hpp"
#include "qgrass/rank_one.hpp"

namespace qgrass {

Json SuiteReport::to_json() const {
  return {{"checks", checks}, {"violations", violations}};
}

namespace {

Json path_json(const QuantumSeed& seed) {
  Json out = Json::array();
  for (std::size_t k : seed.history()) out.push_back(k + 1);
  return out;
}

std::vector<std::size_t> geometric_directions(const QuantumSeed& seed) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < seed.mutable_count(); ++k) {
    if (seed.positions()[k].label && geometric_exchange(seed, k)) {
      out.push_back(k);
    }
  }
  return out;
}

RationalMatrix random_generic_matrix(const GrassParams& params,
                                     std::span<const IndexSubset> labels,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-9, 9);
  for (;;) {
    RationalMatrix M(params.m(), std::vector<Rational>(params.n()));
    for (auto& row : M)
      for (auto& x : row) x = entry(rng);
    bool generic = true;
    for (const IndexSubset& I : labels) {
      if (classical_plucker_eval(M, I) == 0) {
        generic = false;
        break;
      }
    }
    if (generic) return M;
  }
}

}  // namespace

SuiteReport verify_compat(const GrassParams& params, int depth,
                          std::size_t samples, std::uint64_t rng_seed) {
  SuiteReport report;
  std::mt19937_64 rng(rng_seed);
  const QuantumSeed start = initial_seed(params, false);
  for (std::size_t s = 0; s < samples; ++s) {
    QuantumSeed seed = start;
    for (int step = 0; step < depth; ++step) {
      const auto dirs = geometric_directions(seed);
      if (dirs.empty()) break;
      const std::size_t k =
          dirs[std::uniform_int_distribution<std::size_t>(0, dirs.size() - 1)(
              rng)];
      seed = mutate_seed(seed, k);
      const std::vector<IndexSubset> labels = seed.labels();
      const IntMatrix from_c = L_from_labels(labels);
      const IntMatrix from_lambda = lambda_matrix(labels);
      ++report.checks;
      if (!(seed.L() == from_c) || !(from_c == from_lambda) ||
          !is_maximal(labels)) {
        report.violations.push_back({{"path", path_json(seed)},
                                     {"L", to_json(seed.L())},
                                     {"fromLabels", to_json(from_c)},
                                     {"fromLambdaPair", to_json(from_lambda)}});
      }
    }
  }
  return report;
}

SuiteReport verify_plucker(const GrassParams& params, int depth,
                           std::size_t matrices, std::uint64_t rng_seed) {
  SuiteReport report;
  std::mt19937_64 rng(rng_seed);
  QuantumMatrixAlgebra oracle(params.m(), params.n());
  const QuantumSeed start = initial_seed(params, true);
  const std::vector<IndexSubset> initial_labels = start.labels();

  std::vector<std::vector<Rational>> values;
  std::vector<RationalMatrix> samples;
  for (std::size_t i = 0; i < matrices; ++i) {
    samples.push_back(random_generic_matrix(params, initial_labels, rng));
    values.push_back(minor_values(samples.back(), initial_labels));
  }

  auto key_of = [](const QuantumSeed& s) {
    auto labels = s.labels();
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  std::set<std::vector<IndexSubset>> seen{key_of(start)};
  std::set<std::tuple<std::vector<int>, int, int, int, int>> relations;
  std::vector<QuantumSeed> level{start};
  for (int step = 0; step < depth && !level.empty(); ++step) {
    std::vector<QuantumSeed> next_level;
    for (const QuantumSeed& seed : level) {
      for (std::size_t k : geometric_directions(seed)) {
        const GeometricExchange ex = *geometric_exchange(seed, k);
        if (relations
                .emplace(ex.common.elements(), ex.a, ex.b, ex.c, ex.d)
                .second) {
          ++report.checks;
          if (!oracle.verify_short_plucker(ex.common, ex.a, ex.b, ex.c,
                                           ex.d)) {
            report.violations.push_back(
                {{"check", "quantum"}, {"exchange", to_json(ex)}});
          }
        }
        QuantumSeed next = mutate_seed(seed, k);
        for (std::size_t i = 0; i < samples.size(); ++i) {
          ++report.checks;
          const Rational got = evaluate_classical(next.variable(k), values[i]);
          const Rational want = classical_plucker_eval(samples[i], ex.new_label);
          if (got != want) {
            report.violations.push_back({{"check", "classical"},
                                         {"path", path_json(next)},
                                         {"exchange", to_json(ex)},
                                         {"got", got.get_str()},
                                         {"expected", want.get_str()}});
          }
        }
        if (seen.insert(key_of(next)).second) {
          next_level.push_back(std::move(next));
        }
      }
    }
    level = std::move(next_level);
  }
  return report;
}

SuiteReport verify_laurent(const GrassParams& params, int depth,
                           std::size_t samples, std::uint64_t rng_seed) {
  SuiteReport report;
  std::mt19937_64 rng(rng_seed);
  const QuantumSeed start = initial_seed(params, true);
  if (start.mutable_count() == 0) return report;
  std::uniform_int_distribution<std::size_t> pick(0,
                                                  start.mutable_count() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    QuantumSeed seed = start;
    for (int step = 0; step < depth; ++step) {
      const std::size_t k = pick(rng);
      QuantumSeed next = mutate_seed(seed, k);
      ++report.checks;
      for (std::size_t i = 0; i < next.size(); ++i) {
        if (!next.variable(i).is_laurent()) {
          report.violations.push_back({{"check", "laurent"},
                                       {"path", path_json(next)},
                                       {"position", i + 1}});
        }
      }
      if (!mutate_seed(next, k).same_state(seed)) {
        report.violations.push_back(
            {{"check", "involution"}, {"path", path_json(next)}});
      }
      seed = std::move(next);
    }
  }
  return report;
}

}  // namespace qgrass
