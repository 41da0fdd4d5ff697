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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "CLI11.hpp"
#include "qgrass/errors.hpp"
#include "qgrass/grassmannian.hpp"
#include "qgrass/json_io.hpp"
#include "qgrass/qmatrix.hpp"
#include "qgrass/rank_one.hpp"
#include "qgrass/verify.hpp"
#include "service.hpp"

namespace qgrass::cli {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

void print_matrix(const char* name, const IntMatrix& a, std::ostream& out) {
  out << name << " =\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < a.cols(); ++j) out << " " << a(i, j);
    out << "\n";
  }
}

void print_seed_text(const QuantumSeed& seed, std::ostream& out) {
  out << "Gr(" << seed.params().m() << "," << seed.params().n() << "): "
      << seed.size() << " positions, " << seed.mutable_count()
      << " mutable\n";
  for (std::size_t i = 0; i < seed.size(); ++i) {
    const Position& p = seed.positions()[i];
    out << "  " << i + 1 << "  " << (p.label ? p.label->to_string() : "-")
        << (p.frozen ? "  frozen" : "") << "\n";
  }
  print_matrix("B", seed.B().matrix(), out);
  print_matrix("L", seed.L(), out);
}

int report_suite(const std::string& what, const SuiteReport& report,
                 std::ostream& out) {
  if (report.ok()) {
    out << report.checks << " " << what << ", 0 violations\n";
    return 0;
  }
  out << report.to_json().dump(2) << "\n";
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Quantum cluster structures on Grassmannians"};
  app.name("qgrass");
  app.require_subcommand(1);

  int m = 0;
  int n = 0;
  bool json = false;
  std::vector<int> path;
  std::vector<int> I;
  std::vector<int> J;
  int depth = 0;
  std::size_t samples = 0;
  std::size_t matrices = 3;
  std::uint64_t rng_seed = 1;
  std::size_t max_seeds = 0;
  bool geometric_only = false;
  int port = 8080;
  std::string address = "127.0.0.1";
  std::size_t undo_cap = 64;

  auto add_mn = [&](CLI::App* sub) {
    sub->add_option("--m", m, "rank of the subspaces")->required();
    sub->add_option("--n", n, "dimension of the ambient space")->required();
  };

  auto* seed_cmd = app.add_subcommand("seed", "print the rectangle seed");
  add_mn(seed_cmd);
  seed_cmd->add_flag("--json", json, "print JSON");

  auto* mutate_cmd =
      app.add_subcommand("mutate", "mutate the rectangle seed along a path");
  add_mn(mutate_cmd);
  mutate_cmd->add_option("--path", path, "1-based positions k1,k2,...")
      ->delimiter(',')
      ->required();
  mutate_cmd->add_flag("--json", json, "print JSON");

  auto* kappa_cmd = app.add_subcommand("kappa", "rank-one kappa and lambda");
  kappa_cmd->add_option("--n", n)->required();
  kappa_cmd->add_option("--I", I)->delimiter(',')->required();
  kappa_cmd->add_option("--J", J)->delimiter(',')->required();

  auto* c_cmd = app.add_subcommand("c", "non-crossing classification");
  c_cmd->add_option("--n", n)->required();
  c_cmd->add_option("--I", I)->delimiter(',')->required();
  c_cmd->add_option("--J", J)->delimiter(',')->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->require_subcommand(1);
  auto* lz_cmd = verify_cmd->add_subcommand(
      "lz", "quasi-commutation of quantum minors vs c(I,J) and lambda");
  add_mn(lz_cmd);
  auto* compat_cmd = verify_cmd->add_subcommand(
      "compat", "L along random geometric exchange paths");
  add_mn(compat_cmd);
  compat_cmd->add_option("--depth", depth)->default_val(6);
  compat_cmd->add_option("--samples", samples)->default_val(100);
  compat_cmd->add_option("--seed", rng_seed, "random seed")->default_val(1);
  auto* plucker_cmd = verify_cmd->add_subcommand(
      "plucker", "exchanges vs quantum and classical Plucker relations");
  add_mn(plucker_cmd);
  plucker_cmd->add_option("--depth", depth)->default_val(3);
  plucker_cmd->add_option("--matrices", matrices)->default_val(3);
  plucker_cmd->add_option("--seed", rng_seed, "random seed")->default_val(1);
  auto* laurent_cmd = verify_cmd->add_subcommand(
      "laurent", "Laurent expansions and involution on random paths");
  add_mn(laurent_cmd);
  laurent_cmd->add_option("--depth", depth)->default_val(8);
  laurent_cmd->add_option("--samples", samples)->default_val(50);
  laurent_cmd->add_option("--seed", rng_seed, "random seed")->default_val(1);

  auto* explore_cmd =
      app.add_subcommand("explore", "breadth-first exchange graph search");
  add_mn(explore_cmd);
  explore_cmd->add_option("--max-seeds", max_seeds)->default_val(10000);
  explore_cmd->add_option("--max-depth", depth)->default_val(64);
  explore_cmd->add_flag("--geometric-only", geometric_only);

  auto* serve_cmd = app.add_subcommand("serve", "start the HTTP service");
  serve_cmd->add_option("--port", port)->default_val(8080);
  serve_cmd->add_option("--address", address)->default_val("127.0.0.1");
  serve_cmd->add_option("--undo-cap", undo_cap)->default_val(64);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'qgrass --help' for usage\n";
    return 2;
  }

  try {
    if (*seed_cmd) {
      const QuantumSeed seed = initial_seed(GrassParams(m, n));
      if (json) {
        out << to_json(seed).dump(2) << "\n";
      } else {
        print_seed_text(seed, out);
      }
    } else if (*mutate_cmd) {
      QuantumSeed seed = initial_seed(GrassParams(m, n));
      Json steps = Json::array();
      for (int k : path) {
        if (k < 1 || static_cast<std::size_t>(k) > seed.size()) {
          throw IndexOutOfRange("position " + std::to_string(k) +
                                " does not exist");
        }
        const std::size_t pos = static_cast<std::size_t>(k - 1);
        if (pos >= seed.mutable_count()) {
          throw FrozenIndex("position " + std::to_string(k) + " is frozen");
        }
        std::optional<GeometricExchange> ex;
        const auto old_label = seed.positions()[pos].label;
        if (old_label) ex = geometric_exchange(seed, pos);
        seed = mutate_seed(seed, pos);
        Json step = {{"position", k},
                     {"oldLabel", old_label ? to_json(*old_label) : Json()},
                     {"geometricExchange", ex.has_value()}};
        if (ex) step["newLabel"] = to_json(ex->new_label);
        if (!json) {
          out << "step " << steps.size() + 1 << ": position " << k << " "
              << (old_label ? old_label->to_string() : "-") << " -> "
              << (ex ? ex->new_label.to_string() : "-")
              << (ex ? "  (geometric exchange)" : "") << "\n";
        }
        steps.push_back(std::move(step));
      }
      if (json) {
        out << Json{{"steps", steps}, {"seed", to_json(seed)}}.dump(2) << "\n";
      } else {
        print_seed_text(seed, out);
      }
    } else if (*kappa_cmd) {
      const IndexSubset sI(I, n);
      const IndexSubset sJ(J, n);
      if (sI.m() != sJ.m()) throw MixedParams("I and J differ in size");
      out << "kappa(I,J) = " << kappa(sI, sJ) << "\n"
          << "kappa(J,I) = " << kappa(sJ, sI) << "\n"
          << "lambda = " << lambda_pair(sI, sJ) << "\n";
    } else if (*c_cmd) {
      const IndexSubset sI(I, n);
      const IndexSubset sJ(J, n);
      const auto cls = classify_noncrossing(sI, sJ);
      if (cls.crossing) {
        out << "crossing\n";
      } else {
        if (cls.case_i) {
          out << "non-crossing case (i): J' = " << join(cls.case_i->lower)
              << ", J'' = " << join(cls.case_i->upper) << "\n";
        }
        if (cls.case_ii) {
          out << "non-crossing case (ii): I' = " << join(cls.case_ii->lower)
              << ", I'' = " << join(cls.case_ii->upper) << "\n";
        }
        out << "c = " << *cls.c << "\n";
      }
    } else if (*lz_cmd) {
      QuantumMatrixAlgebra algebra(m, n);
      const LzReport report = algebra.verify_lz();
      if (!report.violations.empty()) {
        out << to_json(report).dump(2) << "\n";
        return 1;
      }
      out << report.pairs << " pairs, 0 violations\n";
    } else if (*compat_cmd) {
      return report_suite(
          "checks", verify_compat(GrassParams(m, n), depth, samples, rng_seed),
          out);
    } else if (*plucker_cmd) {
      return report_suite(
          "checks",
          verify_plucker(GrassParams(m, n), depth, matrices, rng_seed), out);
    } else if (*laurent_cmd) {
      return report_suite(
          "checks",
          verify_laurent(GrassParams(m, n), depth, samples, rng_seed), out);
    } else if (*explore_cmd) {
      out << to_json(explore_exchange_graph(GrassParams(m, n), max_seeds,
                                            depth, geometric_only))
                 .dump(2)
          << "\n";
    } else if (*serve_cmd) {
      service::Config config;
      config.undo_cap = undo_cap;
      if (const char* dir = std::getenv("QGRASS_SNAPSHOT_DIR")) {
        config.snapshot_dir = dir;
      }
      service::Service svc(config);
      err << "listening on " << address << ":" << port << "\n";
      service::serve(svc, address, port);
    }
  } catch (const LaurentViolation& e) {
    err << "internal failure: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace qgrass::cli
