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

// Session-oriented JSON service over the seed engine. Routing is split from
// the transport so handlers can be tested without sockets.

#include <chrono>
#include <cstddef>
#include <deque>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>

#include "qgrass/json_io.hpp"
#include "qgrass/seed.hpp"

namespace httplib {
class Server;
}

namespace qgrass::service {

struct Config {
  std::size_t undo_cap = 64;
  /// When set, every session is written to <dir>/<id>.json after each change
  /// and sessions found there are restored at startup.
  std::optional<std::filesystem::path> snapshot_dir;
};

struct Response {
  int status = 200;
  Json body;
};

struct Session {
  using Clock = std::chrono::system_clock;

  std::string id;
  QuantumSeed seed;
  std::deque<QuantumSeed> undo;
  Clock::time_point created;
  Clock::time_point modified;
  mutable std::shared_mutex mutex;

  Session(std::string id, QuantumSeed seed);
};

class Service {
 public:
  explicit Service(Config config = {});

  Response create_session(const std::string& body);
  Response get_session(const std::string& id) const;
  Response mutate(const std::string& id, const std::string& body);
  Response undo(const std::string& id);
  Response variable(const std::string& id, const std::string& position) const;
  Response quasicommutation(const std::string& id,
                            const std::optional<std::string>& a,
                            const std::optional<std::string>& b) const;

  /// Installs the HTTP routes on `server`.
  void mount(httplib::Server& server);

  std::size_t session_count() const;

 private:
  std::shared_ptr<Session> find(const std::string& id) const;
  void persist(const Session& session) const;
  void restore();
  std::string new_id();

  Config config_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex id_mutex_;
  std::mt19937_64 id_rng_;
};

/// Blocks serving HTTP on address:port.
void serve(Service& service, const std::string& address, int port);

}  // namespace qgrass::service
