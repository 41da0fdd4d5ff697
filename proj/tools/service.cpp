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

#include "service.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "httplib.h"
#include "qgrass/errors.hpp"
#include "qgrass/grassmannian.hpp"

namespace qgrass::service {

namespace {

Response error(int status, const std::string& message) {
  return {status, {{"error", message}}};
}

// Checks the emission invariant and encodes the seed.
Json checked_seed(const QuantumSeed& seed) {
  for (std::int64_t d : check_compatible(seed.B(), seed.L())) {
    if (d != 2) throw Error("seed lost compatibility degree 2");
  }
  return to_json(seed);
}

std::optional<std::size_t> parse_position(const std::string& text,
                                          std::size_t limit) {
  std::size_t pos = 0;
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size() || v < 1) return std::nullopt;
    pos = static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (pos > limit) return std::nullopt;
  return pos - 1;
}

std::int64_t to_millis(Session::Clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             t.time_since_epoch())
      .count();
}

}  // namespace

Session::Session(std::string id_, QuantumSeed seed_)
    : id(std::move(id_)),
      seed(std::move(seed_)),
      created(Clock::now()),
      modified(created) {}

Service::Service(Config config)
    : config_(std::move(config)), id_rng_(std::random_device{}()) {
  if (config_.snapshot_dir) {
    std::filesystem::create_directories(*config_.snapshot_dir);
    restore();
  }
}

std::string Service::new_id() {
  std::lock_guard lock(id_mutex_);
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << id_rng_()
     << std::setw(16) << id_rng_();
  return os.str();
}

std::shared_ptr<Session> Service::find(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t Service::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

void Service::persist(const Session& session) const {
  if (!config_.snapshot_dir) return;
  Json undo = Json::array();
  for (const QuantumSeed& s : session.undo) undo.push_back(to_json(s));
  const Json doc = {{"id", session.id},
                    {"seed", to_json(session.seed)},
                    {"undo", std::move(undo)},
                    {"created", to_millis(session.created)},
                    {"modified", to_millis(session.modified)}};
  const auto path = *config_.snapshot_dir / (session.id + ".json");
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump();
  }
  std::filesystem::rename(tmp, path);
}

void Service::restore() {
  for (const auto& entry :
       std::filesystem::directory_iterator(*config_.snapshot_dir)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    const Json doc = Json::parse(in);
    auto session = std::make_shared<Session>(doc.at("id").get<std::string>(),
                                             seed_from_json(doc.at("seed")));
    for (const Json& s : doc.at("undo")) {
      session->undo.push_back(seed_from_json(s));
    }
    session->created = Session::Clock::time_point(
        std::chrono::milliseconds(doc.at("created").get<std::int64_t>()));
    session->modified = Session::Clock::time_point(
        std::chrono::milliseconds(doc.at("modified").get<std::int64_t>()));
    sessions_.emplace(session->id, std::move(session));
  }
}

Response Service::create_session(const std::string& body) {
  Json request;
  try {
    request = Json::parse(body);
    const GrassParams params(request.at("m").get<int>(),
                             request.at("n").get<int>());
    auto session = std::make_shared<Session>(new_id(), initial_seed(params));
    Json seed = checked_seed(session->seed);
    persist(*session);
    {
      std::unique_lock lock(sessions_mutex_);
      sessions_.emplace(session->id, session);
    }
    return {201, {{"id", session->id}, {"seed", std::move(seed)}}};
  } catch (const Json::exception& e) {
    return error(400, std::string("expected {m, n}: ") + e.what());
  } catch (const InvalidParams& e) {
    return error(400, e.what());
  }
}

Response Service::get_session(const std::string& id) const {
  auto session = find(id);
  if (!session) return error(404, "unknown session");
  std::shared_lock lock(session->mutex);
  Json arrows = Json::array();
  for (const auto& [from, to] : quiver_arrows(session->seed.B())) {
    arrows.push_back({from + 1, to + 1});
  }
  Json mutable_positions = Json::array();
  for (std::size_t k = 0; k < session->seed.mutable_count(); ++k) {
    mutable_positions.push_back(k + 1);
  }
  return {200,
          {{"seed", checked_seed(session->seed)},
           {"arrows", std::move(arrows)},
           {"mutablePositions", std::move(mutable_positions)},
           {"undoDepth", session->undo.size()},
           {"created", to_millis(session->created)},
           {"modified", to_millis(session->modified)}}};
}

Response Service::mutate(const std::string& id, const std::string& body) {
  auto session = find(id);
  if (!session) return error(404, "unknown session");
  std::size_t position = 0;
  try {
    const Json request = Json::parse(body);
    const int p = request.at("position").get<int>();
    if (p < 1) return error(404, "unknown position");
    position = static_cast<std::size_t>(p - 1);
  } catch (const Json::exception& e) {
    return error(400, std::string("expected {position}: ") + e.what());
  }

  std::unique_lock lock(session->mutex);
  const QuantumSeed& current = session->seed;
  if (position >= current.size()) return error(404, "unknown position");
  if (position >= current.mutable_count()) {
    return error(422, "position " + std::to_string(position + 1) +
                          " is frozen");
  }
  std::optional<GeometricExchange> exchange;
  if (current.positions()[position].label) {
    exchange = geometric_exchange(current, position);
  }
  QuantumSeed next = mutate_seed(current, position);
  Json response = {{"seed", checked_seed(next)},
                   {"geometricExchange", exchange.has_value()}};
  if (exchange) {
    response["newLabel"] = to_json(exchange->new_label);
    response["exchange"] = to_json(*exchange);
  }
  session->undo.push_back(std::move(session->seed));
  while (session->undo.size() > config_.undo_cap) session->undo.pop_front();
  session->seed = std::move(next);
  session->modified = Session::Clock::now();
  persist(*session);
  return {200, std::move(response)};
}

Response Service::undo(const std::string& id) {
  auto session = find(id);
  if (!session) return error(404, "unknown session");
  std::unique_lock lock(session->mutex);
  if (session->undo.empty()) return error(409, "nothing to undo");
  session->seed = std::move(session->undo.back());
  session->undo.pop_back();
  session->modified = Session::Clock::now();
  persist(*session);
  return {200, {{"seed", checked_seed(session->seed)}}};
}

Response Service::variable(const std::string& id,
                           const std::string& position) const {
  auto session = find(id);
  if (!session) return error(404, "unknown session");
  std::shared_lock lock(session->mutex);
  const auto k = parse_position(position, session->seed.size());
  if (!k) return error(404, "unknown position");
  return {200, to_json(session->seed.variable(*k))};
}

Response Service::quasicommutation(const std::string& id,
                                   const std::optional<std::string>& a,
                                   const std::optional<std::string>& b) const {
  auto session = find(id);
  if (!session) return error(404, "unknown session");
  if (!a || !b) return error(400, "query parameters a and b are required");
  std::shared_lock lock(session->mutex);
  const auto i = parse_position(*a, session->seed.size());
  const auto j = parse_position(*b, session->seed.size());
  if (!i || !j) return error(404, "unknown position");
  return {200, {{"lambda", session->seed.L()(*i, *j)}}};
}

void Service::mount(httplib::Server& server) {
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  // Wraps a handler so engine failures surface as 500 with a message.
  auto guarded = [reply](auto handler) {
    return [reply, handler](const httplib::Request& req,
                            httplib::Response& res) {
      try {
        reply(res, handler(req));
      } catch (const std::exception& e) {
        reply(res, error(500, e.what()));
      }
    };
  };
  auto query = [](const httplib::Request& req,
                  const char* key) -> std::optional<std::string> {
    if (!req.has_param(key)) return std::nullopt;
    return req.get_param_value(key);
  };

  server.Post("/sessions", guarded([this](const httplib::Request& req) {
                return create_session(req.body);
              }));
  server.Get(R"(/sessions/([0-9a-f]+))",
             guarded([this](const httplib::Request& req) {
               return get_session(req.matches[1]);
             }));
  server.Post(R"(/sessions/([0-9a-f]+)/mutate)",
              guarded([this](const httplib::Request& req) {
                return mutate(req.matches[1], req.body);
              }));
  server.Post(R"(/sessions/([0-9a-f]+)/undo)",
              guarded([this](const httplib::Request& req) {
                return undo(req.matches[1]);
              }));
  server.Get(R"(/sessions/([0-9a-f]+)/variables/([^/]+))",
             guarded([this](const httplib::Request& req) {
               return variable(req.matches[1], req.matches[2]);
             }));
  server.Get(R"(/sessions/([0-9a-f]+)/quasicommutation)",
             guarded([this, query](const httplib::Request& req) {
               return quasicommutation(req.matches[1], query(req, "a"),
                                       query(req, "b"));
             }));
}

void serve(Service& service, const std::string& address, int port) {
  httplib::Server server;
  service.mount(server);
  if (!server.listen(address, port)) {
    throw Error("cannot listen on " + address + ":" + std::to_string(port));
  }
}

}  // namespace qgrass::service
