// Copyright 2026 The Demon Solitaire Authors
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

#ifndef DEMON_HTTP_SERVICE_HPP
#define DEMON_HTTP_SERVICE_HPP

// HTTP + JSON binding of SessionStore.
//
//   POST /sessions                 create; body below
//   GET  /sessions/{id}            full view
//   POST /sessions/{id}/move       {"i": 1, "a": 2, "b": 1}
//   POST /sessions/{id}/response   "pass", {"pass": true} or {"j", "out", "in"}
//   GET  /sessions/{id}/hint       {"i", "a", "b"} or {"already_winning": true}
//
// Create body: {"k", "m", "stacks": [[...], ...]} for an explicit deal, or
// {"deal_seed": n} (optionally with "k" and "m") for a generated one; plus
// "demon", "human_role", "strategy", and optional "seed" and "budget".
// Errors come back as {"code", "message"}.

#include <cctype>
#include <cstdint>
#include <random>
#include <string>

#include "demon/error.hpp"
#include "demon/game_io.hpp"
#include "demon/generate.hpp"
#include "demon/service.hpp"
#include "httplib.h"
#include "json.hpp"

namespace demon {

inline int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSession: return 404;
    case ErrorCode::WrongTurn:
    case ErrorCode::Busy: return 409;
    default: return 400;
  }
}

inline nlohmann::json error_json(ErrorCode code, const std::string& message) {
  return {{"code", std::string(to_string(code))}, {"message", message}};
}

namespace detail {

inline std::string text_field(const nlohmann::json& body, const char* key,
                              const char* fallback) {
  if (!body.contains(key)) return fallback;
  if (!body.at(key).is_string()) {
    throw Error(ErrorCode::BadRequest, std::string("'") + key + "' must be a string");
  }
  return body.at(key).get<std::string>();
}

}  // namespace detail

/// Parses a create request body into a session config.
inline SessionConfig session_config_from_json(const nlohmann::json& body) {
  if (!body.is_object()) throw Error(ErrorCode::BadRequest, "body must be an object");
  const auto demon = parse_demon_kind(detail::text_field(body, "demon", "konig"));
  const auto role = parse_human_role(detail::text_field(body, "human_role", "player"));
  const auto strategy =
      parse_strategy_kind(detail::text_field(body, "strategy", "konig"));
  if (!demon) throw Error(ErrorCode::BadRequest, "unknown demon");
  if (!role) throw Error(ErrorCode::BadRequest, "unknown human_role");
  if (!strategy) throw Error(ErrorCode::BadRequest, "unknown strategy");

  try {
    std::optional<GameState> deal;
    if (body.contains("stacks")) {
      deal = new_game({body.at("k").get<int>(), body.at("m").get<int>()},
                      body.at("stacks").get<std::vector<Stack>>());
    } else if (body.contains("deal_seed")) {
      std::mt19937_64 rng(body.at("deal_seed").get<std::uint64_t>());
      const int k = body.contains("k") ? body.at("k").get<int>()
                                       : std::uniform_int_distribution<int>(2, 5)(rng);
      const int m = body.contains("m") ? body.at("m").get<int>()
                                       : k + std::uniform_int_distribution<int>(0, 2)(rng);
      deal = random_deal(rng, {k, m}, *strategy == StrategyKind::Vizing);
    } else {
      throw Error(ErrorCode::BadRequest, "give either 'stacks' or 'deal_seed'");
    }
    SessionConfig config{*deal, *demon, *role, *strategy, std::nullopt, std::nullopt};
    if (body.contains("seed")) config.seed = body.at("seed").get<std::uint64_t>();
    if (body.contains("budget")) config.budget = body.at("budget").get<int>();
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadRequest, e.what());
  }
}

/// Installs the session routes on `server`. The store must outlive it.
inline void register_routes(httplib::Server& server, SessionStore& store) {
  auto reply = [](httplib::Response& res, int status, const nlohmann::json& j) {
    res.status = status;
    res.set_content(j.dump(), "application/json");
  };
  auto guarded = [reply](auto handler) {
    return [handler, reply](const httplib::Request& req, httplib::Response& res) {
      try {
        reply(res, 200, handler(req));
      } catch (const Error& e) {
        reply(res, http_status(e.code()), error_json(e.code(), e.detail()));
      } catch (const nlohmann::json::exception& e) {
        reply(res, 400, error_json(ErrorCode::BadRequest, e.what()));
      }
    };
  };
  auto parse_body = [](const httplib::Request& req) {
    auto body = nlohmann::json::parse(req.body, nullptr, false);
    if (body.is_discarded()) throw Error(ErrorCode::BadRequest, "body is not JSON");
    return body;
  };

  server.Post("/sessions", guarded([&store, parse_body](const httplib::Request& req) {
                return to_json(store.create_session(
                    session_config_from_json(parse_body(req))));
              }));
  server.Get(R"(/sessions/([^/]+))",
             guarded([&store](const httplib::Request& req) {
               return to_json(store.get_state(req.matches[1]));
             }));
  server.Post(R"(/sessions/([^/]+)/move)",
              guarded([&store, parse_body](const httplib::Request& req) {
                const PlayerMove move = [&] {
                  try {
                    return player_move_from_json(parse_body(req));
                  } catch (const Error& e) {
                    throw Error(ErrorCode::BadRequest, e.detail());
                  }
                }();
                return to_json(store.post_player_move(req.matches[1], move));
              }));
  server.Post(R"(/sessions/([^/]+)/response)",
              guarded([&store, parse_body](const httplib::Request& req) {
                const DemonResponse response = [&] {
                  try {
                    // Also accept the shorthand forms pass and {"pass"}.
                    std::string compact;
                    for (char ch : req.body) {
                      if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
                    }
                    if (compact == "pass" || compact == R"({"pass"})") {
                      return DemonResponse::pass();
                    }
                    return demon_response_from_json(parse_body(req));
                  } catch (const Error& e) {
                    throw Error(ErrorCode::BadRequest, e.detail());
                  }
                }();
                return to_json(store.post_demon_response(req.matches[1], response));
              }));
  server.Get(R"(/sessions/([^/]+)/hint)",
             guarded([&store](const httplib::Request& req) -> nlohmann::json {
               const auto move = store.hint(req.matches[1]);
               if (!move) return {{"already_winning", true}};
               return to_json(*move);
             }));
}

}  // namespace demon

#endif  // DEMON_HTTP_SERVICE_HPP
