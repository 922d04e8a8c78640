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


// demon: command-line front end for the coloring, game and service layers.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "demon/edge_coloring.hpp"
#include "demon/engine.hpp"
#include "demon/error.hpp"
#include "demon/game.hpp"
#include "demon/game_io.hpp"
#include "demon/generate.hpp"
#include "demon/graph.hpp"
#include "demon/http_service.hpp"
#include "demon/selftest.hpp"
#include "demon/service.hpp"
#include "demon/strategies.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Usage errors discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct ColorArgs {
  std::string input;
  std::string mode = "auto";
  std::string output;
};

int run_color(const ColorArgs& args) {
  const demon::Graph g = demon::parse_graph(read_file(args.input));
  demon::ColoringMode mode;
  if (args.mode == "konig") {
    mode = demon::ColoringMode::Konig;
  } else if (args.mode == "vizing") {
    mode = demon::ColoringMode::Vizing;
  } else {
    mode = demon::bipartition(g) ? demon::ColoringMode::Konig
                                 : demon::ColoringMode::Vizing;
  }
  const demon::EdgeColoring c = demon::edge_color(g, mode);
  write_output(args.output, demon::write_coloring(g, c));
  const int bound = mode == demon::ColoringMode::Konig ? g.max_degree()
                                                       : g.max_degree() + 1;
  std::ostream& summary = args.output.empty() ? std::cerr : std::cout;
  summary << "mode: " << demon::to_string(mode) << ", colors used: "
          << c.colors_used() << " <= bound " << bound << " (max degree "
          << g.max_degree() << ")\n";
  return 0;
}

struct VerifyArgs {
  std::string graph;
  std::string coloring;
  int m = 0;
};

int run_verify(const VerifyArgs& args) {
  if (args.m < 0) throw UsageError("m must be non-negative");
  const demon::Graph g = demon::parse_graph(read_file(args.graph));
  const demon::EdgeColoring c =
      demon::parse_coloring(g, read_file(args.coloring), args.m);
  const demon::VerifyResult result = demon::verify_coloring(g, c, args.m);
  if (result.ok) {
    std::cout << "ok: proper " << args.m << "-edge-coloring\n";
    return 0;
  }
  std::cout << "invalid: " << result.violation << "\n";
  return kExitFailure;
}

struct PlayArgs {
  std::string game_file;
  std::string demon = "konig";
  std::string strategy;
  std::optional<std::uint64_t> seed;
  std::optional<int> budget;
  std::string output;
};

int run_play(const PlayArgs& args) {
  const auto kind = demon::parse_demon_kind(args.demon);
  if (!kind) throw UsageError("unknown demon '" + args.demon + "'");
  std::string strategy_name = args.strategy;
  if (strategy_name.empty()) {
    strategy_name = *kind == demon::DemonKind::Vizing ? "vizing" : "konig";
  }
  const auto strategy = demon::parse_strategy_kind(strategy_name);
  if (!strategy) throw UsageError("unknown strategy '" + strategy_name + "'");
  const bool vizing = *strategy == demon::StrategyKind::Vizing;

  std::optional<demon::GameState> start;
  if (!args.game_file.empty()) {
    start = demon::parse_game(read_file(args.game_file));
  } else if (args.seed) {
    std::mt19937_64 rng(*args.seed);
    const int k = std::uniform_int_distribution<int>(1, 6)(rng);
    const int m = std::uniform_int_distribution<int>(std::max(k, 2), 8)(rng);
    start = demon::random_deal(rng, {k, m}, vizing);
  } else {
    throw UsageError("play needs a game file or --seed");
  }

  const demon::DemonPolicy demon_policy =
      args.seed ? demon::random_demon(*kind, *args.seed)
                : demon::first_legal_demon(*kind);
  demon::PlayerPolicy player;
  int budget = demon::default_budget(start->config());
  if (vizing) {
    player = demon::vizing_policy(std::make_shared<demon::VizingStrategy>(*start));
    budget = demon::vizing_budget(start->config());
  } else {
    player = demon::konig_policy();
  }
  if (args.budget) {
    if (*args.budget < 0) throw UsageError("--budget must be non-negative");
    budget = *args.budget;
  }

  const demon::Transcript t = demon::run_game(*start, player, demon_policy, budget);
  write_output(args.output, demon::to_json(t).dump(2) + "\n");
  std::ostream& summary = args.output.empty() ? std::cerr : std::cout;
  summary << "outcome: " << demon::to_string(t.outcome) << " after "
          << t.player_moves() << " player move(s), budget " << budget << "\n";
  return t.outcome == demon::Outcome::Won ? 0 : kExitFailure;
}

struct SelftestArgs {
  std::string scale = "small";
  std::uint64_t seed = 1;
  bool inject_failure = false;
};

int run_selftest_command(const SelftestArgs& args) {
  const auto scale = demon::parse_scale(args.scale);
  if (!scale) throw UsageError("scale must be small, medium or large");
  const auto results =
      demon::run_selftest({*scale, args.seed, args.inject_failure});
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << ": "
              << r.cases - r.failures << "/" << r.cases << " cases ("
              << r.seconds << " s)\n";
    if (r.failures != 0) {
      std::cout << "  first failure: " << r.first_failure << "\n";
      ++failed;
    }
  }
  std::cout << results.size() - failed << "/" << results.size()
            << " suites passed\n";
  return failed == 0 ? 0 : kExitFailure;
}

int run_serve(const std::string& bind, const std::string& log) {
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) throw UsageError("--bind expects host:port");
  const std::string host = bind.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(bind.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("bad port in --bind");
  }
  if (port < 0 || port > 65535) throw UsageError("bad port in --bind");
  std::optional<std::filesystem::path> log_path;
  if (!log.empty()) log_path = log;
  demon::SessionStore store(log_path);
  httplib::Server server;
  demon::register_routes(server, store);
  std::cout << "listening on " << host << ":" << port << std::endl;
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot listen on " << bind << "\n";
    return kExitFailure;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demon solitaire games and edge coloring"};
  app.require_subcommand(1);

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Edge-color a graph");
  color_cmd->add_option("input", color.input, "Edge-list file")->required();
  color_cmd->add_option("--mode", color.mode, "auto, konig or vizing")
      ->check(CLI::IsMember({"auto", "konig", "vizing"}));
  color_cmd->add_option("--output", color.output, "Coloring output file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an edge coloring");
  verify_cmd->add_option("graph", verify.graph, "Edge-list file")->required();
  verify_cmd->add_option("coloring", verify.coloring, "Coloring file")->required();
  verify_cmd->add_option("m", verify.m, "Number of colors")->required();

  PlayArgs play;
  auto* play_cmd = app.add_subcommand("play", "Play one game");
  play_cmd->add_option("game", play.game_file, "Game file");
  play_cmd->add_option("--demon", play.demon, "lazy, contrary, konig or vizing");
  play_cmd->add_option("--strategy", play.strategy, "konig or vizing");
  play_cmd->add_option("--seed", play.seed, "Seed for the deal and a random demon");
  play_cmd->add_option("--budget", play.budget, "Player move budget");
  play_cmd->add_option("--output", play.output, "Transcript JSON file");

  SelftestArgs selftest;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run seeded invariant suites");
  selftest_cmd->add_option("scale", selftest.scale, "small, medium or large");
  selftest_cmd->add_option("--seed", selftest.seed, "Base seed");
  selftest_cmd->add_flag("--inject-failure", selftest.inject_failure,
                         "Add one failing case");

  std::string bind = "127.0.0.1:8080";
  std::string log;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the session API over HTTP");
  serve_cmd->add_option("--bind", bind, "host:port");
  serve_cmd->add_option("--log", log, "Append session events to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*color_cmd) return run_color(color);
    if (*verify_cmd) return run_verify(verify);
    if (*play_cmd) return run_play(play);
    if (*selftest_cmd) return run_selftest_command(selftest);
    if (*serve_cmd) return run_serve(bind, log);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const demon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case demon::ErrorCode::ParseError:
      case demon::ErrorCode::ProfileUnsupported:
      case demon::ErrorCode::BadGameNumber:
      case demon::ErrorCode::BadCardNumber:
      case demon::ErrorCode::WrongStackCount:
      case demon::ErrorCode::EmptyStack:
      case demon::ErrorCode::CardOutOfRange:
      case demon::ErrorCode::DuplicateCard:
        return kExitUsage;
      default:
        return kExitFailure;
    }
  }
  return kExitUsage;
}
