// SPDX-License-Identifier: Apache-2.0
#include "qgt/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "qgt/equilibrium.hpp"
#include "qgt/io.hpp"
#include "qgt/linalg.hpp"

namespace qgt {

namespace {

namespace fs = std::filesystem;

void print_strategy(std::size_t player, const StrategyDensity& s) {
  std::printf("strategy[%zu]:\n%s", player + 1, format_matrix(s.rho).c_str());
}

int cmd_demo(const std::string& name, const fs::path& out_dir) {
  GameDefinition g;
  if (name == "pfg") {
    g = make_pfg();
  } else if (name == "sfg") {
    g = make_sfg();
  } else {
    std::fprintf(stderr, "error: unknown demo '%s' (expected pfg or sfg)\n", name.c_str());
    return 2;
  }
  fs::create_directories(out_dir);
  const fs::path game_path = out_dir / (name + "_game.json");
  save_game(g, game_path);
  std::printf("wrote %s\n", game_path.string().c_str());
  const auto hs = build_all_payoff_operators(g);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const fs::path h_path = out_dir / (name + "_h" + std::to_string(i + 1) + ".json");
    save_matrix(hs[i].matrix, h_path);
    std::printf("wrote %s\n", h_path.string().c_str());
  }
  return 0;
}

int cmd_payoff(const fs::path& game_file, std::size_t player, const std::string& out) {
  const GameDefinition g = load_game(game_file);
  if (player < 1 || player > g.player_count())
    throw ValidationError("player must be between 1 and " + std::to_string(g.player_count()));
  const PayoffOperator h = build_payoff_operator(g, player - 1);
  const double residual = max_abs_diff(h.matrix, adjoint(h.matrix));
  if (out.empty()) {
    std::fprintf(stderr, "dim: %zu\nhermiticity residual: %s\n", h.joint_dim,
                 format_real(residual).c_str());
    std::fputs(matrix_document(h.matrix).c_str(), stdout);
  } else {
    save_matrix(h.matrix, out);
    std::printf("dim: %zu\nhermiticity residual: %s\nwrote %s\n", h.joint_dim,
                format_real(residual).c_str(), out.c_str());
  }
  return 0;
}

int cmd_eval(const fs::path& game_file, const fs::path& profile_file) {
  const GameDefinition g = load_game(game_file);
  const auto states = load_profile(profile_file, g);
  const auto hs = build_all_payoff_operators(g);
  const auto js = joint_state(g, states);
  for (std::size_t i = 0; i < hs.size(); ++i)
    std::printf("payoff[%zu]: %s\n", i + 1, format_real(expected_payoff(js, hs[i])).c_str());
  return 0;
}

int cmd_solve(const fs::path& game_file, const std::string& mode_name, double eps,
              std::size_t max_iters, std::uint64_t seed) {
  const GameDefinition g = load_game(game_file);
  const SolveMode mode =
      mode_name == "classical" ? SolveMode::ClassicalDiagonal : SolveMode::OperatorDensity;
  const auto hs = build_all_payoff_operators(g);
  const SolveReport rep = solve(g, hs, mode, eps, max_iters, seed);
  std::printf("mode: %s\n", mode_name.c_str());
  std::printf("seed: %llu\n", static_cast<unsigned long long>(seed));
  std::printf("iterations: %zu\n", rep.iterations);
  std::printf("converged: %s\n", rep.converged ? "yes" : "no");
  std::printf("exploitability: %s\n", format_real(rep.exploitability).c_str());
  for (std::size_t i = 0; i < rep.payoffs.size(); ++i)
    std::printf("payoff[%zu]: %s\n", i + 1, format_real(rep.payoffs[i]).c_str());
  for (std::size_t i = 0; i < rep.profile.states.size(); ++i)
    print_strategy(i, rep.profile.states[i]);
  return rep.converged ? 0 : 1;
}

int cmd_check(const fs::path& game_file, std::size_t trials, std::uint64_t seed) {
  const GameDefinition g = load_game(game_file);
  const ConsistencyReport rep = consistency_check(g, trials, seed);
  std::printf("trials: %zu\n", rep.trials);
  std::printf("max deviation: %s\n", format_real(rep.max_deviation).c_str());
  std::printf("result: %s\n", rep.pass ? "PASS" : "FAIL");
  return rep.pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"density-matrix games on classical and quantum objects"};
  app.require_subcommand(1);

  auto* demo = app.add_subcommand("demo", "write a built-in demo game and its payoff operators");
  std::string demo_name;
  std::string demo_out = ".";
  demo->add_option("name", demo_name, "demo name: pfg or sfg")->required();
  demo->add_option("--out", demo_out, "output directory");

  auto* payoff = app.add_subcommand("payoff", "emit a player's payoff operator");
  std::string payoff_game;
  std::size_t payoff_player = 1;
  std::string payoff_out;
  payoff->add_option("game", payoff_game, "game file")->required();
  payoff->add_option("player", payoff_player, "player index (1-based)")->required();
  payoff->add_option("--out", payoff_out, "output file (defaults to stdout)");

  auto* eval = app.add_subcommand("eval", "evaluate expected payoffs of a strategy profile");
  std::string eval_game, eval_profile;
  eval->add_option("game", eval_game, "game file")->required();
  eval->add_option("profile", eval_profile, "profile file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "search for an approximate Nash equilibrium");
  std::string solve_game;
  std::string solve_mode = "operator";
  double solve_eps = 1e-6;
  std::size_t solve_iters = 100000;
  std::uint64_t solve_seed = 1;
  solve_cmd->add_option("game", solve_game, "game file")->required();
  solve_cmd->add_option("--mode", solve_mode, "operator or classical")
      ->check(CLI::IsMember({"operator", "classical"}));
  solve_cmd->add_option("--eps", solve_eps, "target exploitability")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-iters", solve_iters, "iteration budget");
  solve_cmd->add_option("--seed", solve_seed, "random seed");

  auto* check = app.add_subcommand("check", "compare trace-formula and direct payoffs");
  std::string check_game;
  std::size_t check_trials = 1000;
  std::uint64_t check_seed = 1;
  check->add_option("game", check_game, "game file")->required();
  check->add_option("--trials", check_trials, "number of random profiles");
  check->add_option("--seed", check_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*demo) return cmd_demo(demo_name, demo_out);
    if (*payoff) return cmd_payoff(payoff_game, payoff_player, payoff_out);
    if (*eval) return cmd_eval(eval_game, eval_profile);
    if (*solve_cmd) return cmd_solve(solve_game, solve_mode, solve_eps, solve_iters, solve_seed);
    if (*check) return cmd_check(check_game, check_trials, check_seed);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 2;
}

}  // namespace qgt
