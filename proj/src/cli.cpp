#include "trinim/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "trinim/api.hpp"
#include "trinim/classifier.hpp"
#include "trinim/game.hpp"
#include "trinim/server.hpp"
#include "trinim/solver.hpp"
#include "trinim/text.hpp"
#include "trinim/verify.hpp"

namespace trinim::cli {

namespace {

// Raised for bad arguments that CLI11 itself does not catch.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TrianglePosition position_arg(const std::string& text) {
  try {
    return parse_position(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Convention convention_arg(const std::string& text) {
  try {
    return parse_convention(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Count bound_arg(Count bound) {
  const Count limit = oracle_limit();
  if (bound > limit) {
    throw UsageError("--max-total " + std::to_string(bound) + " exceeds the oracle limit " +
                     std::to_string(limit) + " (raise TRINIM_ORACLE_LIMIT)");
  }
  return bound;
}

std::string move_line(const TrianglePosition& p, const TriangleMove& m) {
  return format_move(m) + " -> " + format_position(apply_move(p, m));
}

void print_moves(std::ostream& out, const std::string& format, const TrianglePosition& p,
                 Convention c, Outcome o, MatchedSet set, const std::vector<TriangleMove>& moves) {
  if (format == "records") {
    api::Json j;
    j["position"] = api::position_json(p);
    j["convention"] = convention_name(c);
    j["outcome"] = outcome_name(o);
    j["matched_set"] = set == MatchedSet::None ? api::Json(nullptr)
                                               : api::Json(std::string(matched_set_name(set)));
    j["winning_moves"] = api::Json::array();
    for (const auto& m : moves) j["winning_moves"].push_back(api::move_with_result_json(p, m));
    out << j.dump() << "\n";
    return;
  }
  out << outcome_name(o) << "\n";
  for (const auto& m : moves) out << move_line(p, m) << "\n";
}

int cmd_classify(Streams io, const std::string& pos, const std::string& conv, bool all_moves,
                 const std::string& format) {
  const auto p = position_arg(pos);
  const auto c = convention_arg(conv);
  const auto result = classify(p, c);
  std::vector<TriangleMove> moves;
  if (all_moves) {
    try {
      moves = all_winning_moves(p, c);
    } catch (const BoundExceeded& e) {
      throw UsageError(std::string(e.what()) + "; drop --all-moves for large positions");
    }
  } else if (auto m = winning_move(p, c)) {
    moves.push_back(*m);
  }
  print_moves(io.out, format, p, c, result.outcome, result.matched_set, moves);
  return kOk;
}

int cmd_best_move(Streams io, const std::string& pos, const std::string& conv,
                  const std::string& format) {
  const auto p = position_arg(pos);
  const auto c = convention_arg(conv);
  const auto m = winning_move(p, c);
  if (format == "records") {
    api::Json j;
    j["position"] = api::position_json(p);
    j["convention"] = convention_name(c);
    j["move"] = m ? api::move_with_result_json(p, *m) : api::Json(nullptr);
    io.out << j.dump() << "\n";
  } else {
    io.out << (m ? move_line(p, *m) : std::string("none")) << "\n";
  }
  return kOk;
}

int cmd_grundy(Streams io, Count bound, const std::string& format) {
  const auto table = solve_triangle(bound_arg(bound), Convention::Normal, {.grundy = true, .limit = std::nullopt});
  if (format == "csv") io.out << "x,y,z,outcome,grundy\n";
  std::string line;
  for_each_position(bound, [&](const TrianglePosition& p) {
    const std::size_t i = position_index(p);
    const auto o = outcome_name(table.outcome_at(i));
    const auto g = table.grundy_at(i);
    if (format == "csv") {
      line = format_position(p) + "," + std::string(o) + "," + std::to_string(g);
    } else {
      line = api::Json{{"x", p.x}, {"y", p.y}, {"z", p.z}, {"outcome", o}, {"grundy", g}}.dump();
    }
    io.out << line << '\n';
  });
  return kOk;
}

int cmd_verify(Streams io, Count bound, const std::string& conv, const std::string& format) {
  bound_arg(bound);
  const VerifyScope scope = conv == "normal"   ? VerifyScope::Normal
                            : conv == "misere" ? VerifyScope::Misere
                                               : VerifyScope::Both;
  const auto report = verify_theorems(bound, scope);
  if (format == "records") {
    io.out << report_summary_json(report) << "\n";
  } else {
    io.out << format_report(report) << "summary: " << report_summary_json(report) << "\n";
  }
  io.err << "verified in " << report.seconds << " s\n";
  return report.ok() ? kOk : kMismatch;
}

int cmd_play(Streams io, const std::string& start, const std::string& conv, bool human_first) {
  const auto p = position_arg(start);
  const auto c = convention_arg(conv);
  play_loop(p, c, human_first, io.in, io.out);
  return kOk;
}

int cmd_serve(Streams io, const api::ServerOptions& options) {
  if (options.service.grundy_bound > oracle_limit()) {
    throw UsageError("--grundy-bound exceeds the oracle limit " + std::to_string(oracle_limit()));
  }
  if (!api::serve(options, io.err)) {
    io.err << "error: cannot listen on " << options.host << ":" << options.port << "\n";
    return kFault;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Triangle Game solver: classify positions, find winning moves, verify against "
               "a brute-force oracle, play, and serve the JSON API"};
  app.require_subcommand(1);

  std::string pos;
  std::string conv = "normal";
  std::string format = "text";
  bool all_moves = false;
  Count max_total = 0;
  std::string verify_conv = "both";
  std::string grundy_format = "csv";
  std::string start = "5,4,3";
  bool human_first = false;
  api::ServerOptions server;

  const std::vector<std::string> conventions = {"normal", "misere"};
  const std::vector<std::string> text_formats = {"text", "records"};

  auto* classify_cmd = app.add_subcommand("classify", "P/N status and winning moves of a position");
  classify_cmd->add_option("position", pos, "x,y,z")->required();
  classify_cmd->add_option("--convention", conv)->check(CLI::IsMember(conventions));
  classify_cmd->add_flag("--all-moves", all_moves, "list every winning move, not just one");
  classify_cmd->add_option("--format", format)->check(CLI::IsMember(text_formats));

  auto* best_cmd = app.add_subcommand("best-move", "the constructive winning move, or none");
  best_cmd->add_option("position", pos, "x,y,z")->required();
  best_cmd->add_option("--convention", conv)->check(CLI::IsMember(conventions));
  best_cmd->add_option("--format", format)->check(CLI::IsMember(text_formats));

  auto* grundy_cmd = app.add_subcommand("grundy", "Grundy table for all positions up to a total");
  grundy_cmd->add_option("--max-total", max_total)->required();
  grundy_cmd->add_option("--format", grundy_format)
      ->check(CLI::IsMember(std::vector<std::string>{"csv", "records"}));

  auto* verify_cmd = app.add_subcommand("verify", "check the closed forms against the oracle");
  verify_cmd->add_option("--max-total", max_total)->required();
  verify_cmd->add_option("--convention", verify_conv)
      ->check(CLI::IsMember(std::vector<std::string>{"both", "normal", "misere"}));
  verify_cmd->add_option("--format", format)->check(CLI::IsMember(text_formats));

  auto* play_cmd = app.add_subcommand("play", "play against the engine in the terminal");
  play_cmd->add_option("--start", start, "x,y,z")->capture_default_str();
  play_cmd->add_option("--convention", conv)->check(CLI::IsMember(conventions));
  play_cmd->add_flag("--human-first", human_first);

  auto* serve_cmd = app.add_subcommand("serve", "run the JSON API and static UI server");
  serve_cmd->add_option("--port", server.port)->capture_default_str();
  serve_cmd->add_option("--host", server.host)->capture_default_str();
  serve_cmd->add_option("--static-dir", server.static_dir);
  serve_cmd->add_option("--allow-origin", server.allow_origin);
  serve_cmd->add_option("--grundy-bound", server.service.grundy_bound)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(io, pos, conv, all_moves, format);
    if (*best_cmd) return cmd_best_move(io, pos, conv, format);
    if (*grundy_cmd) return cmd_grundy(io, max_total, grundy_format);
    if (*verify_cmd) return cmd_verify(io, max_total, verify_conv, format);
    if (*play_cmd) return cmd_play(io, start, conv, human_first);
    if (*serve_cmd) return cmd_serve(io, server);
  } catch (const UsageError& e) {
    io.err << "error: " << e.what() << "\nRun with --help for more information.\n";
    return kUsage;
  } catch (const std::exception& e) {
    io.err << "internal error: " << e.what() << "\n";
    return kFault;
  }
  return kUsage;
}

namespace {

std::string board(const TrianglePosition& p) {
  return "X=" + std::to_string(p.x) + " Y=" + std::to_string(p.y) + " Z=" + std::to_string(p.z);
}

}  // namespace

GameResult play_loop(TrianglePosition start, Convention convention, bool human_first,
                     std::istream& in, std::ostream& out) {
  GameResult result{std::nullopt, start, {}};
  TrianglePosition p = start;
  Player to_move = human_first ? Player::Human : Player::Engine;
  out << "Triangle Game, " << convention_name(convention) << " play ("
      << (convention == Convention::Normal ? "last mover wins" : "last mover loses") << ")\n";

  while (!is_terminal(p)) {
    out << board(p) << "\n";
    if (to_move == Player::Engine) {
      const auto m = *engine_move(p, convention);
      p = apply_move(p, m);
      result.moves.emplace_back(Player::Engine, m);
      out << "engine plays " << format_move(m) << "\n";
      to_move = Player::Human;
      continue;
    }
    out << "your move (e.g. XY 1 0, or quit): " << std::flush;
    std::string line;
    if (!std::getline(in, line) || line == "quit") {
      out << "\ngame abandoned\n";
      result.final_position = p;
      return result;
    }
    try {
      const auto m = parse_move(line);
      p = apply_move(p, m);
      result.moves.emplace_back(Player::Human, m);
      to_move = Player::Engine;
    } catch (const std::exception& e) {
      out << "invalid move: " << e.what() << "\n";
    }
  }

  out << board(p) << "\n";
  const Player other = to_move == Player::Human ? Player::Engine : Player::Human;
  result.winner = mover_wins_at_terminal(convention) ? to_move : other;
  result.final_position = p;
  out << "game over: " << (*result.winner == Player::Human ? "you win" : "engine wins") << "\n";
  return result;
}

}  // namespace trinim::cli
