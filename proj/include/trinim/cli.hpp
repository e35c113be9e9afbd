#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "trinim/types.hpp"

namespace trinim::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kMismatch = 2;
inline constexpr int kFault = 3;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Parses argv and dispatches to a subcommand:
///   classify <x,y,z> [--convention normal|misere] [--all-moves] [--format text|records]
///   best-move <x,y,z> [--convention ...] [--format text|records]
///   grundy --max-total T [--format csv|records]
///   verify --max-total T [--convention both|normal|misere] [--format text|records]
///   play [--start x,y,z] [--convention ...] [--human-first]
///   serve [--port P] [--host H] [--static-dir DIR] [--allow-origin O] [--grundy-bound T]
int run(int argc, const char* const* argv, Streams io);

enum class Player { Human, Engine };

struct GameResult {
  /// Empty when the human quit or input ended before the terminal.
  std::optional<Player> winner;
  TrianglePosition final_position;
  std::vector<std::pair<Player, TriangleMove>> moves;
};

/// Terminal-mode game against the engine. Human moves are read one per line
/// as "XY take give"; invalid input re-prompts without using the turn, and
/// "quit" or end of input stops the game.
GameResult play_loop(TrianglePosition start, Convention convention, bool human_first,
                     std::istream& in, std::ostream& out);

}  // namespace trinim::cli
