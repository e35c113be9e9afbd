#include "trinim/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "trinim/game.hpp"
#include "trinim/text.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace trinim {

Count oracle_limit() {
  if (const char* env = std::getenv("TRINIM_ORACLE_LIMIT")) {
    try {
      return parse_count(env, kCoordMax);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return kDefaultOracleLimit;
}

std::uint32_t mex(const std::vector<std::uint32_t>& values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (std::uint32_t v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  std::uint32_t m = 0;
  while (seen[m]) ++m;
  return m;
}

void for_each_position(Count bound, const std::function<void(const TrianglePosition&)>& fn) {
  for (Count n = 0; n <= bound; ++n) {
    for (Count x = 0; x <= n; ++x) {
      for (Count y = 0; y <= n - x; ++y) fn({x, y, n - x - y});
    }
  }
}

SolveTable::SolveTable(Count bound, Convention convention, bool with_grundy)
    : bound_(bound),
      convention_(convention),
      outcomes_(position_count(bound), static_cast<std::uint8_t>(Outcome::N)),
      grundy_(with_grundy ? position_count(bound) : 0, 0) {}

std::size_t SolveTable::checked_index(const TrianglePosition& p) const {
  if (!contains(p)) {
    throw BoundExceeded("position " + format_position(p) + " is outside the table bound " +
                        std::to_string(bound_));
  }
  return position_index(p);
}

Outcome SolveTable::outcome(const TrianglePosition& p) const {
  return outcome_at(checked_index(p));
}

std::uint32_t SolveTable::grundy(const TrianglePosition& p) const {
  const std::size_t i = checked_index(p);
  if (!has_grundy()) throw std::logic_error("table was solved without Grundy values");
  return grundy_at(i);
}

namespace {

void check_bound(Count bound, const SolveOptions& options) {
  const Count limit = options.limit.value_or(oracle_limit());
  if (bound > limit) {
    throw BoundExceeded("bound " + std::to_string(bound) + " exceeds the oracle limit " +
                        std::to_string(limit));
  }
}

Outcome terminal_outcome(Convention c) {
  return c == Convention::Normal ? Outcome::P : Outcome::N;
}

// Visits the dense index of every option of (x, y, z); stops early when
// visit returns false.
template <typename Visit>
void for_each_option_index(const Count (&v)[3], Visit&& visit) {
  for (int s = 0; s < 3; ++s) {
    const int t = (s + 1) % 3;
    const Count source = v[s];
    for (Count kept = 0; kept < source; ++kept) {
      const Count take = source - kept;
      for (Count landed = v[t]; landed < v[t] + take; ++landed) {
        Count w[3] = {v[0], v[1], v[2]};
        w[s] = kept;
        w[t] = landed;
        if (!visit(position_index({w[0], w[1], w[2]}))) return;
      }
    }
  }
}

// Solves one position whose options are all already in the table.
void solve_one(SolveTable& table, Convention convention, bool grundy, const Count (&v)[3],
               std::vector<std::uint8_t>& seen) {
  const std::size_t self = position_index({v[0], v[1], v[2]});
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) {
    table.set_outcome(self, terminal_outcome(convention));
    return;
  }
  if (!grundy) {
    bool any_p = false;
    for_each_option_index(v, [&](std::size_t i) {
      any_p = table.outcome_at(i) == Outcome::P;
      return !any_p;
    });
    table.set_outcome(self, any_p ? Outcome::N : Outcome::P);
    return;
  }
  const std::size_t options = static_cast<std::size_t>(legal_move_count({v[0], v[1], v[2]}));
  seen.assign(options + 1, 0);
  for_each_option_index(v, [&](std::size_t i) {
    const std::uint32_t g = table.grundy_at(i);
    if (g < seen.size()) seen[g] = 1;
    return true;
  });
  std::uint32_t m = 0;
  while (seen[m]) ++m;
  table.set_grundy(self, m);
  table.set_outcome(self, m == 0 ? Outcome::P : Outcome::N);
}

}  // namespace

SolveTable solve_triangle(Count bound, Convention convention, const SolveOptions& options) {
  check_bound(bound, options);
  const bool grundy = options.grundy && convention == Convention::Normal;
  SolveTable table(bound, convention, grundy);

  for (Count n = 0; n <= bound; ++n) {
    const std::int64_t rows = static_cast<std::int64_t>(n) + 1;
#pragma omp parallel
    {
      std::vector<std::uint8_t> seen;
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t row = 0; row < rows; ++row) {
        // Larger x first: those rows carry the most options.
        const Count x = n - static_cast<Count>(row);
        for (Count y = 0; y <= n - x; ++y) {
          const Count v[3] = {x, y, n - x - y};
          solve_one(table, convention, grundy, v, seen);
        }
      }
    }
  }
  return table;
}

namespace {

class SerialSolver {
 public:
  SerialSolver(SolveTable& table, bool grundy)
      : table_(table), grundy_(grundy), done_(table.size(), false) {}

  void solve(const TrianglePosition& p) {
    const std::size_t i = position_index(p);
    if (done_[i]) return;
    const auto moves = legal_moves(p);
    if (moves.empty()) {
      table_.set_outcome(i, terminal_outcome(table_.convention()));
    } else if (grundy_) {
      std::vector<std::uint32_t> option_values;
      option_values.reserve(moves.size());
      for (const auto& m : moves) {
        const auto next = apply_move(p, m);
        solve(next);
        option_values.push_back(table_.grundy_at(position_index(next)));
      }
      const std::uint32_t g = mex(option_values);
      table_.set_grundy(i, g);
      table_.set_outcome(i, g == 0 ? Outcome::P : Outcome::N);
    } else {
      bool any_p = false;
      for (const auto& m : moves) {
        const auto next = apply_move(p, m);
        solve(next);
        any_p = any_p || table_.outcome_at(position_index(next)) == Outcome::P;
      }
      table_.set_outcome(i, any_p ? Outcome::N : Outcome::P);
    }
    done_[i] = true;
  }

 private:
  SolveTable& table_;
  bool grundy_;
  std::vector<bool> done_;
};

}  // namespace

SolveTable solve_triangle_serial(Count bound, Convention convention, const SolveOptions& options) {
  check_bound(bound, options);
  const bool grundy = options.grundy && convention == Convention::Normal;
  SolveTable table(bound, convention, grundy);
  SerialSolver solver(table, grundy);
  // Depth-first from the top level down; recursion depth is at most bound.
  for (Count n = bound + 1; n-- > 0;) {
    for (Count x = 0; x <= n; ++x) {
      for (Count y = 0; y <= n - x; ++y) solver.solve({x, y, n - x - y});
    }
  }
  return table;
}

std::size_t GeneralPositionHash::operator()(const GeneralPosition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Count v : p) {
    h ^= std::hash<Count>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

GeneralSolution solve_general(const Digraph& g, const GeneralPosition& start,
                              Convention convention, std::size_t state_budget) {
  check_position(g, start);
  GeneralSolution memo;

  struct Frame {
    GeneralPosition position;
    std::vector<GeneralMove> moves;
    std::size_t next = 0;
    bool any_p = false;
  };
  std::vector<Frame> stack;
  auto push = [&](GeneralPosition p) {
    if (memo.size() + stack.size() >= state_budget) {
      throw StateBudgetExceeded("more than " + std::to_string(state_budget) +
                                " positions are reachable");
    }
    auto moves = general_legal_moves(g, p);
    stack.push_back({std::move(p), std::move(moves)});
  };

  push(start);
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.moves.size()) {
      const Outcome o = top.moves.empty() ? terminal_outcome(convention)
                        : top.any_p       ? Outcome::N
                                          : Outcome::P;
      memo.emplace(std::move(top.position), o);
      stack.pop_back();
      continue;
    }
    GeneralPosition child = general_apply(g, top.position, top.moves[top.next]);
    if (const auto it = memo.find(child); it != memo.end()) {
      top.any_p = top.any_p || it->second == Outcome::P;
      ++top.next;
    } else {
      push(std::move(child));
    }
  }
  return memo;
}

}  // namespace trinim
