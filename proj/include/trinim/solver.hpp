#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "trinim/digraph.hpp"
#include "trinim/types.hpp"

namespace trinim {

/// Oracle bound used when a caller does not pass one: TRINIM_ORACLE_LIMIT
/// when set to a valid integer, else 150.
Count oracle_limit();

inline constexpr Count kDefaultOracleLimit = 150;

/// Smallest non-negative integer absent from `values` (duplicates allowed).
std::uint32_t mex(const std::vector<std::uint32_t>& values);

/// Number of positions with x + y + z <= bound.
constexpr std::size_t position_count(Count bound) {
  const std::size_t t = bound;
  return (t + 1) * (t + 2) * (t + 3) / 6;
}

/// Dense index in ascending (total, x, y) order.
constexpr std::size_t position_index(const TrianglePosition& p) {
  const std::size_t n = p.x + p.y + p.z;
  const std::size_t x = p.x;
  return n * (n + 1) * (n + 2) / 6 + x * (n + 1) - x * (x - 1) / 2 + p.y;
}

/// Calls fn(p) for every position with total <= bound in ascending
/// (total, x, y) order, which is also position_index order.
void for_each_position(Count bound, const std::function<void(const TrianglePosition&)>& fn);

/// Outcomes (and for normal play, Grundy values) of every Triangle Game
/// position with total <= bound. Immutable once built.
class SolveTable {
 public:
  SolveTable(Count bound, Convention convention, bool with_grundy);

  Count bound() const { return bound_; }
  Convention convention() const { return convention_; }
  bool has_grundy() const { return !grundy_.empty(); }
  std::size_t size() const { return outcomes_.size(); }
  bool contains(const TrianglePosition& p) const { return p.x + p.y + p.z <= bound_; }

  /// Throws BoundExceeded outside the table.
  Outcome outcome(const TrianglePosition& p) const;
  /// Throws BoundExceeded outside the table, std::logic_error without a Grundy pass.
  std::uint32_t grundy(const TrianglePosition& p) const;

  Outcome outcome_at(std::size_t index) const { return static_cast<Outcome>(outcomes_[index]); }
  std::uint32_t grundy_at(std::size_t index) const { return grundy_[index]; }

  /// Writers used by the solvers; all writes happen before the table is shared.
  void set_outcome(std::size_t index, Outcome o) { outcomes_[index] = static_cast<std::uint8_t>(o); }
  void set_grundy(std::size_t index, std::uint32_t g) { grundy_[index] = g; }

  friend bool operator==(const SolveTable&, const SolveTable&) = default;

 private:
  std::size_t checked_index(const TrianglePosition& p) const;

  Count bound_;
  Convention convention_;
  std::vector<std::uint8_t> outcomes_;
  std::vector<std::uint32_t> grundy_;
};

struct SolveOptions {
  /// Fill Grundy values too. Only honoured for normal play.
  bool grundy = true;
  /// Largest accepted bound; oracle_limit() when empty.
  std::optional<Count> limit;
};

/// Level-synchronous sweep by token total. Positions of one total depend only
/// on smaller totals, so each level is solved in parallel (OpenMP) and the
/// levels are separated by a barrier. Throws BoundExceeded above the limit.
SolveTable solve_triangle(Count bound, Convention convention, const SolveOptions& options = {});

/// Serial reference: memoized recursion over legal_moves/apply_move straight
/// from the P/N recurrences, in depth-first order. Kept for cross-checking the
/// parallel sweep.
SolveTable solve_triangle_serial(Count bound, Convention convention,
                                 const SolveOptions& options = {});

struct GeneralPositionHash {
  std::size_t operator()(const GeneralPosition& p) const noexcept;
};

using GeneralSolution = std::unordered_map<GeneralPosition, Outcome, GeneralPositionHash>;

inline constexpr std::size_t kDefaultStateBudget = 2'000'000;

/// Outcome of every position reachable from `start` on an arbitrary digraph.
/// A position is terminal when no arc has a token at its source, which can
/// leave tokens stranded on sinks. Throws StateBudgetExceeded when more than
/// `state_budget` positions are reachable.
GeneralSolution solve_general(const Digraph& g, const GeneralPosition& start,
                              Convention convention,
                              std::size_t state_budget = kDefaultStateBudget);

}  // namespace trinim
