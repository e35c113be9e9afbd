#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "trinim/types.hpp"

namespace trinim {

/// Which closed-form family a P-position belongs to.
///   NormalSmall  (0,0,0), (1,1,0), (1,0,1), (0,1,1)
///   Normal       any other rotation of (b+c, b, c) with b >= phi*c
///   MisereSmall  (1,0,0), (0,1,0), (0,0,1), (1,1,1)
///   MisereLarge  rotation of (b+c, b, c) with b >= phi*c and b+c >= 2
enum class MatchedSet : std::uint8_t { None, Normal, NormalSmall, MisereSmall, MisereLarge };

/// "S", "S1+", "S1-", "S2-"; empty for None.
std::string_view matched_set_name(MatchedSet s);

struct Classification {
  Outcome outcome = Outcome::N;
  MatchedSet matched_set = MatchedSet::None;
  /// Index into rotations(p) of the first rotation (a,b,c) with a = b + c
  /// and b >= phi*c, when one exists.
  std::optional<int> witness_rotation;
};

/// Smallest k such that rotations(p)[k] = (a,b,c) has a = b + c and
/// geq_phi(b, c).
std::optional<int> normal_p_witness(const TrianglePosition& p);

/// Membership in the normal-play P-set.
inline bool in_normal_p_set(const TrianglePosition& p) { return normal_p_witness(p).has_value(); }

/// Membership in the misere P-set.
bool in_misere_p_set(const TrianglePosition& p);

Outcome normal_outcome(const TrianglePosition& p);
Outcome misere_outcome(const TrianglePosition& p);
Outcome outcome(const TrianglePosition& p, Convention c);

Classification classify(const TrianglePosition& p, Convention c);

/// Index of the rotation that puts a maximal coordinate first, smallest index
/// on ties.
int max_first_rotation(const TrianglePosition& p);

/// The move built in the normal-play winning argument; empty iff p is a P-position.
std::optional<TriangleMove> winning_move_normal(const TrianglePosition& p);

/// The move built in the misere winning argument; empty iff p is a misere
/// P-position or the terminal.
std::optional<TriangleMove> winning_move_misere(const TrianglePosition& p);

std::optional<TriangleMove> winning_move(const TrianglePosition& p, Convention c);

/// Engine policy: the constructive winning move when one exists, otherwise
/// the first legal move. Empty only at the terminal.
std::optional<TriangleMove> engine_move(const TrianglePosition& p, Convention c);

/// Whether the player left to move at the terminal wins (misere) or loses
/// (normal play: the last mover wins).
constexpr bool mover_wins_at_terminal(Convention c) { return c == Convention::Misere; }

/// Every legal move landing on a P-position under c, in legal_moves order.
///
/// Only the candidate targets that can possibly be P-positions are visited
/// (for each kept-source amount, at most five landing values on the edge
/// target), so the cost is linear in the largest coordinate rather than
/// quadratic. Throws BoundExceeded when a coordinate is above `coord_limit`.
std::vector<TriangleMove> all_winning_moves(const TrianglePosition& p, Convention c,
                                            Count coord_limit = 10'000'000);

}  // namespace trinim
