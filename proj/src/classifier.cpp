#include "trinim/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "trinim/game.hpp"
#include "trinim/golden.hpp"

namespace trinim {

namespace {

bool is_misere_small(const TrianglePosition& p) {
  return p == TrianglePosition{1, 0, 0} || p == TrianglePosition{0, 1, 0} ||
         p == TrianglePosition{0, 0, 1} || p == TrianglePosition{1, 1, 1};
}

// Builds the move in p's frame from a move computed in rotation k's frame.
TriangleMove from_rotated(int k, Edge e, Count take, Count give) {
  return {unrotate(e, k), take, give};
}

}  // namespace

std::string_view matched_set_name(MatchedSet s) {
  switch (s) {
    case MatchedSet::None: return "";
    case MatchedSet::Normal: return "S";
    case MatchedSet::NormalSmall: return "S1+";
    case MatchedSet::MisereSmall: return "S1-";
    case MatchedSet::MisereLarge: return "S2-";
  }
  return "";
}

std::optional<int> normal_p_witness(const TrianglePosition& p) {
  const auto rots = rotations(p);
  for (int k = 0; k < 3; ++k) {
    const auto& [a, b, c] = rots[k];
    if (a == b + c && geq_phi(b, c)) return k;
  }
  return std::nullopt;
}

bool in_misere_p_set(const TrianglePosition& p) {
  if (is_misere_small(p)) return true;
  // Every coordinate of a witness rotation is bounded by a = b + c, so the
  // large family is the normal family minus positions with total <= 2.
  return total_tokens(p) >= 4 && normal_p_witness(p).has_value();
}

Outcome normal_outcome(const TrianglePosition& p) {
  return in_normal_p_set(p) ? Outcome::P : Outcome::N;
}

Outcome misere_outcome(const TrianglePosition& p) {
  return in_misere_p_set(p) ? Outcome::P : Outcome::N;
}

Outcome outcome(const TrianglePosition& p, Convention c) {
  return c == Convention::Normal ? normal_outcome(p) : misere_outcome(p);
}

Classification classify(const TrianglePosition& p, Convention c) {
  Classification result;
  result.witness_rotation = normal_p_witness(p);
  if (c == Convention::Normal) {
    if (result.witness_rotation) {
      result.outcome = Outcome::P;
      result.matched_set = total_tokens(p) <= 2 ? MatchedSet::NormalSmall : MatchedSet::Normal;
    }
  } else if (is_misere_small(p)) {
    result.outcome = Outcome::P;
    result.matched_set = MatchedSet::MisereSmall;
  } else if (result.witness_rotation && total_tokens(p) >= 4) {
    result.outcome = Outcome::P;
    result.matched_set = MatchedSet::MisereLarge;
  }
  if (result.matched_set == MatchedSet::None || result.matched_set == MatchedSet::MisereSmall) {
    result.witness_rotation.reset();
  }
  return result;
}

int max_first_rotation(const TrianglePosition& p) {
  const Count top = std::max({p.x, p.y, p.z});
  return p.x == top ? 0 : p.y == top ? 1 : 2;
}

std::optional<TriangleMove> winning_move_normal(const TrianglePosition& p) {
  if (in_normal_p_set(p)) return std::nullopt;
  const int k = max_first_rotation(p);
  const auto [x, y, z] = rotations(p)[k];

  // (1) z >= y: empty X and top Y up to z, landing on (0, z, z).
  if (z >= y) return from_rotated(k, Edge::XY, x, z - y);
  // (2) z < y < phi*z: shrink X to y - z, landing on (y - z, y, z).
  if (!geq_phi(y, z)) return from_rotated(k, Edge::XY, x - (y - z), 0);
  // (3) y >= phi*z and x > y + z: shrink X to y + z.
  if (x > y + z) return from_rotated(k, Edge::XY, x - (y + z), 0);
  // (4) y >= phi*z and x < y + z: empty Y and top Z up to x, landing on (x, 0, x).
  if (x < y + z) return from_rotated(k, Edge::YZ, y, x - z);
  throw std::logic_error("normal-play case analysis missed " + std::to_string(p.x) + "," +
                         std::to_string(p.y) + "," + std::to_string(p.z));
}

std::optional<TriangleMove> winning_move_misere(const TrianglePosition& p) {
  if (is_terminal(p) || in_misere_p_set(p)) return std::nullopt;
  const int k = max_first_rotation(p);
  const auto [x, y, z] = rotations(p)[k];

  if (z >= y) {
    if (z == 0) return from_rotated(k, Edge::XY, x - 1, 0);        // -> (1,0,0)
    if (z == 1 && y == 0) return from_rotated(k, Edge::XY, x, 0);  // -> (0,0,1)
    if (z == 1) return from_rotated(k, Edge::XY, x - 1, 0);        // -> (1,1,1)
    return from_rotated(k, Edge::XY, x, z - y);                    // -> (0,z,z)
  }
  if (y == 1 && z == 0) return from_rotated(k, Edge::XY, x, 0);  // -> (0,1,0)
  // y > z and y >= 2: the normal-play reply lands on a large family member.
  auto move = winning_move_normal(p);
  if (!move) {
    throw std::logic_error("misere case analysis reached a normal P-position");
  }
  return move;
}

std::optional<TriangleMove> winning_move(const TrianglePosition& p, Convention c) {
  return c == Convention::Normal ? winning_move_normal(p) : winning_move_misere(p);
}

std::optional<TriangleMove> engine_move(const TrianglePosition& p, Convention c) {
  if (auto move = winning_move(p, c)) return move;
  return first_legal_move(p);
}

std::vector<TriangleMove> all_winning_moves(const TrianglePosition& p, Convention c,
                                            Count coord_limit) {
  if (std::max({p.x, p.y, p.z}) > coord_limit) {
    throw BoundExceeded("winning-move enumeration is limited to coordinates <= " +
                        std::to_string(coord_limit));
  }
  std::vector<TriangleMove> moves;
  for (Edge e : kEdges) {
    const int s = edge_source(e);
    const int t = edge_target(e);
    const int o = 3 - s - t;
    const Count source = p[s];
    const Count target = p[t];
    const Count other = p[o];
    // take ascending means kept source amount descending.
    for (Count take = 1; take <= source; ++take) {
      const Count kept = source - take;
      // A P-target has one coordinate equal to the sum of the other two, or
      // (misere only) every coordinate in {0, 1}.
      Count candidates[5];
      int n = 0;
      if (kept >= other) candidates[n++] = kept - other;
      candidates[n++] = kept + other;
      if (other >= kept) candidates[n++] = other - kept;
      if (c == Convention::Misere) {
        candidates[n++] = 0;
        candidates[n++] = 1;
      }
      std::sort(candidates, candidates + n);
      n = static_cast<int>(std::unique(candidates, candidates + n) - candidates);
      for (int i = 0; i < n; ++i) {
        const Count landed = candidates[i];
        if (landed < target || landed - target >= take) continue;
        TrianglePosition next = p;
        next[s] = kept;
        next[t] = landed;
        if (outcome(next, c) == Outcome::P) moves.push_back({e, take, landed - target});
      }
    }
  }
  return moves;
}

}  // namespace trinim
