#pragma once

#include <array>
#include <optional>
#include <vector>

#include "trinim/types.hpp"

namespace trinim {

/// Every legal move from p, ordered by edge (XY, YZ, ZX), then ascending
/// take, then ascending give.
std::vector<TriangleMove> legal_moves(const TrianglePosition& p);

/// x(x+1)/2 + y(y+1)/2 + z(z+1)/2, without enumerating.
Count legal_move_count(const TrianglePosition& p);

/// First entry of legal_moves(p), computed in O(1). Empty at the terminal.
std::optional<TriangleMove> first_legal_move(const TrianglePosition& p);

bool is_legal(const TrianglePosition& p, const TriangleMove& m);

/// Throws IllegalMove unless 1 <= take <= tokens at the source and give < take.
TrianglePosition apply_move(const TrianglePosition& p, const TriangleMove& m);

constexpr bool is_terminal(const TrianglePosition& p) { return p.x == 0 && p.y == 0 && p.z == 0; }

constexpr Count total_tokens(const TrianglePosition& p) { return p.x + p.y + p.z; }

/// [(x,y,z), (y,z,x), (z,x,y)]. Rotation k moves original vertex k into slot X.
constexpr std::array<TrianglePosition, 3> rotations(const TrianglePosition& p) {
  return {TrianglePosition{p.x, p.y, p.z}, TrianglePosition{p.y, p.z, p.x},
          TrianglePosition{p.z, p.x, p.y}};
}

/// Maps an edge expressed in the frame of rotations(p)[k] back to p's frame.
constexpr Edge unrotate(Edge e, int k) {
  return static_cast<Edge>((static_cast<int>(e) + k) % 3);
}

}  // namespace trinim
