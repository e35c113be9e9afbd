#include "trinim/game.hpp"

#include <string>

namespace trinim {

std::vector<TriangleMove> legal_moves(const TrianglePosition& p) {
  std::vector<TriangleMove> moves;
  moves.reserve(static_cast<std::size_t>(legal_move_count(p)));
  for (Edge e : kEdges) {
    const Count source = p[edge_source(e)];
    for (Count take = 1; take <= source; ++take) {
      for (Count give = 0; give < take; ++give) moves.push_back({e, take, give});
    }
  }
  return moves;
}

Count legal_move_count(const TrianglePosition& p) {
  auto tri = [](Count n) { return n * (n + 1) / 2; };
  return tri(p.x) + tri(p.y) + tri(p.z);
}

std::optional<TriangleMove> first_legal_move(const TrianglePosition& p) {
  for (Edge e : kEdges) {
    if (p[edge_source(e)] > 0) return TriangleMove{e, 1, 0};
  }
  return std::nullopt;
}

bool is_legal(const TrianglePosition& p, const TriangleMove& m) {
  return m.take >= 1 && m.take <= p[edge_source(m.edge)] && m.give < m.take;
}

TrianglePosition apply_move(const TrianglePosition& p, const TriangleMove& m) {
  if (m.take == 0) throw IllegalMove("take must be at least 1");
  if (m.give >= m.take) throw IllegalMove("give must be smaller than take");
  if (m.take > p[edge_source(m.edge)]) {
    throw IllegalMove("take " + std::to_string(m.take) + " exceeds the " +
                      std::to_string(p[edge_source(m.edge)]) + " tokens at the edge source");
  }
  TrianglePosition next = p;
  next[edge_source(m.edge)] -= m.take;
  next[edge_target(m.edge)] += m.give;
  return next;
}

}  // namespace trinim
