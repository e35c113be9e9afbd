#include "trinim/digraph.hpp"

#include <algorithm>
#include <string>

namespace trinim {

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
  if (vertex_count_ == 0) throw DomainError("digraph needs at least one vertex");
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.source >= vertex_count_ || a.target >= vertex_count_) {
      throw DomainError("arc endpoint out of range");
    }
    if (a.source == a.target) {
      throw DomainError("self-loop at vertex " + std::to_string(a.source));
    }
    if (std::find(arcs_.begin(), arcs_.begin() + static_cast<std::ptrdiff_t>(i), a) !=
        arcs_.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw DomainError("duplicate arc " + std::to_string(a.source) + "->" +
                        std::to_string(a.target));
    }
  }
}

Digraph Digraph::triangle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

void check_position(const Digraph& g, const GeneralPosition& p) {
  if (p.size() != g.vertex_count()) {
    throw DomainError("position has " + std::to_string(p.size()) + " entries, digraph has " +
                      std::to_string(g.vertex_count()) + " vertices");
  }
}

std::vector<GeneralMove> general_legal_moves(const Digraph& g, const GeneralPosition& p) {
  check_position(g, p);
  std::vector<GeneralMove> moves;
  const auto arcs = g.arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const Count source = p[arcs[a].source];
    for (Count take = 1; take <= source; ++take) {
      for (Count give = 0; give < take; ++give) moves.push_back({a, take, give});
    }
  }
  return moves;
}

GeneralPosition general_apply(const Digraph& g, const GeneralPosition& p, const GeneralMove& m) {
  check_position(g, p);
  if (m.arc >= g.arcs().size()) throw IllegalMove("arc index out of range");
  const Arc& a = g.arcs()[m.arc];
  if (m.take == 0) throw IllegalMove("take must be at least 1");
  if (m.give >= m.take) throw IllegalMove("give must be smaller than take");
  if (m.take > p[a.source]) throw IllegalMove("take exceeds the tokens at the arc source");
  GeneralPosition next = p;
  next[a.source] -= m.take;
  next[a.target] += m.give;
  return next;
}

}  // namespace trinim
