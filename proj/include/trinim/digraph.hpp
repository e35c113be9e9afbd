#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "trinim/types.hpp"

namespace trinim {

struct Arc {
  std::size_t source = 0;
  std::size_t target = 0;

  friend constexpr bool operator==(const Arc&, const Arc&) = default;
};

/// Directed graph for the general token game. Self-loops, duplicate arcs and
/// out-of-range endpoints are rejected with DomainError.
class Digraph {
 public:
  Digraph(std::size_t vertex_count, std::vector<Arc> arcs);

  /// X->Y, Y->Z, Z->X with vertices 0, 1, 2.
  static Digraph triangle();

  std::size_t vertex_count() const { return vertex_count_; }
  std::span<const Arc> arcs() const { return arcs_; }

 private:
  std::size_t vertex_count_;
  std::vector<Arc> arcs_;
};

using GeneralPosition = std::vector<Count>;

/// `arc` indexes Digraph::arcs().
struct GeneralMove {
  std::size_t arc = 0;
  Count take = 1;
  Count give = 0;

  friend constexpr bool operator==(const GeneralMove&, const GeneralMove&) = default;
};

/// Ordered by arc index, ascending take, ascending give.
std::vector<GeneralMove> general_legal_moves(const Digraph& g, const GeneralPosition& p);

GeneralPosition general_apply(const Digraph& g, const GeneralPosition& p, const GeneralMove& m);

/// Throws DomainError when p does not have one entry per vertex.
void check_position(const Digraph& g, const GeneralPosition& p);

}  // namespace trinim
