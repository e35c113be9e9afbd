#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trinim {

using Count = std::uint64_t;

/// Largest token count accepted per vertex at any input boundary. Keeps every
/// quadratic form evaluated by the classifier well inside 128 bits.
inline constexpr Count kCoordMax = 1'000'000'000;

struct IllegalMove : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct BoundExceeded : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct StateBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Token counts on the vertices X, Y, Z of the directed 3-cycle X->Y->Z->X.
struct TrianglePosition {
  Count x = 0;
  Count y = 0;
  Count z = 0;

  constexpr Count operator[](int vertex) const {
    return vertex == 0 ? x : vertex == 1 ? y : z;
  }
  constexpr Count& operator[](int vertex) {
    return vertex == 0 ? x : vertex == 1 ? y : z;
  }

  friend constexpr auto operator<=>(const TrianglePosition&, const TrianglePosition&) = default;
};

enum class Edge : std::uint8_t { XY = 0, YZ = 1, ZX = 2 };

inline constexpr std::array<Edge, 3> kEdges = {Edge::XY, Edge::YZ, Edge::ZX};

constexpr int edge_source(Edge e) { return static_cast<int>(e); }
constexpr int edge_target(Edge e) { return (static_cast<int>(e) + 1) % 3; }

/// Take `take` tokens from the edge source and put `give` of them on the
/// edge target. Legal moves have 1 <= take and give < take.
struct TriangleMove {
  Edge edge = Edge::XY;
  Count take = 1;
  Count give = 0;

  friend constexpr bool operator==(const TriangleMove&, const TriangleMove&) = default;
};

enum class Convention : std::uint8_t { Normal, Misere };

enum class Outcome : std::uint8_t { P, N };

constexpr Outcome flip(Outcome o) { return o == Outcome::P ? Outcome::N : Outcome::P; }

}  // namespace trinim
