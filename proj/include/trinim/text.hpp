#pragma once

#include <string>
#include <string_view>

#include "trinim/types.hpp"

namespace trinim {

// Text forms used on the command line and in logs:
//   position  "x,y,z"   decimal, no spaces, each coordinate <= kCoordMax
//   move      "XY i j"  edge name, take, give separated by single spaces

/// Non-negative decimal without sign or whitespace. Throws DomainError when
/// malformed and BoundExceeded when larger than `max`.
Count parse_count(std::string_view text, Count max = kCoordMax);

TrianglePosition parse_position(std::string_view text);
std::string format_position(const TrianglePosition& p);

/// Accepts "XY", "YZ" or "ZX".
Edge parse_edge(std::string_view text);
std::string_view edge_name(Edge e);

TriangleMove parse_move(std::string_view text);
std::string format_move(const TriangleMove& m);

/// "normal" / "misere" ("misère" is accepted too).
Convention parse_convention(std::string_view text);
std::string_view convention_name(Convention c);

std::string_view outcome_name(Outcome o);

}  // namespace trinim
