#include "trinim/text.hpp"

#include <charconv>

namespace trinim {

Count parse_count(std::string_view text, Count max) {
  if (text.empty()) throw DomainError("expected a non-negative integer, got an empty string");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw DomainError("expected a non-negative integer, got '" + std::string(text) + "'");
    }
  }
  Count value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range || (ec == std::errc{} && value > max)) {
    throw BoundExceeded("value " + std::string(text) + " exceeds " + std::to_string(max));
  }
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw DomainError("expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

TrianglePosition parse_position(std::string_view text) {
  const auto first = text.find(',');
  const auto second = first == std::string_view::npos ? first : text.find(',', first + 1);
  if (second == std::string_view::npos || text.find(',', second + 1) != std::string_view::npos) {
    throw DomainError("position must look like x,y,z, got '" + std::string(text) + "'");
  }
  return {parse_count(text.substr(0, first)),
          parse_count(text.substr(first + 1, second - first - 1)),
          parse_count(text.substr(second + 1))};
}

std::string format_position(const TrianglePosition& p) {
  return std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z);
}

Edge parse_edge(std::string_view text) {
  if (text == "XY") return Edge::XY;
  if (text == "YZ") return Edge::YZ;
  if (text == "ZX") return Edge::ZX;
  throw DomainError("edge must be XY, YZ or ZX, got '" + std::string(text) + "'");
}

std::string_view edge_name(Edge e) {
  switch (e) {
    case Edge::XY: return "XY";
    case Edge::YZ: return "YZ";
    case Edge::ZX: return "ZX";
  }
  return "??";
}

TriangleMove parse_move(std::string_view text) {
  const auto first = text.find(' ');
  const auto second = first == std::string_view::npos ? first : text.find(' ', first + 1);
  if (second == std::string_view::npos || text.find(' ', second + 1) != std::string_view::npos) {
    throw DomainError("move must look like 'XY take give', got '" + std::string(text) + "'");
  }
  // Move amounts may exceed kCoordMax only in ways apply_move rejects anyway.
  return {parse_edge(text.substr(0, first)),
          parse_count(text.substr(first + 1, second - first - 1), 3 * kCoordMax),
          parse_count(text.substr(second + 1), 3 * kCoordMax)};
}

std::string format_move(const TriangleMove& m) {
  return std::string(edge_name(m.edge)) + " " + std::to_string(m.take) + " " +
         std::to_string(m.give);
}

Convention parse_convention(std::string_view text) {
  if (text == "normal") return Convention::Normal;
  if (text == "misere" || text == "misère") return Convention::Misere;
  throw DomainError("convention must be normal or misere, got '" + std::string(text) + "'");
}

std::string_view convention_name(Convention c) {
  return c == Convention::Normal ? "normal" : "misere";
}

std::string_view outcome_name(Outcome o) { return o == Outcome::P ? "P" : "N"; }

}  // namespace trinim
