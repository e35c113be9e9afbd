#include <doctest.h>

#include <random>

#include "trinim/text.hpp"

using namespace trinim;

TEST_CASE("position text") {
  CHECK(parse_position("3,2,1") == TrianglePosition{3, 2, 1});
  CHECK(parse_position("0,0,1000000000") == TrianglePosition{0, 0, kCoordMax});
  CHECK(format_position({8, 5, 3}) == "8,5,3");

  CHECK_THROWS_AS(parse_position("0,0,1000000001"), BoundExceeded);
  CHECK_THROWS_AS(parse_position("0,0,99999999999999999999999"), BoundExceeded);
  for (const char* bad : {"", "1,2", "1,2,3,4", "1, 2,3", "-1,0,0", "+1,0,0", "a,b,c", "1,,2",
                          "1,2,3 "}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_position(bad), DomainError);
  }
}

TEST_CASE("move text") {
  CHECK(parse_move("XY 1 0") == TriangleMove{Edge::XY, 1, 0});
  CHECK(parse_move("ZX 12 11") == TriangleMove{Edge::ZX, 12, 11});
  CHECK(format_move({Edge::YZ, 3, 2}) == "YZ 3 2");
  for (const char* bad : {"XZ 1 0", "XY 1", "XY  1 0", "XY 1 0 0", "xy 1 0", "XY -1 0"}) {
    CAPTURE(bad);
    CHECK_THROWS(parse_move(bad));
  }
}

TEST_CASE("conventions and outcomes") {
  CHECK(parse_convention("normal") == Convention::Normal);
  CHECK(parse_convention("misere") == Convention::Misere);
  CHECK(parse_convention("misère") == Convention::Misere);
  CHECK_THROWS_AS(parse_convention("Normal"), DomainError);
  CHECK(convention_name(Convention::Misere) == "misere");
  CHECK(outcome_name(Outcome::P) == "P");
}

TEST_CASE("text forms round-trip") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Count> coord(0, kCoordMax);
  for (int i = 0; i < 500; ++i) {
    const TrianglePosition p{coord(rng), coord(rng), coord(rng)};
    CHECK(parse_position(format_position(p)) == p);
    const TriangleMove m{kEdges[i % 3], coord(rng) + 1, coord(rng)};
    CHECK(parse_move(format_move(m)) == m);
  }
}
