#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "trinim/digraph.hpp"
#include "trinim/game.hpp"

using namespace trinim;

TEST_CASE("legal_moves at small positions") {
  CHECK(legal_moves({0, 0, 0}).empty());

  const auto one = legal_moves({1, 0, 0});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == TriangleMove{Edge::XY, 1, 0});

  const auto four = legal_moves({2, 1, 0});
  REQUIRE(four.size() == 4);
  CHECK(four[0] == TriangleMove{Edge::XY, 1, 0});
  CHECK(four[1] == TriangleMove{Edge::XY, 2, 0});
  CHECK(four[2] == TriangleMove{Edge::XY, 2, 1});
  CHECK(four[3] == TriangleMove{Edge::YZ, 1, 0});
}

TEST_CASE("legal_moves order is edge, then take, then give") {
  const auto moves = legal_moves({3, 2, 4});
  for (std::size_t i = 1; i < moves.size(); ++i) {
    const auto& a = moves[i - 1];
    const auto& b = moves[i];
    CHECK(std::tuple(static_cast<int>(a.edge), a.take, a.give) <
          std::tuple(static_cast<int>(b.edge), b.take, b.give));
  }
}

TEST_CASE("apply_move") {
  CHECK(apply_move({3, 2, 1}, {Edge::XY, 2, 1}) == TrianglePosition{1, 3, 1});
  CHECK(apply_move({1, 1, 1}, {Edge::YZ, 1, 0}) == TrianglePosition{1, 0, 1});
  CHECK(apply_move({1, 2, 3}, {Edge::ZX, 3, 2}) == TrianglePosition{3, 2, 0});
  CHECK_THROWS_AS(apply_move({3, 2, 1}, {Edge::XY, 2, 2}), IllegalMove);
  CHECK_THROWS_AS(apply_move({3, 2, 1}, {Edge::XY, 4, 0}), IllegalMove);
  CHECK_THROWS_AS(apply_move({3, 2, 1}, {Edge::XY, 0, 0}), IllegalMove);
  CHECK_THROWS_AS(apply_move({1, 0, 0}, {Edge::YZ, 1, 0}), IllegalMove);
  CHECK_FALSE(is_legal({3, 2, 1}, {Edge::XY, 2, 2}));
}

TEST_CASE("terminal, totals and rotations") {
  CHECK(is_terminal({0, 0, 0}));
  CHECK_FALSE(is_terminal({0, 1, 0}));
  CHECK_FALSE(is_terminal({5, 0, 0}));

  CHECK(total_tokens({0, 0, 0}) == 0);
  CHECK(total_tokens({3, 2, 1}) == 6);
  CHECK(total_tokens({1, 1, 1}) == 3);

  const auto r = rotations({1, 2, 3});
  CHECK(r[0] == TrianglePosition{1, 2, 3});
  CHECK(r[1] == TrianglePosition{2, 3, 1});
  CHECK(r[2] == TrianglePosition{3, 1, 2});
  for (const auto& q : rotations({0, 0, 0})) CHECK(q == TrianglePosition{0, 0, 0});
  for (const auto& q : rotations({5, 5, 5})) CHECK(q == TrianglePosition{5, 5, 5});
}

TEST_CASE("first_legal_move matches the head of legal_moves") {
  for (Count x = 0; x <= 3; ++x)
    for (Count y = 0; y <= 3; ++y)
      for (Count z = 0; z <= 3; ++z) {
        const auto all = legal_moves({x, y, z});
        const auto first = first_legal_move({x, y, z});
        CHECK(first.has_value() == !all.empty());
        if (first) CHECK(*first == all.front());
      }
  CHECK(*first_legal_move({kCoordMax, 0, 0}) == TriangleMove{Edge::XY, 1, 0});
}

TEST_CASE("unrotate maps rotated edges back") {
  // Rotation 1 of (x,y,z) is (y,z,x): its X->Y edge is the original Y->Z.
  CHECK(unrotate(Edge::XY, 1) == Edge::YZ);
  CHECK(unrotate(Edge::XY, 2) == Edge::ZX);
  CHECK(unrotate(Edge::ZX, 1) == Edge::XY);
  const TrianglePosition p{4, 7, 2};
  for (int k = 0; k < 3; ++k) {
    for (Edge e : kEdges) {
      const auto rotated = rotations(p)[k];
      const TriangleMove m{e, 1, 0};
      if (!is_legal(rotated, m)) continue;
      const auto after_rotated = apply_move(rotated, m);
      const auto after = apply_move(p, {unrotate(e, k), 1, 0});
      CHECK(rotations(after)[k] == after_rotated);
    }
  }
}

TEST_CASE("move invariants over all positions with total <= 12") {
  for (Count n = 0; n <= 12; ++n)
    for (Count x = 0; x <= n; ++x)
      for (Count y = 0; y <= n - x; ++y) {
        const TrianglePosition p{x, y, n - x - y};
        const auto moves = legal_moves(p);
        CHECK(moves.size() == legal_move_count(p));
        CHECK(moves.empty() == is_terminal(p));
        std::set<oracle::Triple> reached;
        for (const auto& m : moves) {
          const auto q = apply_move(p, m);
          CHECK(total_tokens(q) < total_tokens(p));
          CHECK(total_tokens(q) == total_tokens(p) - (m.take - m.give));
          reached.insert({q.x, q.y, q.z});
        }
        CHECK(reached == oracle::options_by_formula(p.x, p.y, p.z));
      }
}

TEST_CASE("rotations compose cyclically") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Count> coord(0, kCoordMax);
  for (int i = 0; i < 200; ++i) {
    const TrianglePosition p{coord(rng), coord(rng), coord(rng)};
    CHECK(rotations(rotations(p)[1])[1] == rotations(p)[2]);
    CHECK(rotations(rotations(p)[2])[1] == p);
  }
}

TEST_CASE("general moves on the 3-cycle are the triangle moves") {
  const auto g = Digraph::triangle();
  for (Count n = 0; n <= 30; ++n)
    for (Count x = 0; x <= n; ++x)
      for (Count y = 0; y <= n - x; ++y) {
        const TrianglePosition p{x, y, n - x - y};
        const auto triangle = legal_moves(p);
        const auto general = general_legal_moves(g, {p.x, p.y, p.z});
        REQUIRE(triangle.size() == general.size());
        for (std::size_t i = 0; i < triangle.size(); ++i) {
          CHECK(static_cast<std::size_t>(triangle[i].edge) == general[i].arc);
          CHECK(triangle[i].take == general[i].take);
          CHECK(triangle[i].give == general[i].give);
        }
      }
}
