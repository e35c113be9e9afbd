#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "trinim/golden.hpp"

using namespace trinim;

TEST_CASE("geq_phi examples") {
  for (Count b : {Count{0}, Count{1}, Count{17}, kCoordMax}) CHECK(geq_phi(b, 0));
  CHECK(geq_phi(5, 3));       // 25 > 24
  CHECK_FALSE(geq_phi(8, 5));  // 64 < 65
  CHECK(geq_phi(233, 144));   // 54289 > 54288
  CHECK_FALSE(geq_phi(0, 1));
  CHECK_FALSE(geq_phi(1, 1));
  CHECK(geq_phi(2, 1));
  CHECK(compare_phi(5, 3) == PhiComparison::Above);
  CHECK(compare_phi(8, 5) == PhiComparison::Below);
}

TEST_CASE("fixed-point oracle is itself sane") {
  // 2^192 * phi starts 1.6180339887...
  const double approx = static_cast<double>(oracle::phi_fixed() >> 150) / std::ldexp(1.0, 42);
  CHECK(approx == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK(oracle::fixed_point_geq_phi(233, 144));
  CHECK_FALSE(oracle::fixed_point_geq_phi(8, 5));
}

TEST_CASE("geq_phi agrees with the fixed-point oracle on a grid") {
  for (Count c = 0; c <= 400; ++c)
    for (Count b = 0; b <= 700; ++b) {
      if (geq_phi(b, c) != oracle::fixed_point_geq_phi(b, c)) {
        FAIL("disagreement at b=" << b << " c=" << c);
      }
    }
}

TEST_CASE("consecutive Fibonacci pairs alternate, far past double precision") {
  // F(k+1)^2 - F(k+1)F(k) - F(k)^2 = (-1)^k, so F(k+1) >= phi F(k) iff k is even.
  const auto f = oracle::fibonacci(90);
  for (int k = 1; k + 1 <= 90; ++k) {
    CAPTURE(k);
    CHECK(geq_phi(f[k + 1], f[k]) == (k % 2 == 0));
  }
  for (int k = 1; k + 1 <= 41; ++k) CHECK(oracle::fixed_point_geq_phi(f[k + 1], f[k]) == (k % 2 == 0));
}

TEST_CASE("geq_phi monotonicity") {
  for (Count c = 0; c <= 120; ++c)
    for (Count b = 0; b <= 200; ++b) {
      if (geq_phi(b, c)) CHECK(geq_phi(b + 1, c));
      if (!geq_phi(b, c)) CHECK_FALSE(geq_phi(b, c + 1));
      // exactly one of the two relations holds
      const bool below = c > 0 && b * b <= b * c + c * c;
      CHECK(geq_phi(b, c) != below);
    }
}

TEST_CASE("lemma_pair_check") {
  CHECK(lemma_pair_check(2, 1));
  CHECK(lemma_pair_check(3, 2));
  CHECK(lemma_pair_check(1, 1));
  CHECK_THROWS_AS(lemma_pair_check(3, 0), DomainError);
  CHECK_THROWS_AS(lemma_pair_check(2, 3), DomainError);
  for (Count y = 1; y <= 300; ++y)
    for (Count z = 1; z <= y; ++z) CHECK(lemma_pair_check(y, z));
}

TEST_CASE("geq_phi at the coordinate bound") {
  // 618033988 / 10^9 < 1/phi < 618033989 / 10^9
  CHECK(geq_phi(kCoordMax, 618033988));
  CHECK_FALSE(geq_phi(kCoordMax, 618033989));
  CHECK(geq_phi(kCoordMax, 618033988) == oracle::fixed_point_geq_phi(kCoordMax, 618033988));
  CHECK(geq_phi(kCoordMax, 618033989) == oracle::fixed_point_geq_phi(kCoordMax, 618033989));
}
