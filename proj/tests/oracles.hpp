#pragma once

// Test-only reference computations. Nothing here calls into the code paths it
// is used to check.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "trinim/types.hpp"

namespace trinim::oracle {

namespace mp = boost::multiprecision;

/// floor(phi * 2^192) as a 256-bit integer, from an exact integer square root.
inline const mp::uint256_t& phi_fixed() {
  static const mp::uint256_t value = [] {
    const mp::cpp_int one = mp::cpp_int(1) << 192;
    const mp::cpp_int root5 = mp::sqrt(mp::cpp_int(5) << 384);  // floor(sqrt(5) * 2^192)
    return static_cast<mp::uint256_t>((one + root5) / 2);
  }();
  return value;
}

/// b >= phi * c by 256-bit fixed point with 192 fractional bits. The
/// truncation error is below c units in the last place, far smaller than the
/// gap |b - phi*c| * 2^192 for any b, c < 2^40.
inline bool fixed_point_geq_phi(std::uint64_t b, std::uint64_t c) {
  const mp::uint256_t lhs = mp::uint256_t(b) << 192;
  const mp::uint256_t rhs = mp::uint256_t(c) * phi_fixed();
  return lhs >= rhs;
}

/// Fibonacci numbers F_0..F_n with F_1 = F_2 = 1.
inline std::vector<std::uint64_t> fibonacci(int n) {
  std::vector<std::uint64_t> f{0, 1};
  while (static_cast<int>(f.size()) <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

using Triple = std::tuple<Count, Count, Count>;

/// The option set written out term by term from the game's definition:
/// (x-i, y+j, z), (x, y-i, z+j), (x+j, y, z-i) with 1 <= i <= source, 0 <= j < i.
inline std::set<Triple> options_by_formula(Count x, Count y, Count z) {
  std::set<Triple> out;
  for (Count i = 1; i <= x; ++i)
    for (Count j = 0; j < i; ++j) out.insert({x - i, y + j, z});
  for (Count i = 1; i <= y; ++i)
    for (Count j = 0; j < i; ++j) out.insert({x, y - i, z + j});
  for (Count i = 1; i <= z; ++i)
    for (Count j = 0; j < i; ++j) out.insert({x + j, y, z - i});
  return out;
}

}  // namespace trinim::oracle
