#pragma once

#include "trinim/types.hpp"

namespace trinim {

/// Where b sits relative to phi * c, phi = (1 + sqrt 5) / 2. For c > 0 the two
/// are never equal, so two variants cover every pair; c == 0 reports Above.
enum class PhiComparison : std::uint8_t { Below, Above };

/// b >= phi * c, decided without floating point.
///
/// For c > 0, b / c > phi exactly when (b/c)^2 - (b/c) - 1 > 0, i.e.
/// b^2 > b*c + c^2. The quadratic form is evaluated in 128 bits, which is
/// exact for any b, c below 2^62.
constexpr bool geq_phi(Count b, Count c) {
  if (c == 0) return true;
  using Wide = unsigned __int128;
  const Wide wb = b;
  const Wide wc = c;
  return wb * wb > wb * wc + wc * wc;
}

constexpr PhiComparison compare_phi(Count b, Count c) {
  return geq_phi(b, c) ? PhiComparison::Above : PhiComparison::Below;
}

/// Executable form of the ratio lemma: for y >= z > 0 and x = y + z, exactly
/// one of x/y > phi and y/z > phi holds. Returns whether that is the case for
/// the given pair (it always is). Throws DomainError unless y >= z > 0.
bool lemma_pair_check(Count y, Count z);

}  // namespace trinim
