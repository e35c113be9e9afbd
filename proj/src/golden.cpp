#include "trinim/golden.hpp"

namespace trinim {

bool lemma_pair_check(Count y, Count z) {
  if (z == 0) throw DomainError("lemma pair needs z > 0");
  if (y < z) throw DomainError("lemma pair needs y >= z");
  return geq_phi(y + z, y) != geq_phi(y, z);
}

}  // namespace trinim
