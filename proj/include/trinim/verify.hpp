#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "trinim/solver.hpp"
#include "trinim/types.hpp"

namespace trinim {

enum class VerifyScope : std::uint8_t { Both, Normal, Misere };

struct Mismatch {
  TrianglePosition position;
  std::string check;
  std::string expected;
  std::string actual;
};

struct CheckCounts {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
};

/// Result of comparing the closed-form classifier and the constructive moves
/// against the brute-force oracle. Mismatches are data, not errors.
struct VerifyReport {
  Count bound = 0;
  VerifyScope scope = VerifyScope::Both;
  std::size_t positions = 0;
  /// Keyed by check name, e.g. "normal-outcome", "grundy-zero".
  std::map<std::string, CheckCounts> checks;
  /// First kMaxListedMismatches mismatches in (check, position index) order.
  std::vector<Mismatch> mismatches;
  double seconds = 0.0;

  static constexpr std::size_t kMaxListedMismatches = 1000;

  std::size_t total_mismatches() const;
  bool ok() const { return total_mismatches() == 0; }
};

/// Runs every check over all positions with total <= bound:
///   normal-outcome / misere-outcome       classifier vs oracle
///   normal-move / misere-move             constructive move legal and lands on P
///   normal-closure                        no option of a normal P-position is P
///   grundy-zero                           Grundy value 0 exactly on the normal P-set
///   misere-small-grundy-one               (1,0,0), (0,1,0), (0,0,1), (1,1,1) have Grundy 1
///   normal-small-flip                     (0,0,0), (1,1,0), (1,0,1), (0,1,1) are P normal, N misere
/// Checks outside `scope` are skipped. Throws BoundExceeded above the oracle limit.
VerifyReport verify_theorems(Count bound, VerifyScope scope = VerifyScope::Both,
                             const SolveOptions& options = {});

std::string format_report(const VerifyReport& report);

/// One-line JSON summary: bound, positions, per-check counts, mismatch list.
std::string report_summary_json(const VerifyReport& report);

}  // namespace trinim
