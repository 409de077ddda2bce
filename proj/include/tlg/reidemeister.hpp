#pragma once

// Sweeps that compare Reidemeister numbers and fixed subgroups across
// finite groups, quotients and abelian groups.

#include <cstdint>
#include <string>
#include <vector>

#include "tlg/finite_group.hpp"

namespace tlg {

struct OracleTally {
  std::size_t groups = 0;
  std::size_t automorphisms = 0;
  std::size_t quotient_checks = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // the first few, for reporting

  void fail(std::string what);
  bool ok() const { return failure_count == 0; }
};

// For every group and every automorphism phi:
//   R(phi) = 1 iff |Fix(phi)| = 1,
//   |Fix(phi)| infinite iff R(phi) infinite (both finite here),
//   R(phi) >= R(phi-bar) on G/N for every phi-invariant normal N.
OracleTally check_corpus(const std::vector<FiniteGroup>& corpus);

// Random automorphisms of Z/d_1 + ... + Z^f. On finite instances the
// cokernel and fixed-subgroup formulas are compared with the orbit count;
// on all instances Fix is infinite iff R is, and R(phi) >= R(phi-bar) on
// G/kG.
OracleTally check_random_abelian(std::size_t instances, std::uint64_t seed);

}  // namespace tlg
