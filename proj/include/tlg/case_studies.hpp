#pragma once

// Worked examples: the crystallographic group GW, an inner automorphism of
// SL2(Z), an automorphism of F3 acting trivially on homology, and the
// three-parameter PL family G(p, q, r).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tlg/abelian.hpp"
#include "tlg/free_group.hpp"
#include "tlg/pl.hpp"

namespace tlg {

enum class CheckStatus { kPass, kFail, kNotChecked };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  // "reference", "derived" or "definitional".
  std::string kind;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct CaseReport {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, std::string kind, bool ok, std::string detail = "");
  void skip(std::string name, std::string kind, std::string detail);
  // No check failed; not-checked entries do not count.
  bool passed() const;
  const Check* find(const std::string& name) const;
};

// --- GW = Z^2 x|_B Z with B = [[-1, b], [0, 1]] ---

struct GWElement {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  friend bool operator==(const GWElement&, const GWElement&) = default;
  friend auto operator<=>(const GWElement&, const GWElement&) = default;
  std::string to_string() const;  // ((x,y),z)
};

GWElement gw_multiply(std::int64_t b, const GWElement& g1, const GWElement& g2);
GWElement gw_inverse(std::int64_t b, const GWElement& g);
// ((x,y),z) -> ((-x,-y),-z)
GWElement gw_phi(const GWElement& g);
// e1, e2, t
std::vector<GWElement> gw_generators();

// Elements of word length <= radius over the generators and their inverses.
std::vector<GWElement> gw_ball(std::int64_t b, int radius);

struct GWAbelianization {
  FGAbelianGroup group;   // on (e1, e2, t)
  AbelianAuto phi;        // -I
  SubgroupInfo fix;
  Cardinality reidemeister;
};

// Throws DomainError if b < 1.
GWAbelianization gw_abelianization(std::int64_t b);

struct GWOptions {
  std::int64_t b = 2;
  int pairs = 10000;
  int radius = 8;
  std::uint64_t seed = 20240601;
};

CaseReport case_gw(const GWOptions& options);

// --- SL2(Z), conjugation by Q = [[3,1],[2,1]] ---

// Entries exactly as displayed in the source, row-major.
IntMatrix sl2_displayed_conjugate(const IntMatrix& x);
IntMatrix sl2_conjugate(const IntMatrix& x);  // Q X Q^-1

// Determinant-one members of the commutant {aI + bQ} with all entries
// bounded by `bound` in absolute value.
std::vector<IntMatrix> sl2_commutant_solutions(std::int64_t bound);

struct SL2Options {
  int samples = 1000;
  std::int64_t bound = 1000000;
  std::uint64_t seed = 20240601;
};

CaseReport case_sl2(const SL2Options& options);

// --- F3 = <x, y, z> ---

// x -> z^3 x z^-3, y -> z^-1 x z^2 x^-1 y z^-1, z -> z [phi(y), phi(x)]
FreeEndomorphism cohen_lustig_automorphism();
CaseReport case_cohen_lustig();

// --- G(p, q, r) ---

struct UncountOptions {
  ExactNumber p = ExactNumber(2);
  ExactNumber q = ExactNumber(3);
  ExactNumber r = ExactNumber::quadratic(1, 1);
};

CaseReport case_uncount(const UncountOptions& options);

}  // namespace tlg
