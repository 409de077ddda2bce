#pragma once

// From invariant character pairs to infinite fixed sets in abelian quotients.

#include <optional>
#include <string>
#include <vector>

#include "tlg/intmatrix.hpp"

namespace tlg {

struct CharacterData {
  // Each character as its values on a fixed basis of the quotient.
  std::vector<std::vector<BigInt>> characters;
  std::vector<std::string> labels;
};

// Divides by the positive gcd, so the result spans the same ray. Throws
// DomainError on the zero vector.
std::vector<BigInt> primitive(const std::vector<BigInt>& v);

struct TecnicoResult {
  bool ok = false;
  std::string failure;
  // permutation[i] = j when chi_i o M = chi_j (primitive representatives).
  std::vector<int> permutation;
  std::vector<BigInt> f;  // chi_1 + chi_2 + ...
  std::vector<BigInt> fixed_vector;
};

// M acts on quotient coordinates (column vectors); characters pull back as
// row vectors chi -> chi M.
TecnicoResult tecnico_pipeline(const CharacterData& chars, const IntMatrix& m);

// Whether 1 is an eigenvalue of a 2x2 unimodular matrix. Throws DomainError
// for other shapes or determinants.
bool eigenvalue_one_check(const IntMatrix& m);

struct IndependenceResult {
  BigInt determinant;
  bool independent = false;
};

// Rows are characters, columns are generators.
IndependenceResult character_independence(const IntMatrix& values);

// The two characters of each group Gamma_0 (braided F) and Gamma_1..4
// (Lodha-Moore G, yG, Gy, yGy) evaluated on two basis elements, computed
// from the diagram and word modules.
struct CharacterTableRow {
  std::string group;
  std::vector<std::string> characters;
  std::vector<std::string> basis;
  IntMatrix values;  // rows = characters, columns = basis
};
std::vector<CharacterTableRow> character_table();

// C^-1 P C: the map on basis coordinates whose pullback permutes the rows of
// C by the transposition P. Throws DomainError unless C is 2x2 unimodular.
IntMatrix swap_action(const IntMatrix& c);

}  // namespace tlg
