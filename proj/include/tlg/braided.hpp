#pragma once

// Braided paired tree diagrams (minus, braid, plus). The minus tree hangs
// from its root at the top, the braid runs downwards, the plus tree has its
// root at the bottom. The strand starting below minus-leaf s ends above
// plus-leaf perm(s). A product d1 * d2 stacks d1 on top of d2.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tlg/braid.hpp"
#include "tlg/thompson.hpp"
#include "tlg/tree.hpp"

namespace tlg {

struct BraidedDiagram {
  BinaryTree minus;
  BraidWord braid;
  BinaryTree plus;

  BraidedDiagram() = default;
  // Throws DomainError unless both trees have braid.strands() leaves.
  BraidedDiagram(BinaryTree minus_tree, BraidWord b, BinaryTree plus_tree);

  static BraidedDiagram identity() { return {}; }
  static BraidedDiagram from_tree_pair(const TreePair& d);

  std::size_t leaf_count() const { return minus.leaf_count(); }
  bool is_pure() const;

  // Structural equality; use diagram_equal for equivalence.
  friend bool operator==(const BraidedDiagram&, const BraidedDiagram&) = default;

  // `minusTree | braid | plusTree`
  std::string to_string() const;
  static BraidedDiagram parse(std::string_view text);
};

// Caret under minus-leaf `leaf` and under the plus-leaf its strand reaches,
// with that strand cabled.
BraidedDiagram expansion(const BraidedDiagram& d, std::size_t leaf);
BraidedDiagram refine_minus(const BraidedDiagram& d, const BinaryTree& target);
BraidedDiagram refine_plus(const BraidedDiagram& d, const BinaryTree& target);

BraidedDiagram multiply(const BraidedDiagram& d1, const BraidedDiagram& d2);
BraidedDiagram inverse(const BraidedDiagram& d);

// Equivalence under expansion/reduction and braid isotopy.
bool diagram_equal(const BraidedDiagram& d1, const BraidedDiagram& d2);

// Greedily undoes expansions; only genuine reductions are performed.
BraidedDiagram try_reduce(const BraidedDiagram& d);

struct PhiCharacters {
  std::int64_t phi0;
  std::int64_t phi1;
  friend bool operator==(const PhiCharacters&, const PhiCharacters&) = default;
};

// (L(plus) - L(minus), R(plus) - R(minus)).
PhiCharacters phi_characters(const BraidedDiagram& d);

struct NamedDiagram {
  std::string name;
  BraidedDiagram diagram;
};

// x0, x1, alpha_12, alpha_13, alpha_23, alpha_24, beta_12, beta_13, beta_23,
// beta_24.
std::vector<NamedDiagram> fbr_generators();
// alpha_ij = (R_{j+1}, A_ij, R_{j+1}); beta_ij = (R_j, A_ij, R_j).
BraidedDiagram fbr_alpha(int i, int j);
BraidedDiagram fbr_beta(int i, int j);

// Product of `length` random generators or inverses.
BraidedDiagram random_fbr_element(std::size_t length, std::mt19937_64& rng);

}  // namespace tlg
