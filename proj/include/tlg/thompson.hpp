#pragma once

// Thompson's group F as tree-pair diagrams (minus | plus).
//
// Convention: the element acts on [0, 1] by sending the standard dyadic
// interval of plus-leaf k affinely onto that of minus-leaf k. With this
// choice the slope exponent at 0 is L(plus) - L(minus) and at 1 is
// R(plus) - R(minus), and x0 = ((..).)|(.(..)) has f(1/2) = 1/4.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "tlg/pl.hpp"
#include "tlg/tree.hpp"

namespace tlg {

struct TreePair {
  BinaryTree minus;
  BinaryTree plus;

  TreePair() = default;
  // Throws DomainError on unequal leaf counts.
  TreePair(BinaryTree minus_tree, BinaryTree plus_tree);

  static TreePair identity() { return {}; }
  static TreePair x0();
  static TreePair x1();
  // x_n = x0^-(n-1) x1 x0^(n-1) for n >= 1.
  static TreePair x(unsigned n);

  std::size_t leaf_count() const { return minus.leaf_count(); }

  friend bool operator==(const TreePair&, const TreePair&) = default;

  // `minus|plus`
  std::string to_string() const;
  static TreePair parse(std::string_view text);
};

// Indices i at which leaves i, i+1 form a caret in both trees.
std::vector<std::size_t> reducible_carets(const TreePair& d);
TreePair contract(const TreePair& d, std::size_t i);
TreePair expand(const TreePair& d, std::size_t leaf);

// Unique reduced representative (contracts leftmost carets first).
TreePair reduce(const TreePair& d);
// Reduces choosing each contraction uniformly at random.
TreePair reduce_random_order(const TreePair& d, std::mt19937_64& rng);

// Refines d so that its plus tree becomes `target` (which must contain it).
TreePair refine_plus(const TreePair& d, const BinaryTree& target);
// Refines d so that its minus tree becomes `target`.
TreePair refine_minus(const TreePair& d, const BinaryTree& target);

// d1 * d2 acts as d1 after d2: to_pl(multiply(d1, d2)) = to_pl(d1) o to_pl(d2).
TreePair multiply(const TreePair& d1, const TreePair& d2);
TreePair inverse(const TreePair& d);
TreePair power(const TreePair& d, long n);

PLMap to_pl(const TreePair& d);
// Throws DomainError unless f lies in G([0,1]; Z[1/2], <2>).
TreePair from_pl(const PLMap& f);

struct FCharacters {
  std::int64_t left;
  std::int64_t right;
  friend bool operator==(const FCharacters&, const FCharacters&) = default;
};

// (L(plus) - L(minus), R(plus) - R(minus)).
FCharacters f_characters(const TreePair& d);

// Random reduced element with at most `max_leaves` leaves.
TreePair random_tree_pair(std::size_t max_leaves, std::mt19937_64& rng);

}  // namespace tlg
