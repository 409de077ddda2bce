#pragma once

// Finite rooted binary trees, stored as the left-to-right list of leaf
// addresses ("0" = go left, "1" = go right; the root is the empty address).

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tlg/exact.hpp"

namespace tlg {

class BinaryTree {
 public:
  // The single leaf.
  BinaryTree() : leaves_{""} {}

  // Throws DomainError unless `leaves` is a complete prefix code listed in
  // left-to-right order.
  static BinaryTree from_leaves(std::vector<std::string> leaves);
  static BinaryTree caret() { return from_leaves({"0", "1"}); }
  // Right vine with n leaves: 0, 10, 110, ..., 1^(n-1).
  static BinaryTree right_vine(std::size_t n);
  // Uniformly random split sequence producing n leaves.
  static BinaryTree random(std::size_t n, std::mt19937_64& rng);

  std::size_t leaf_count() const { return leaves_.size(); }
  const std::vector<std::string>& leaves() const { return leaves_; }
  const std::string& leaf(std::size_t i) const { return leaves_.at(i); }

  // Depth of the leftmost and of the rightmost leaf.
  std::size_t left_depth() const { return leaves_.front().size(); }
  std::size_t right_depth() const { return leaves_.back().size(); }

  // Index of the leaf with this address, or npos.
  std::size_t find(std::string_view address) const;

  // Adds a caret below leaf i (0-based).
  BinaryTree expand(std::size_t i) const;
  // True iff leaves i, i+1 are siblings w0, w1.
  bool is_caret_at(std::size_t i) const;
  // Removes the caret formed by leaves i, i+1.
  BinaryTree contract(std::size_t i) const;

  // Smallest tree containing both as rooted subtrees.
  static BinaryTree common_refinement(const BinaryTree& a, const BinaryTree& b);

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

  // Grammar: `.` leaf, `(TT)` caret.
  std::string to_string() const;
  static BinaryTree parse(std::string_view text);

 private:
  explicit BinaryTree(std::vector<std::string> leaves) : leaves_(std::move(leaves)) {}

  std::vector<std::string> leaves_;
};

// Left endpoint of the standard dyadic interval of an address.
Rational address_left(std::string_view address);
// Length 2^-|address|.
Rational address_length(std::string_view address);

}  // namespace tlg
