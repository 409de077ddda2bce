#pragma once

// Artin braid words. Letter +i is sigma_i (strand in position i passes over
// the strand in position i+1), -i its inverse; positions are 1-based. Words
// are read left to right, top to bottom.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tlg/error.hpp"

namespace tlg {

class BraidWord {
 public:
  explicit BraidWord(int strands = 1, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Concatenation (this on top of other).
  BraidWord operator*(const BraidWord& other) const;
  BraidWord inverse() const;
  BraidWord free_reduced() const;

  // Exact letter-by-letter equality, not isotopy.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  // `s1 s2' s1`; the empty word prints as `e`.
  std::string to_string() const;
  static BraidWord parse(std::string_view text, int strands);

  static BraidWord random(int strands, std::size_t length, std::mt19937_64& rng);

 private:
  int strands_;
  std::vector<int> letters_;
};

struct BraidInvariants {
  // permutation[s] = bottom position of the strand starting at top position s
  // (0-based).
  std::vector<int> permutation;
  std::int64_t exponent_sum = 0;
  // crossings[a][b]: signed number of crossings between the strands starting
  // at a and b.
  std::vector<std::vector<std::int64_t>> crossings;

  bool is_pure() const;
  // crossings / 2; throws DomainError unless the braid is pure.
  std::vector<std::vector<std::int64_t>> linking() const;
};

BraidInvariants braid_invariants(const BraidWord& b);

// Dehornoy handle reduction. Returns a handle-free word equivalent to b,
// which is empty iff b is trivial. Throws Error if more than `max_steps`
// handle reductions are needed.
BraidWord handle_reduce(const BraidWord& b, std::size_t max_steps = 2000000);

// Isotopy of braids on the same number of strands.
bool braid_equal(const BraidWord& b1, const BraidWord& b2);

// Doubles the strand starting at top position s (0-based); the new pair
// occupies top positions s, s+1.
BraidWord cable(const BraidWord& b, int s);
// Removes the strand starting at top position s (0-based).
BraidWord delete_strand(const BraidWord& b, int s);

// A_ij on n strands (1-based i < j <= n): strand i wraps around strand j.
BraidWord wrap_braid(int i, int j, int n);

}  // namespace tlg
