#pragma once

// Free groups on named letters, endomorphisms given by images of the basis,
// and Stallings folding of finitely generated subgroups.

#include <string>
#include <string_view>
#include <vector>

#include "tlg/intmatrix.hpp"

namespace tlg {

// Letters are +-(i+1) for basis element i. Always freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters);  // reduces
  static FreeWord generator(int i) { return FreeWord({i + 1}); }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  FreeWord inverse() const;
  FreeWord power(long n) const;
  // Largest generator index used plus one.
  int rank_used() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend bool operator<(const FreeWord& a, const FreeWord& b) { return a.letters_ < b.letters_; }

  // Letters of `alphabet` with optional ' or ^k suffixes, e.g. "z^3 x z^-3"
  // or "zzzxz'z'z'"; "e" or "1" is the identity.
  std::string to_string(std::string_view alphabet = "xyz") const;
  static FreeWord parse(std::string_view text, std::string_view alphabet = "xyz");

 private:
  std::vector<int> letters_;
};

// a b a^-1 b^-1
FreeWord commutator(const FreeWord& a, const FreeWord& b);

class FreeEndomorphism {
 public:
  explicit FreeEndomorphism(std::vector<FreeWord> images);
  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  FreeWord apply(const FreeWord& w) const;
  // Column j holds the exponent sums of the image of generator j.
  IntMatrix abelianization() const;

 private:
  std::vector<FreeWord> images_;
};

struct FoldedEdge {
  int source;
  int label;  // generator index, oriented source -> target
  int target;
  friend bool operator==(const FoldedEdge&, const FoldedEdge&) = default;
  friend auto operator<=>(const FoldedEdge&, const FoldedEdge&) = default;
};

// Folded core graph of a subgroup of F_rank with base vertex 0.
class SubgroupGraph {
 public:
  SubgroupGraph(const std::vector<FreeWord>& generators, int rank);

  int rank() const { return rank_; }
  int vertex_count() const { return vertices_; }
  const std::vector<FoldedEdge>& edges() const { return edges_; }
  bool contains(const FreeWord& w) const;
  // Free basis read off a BFS spanning tree.
  std::vector<FreeWord> basis() const;
  // A single vertex with one loop per generator.
  bool is_full() const;
  std::string describe(std::string_view alphabet = "xyz") const;

 private:
  int follow(int v, int letter) const;  // -1 if absent

  int rank_;
  int vertices_ = 1;
  std::vector<FoldedEdge> edges_;
  // out_[v][2*i] follows generator i, out_[v][2*i+1] its inverse.
  std::vector<std::vector<int>> out_;
};

}  // namespace tlg
