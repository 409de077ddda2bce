#pragma once

// Finite groups given by multiplication tables, their automorphisms, normal
// subgroups and quotients, and brute-force twisted conjugacy classes.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tlg/abelian.hpp"
#include "tlg/error.hpp"

namespace tlg {

// Permutation of {0..n-1}: p[i] is the image of i.
using Perm = std::vector<int>;

class FiniteGroup {
 public:
  // table[i][j] = i*j. Throws DomainError unless the table is a group.
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::string name = "");

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  // <a, b | a^m, b^n = a^s, b a b^-1 = a^r>; elements a^i b^j.
  static FiniteGroup metacyclic(int m, int n, int r, int s, std::string name = "");
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // N x| Z/k where the generator of Z/k acts by `alpha`.
  static FiniteGroup semidirect_cyclic(const FiniteGroup& n, const Perm& alpha, int k,
                                       std::string name = "");
  // Closure of permutations of {0..degree-1}.
  static FiniteGroup from_permutations(const std::vector<Perm>& gens, std::string name = "");
  // Finite abelian group as Z^n / relations.
  static FiniteGroup from_abelian(const FGAbelianGroup& g);
  // Comma-separated rows of the table, one row per line.
  static FiniteGroup parse_csv(std::string_view text);

  int order() const { return static_cast<int>(table_.size()); }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const;
  bool is_abelian() const;
  const std::vector<std::vector<int>>& table() const { return table_; }

  std::vector<int> center() const;
  std::vector<int> subgroup_generated(const std::vector<int>& gens) const;
  std::vector<int> normal_closure(const std::vector<int>& gens) const;
  // A small generating set, found greedily.
  std::vector<int> generating_set() const;

  bool is_automorphism(const Perm& phi) const;
  std::vector<Perm> automorphisms() const;
  // All normal subgroups as sorted element lists.
  std::vector<std::vector<int>> normal_subgroups() const;

 private:
  struct Trusted {};
  // Skips the cubic associativity check for tables built by the factories.
  FiniteGroup(Trusted, std::vector<std::vector<int>> table, std::string name);
  void check_latin_identity();

  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::string name_;
};

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> coset_of;  // element -> coset index
};

// G/N; throws DomainError unless N is a normal subgroup.
QuotientGroup quotient(const FiniteGroup& g, const std::vector<int>& n);
// The automorphism of G/N induced by phi; throws DomainError unless phi(N) = N.
Perm induced_automorphism(const FiniteGroup& g, const QuotientGroup& q, const Perm& phi);

struct TwistedClasses {
  int count = 0;
  std::vector<std::vector<int>> classes;
};

// Orbits of (g, a) -> g a phi(g)^-1. Throws DomainError if phi is not an
// automorphism or the group is too large.
TwistedClasses twisted_classes_finite(const FiniteGroup& g, const Perm& phi);
int fixed_point_count(const FiniteGroup& g, const Perm& phi);

// phi as a permutation of from_abelian(a.group()).
Perm abelian_auto_perm(const AbelianAuto& a);

// One representative of each isomorphism class of order <= 16 (42 groups).
std::vector<FiniteGroup> small_groups_corpus();

}  // namespace tlg
