#pragma once

// Finitely generated abelian groups Z^n / span(R), their automorphisms,
// fixed subgroups and Reidemeister numbers.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tlg/intmatrix.hpp"

namespace tlg {

// A cardinality that is either a positive integer or infinite.
class Cardinality {
 public:
  static Cardinality infinite() { return Cardinality(); }
  static Cardinality finite(BigInt n) { return Cardinality(std::move(n)); }

  bool is_infinite() const { return !value_; }
  const BigInt& value() const;  // throws DomainError if infinite

  friend bool operator==(const Cardinality&, const Cardinality&) = default;
  // "infinite" or the decimal value.
  std::string to_string() const;

 private:
  Cardinality() = default;
  explicit Cardinality(BigInt n) : value_(std::move(n)) {}
  std::optional<BigInt> value_;
};

class FGAbelianGroup {
 public:
  // Z^n modulo the column span of `relations` (n rows, any number of columns).
  explicit FGAbelianGroup(IntMatrix relations);
  static FGAbelianGroup free(std::size_t n);
  // Z/d_1 + ... + Z/d_k + Z^free_rank; d_i = 0 is allowed and means Z.
  static FGAbelianGroup from_invariants(const std::vector<BigInt>& d, std::size_t free_rank);

  std::size_t generators() const { return relations_.rows(); }
  const IntMatrix& relations() const { return relations_; }
  const SmithForm& smith() const { return snf_; }

  // Invariant factors greater than 1, in divisibility order.
  std::vector<BigInt> invariant_factors() const;
  std::size_t free_rank() const { return generators() - snf_.rank; }
  Cardinality order() const;

  // Coordinates of x in Z/d_1 + ... + Z^f (reduced torsion part, then free
  // part); equal iff the elements are equal in the group.
  std::vector<BigInt> canonical(const std::vector<BigInt>& x) const;
  bool contains_in_relations(const std::vector<BigInt>& x) const;

  // All elements of a finite group as representatives in Z^n, in canonical
  // order. Throws DomainError if the group is infinite or larger than limit.
  std::vector<std::vector<BigInt>> elements(std::size_t limit = 100000) const;

  std::string describe() const;  // e.g. "Z/2 + Z^2"

 private:
  IntMatrix relations_;
  SmithForm snf_;
};

class AbelianAuto {
 public:
  // Throws DomainError unless M preserves span(R) and induces a bijection.
  AbelianAuto(FGAbelianGroup group, IntMatrix m);

  const FGAbelianGroup& group() const { return group_; }
  const IntMatrix& matrix() const { return m_; }
  std::vector<BigInt> apply(const std::vector<BigInt>& x) const { return m_ * x; }

 private:
  FGAbelianGroup group_;
  IntMatrix m_;
};

struct SubgroupInfo {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
  Cardinality size = Cardinality::infinite();
  // Generators as representatives in Z^n.
  std::vector<std::vector<BigInt>> generators;
};

// Random automorphism of from_invariants(d, free_rank): entries are drawn
// subject to the divisibility that keeps the relation lattice invariant,
// retrying until the map is bijective.
AbelianAuto random_automorphism(const std::vector<BigInt>& d, std::size_t free_rank,
                                std::mt19937_64& rng, int bound = 3);

SubgroupInfo fix_subgroup(const AbelianAuto& a);
// |coker(M - I)| on the group.
Cardinality reidemeister_number_abelian(const AbelianAuto& a);

}  // namespace tlg
