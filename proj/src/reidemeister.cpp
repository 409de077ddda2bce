#include "tlg/reidemeister.hpp"

#include <random>

namespace tlg {

void OracleTally::fail(std::string what) {
  ++failure_count;
  if (failures.size() < 10) failures.push_back(std::move(what));
}

namespace {

std::string perm_string(const Perm& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + "]";
}

bool preserves(const FiniteGroup& g, const QuotientGroup& q, const Perm& phi) {
  for (int a = 0; a < g.order(); ++a) {
    if ((q.coset_of[a] == 0) != (q.coset_of[phi[a]] == 0)) return false;
  }
  return true;
}

// a >= b, with infinity above every integer.
bool at_least(const Cardinality& a, const Cardinality& b) {
  if (a.is_infinite()) return true;
  if (b.is_infinite()) return false;
  return a.value() >= b.value();
}

}  // namespace

OracleTally check_corpus(const std::vector<FiniteGroup>& corpus) {
  OracleTally tally;
  for (const auto& g : corpus) {
    ++tally.groups;
    std::vector<QuotientGroup> quotients;
    for (const auto& n : g.normal_subgroups()) quotients.push_back(quotient(g, n));
    for (const auto& phi : g.automorphisms()) {
      ++tally.automorphisms;
      const int r = twisted_classes_finite(g, phi).count;
      const int fix = fixed_point_count(g, phi);
      const std::string where = g.name() + " phi=" + perm_string(phi);
      if ((r == 1) != (fix == 1)) {
        tally.fail(where + ": R=" + std::to_string(r) + " |Fix|=" + std::to_string(fix));
      }
      // Finite group: both sides of the infinite-iff-infinite statement are false.
      if (r < 1 || fix < 1 || r > g.order() || fix > g.order()) tally.fail(where + ": count out of range");
      for (const auto& q : quotients) {
        if (!preserves(g, q, phi)) continue;
        ++tally.quotient_checks;
        const int rq = twisted_classes_finite(q.group, induced_automorphism(g, q, phi)).count;
        if (r < rq) {
          tally.fail(where + ": R=" + std::to_string(r) + " < R(quotient of order " +
                     std::to_string(q.group.order()) + ")=" + std::to_string(rq));
        }
      }
    }
  }
  return tally;
}

OracleTally check_random_abelian(std::size_t instances, std::uint64_t seed) {
  OracleTally tally;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> factors(0, 3), modulus(2, 8), free_rank(0, 2), kdist(2, 4);
  for (std::size_t i = 0; i < instances; ++i) {
    std::vector<BigInt> d;
    for (int k = factors(rng); k > 0; --k) d.push_back(modulus(rng));
    std::size_t f = free_rank(rng);
    // Half the instances are finite so the orbit count applies.
    if (i % 2 == 0) f = 0;
    if (d.empty() && f == 0) d.push_back(modulus(rng));
    AbelianAuto a = random_automorphism(d, f, rng);
    ++tally.groups;
    ++tally.automorphisms;
    const FGAbelianGroup& g = a.group();
    const Cardinality r = reidemeister_number_abelian(a);
    const SubgroupInfo fix = fix_subgroup(a);
    const std::string where = g.describe() + " M=" + a.matrix().to_string();
    if (fix.size.is_infinite() != r.is_infinite()) {
      tally.fail(where + ": |Fix|=" + fix.size.to_string() + " R=" + r.to_string());
    }
    if (f == 0) {
      FiniteGroup fg = FiniteGroup::from_abelian(g);
      Perm p = abelian_auto_perm(a);
      const int orbits = twisted_classes_finite(fg, p).count;
      const int fixed = fixed_point_count(fg, p);
      if (r != Cardinality::finite(orbits)) {
        tally.fail(where + ": coker " + r.to_string() + " vs orbits " + std::to_string(orbits));
      }
      if (fix.size != Cardinality::finite(fixed)) {
        tally.fail(where + ": Fix " + fix.size.to_string() + " vs " + std::to_string(fixed));
      }
      if ((orbits == 1) != (fixed == 1)) tally.fail(where + ": R = 1 and |Fix| = 1 disagree");
    }
    // G/kG is characteristic, so phi descends.
    const int k = kdist(rng);
    const std::size_t n = g.generators();
    IntMatrix multiples(n, n);
    for (std::size_t j = 0; j < n; ++j) multiples.at(j, j) = k;
    FGAbelianGroup quotient_group(g.relations().hconcat(multiples));
    AbelianAuto bar(quotient_group, a.matrix());
    const Cardinality rq = reidemeister_number_abelian(bar);
    ++tally.quotient_checks;
    if (!at_least(r, rq)) tally.fail(where + ": R=" + r.to_string() + " < R mod " + std::to_string(k) + "=" + rq.to_string());
    FiniteGroup fq = FiniteGroup::from_abelian(quotient_group);
    const int orbits_q = twisted_classes_finite(fq, abelian_auto_perm(bar)).count;
    if (rq != Cardinality::finite(orbits_q)) {
      tally.fail(where + ": quotient coker " + rq.to_string() + " vs orbits " + std::to_string(orbits_q));
    }
  }
  return tally;
}

}  // namespace tlg
