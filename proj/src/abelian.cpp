#include "tlg/abelian.hpp"

namespace tlg {

const BigInt& Cardinality::value() const {
  if (!value_) throw DomainError("cardinality is infinite");
  return *value_;
}

std::string Cardinality::to_string() const { return value_ ? value_->get_str() : "infinite"; }

FGAbelianGroup::FGAbelianGroup(IntMatrix relations)
    : relations_(std::move(relations)), snf_(smith_normal_form(relations_)) {}

FGAbelianGroup FGAbelianGroup::free(std::size_t n) { return FGAbelianGroup(IntMatrix(n, 0)); }

FGAbelianGroup FGAbelianGroup::from_invariants(const std::vector<BigInt>& d, std::size_t free_rank) {
  const std::size_t n = d.size() + free_rank;
  IntMatrix r(n, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r.at(i, i) = abs(d[i]);
  return FGAbelianGroup(std::move(r));
}

std::vector<BigInt> FGAbelianGroup::invariant_factors() const {
  std::vector<BigInt> out;
  for (const auto& d : snf_.diagonal) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

Cardinality FGAbelianGroup::order() const {
  if (free_rank() > 0) return Cardinality::infinite();
  BigInt n = 1;
  for (const auto& d : snf_.diagonal) n *= d;
  return Cardinality::finite(n);
}

std::vector<BigInt> FGAbelianGroup::canonical(const std::vector<BigInt>& x) const {
  std::vector<BigInt> y = snf_.U * x;
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf_.rank) {
      const BigInt& d = snf_.diagonal[i];
      if (d == 1) continue;
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
      out.push_back(r);
    } else {
      out.push_back(y[i]);
    }
  }
  return out;
}

bool FGAbelianGroup::contains_in_relations(const std::vector<BigInt>& x) const {
  std::vector<BigInt> y = snf_.U * x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf_.rank ? y[i] % snf_.diagonal[i] != 0 : y[i] != 0) return false;
  }
  return true;
}

std::vector<std::vector<BigInt>> FGAbelianGroup::elements(std::size_t limit) const {
  Cardinality n = order();
  if (n.is_infinite()) throw DomainError("the group is infinite");
  if (n.value() > static_cast<unsigned long>(limit)) throw DomainError("the group is too large to list");
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < snf_.rank; ++i) {
    if (snf_.diagonal[i] > 1) positions.push_back(i);
  }
  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> y(generators(), BigInt(0));
  while (true) {
    out.push_back(snf_.Uinv * y);
    std::size_t k = positions.size();
    while (k > 0) {
      std::size_t p = positions[k - 1];
      if (++y[p] < snf_.diagonal[p]) break;
      y[p] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

std::string FGAbelianGroup::describe() const {
  std::string out;
  for (const auto& d : invariant_factors()) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  if (free_rank() > 0) {
    if (!out.empty()) out += " + ";
    out += free_rank() == 1 ? "Z" : "Z^" + std::to_string(free_rank());
  }
  return out.empty() ? "0" : out;
}

AbelianAuto::AbelianAuto(FGAbelianGroup group, IntMatrix m) : group_(std::move(group)), m_(std::move(m)) {
  const std::size_t n = group_.generators();
  if (m_.rows() != n || m_.cols() != n) throw DomainError("automorphism matrix has the wrong shape");
  const IntMatrix& r = group_.relations();
  IntMatrix mr = m_ * r;
  for (std::size_t j = 0; j < mr.cols(); ++j) {
    if (!group_.contains_in_relations(mr.col(j))) {
      throw DomainError("matrix does not preserve the relation lattice");
    }
  }
  // Surjective endomorphisms of finitely generated abelian groups are
  // injective, so spanning suffices.
  SmithForm f = smith_normal_form(m_.hconcat(r));
  bool onto = f.rank == n;
  for (const auto& d : f.diagonal) onto = onto && d == 1;
  if (!onto) throw DomainError("matrix does not induce a bijection");
}

AbelianAuto random_automorphism(const std::vector<BigInt>& d, std::size_t free_rank,
                                std::mt19937_64& rng, int bound) {
  FGAbelianGroup g = FGAbelianGroup::from_invariants(d, free_rank);
  const std::size_t n = g.generators();
  std::vector<BigInt> mod(n, BigInt(0));
  for (std::size_t i = 0; i < d.size(); ++i) mod[i] = abs(d[i]);
  std::uniform_int_distribution<int> coef(-bound, bound);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // M e_j d_j must lie in d_i Z on coordinate i.
        BigInt step;
        if (mod[i] == 0) {
          if (mod[j] != 0) continue;
          step = 1;
        } else {
          step = mod[i] / gcd(mod[i], mod[j]);
        }
        m.at(i, j) = step * coef(rng);
      }
    }
    try {
      return AbelianAuto(g, m);
    } catch (const DomainError&) {
    }
  }
  throw Error("no random automorphism found");
}

SubgroupInfo fix_subgroup(const AbelianAuto& a) {
  const FGAbelianGroup& g = a.group();
  const std::size_t n = g.generators();
  const IntMatrix& r = g.relations();
  // (M - I) x = R y  <=>  [M - I | -R] (x, y) = 0
  IntMatrix kernel = integer_kernel((a.matrix() - IntMatrix::identity(n)).hconcat(-r));
  IntMatrix p(n, kernel.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < kernel.cols(); ++j) p.at(i, j) = kernel.at(i, j);
  }
  // Fix = L / span(R) with L = span(P, R); write R in a basis of L.
  SmithForm lf = smith_normal_form(p.hconcat(r));
  const std::size_t k = lf.rank;
  IntMatrix basis(n, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t row = 0; row < n; ++row) basis.at(row, i) = lf.diagonal[i] * lf.Uinv.at(row, i);
  }
  IntMatrix ur = lf.U * r;
  IntMatrix coords(k, r.cols());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      mpz_divexact(coords.at(i, j).get_mpz_t(), ur.at(i, j).get_mpz_t(), lf.diagonal[i].get_mpz_t());
    }
  }
  SmithForm cf = smith_normal_form(coords);
  SubgroupInfo out;
  out.free_rank = k - cf.rank;
  BigInt size = 1;
  for (const auto& e : cf.diagonal) {
    if (e > 1) out.torsion.push_back(e);
    size *= e;
  }
  out.size = out.free_rank > 0 ? Cardinality::infinite() : Cardinality::finite(size);
  IntMatrix gens = basis * cf.Uinv;
  for (std::size_t i = 0; i < k; ++i) {
    if (i < cf.rank && cf.diagonal[i] == 1) continue;
    out.generators.push_back(gens.col(i));
  }
  return out;
}

Cardinality reidemeister_number_abelian(const AbelianAuto& a) {
  const std::size_t n = a.group().generators();
  SmithForm f = smith_normal_form((a.matrix() - IntMatrix::identity(n)).hconcat(a.group().relations()));
  if (f.rank < n) return Cardinality::infinite();
  BigInt size = 1;
  for (const auto& d : f.diagonal) size *= d;
  return Cardinality::finite(size);
}

}  // namespace tlg
