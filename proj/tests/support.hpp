#pragma once

// Random generators shared by the unit and acceptance suites.

#include <random>
#include <vector>

#include "tlg/pl.hpp"

namespace testsupport {

using tlg::ExactNumber;
using tlg::PLMap;

struct Ring {
  tlg::BieriStrebelSpec spec;
  std::vector<ExactNumber> grid;  // candidate endpoints in A, sorted
};

inline Ring dyadic_ring() {
  Ring r{{ExactNumber(1), tlg::AdditiveGroupSpec::z_inv(2),
          tlg::SlopeGroupSpec({ExactNumber(2)})},
         {}};
  for (long j = 0; j <= 16; ++j) r.grid.push_back(ExactNumber(j, 16));
  return r;
}

inline Ring sixadic_ring() {
  Ring r{{ExactNumber(1), tlg::AdditiveGroupSpec::z_inv(6),
          tlg::SlopeGroupSpec({ExactNumber(2), ExactNumber(3)})},
         {}};
  for (long j = 0; j <= 36; ++j) r.grid.push_back(ExactNumber(j, 36));
  return r;
}

inline Ring golden_ring() {
  Ring r{{ExactNumber(1), tlg::AdditiveGroupSpec::z_tau(),
          tlg::SlopeGroupSpec({ExactNumber::tau()})},
         {}};
  r.grid = {ExactNumber(0), ExactNumber(1)};
  ExactNumber t = ExactNumber::tau();
  for (int k = 1; k <= 5; ++k) {
    r.grid.push_back(t.pow(k));
    r.grid.push_back(ExactNumber(1) - t.pow(k));
  }
  std::sort(r.grid.begin(), r.grid.end());
  r.grid.erase(std::unique(r.grid.begin(), r.grid.end()), r.grid.end());
  return r;
}

// Three-piece bump on [a, b] with slopes (1/p, 1, p): a member of the group
// whenever a, b are in A and p in P.
inline PLMap bump(const ExactNumber& ell, const ExactNumber& a, const ExactNumber& b,
                  const ExactNumber& p) {
  ExactNumber len = b - a;
  ExactNumber q = p > ExactNumber(1) ? p.inverse() : p;
  ExactNumber lambda = q;
  while (lambda * (ExactNumber(1) + p.inverse()) >= ExactNumber(1)) lambda *= q;
  ExactNumber u = len * lambda;
  ExactNumber w = u / p;
  std::vector<ExactNumber> xs{ExactNumber(0)}, ys{ExactNumber(0)};
  if (a.sign() > 0) {
    xs.push_back(a);
    ys.push_back(a);
  }
  xs.push_back(a + u);
  ys.push_back(a + w);
  xs.push_back(b - w);
  ys.push_back(b - u);
  if (b != ell) {
    xs.push_back(b);
    ys.push_back(b);
  }
  xs.push_back(ell);
  ys.push_back(ell);
  return PLMap::from_points(xs, ys);
}

inline PLMap random_member(const Ring& ring, std::mt19937_64& rng, int factors = 3) {
  std::uniform_int_distribution<std::size_t> pick(0, ring.grid.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> gen(0, ring.spec.P.rank() - 1);
  PLMap f = PLMap::identity(ring.spec.ell);
  for (int i = 0; i < factors; ++i) {
    std::size_t ia = pick(rng), ib = pick(rng);
    while (ia == ib) ib = pick(rng);
    if (ia > ib) std::swap(ia, ib);
    ExactNumber p = ring.spec.P.generators()[gen(rng)];
    if (coin(rng)) p = p.inverse();
    f = tlg::compose(f, bump(ring.spec.ell, ring.grid[ia], ring.grid[ib], p));
  }
  return f;
}

// A random dyadic rational in [0, ell] with denominator 2^bits.
inline ExactNumber random_point(std::mt19937_64& rng, const ExactNumber& ell, int bits = 10) {
  std::uniform_int_distribution<long> d(0, 1L << bits);
  return ell * ExactNumber(d(rng), 1L << bits);
}

}  // namespace testsupport
