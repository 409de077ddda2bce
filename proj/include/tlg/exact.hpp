#pragma once

// Exact arithmetic in Q(sqrt 5), written in the basis (1, t) where
// t = (sqrt 5 - 1) / 2 is the small golden ratio (t^2 = 1 - t). Rationals are
// the elements with vanishing t-coordinate.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlg/error.hpp"

namespace tlg {

using BigInt = mpz_class;
using Rational = mpq_class;

class ExactNumber {
 public:
  ExactNumber() = default;
  ExactNumber(long value) : a_(value) {}  // NOLINT(runtime/explicit)
  ExactNumber(const Rational& value) : a_(value) { a_.canonicalize(); }  // NOLINT
  ExactNumber(long num, long den);

  // a + b*t
  static ExactNumber quadratic(const Rational& a, const Rational& b);
  static ExactNumber tau() { return quadratic(0, 1); }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const;
  const Rational& rational_part() const { return a_; }
  const Rational& tau_part() const { return b_; }

  // -1, 0 or +1 according to the real embedding t ~ 0.618; decided by integer
  // squaring, never by floating point.
  int sign() const;

  ExactNumber operator-() const;
  ExactNumber& operator+=(const ExactNumber& other);
  ExactNumber& operator-=(const ExactNumber& other);
  ExactNumber& operator*=(const ExactNumber& other);
  ExactNumber& operator/=(const ExactNumber& other);

  friend ExactNumber operator+(ExactNumber x, const ExactNumber& y) { return x += y; }
  friend ExactNumber operator-(ExactNumber x, const ExactNumber& y) { return x -= y; }
  friend ExactNumber operator*(ExactNumber x, const ExactNumber& y) { return x *= y; }
  friend ExactNumber operator/(ExactNumber x, const ExactNumber& y) { return x /= y; }

  // Throws DomainError on zero.
  ExactNumber inverse() const;
  ExactNumber pow(long exponent) const;

  // Galois conjugate: t -> -1 - t.
  ExactNumber conjugate() const;
  // Field norm x * conjugate(x), always rational.
  Rational norm() const;

  friend bool operator==(const ExactNumber& x, const ExactNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const ExactNumber& x,
                                          const ExactNumber& y);

  // Literal grammar: integers `7`, rationals `-3/4`, quadratics `1/2-3*t`,
  // `t`, `2*t+1`. Printing produces `p`, `p/q` or `A+B*t` / `A-B*t`.
  std::string to_string() const;
  static ExactNumber parse(std::string_view text);

  // Decimal approximation for human-readable output only.
  double to_double() const;

 private:
  void canonicalize();

  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const ExactNumber& x);

struct ExactNumberHash {
  std::size_t operator()(const ExactNumber& x) const;
};

// Additive subgroups A of (R,+) that are decidable here.
class AdditiveGroupSpec {
 public:
  enum class Kind { ZInvN, ZTau, FullRational };

  // Z[1/n]: rationals whose reduced denominator divides a power of n.
  static AdditiveGroupSpec z_inv(long n);
  // Z[t] = {a + b t : a, b integers}.
  static AdditiveGroupSpec z_tau() { return AdditiveGroupSpec(Kind::ZTau, 0); }
  static AdditiveGroupSpec rationals() {
    return AdditiveGroupSpec(Kind::FullRational, 0);
  }

  Kind kind() const { return kind_; }
  long n() const { return n_; }

  bool contains(const ExactNumber& x) const;

  // Finite set generating A as a module over the slope group's ring; used to
  // test P*A in A.
  std::vector<ExactNumber> test_elements() const;

  // `Z[1/6]`, `Z[t]`, `Q`.
  std::string to_string() const;
  static AdditiveGroupSpec parse(std::string_view text);

  friend bool operator==(const AdditiveGroupSpec&, const AdditiveGroupSpec&) = default;

 private:
  AdditiveGroupSpec(Kind kind, long n) : kind_(kind), n_(n) {}

  Kind kind_;
  long n_;
};

bool in_additive_group(const ExactNumber& x, const AdditiveGroupSpec& group);

// Finitely generated multiplicative subgroup P of the positive reals, given by
// generators assumed multiplicatively independent.
class SlopeGroupSpec {
 public:
  explicit SlopeGroupSpec(std::vector<ExactNumber> generators);

  const std::vector<ExactNumber>& generators() const { return generators_; }
  std::size_t rank() const { return generators_.size(); }

  // Exponent vector e with x = prod g_i^e_i, or nullopt if x is not in P.
  // Throws DomainError if x <= 0 or if the generators are of a shape this
  // module cannot factor over (see README).
  std::optional<std::vector<std::int64_t>> factor(const ExactNumber& x) const;

  ExactNumber expand(const std::vector<std::int64_t>& exponents) const;

  // `<2,3>`, `<t>`.
  std::string to_string() const;
  static SlopeGroupSpec parse(std::string_view text);

 private:
  std::optional<std::vector<std::int64_t>> factor_rational(const Rational& x) const;
  std::optional<std::vector<std::int64_t>> factor_single(const ExactNumber& x) const;

  std::vector<ExactNumber> generators_;
  std::vector<BigInt> primes_;  // primes of all-rational generator lists
};

std::optional<std::vector<std::int64_t>> factor_in_slope_group(
    const ExactNumber& x, const SlopeGroupSpec& group);

}  // namespace tlg
