#pragma once

// Orientation-preserving piecewise-linear homeomorphisms of [0, ell] with
// exact breakpoints and slopes.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlg/exact.hpp"

namespace tlg {

class PLMap {
 public:
  // Anchored at f(0) = 0; throws DomainError unless the slopes carry ell to
  // ell, the breakpoints are strictly increasing inside (0, ell) and every
  // slope is positive. Equal adjacent slopes are merged.
  PLMap(ExactNumber ell, std::vector<ExactNumber> breakpoints,
        std::vector<ExactNumber> slopes);

  static PLMap identity(const ExactNumber& ell = ExactNumber(1));

  // Map through the points (xs[i], ys[i]); both lists run from 0 to ell and
  // must be strictly increasing.
  static PLMap from_points(std::vector<ExactNumber> xs, std::vector<ExactNumber> ys);

  const ExactNumber& ell() const { return xs_.back(); }
  std::vector<ExactNumber> breakpoints() const;
  const std::vector<ExactNumber>& slopes() const { return slopes_; }
  // Breakpoints together with 0 and ell, and their images.
  const std::vector<ExactNumber>& xs() const { return xs_; }
  const std::vector<ExactNumber>& ys() const { return ys_; }

  bool is_identity() const { return slopes_.size() == 1; }

  // Throws DomainError unless 0 <= x <= ell.
  ExactNumber evaluate(const ExactNumber& x) const;
  ExactNumber evaluate_inverse(const ExactNumber& y) const;

  friend bool operator==(const PLMap& f, const PLMap& g) {
    return f.xs_ == g.xs_ && f.ys_ == g.ys_;
  }

  // `pl ell=1 breaks=[1/2,3/4] slopes=[1/2,2,1]`
  std::string to_string() const;
  static PLMap parse(std::string_view text);

 private:
  PLMap() = default;
  void build_from_points();

  std::vector<ExactNumber> xs_;
  std::vector<ExactNumber> ys_;
  std::vector<ExactNumber> slopes_;
};

// f o g (g acts first).
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
// f g f^-1 g^-1
PLMap commutator(const PLMap& f, const PLMap& g);

struct BieriStrebelSpec {
  ExactNumber ell;
  AdditiveGroupSpec A;
  SlopeGroupSpec P;

  // Throws DomainError if ell is not in A or some generator of P fails
  // p*A in A on the test elements of A.
  void validate() const;

  // `1 Z[1/2] <2>`
  std::string to_string() const;
  static BieriStrebelSpec parse(std::string_view text);
};

struct MembershipReport {
  bool member = true;
  std::vector<std::string> violations;
};

MembershipReport is_member(const PLMap& f, const BieriStrebelSpec& spec);

struct OpenInterval {
  ExactNumber lo;
  ExactNumber hi;
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

// Maximal open intervals on which f(x) != x.
std::vector<OpenInterval> support(const PLMap& f);

struct EndpointCharacters {
  std::vector<std::int64_t> left;
  std::vector<std::int64_t> right;
  friend bool operator==(const EndpointCharacters&, const EndpointCharacters&) = default;
};

// Exponent vectors of the slopes at 0+ and ell-; throws DomainError if either
// slope is not in P.
EndpointCharacters endpoint_characters(const PLMap& f, const SlopeGroupSpec& P);

struct UncountMaps {
  PLMap f;
  PLMap g;
  PLMap h;
};

// The three generators f_p, g_q, h_r of the family G(p, q, r) on [0, 1].
// Throws DomainError if a parameter is <= 1.
UncountMaps build_example_uncount(const ExactNumber& p, const ExactNumber& q,
                                  const ExactNumber& r);
PLMap uncount_f(const ExactNumber& p);
PLMap uncount_g(const ExactNumber& q);

}  // namespace tlg
