#include <random>

#include "doctest.h"
#include "tlg/exact.hpp"

using tlg::AdditiveGroupSpec;
using tlg::ExactNumber;
using tlg::Rational;
using tlg::SlopeGroupSpec;

namespace {

// Independent sign oracle: evaluate a + b*(sqrt5-1)/2 in 400-bit floating point.
int float_sign(const ExactNumber& x) {
  mpf_class s5(5, 400);
  s5 = sqrt(s5);
  mpf_class t = (s5 - 1) / 2;
  mpf_class a(x.rational_part(), 400);
  mpf_class b(x.tau_part(), 400);
  mpf_class v = a + b * t;
  return sgn(v);
}

ExactNumber random_number(std::mt19937_64& rng, bool quadratic) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  Rational a(num(rng), den(rng));
  a.canonicalize();
  if (!quadratic) return ExactNumber(a);
  Rational b(num(rng), den(rng));
  b.canonicalize();
  return ExactNumber::quadratic(a, b);
}

}  // namespace

TEST_CASE("tau squared reduces to 1 - tau") {
  ExactNumber t = ExactNumber::tau();
  CHECK(t * t == ExactNumber::quadratic(1, -1));
  CHECK((t * t).to_string() == "1-1*t");
}

TEST_CASE("rational addition") {
  CHECK(ExactNumber(1, 2) + ExactNumber(1, 3) == ExactNumber(5, 6));
  CHECK((ExactNumber(1, 2) + ExactNumber(1, 3)).to_string() == "5/6");
}

TEST_CASE("sign of -1 + 2t is positive") {
  ExactNumber x = ExactNumber::quadratic(-1, 2);
  CHECK(x.sign() == 1);
  CHECK(float_sign(x) == 1);
  // 2(-1+2t) = 2*sqrt5 - 4 > 0  <=>  20 > 16
  CHECK(20 > 16);
}

TEST_CASE("sign agrees with high-precision evaluation") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    ExactNumber x = random_number(rng, true);
    CHECK(x.sign() == float_sign(x));
  }
  // Near-cancellation: Fibonacci ratios approximate t closely.
  long f0 = 1, f1 = 1;
  for (int i = 0; i < 40; ++i) {
    ExactNumber x = ExactNumber::quadratic(Rational(-f0), Rational(f1));
    CHECK(x.sign() == float_sign(x));
    long f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(ExactNumber(1) / ExactNumber(0), tlg::DomainError);
  CHECK_THROWS_AS(ExactNumber(0).inverse(), tlg::DomainError);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    bool q = i % 2 == 0;
    ExactNumber a = random_number(rng, q);
    ExactNumber b = random_number(rng, q);
    ExactNumber c = random_number(rng, true);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    if (b.sign() != 0) {
      REQUIRE((a / b) * b == a);
    }
    REQUIRE((a * b).sign() == a.sign() * b.sign());
  }
}

TEST_CASE("comparison is a total order") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 3000; ++i) {
    ExactNumber a = random_number(rng, true);
    ExactNumber b = random_number(rng, true);
    ExactNumber c = random_number(rng, true);
    CHECK((a < b) == (b > a));
    if (a <= b && b <= a) CHECK(a == b);
    if (a < b && b < c) CHECK(a < c);
    CHECK(((a < b) == (a.to_double() < b.to_double()) ||
           std::abs(a.to_double() - b.to_double()) < 1e-9));
  }
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"0", "7", "-3/4", "1/2-3*t", "1+1*t", "-5/3+7/2*t", "2/1"}) {
    ExactNumber x = ExactNumber::parse(s);
    CHECK(ExactNumber::parse(x.to_string()) == x);
  }
  CHECK(ExactNumber::parse("t") == ExactNumber::tau());
  CHECK(ExactNumber::parse("2*t+1") == ExactNumber::quadratic(1, 2));
  CHECK(ExactNumber::parse("3+0*t").to_string() == "3");
  CHECK(ExactNumber::parse("4/6").to_string() == "2/3");
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    ExactNumber x = random_number(rng, i % 3 != 0);
    CHECK(ExactNumber::parse(x.to_string()) == x);
    CHECK(ExactNumber::parse(x.to_string()).to_string() == x.to_string());
  }
}

TEST_CASE("malformed literals report a position") {
  try {
    ExactNumber::parse("1/2+*t");
    FAIL("expected ParseError");
  } catch (const tlg::ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(ExactNumber::parse(""), tlg::ParseError);
  CHECK_THROWS_AS(ExactNumber::parse("1/0"), tlg::ParseError);
  CHECK_THROWS_AS(ExactNumber::parse("1 2"), tlg::ParseError);
  CHECK_THROWS_AS(ExactNumber::parse("x"), tlg::ParseError);
}

TEST_CASE("additive group membership") {
  auto z6 = AdditiveGroupSpec::z_inv(6);
  CHECK(z6.contains(ExactNumber(1, 6)));
  CHECK_FALSE(z6.contains(ExactNumber(1, 5)));
  CHECK(z6.contains(ExactNumber(5, 72)));
  CHECK_FALSE(z6.contains(ExactNumber::tau()));
  auto zt = AdditiveGroupSpec::z_tau();
  CHECK(zt.contains(ExactNumber::quadratic(2, -3)));
  CHECK_FALSE(zt.contains(ExactNumber(1, 2)));
  CHECK(AdditiveGroupSpec::rationals().contains(ExactNumber(1, 7)));
  CHECK_FALSE(AdditiveGroupSpec::rationals().contains(ExactNumber::tau()));
  CHECK(AdditiveGroupSpec::parse("Z[1/6]") == z6);
  CHECK(AdditiveGroupSpec::parse("Z[t]") == zt);
  CHECK(AdditiveGroupSpec::parse(z6.to_string()) == z6);
  CHECK_THROWS_AS(AdditiveGroupSpec::parse("Z[1/1]"), tlg::ParseError);
}

TEST_CASE("additive groups are closed under sums and slope multiplication") {
  struct Case {
    AdditiveGroupSpec a;
    SlopeGroupSpec p;
  };
  std::vector<Case> cases = {
      {AdditiveGroupSpec::z_inv(2), SlopeGroupSpec({ExactNumber(2)})},
      {AdditiveGroupSpec::z_inv(6), SlopeGroupSpec({ExactNumber(2), ExactNumber(3)})},
      {AdditiveGroupSpec::z_tau(), SlopeGroupSpec({ExactNumber::tau()})},
  };
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<long> ex(-4, 4);
  for (const auto& c : cases) {
    auto basis = c.a.test_elements();
    for (int i = 0; i < 200; ++i) {
      ExactNumber x, y;
      for (const auto& e : basis) {
        x += e * ExactNumber(coef(rng)) * c.p.generators()[0].pow(ex(rng));
        y += e * ExactNumber(coef(rng));
      }
      REQUIRE(c.a.contains(x));
      CHECK(c.a.contains(x + y));
      for (const auto& g : c.p.generators()) {
        CHECK(c.a.contains(g * x));
        CHECK(c.a.contains(g.inverse() * x));
      }
    }
  }
}

TEST_CASE("slope group factoring") {
  SlopeGroupSpec p23({ExactNumber(2), ExactNumber(3)});
  auto six = p23.factor(ExactNumber(6));
  REQUIRE(six);
  CHECK(*six == std::vector<std::int64_t>{1, 1});
  CHECK_FALSE(p23.factor(ExactNumber(5)));
  CHECK(*p23.factor(ExactNumber(4, 27)) == std::vector<std::int64_t>{2, -3});
  CHECK_FALSE(p23.factor(ExactNumber::tau()));
  CHECK_THROWS_AS(p23.factor(ExactNumber(-6)), tlg::DomainError);
  CHECK_THROWS_AS(p23.factor(ExactNumber(0)), tlg::DomainError);

  SlopeGroupSpec pt({ExactNumber::tau()});
  auto f = pt.factor(ExactNumber::quadratic(1, -1));
  REQUIRE(f);
  CHECK(*f == std::vector<std::int64_t>{2});
  CHECK(*pt.factor(ExactNumber::quadratic(1, 1)) == std::vector<std::int64_t>{-1});
  CHECK_FALSE(pt.factor(ExactNumber(2)));
  CHECK_FALSE(pt.factor(ExactNumber::quadratic(1, 2)));

  // 4 = 2^2 in <4/9, 2>? generators 4/9 and 2: 6 = (4/9)^(-1/2)... not integral.
  SlopeGroupSpec odd({ExactNumber(4, 9), ExactNumber(2)});
  CHECK(*odd.factor(ExactNumber(8, 9)) == std::vector<std::int64_t>{1, 1});
  CHECK_FALSE(odd.factor(ExactNumber(3)));

  CHECK_THROWS_AS(SlopeGroupSpec({ExactNumber(1)}), tlg::DomainError);
  CHECK_THROWS_AS(SlopeGroupSpec({ExactNumber(2), ExactNumber(4)}).factor(ExactNumber(2)),
                  tlg::DomainError);
  CHECK_THROWS_AS(SlopeGroupSpec({ExactNumber(2), ExactNumber::tau()}).factor(ExactNumber(2)),
                  tlg::DomainError);
  CHECK(SlopeGroupSpec::parse("<2,3>").to_string() == "<2,3>");
  CHECK(SlopeGroupSpec::parse("<t>").generators()[0] == ExactNumber::tau());
}

TEST_CASE("factor then expand reproduces the input") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> ex(-12, 12);
  std::vector<SlopeGroupSpec> groups = {
      SlopeGroupSpec({ExactNumber(2)}),
      SlopeGroupSpec({ExactNumber(2), ExactNumber(3)}),
      SlopeGroupSpec({ExactNumber::tau()}),
      SlopeGroupSpec({ExactNumber::quadratic(1, 1)}),
  };
  for (const auto& g : groups) {
    for (int i = 0; i < 300; ++i) {
      std::vector<std::int64_t> e(g.rank());
      for (auto& v : e) v = ex(rng);
      ExactNumber x = g.expand(e);
      auto back = g.factor(x);
      REQUIRE(back);
      CHECK(*back == e);
      CHECK(g.expand(*back) == x);
    }
  }
}
