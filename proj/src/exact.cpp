#include "tlg/exact.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "tlg/detail/cursor.hpp"

namespace tlg {

namespace {

int sgn(const Rational& q) { return sgn(q.get_num()); }

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) {
    return q.get_num().get_str();
  }
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Unsigned rational `p` or `p/q`.
Rational parse_unsigned_rational(detail::Cursor& cur) {
  std::string num = cur.digits();
  if (cur.peek() == '/') {
    cur.get();
    std::size_t at = cur.position();
    std::string den = cur.digits();
    Rational q{BigInt(num), BigInt(den)};
    if (q.get_den() == 0) {
      throw ParseError("zero denominator", at);
    }
    q.canonicalize();
    return q;
  }
  return Rational{BigInt(num)};
}

}  // namespace

ExactNumber::ExactNumber(long num, long den) {
  if (den == 0) {
    throw DomainError("zero denominator");
  }
  a_ = Rational(num, 1) / Rational(den, 1);
}

ExactNumber ExactNumber::quadratic(const Rational& a, const Rational& b) {
  ExactNumber x;
  x.a_ = a;
  x.b_ = b;
  x.canonicalize();
  return x;
}

void ExactNumber::canonicalize() {
  a_.canonicalize();
  b_.canonicalize();
}

bool ExactNumber::is_integer() const {
  return b_ == 0 && a_.get_den() == 1;
}

int ExactNumber::sign() const {
  // 2(a + b t) = (2a - b) + b sqrt5.
  Rational u = 2 * a_ - b_;
  const Rational& v = b_;
  int su = sgn(u);
  int sv = sgn(v);
  if (sv == 0) return su;
  if (su >= 0 && sv >= 0) return 1;
  if (su <= 0 && sv <= 0) return -1;
  Rational diff = u * u - 5 * v * v;
  int sd = sgn(diff);  // never 0: sqrt5 is irrational
  return su > 0 ? sd : -sd;
}

ExactNumber ExactNumber::operator-() const { return quadratic(-a_, -b_); }

ExactNumber& ExactNumber::operator+=(const ExactNumber& other) {
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

ExactNumber& ExactNumber::operator-=(const ExactNumber& other) {
  a_ -= other.a_;
  b_ -= other.b_;
  return *this;
}

ExactNumber& ExactNumber::operator*=(const ExactNumber& other) {
  // (a + bt)(c + dt) = ac + bd + (ad + bc - bd) t, using t^2 = 1 - t.
  Rational bd = b_ * other.b_;
  Rational a = a_ * other.a_ + bd;
  Rational b = a_ * other.b_ + b_ * other.a_ - bd;
  a_ = a;
  b_ = b;
  return *this;
}

ExactNumber& ExactNumber::operator/=(const ExactNumber& other) {
  return *this *= other.inverse();
}

ExactNumber ExactNumber::conjugate() const { return quadratic(a_ - b_, -b_); }

Rational ExactNumber::norm() const { return a_ * a_ - a_ * b_ - b_ * b_; }

ExactNumber ExactNumber::inverse() const {
  if (a_ == 0 && b_ == 0) {
    throw DomainError("division by zero");
  }
  Rational n = norm();
  ExactNumber c = conjugate();
  return quadratic(c.a_ / n, c.b_ / n);
}

ExactNumber ExactNumber::pow(long exponent) const {
  ExactNumber base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(exponent);
  ExactNumber result(1);
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::strong_ordering operator<=>(const ExactNumber& x, const ExactNumber& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExactNumber::to_string() const {
  if (b_ == 0) {
    return rational_to_string(a_);
  }
  std::string out = rational_to_string(a_);
  if (b_ < 0) {
    out += "-" + rational_to_string(-b_) + "*t";
  } else {
    out += "+" + rational_to_string(b_) + "*t";
  }
  return out;
}

ExactNumber ExactNumber::parse(std::string_view text) {
  detail::Cursor cur(text);
  Rational a, b;
  bool first = true;
  while (true) {
    cur.skip_ws();
    if (cur.at_end()) {
      if (first) cur.fail("empty number literal");
      break;
    }
    int term_sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
      term_sign = cur.get() == '-' ? -1 : 1;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    cur.skip_ws();
    if (cur.peek() == 't') {
      cur.get();
      b += term_sign;
    } else {
      Rational coeff = parse_unsigned_rational(cur) * term_sign;
      if (cur.accept('*')) {
        cur.expect('t');
        b += coeff;
      } else {
        a += coeff;
      }
    }
    first = false;
  }
  return quadratic(a, b);
}

double ExactNumber::to_double() const {
  static const double kTau = 0.61803398874989484820;
  return a_.get_d() + b_.get_d() * kTau;
}

std::ostream& operator<<(std::ostream& os, const ExactNumber& x) {
  return os << x.to_string();
}

std::size_t ExactNumberHash::operator()(const ExactNumber& x) const {
  return std::hash<std::string>{}(x.to_string());
}

// ---------------------------------------------------------------------------
// AdditiveGroupSpec

AdditiveGroupSpec AdditiveGroupSpec::z_inv(long n) {
  if (n < 2) {
    throw DomainError("Z[1/n] requires n >= 2");
  }
  return AdditiveGroupSpec(Kind::ZInvN, n);
}

bool AdditiveGroupSpec::contains(const ExactNumber& x) const {
  switch (kind_) {
    case Kind::FullRational:
      return x.is_rational();
    case Kind::ZTau:
      return x.rational_part().get_den() == 1 && x.tau_part().get_den() == 1;
    case Kind::ZInvN: {
      if (!x.is_rational()) return false;
      BigInt den = x.rational_part().get_den();
      BigInt n = n_;
      BigInt g;
      while (true) {
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
        if (g == 1) break;
        den /= g;
      }
      return den == 1;
    }
  }
  return false;
}

std::vector<ExactNumber> AdditiveGroupSpec::test_elements() const {
  switch (kind_) {
    case Kind::ZInvN:
      return {ExactNumber(1), ExactNumber(1, n_)};
    case Kind::ZTau:
      return {ExactNumber(1), ExactNumber::tau()};
    case Kind::FullRational:
      return {ExactNumber(1), ExactNumber(1, 2), ExactNumber(2, 3)};
  }
  return {};
}

std::string AdditiveGroupSpec::to_string() const {
  switch (kind_) {
    case Kind::ZInvN:
      return "Z[1/" + std::to_string(n_) + "]";
    case Kind::ZTau:
      return "Z[t]";
    case Kind::FullRational:
      return "Q";
  }
  return "?";
}

AdditiveGroupSpec AdditiveGroupSpec::parse(std::string_view text) {
  detail::Cursor cur(text);
  cur.skip_ws();
  if (cur.accept('Q')) {
    cur.expect_end();
    return rationals();
  }
  cur.expect('Z');
  cur.expect('[');
  cur.skip_ws();
  if (cur.peek() == 't') {
    cur.get();
    cur.expect(']');
    cur.expect_end();
    return z_tau();
  }
  cur.expect('1');
  cur.expect('/');
  std::size_t at = cur.position();
  long n = cur.integer();
  if (n < 2) throw ParseError("Z[1/n] requires n >= 2", at);
  cur.expect(']');
  cur.expect_end();
  return z_inv(n);
}

bool in_additive_group(const ExactNumber& x, const AdditiveGroupSpec& group) {
  return group.contains(x);
}

// ---------------------------------------------------------------------------
// SlopeGroupSpec

namespace {

void collect_primes(BigInt n, std::vector<BigInt>& primes) {
  if (n < 0) n = -n;
  if (n > BigInt("1000000000000")) {
    throw DomainError("slope generator too large to factor: " + n.get_str());
  }
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
}

// Removes all factors p from n, returning the multiplicity.
std::int64_t strip(BigInt& n, const BigInt& p) {
  std::int64_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

SlopeGroupSpec::SlopeGroupSpec(std::vector<ExactNumber> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw DomainError("slope group needs at least one generator");
  }
  bool all_rational = true;
  for (const auto& g : generators_) {
    if (g.sign() <= 0 || g == ExactNumber(1)) {
      throw DomainError("slope generator must be positive and != 1: " +
                        g.to_string());
    }
    all_rational = all_rational && g.is_rational();
  }
  if (all_rational) {
    for (const auto& g : generators_) {
      collect_primes(g.rational_part().get_num(), primes_);
      collect_primes(g.rational_part().get_den(), primes_);
    }
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  }
}

std::optional<std::vector<std::int64_t>> SlopeGroupSpec::factor(
    const ExactNumber& x) const {
  if (x.sign() <= 0) {
    throw DomainError("only positive numbers factor in a slope group: " +
                      x.to_string());
  }
  bool all_rational = std::all_of(generators_.begin(), generators_.end(),
                                  [](const ExactNumber& g) { return g.is_rational(); });
  if (all_rational) {
    if (!x.is_rational()) return std::nullopt;
    return factor_rational(x.rational_part());
  }
  if (generators_.size() == 1) {
    return factor_single(x);
  }
  throw DomainError("unsupported slope group " + to_string() +
                    ": irrational generators must stand alone");
}

std::optional<std::vector<std::int64_t>> SlopeGroupSpec::factor_rational(
    const Rational& x) const {
  const std::size_t k = generators_.size();
  const std::size_t m = primes_.size();

  auto valuations = [&](const Rational& q, bool& smooth) {
    BigInt num = q.get_num();
    BigInt den = q.get_den();
    std::vector<Rational> v(m);
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = Rational(strip(num, primes_[i]) - strip(den, primes_[i]));
    }
    smooth = (num == 1 || num == -1) && den == 1;
    return v;
  };

  bool smooth = true;
  std::vector<Rational> target = valuations(x, smooth);
  if (!smooth) return std::nullopt;

  // Augmented system  V e = target,  V[p][i] = v_p(g_i).
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    bool ok = true;
    auto col = valuations(generators_[i].rational_part(), ok);
    for (std::size_t p = 0; p < m; ++p) rows[p][i] = col[p];
  }
  for (std::size_t p = 0; p < m; ++p) rows[p][k] = target[p];

  std::vector<std::size_t> pivot_row_of(k, m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = r;
    while (piv < m && rows[piv][c] == 0) ++piv;
    if (piv == m) {
      throw DomainError("slope generators are not multiplicatively independent");
    }
    std::swap(rows[piv], rows[r]);
    for (std::size_t j = c; j <= k; ++j) {
      if (j != c) rows[r][j] /= rows[r][c];
    }
    rows[r][c] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j <= k; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_row_of[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (rows[i][k] != 0) return std::nullopt;
  }
  std::vector<std::int64_t> exponents(k);
  for (std::size_t c = 0; c < k; ++c) {
    const Rational& e = rows[pivot_row_of[c]][k];
    if (e.get_den() != 1) return std::nullopt;
    exponents[c] = e.get_num().get_si();
  }
  return exponents;
}

std::optional<std::vector<std::int64_t>> SlopeGroupSpec::factor_single(
    const ExactNumber& x) const {
  const ExactNumber& g = generators_.front();
  const bool g_above_one = g > ExactNumber(1);
  const ExactNumber big = g_above_one ? g : g.inverse();
  const ExactNumber small = big.inverse();
  const ExactNumber one(1);

  // x = big^m * y, driving y towards 1.
  ExactNumber y = x;
  std::int64_t m = 0;
  while (y != one) {
    if (y > one) {
      if (y < big) return std::nullopt;
      y *= small;
      ++m;
    } else {
      if (y > small) return std::nullopt;
      y *= big;
      --m;
    }
  }
  return std::vector<std::int64_t>{g_above_one ? m : -m};
}

ExactNumber SlopeGroupSpec::expand(const std::vector<std::int64_t>& exponents) const {
  if (exponents.size() != generators_.size()) {
    throw DomainError("exponent vector has wrong length");
  }
  ExactNumber out(1);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    out *= generators_[i].pow(exponents[i]);
  }
  return out;
}

std::string SlopeGroupSpec::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += generators_[i].to_string();
  }
  return out + ">";
}

SlopeGroupSpec SlopeGroupSpec::parse(std::string_view text) {
  detail::Cursor cur(text);
  cur.expect('<');
  std::vector<ExactNumber> gens;
  std::string_view rest = cur.rest();
  std::size_t close = rest.find('>');
  if (close == std::string_view::npos) {
    cur.fail("missing '>'");
  }
  std::string_view body = rest.substr(0, close);
  std::size_t offset = cur.position();
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::size_t end = comma == std::string_view::npos ? body.size() : comma;
    try {
      gens.push_back(ExactNumber::parse(body.substr(start, end - start)));
    } catch (const ParseError& e) {
      throw ParseError("bad slope generator", offset + start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  detail::Cursor tail(text.substr(offset + close + 1));
  tail.expect_end();
  return SlopeGroupSpec(std::move(gens));
}

std::optional<std::vector<std::int64_t>> factor_in_slope_group(
    const ExactNumber& x, const SlopeGroupSpec& group) {
  return group.factor(x);
}

}  // namespace tlg
