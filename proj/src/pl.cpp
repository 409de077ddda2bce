#include "tlg/pl.hpp"

#include <algorithm>
#include <set>

#include "tlg/detail/cursor.hpp"

namespace tlg {

namespace {

// Parses a number that ends at one of `stops`, rebasing error positions.
ExactNumber parse_number_until(detail::Cursor& cur, std::string_view stops) {
  cur.skip_ws();
  std::string_view rest = cur.rest();
  std::size_t end = rest.find_first_of(stops);
  if (end == std::string_view::npos) end = rest.size();
  std::size_t base = cur.position();
  try {
    ExactNumber x = ExactNumber::parse(rest.substr(0, end));
    for (std::size_t i = 0; i < end; ++i) cur.get();
    return x;
  } catch (const ParseError& e) {
    throw ParseError("bad number literal in '" + std::string(cur.text()) + "'",
                     base + e.position());
  }
}

std::vector<ExactNumber> parse_list(detail::Cursor& cur) {
  std::vector<ExactNumber> out;
  cur.expect('[');
  if (cur.accept(']')) return out;
  while (true) {
    out.push_back(parse_number_until(cur, ",]"));
    if (cur.accept(']')) return out;
    cur.expect(',');
  }
}

void expect_word(detail::Cursor& cur, std::string_view word) {
  cur.skip_ws();
  for (char c : word) {
    if (cur.peek() != c) cur.fail("expected '" + std::string(word) + "'");
    cur.get();
  }
}

std::string list_to_string(const std::vector<ExactNumber>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + "]";
}

}  // namespace

PLMap::PLMap(ExactNumber ell, std::vector<ExactNumber> breakpoints,
             std::vector<ExactNumber> slopes) {
  if (ell.sign() <= 0) {
    throw DomainError("interval length must be positive");
  }
  if (slopes.size() != breakpoints.size() + 1) {
    throw DomainError("need exactly one more slope than breakpoints");
  }
  xs_.reserve(breakpoints.size() + 2);
  ys_.reserve(breakpoints.size() + 2);
  xs_.push_back(ExactNumber(0));
  ys_.push_back(ExactNumber(0));
  for (std::size_t i = 0; i <= breakpoints.size(); ++i) {
    const ExactNumber& next = i < breakpoints.size() ? breakpoints[i] : ell;
    if (slopes[i].sign() <= 0) {
      throw DomainError("slope " + slopes[i].to_string() + " is not positive");
    }
    if (next <= xs_.back()) {
      throw DomainError("breakpoints must increase strictly inside (0, ell)");
    }
    ys_.push_back(ys_.back() + slopes[i] * (next - xs_.back()));
    xs_.push_back(next);
  }
  if (ys_.back() != ell) {
    throw DomainError("slopes carry ell to " + ys_.back().to_string() +
                      ", not to " + ell.to_string());
  }
  build_from_points();
}

PLMap PLMap::identity(const ExactNumber& ell) {
  return PLMap(ell, {}, {ExactNumber(1)});
}

PLMap PLMap::from_points(std::vector<ExactNumber> xs, std::vector<ExactNumber> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DomainError("point lists must have equal length >= 2");
  }
  if (xs.front() != 0 || ys.front() != 0 || xs.back() != ys.back()) {
    throw DomainError("map must fix 0 and ell");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] <= xs[i - 1] || ys[i] <= ys[i - 1]) {
      throw DomainError("point lists must increase strictly");
    }
  }
  PLMap f;
  f.xs_ = std::move(xs);
  f.ys_ = std::move(ys);
  f.build_from_points();
  return f;
}

void PLMap::build_from_points() {
  std::vector<ExactNumber> xs{xs_.front()}, ys{ys_.front()}, slopes;
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    ExactNumber s = (ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1]);
    if (!slopes.empty() && slopes.back() == s) {
      xs.back() = xs_[i];
      ys.back() = ys_[i];
    } else {
      slopes.push_back(std::move(s));
      xs.push_back(xs_[i]);
      ys.push_back(ys_[i]);
    }
  }
  xs_ = std::move(xs);
  ys_ = std::move(ys);
  slopes_ = std::move(slopes);
}

std::vector<ExactNumber> PLMap::breakpoints() const {
  return std::vector<ExactNumber>(xs_.begin() + 1, xs_.end() - 1);
}

ExactNumber PLMap::evaluate(const ExactNumber& x) const {
  if (x.sign() < 0 || x > ell()) {
    throw DomainError(x.to_string() + " lies outside [0, " + ell().to_string() + "]");
  }
  // Piece i covers [xs_[i], xs_[i+1]].
  auto it = std::upper_bound(xs_.begin() + 1, xs_.end() - 1, x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  return ys_[i] + slopes_[i] * (x - xs_[i]);
}

ExactNumber PLMap::evaluate_inverse(const ExactNumber& y) const {
  if (y.sign() < 0 || y > ell()) {
    throw DomainError(y.to_string() + " lies outside [0, " + ell().to_string() + "]");
  }
  auto it = std::upper_bound(ys_.begin() + 1, ys_.end() - 1, y);
  std::size_t i = static_cast<std::size_t>(it - ys_.begin()) - 1;
  return xs_[i] + (y - ys_[i]) / slopes_[i];
}

std::string PLMap::to_string() const {
  return "pl ell=" + ell().to_string() + " breaks=" + list_to_string(breakpoints()) +
         " slopes=" + list_to_string(slopes_);
}

PLMap PLMap::parse(std::string_view text) {
  detail::Cursor cur(text);
  expect_word(cur, "pl");
  expect_word(cur, "ell");
  cur.expect('=');
  ExactNumber ell = parse_number_until(cur, " \t");
  expect_word(cur, "breaks");
  cur.expect('=');
  auto breaks = parse_list(cur);
  expect_word(cur, "slopes");
  cur.expect('=');
  auto slopes = parse_list(cur);
  cur.expect_end();
  return PLMap(std::move(ell), std::move(breaks), std::move(slopes));
}

PLMap compose(const PLMap& f, const PLMap& g) {
  if (f.ell() != g.ell()) {
    throw DomainError("cannot compose maps on different intervals");
  }
  std::set<ExactNumber> cuts(g.xs().begin(), g.xs().end());
  for (const auto& b : f.xs()) {
    cuts.insert(g.evaluate_inverse(b));
  }
  std::vector<ExactNumber> xs(cuts.begin(), cuts.end());
  std::vector<ExactNumber> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(f.evaluate(g.evaluate(x)));
  return PLMap::from_points(std::move(xs), std::move(ys));
}

PLMap invert(const PLMap& f) { return PLMap::from_points(f.ys(), f.xs()); }

PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(compose(f, g), compose(invert(f), invert(g)));
}

void BieriStrebelSpec::validate() const {
  if (!A.contains(ell)) {
    throw DomainError("ell = " + ell.to_string() + " is not in " + A.to_string());
  }
  for (const auto& p : P.generators()) {
    for (const auto& a : A.test_elements()) {
      if (!A.contains(p * a) || !A.contains(p.inverse() * a)) {
        throw DomainError("slope " + p.to_string() + " does not preserve " +
                          A.to_string());
      }
    }
  }
}

std::string BieriStrebelSpec::to_string() const {
  return ell.to_string() + " " + A.to_string() + " " + P.to_string();
}

BieriStrebelSpec BieriStrebelSpec::parse(std::string_view text) {
  detail::Cursor cur(text);
  ExactNumber ell = parse_number_until(cur, " \t");
  cur.skip_ws();
  std::string_view rest = cur.rest();
  std::size_t space = rest.find_first_of(" \t");
  if (space == std::string_view::npos) cur.fail("expected slope group after A");
  std::size_t base = cur.position();
  AdditiveGroupSpec A = AdditiveGroupSpec::rationals();
  try {
    A = AdditiveGroupSpec::parse(rest.substr(0, space));
  } catch (const ParseError& e) {
    throw ParseError("bad additive group", base + e.position());
  }
  std::size_t pbase = base + space;
  try {
    SlopeGroupSpec P = SlopeGroupSpec::parse(rest.substr(space));
    return BieriStrebelSpec{ell, A, P};
  } catch (const ParseError& e) {
    throw ParseError("bad slope group", pbase + e.position());
  }
}

MembershipReport is_member(const PLMap& f, const BieriStrebelSpec& spec) {
  if (f.ell() != spec.ell) {
    throw DomainError("map and group live on different intervals");
  }
  MembershipReport report;
  auto violation = [&](std::string what) {
    report.member = false;
    report.violations.push_back(std::move(what));
  };
  for (std::size_t i = 1; i + 1 < f.xs().size(); ++i) {
    if (!spec.A.contains(f.xs()[i])) {
      violation("singularity " + f.xs()[i].to_string() + " not in " + spec.A.to_string());
    }
    if (!spec.A.contains(f.ys()[i])) {
      violation("image " + f.ys()[i].to_string() + " of singularity " +
                f.xs()[i].to_string() + " not in " + spec.A.to_string());
    }
  }
  for (const auto& s : f.slopes()) {
    if (!spec.P.factor(s)) {
      violation("slope " + s.to_string() + " not in " + spec.P.to_string());
    }
  }
  return report;
}

std::vector<OpenInterval> support(const PLMap& f) {
  const auto& xs = f.xs();
  const auto& ys = f.ys();
  // Zeros of d(x) = f(x) - x, in increasing order.
  std::vector<ExactNumber> zeros;
  auto add_zero = [&](const ExactNumber& z) {
    if (zeros.empty() || zeros.back() != z) zeros.push_back(z);
  };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    ExactNumber d0 = ys[i] - xs[i];
    ExactNumber d1 = ys[i + 1] - xs[i + 1];
    if (d0.sign() == 0) add_zero(xs[i]);
    if (d0.sign() * d1.sign() < 0) {
      add_zero(xs[i] - d0 / (f.slopes()[i] - ExactNumber(1)));
    }
  }
  add_zero(xs.back());
  std::vector<OpenInterval> out;
  for (std::size_t j = 0; j + 1 < zeros.size(); ++j) {
    ExactNumber mid = (zeros[j] + zeros[j + 1]) / ExactNumber(2);
    if (f.evaluate(mid) != mid) {
      out.push_back({zeros[j], zeros[j + 1]});
    }
  }
  return out;
}

EndpointCharacters endpoint_characters(const PLMap& f, const SlopeGroupSpec& P) {
  auto left = P.factor(f.slopes().front());
  auto right = P.factor(f.slopes().back());
  if (!left || !right) {
    throw DomainError("endpoint slope not in " + P.to_string());
  }
  return {*left, *right};
}

PLMap uncount_f(const ExactNumber& p) {
  if (p <= ExactNumber(1)) throw DomainError("parameter p must exceed 1");
  ExactNumber b1 = ExactNumber(3) * p / (ExactNumber(4) * p + ExactNumber(4));
  return PLMap(ExactNumber(1), {b1, ExactNumber(3, 4)},
               {p.inverse(), p, ExactNumber(1)});
}

PLMap uncount_g(const ExactNumber& q) {
  if (q <= ExactNumber(1)) throw DomainError("parameter q must exceed 1");
  ExactNumber b2 = (ExactNumber(4) * q + ExactNumber(1)) / (ExactNumber(4) * q + ExactNumber(4));
  return PLMap(ExactNumber(1), {ExactNumber(1, 4), b2},
               {ExactNumber(1), q.inverse(), q});
}

UncountMaps build_example_uncount(const ExactNumber& p, const ExactNumber& q,
                                  const ExactNumber& r) {
  if (r <= ExactNumber(1)) throw DomainError("parameter r must exceed 1");
  return {uncount_f(p), uncount_g(q), uncount_g(r)};
}

}  // namespace tlg
