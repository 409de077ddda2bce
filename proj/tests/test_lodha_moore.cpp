#include "doctest.h"
#include "tlg/lodha_moore.hpp"

using tlg::EventuallyPeriodicSeq;
using tlg::LMCharacter;
using tlg::LMVariant;
using tlg::LMWord;

namespace {

using Bits = std::vector<int>;

// Direct recursive reading of the case rules on a finite input. Returns the
// output bits that the input determines.
Bits base_map(char kind, int sign, const Bits& in, std::size_t at) {
  Bits out;
  auto rest = [&](std::size_t from) { return Bits(in.begin() + static_cast<long>(std::min(from, in.size())), in.end()); };
  std::size_t n = in.size() - at;
  if (kind == 'x' && sign > 0) {
    if (n >= 1 && in[at] == 1) out = {1, 1};
    else if (n >= 2 && in[at + 1] == 0) out = {0};
    else if (n >= 2) out = {1, 0};
    else return out;
    Bits r = rest(at + (out.size() == 2 && out[1] == 1 ? 1 : 2));
    out.insert(out.end(), r.begin(), r.end());
    return out;
  }
  if (kind == 'x') {
    if (n >= 1 && in[at] == 0) out = {0, 0};
    else if (n >= 2 && in[at + 1] == 0) out = {0, 1};
    else if (n >= 2) out = {1};
    else return out;
    Bits r = rest(at + (out.size() == 2 && out[1] == 0 ? 1 : 2));
    out.insert(out.end(), r.begin(), r.end());
    return out;
  }
  // y and y^-1 recurse on the remainder.
  if (sign > 0) {
    if (n >= 1 && in[at] == 1) {
      Bits r = base_map('y', 1, in, at + 1);
      out = {1, 1};
      out.insert(out.end(), r.begin(), r.end());
    } else if (n >= 2 && in[at + 1] == 0) {
      Bits r = base_map('y', 1, in, at + 2);
      out = {0};
      out.insert(out.end(), r.begin(), r.end());
    } else if (n >= 2) {
      Bits r = base_map('y', -1, in, at + 2);
      out = {1, 0};
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  if (n >= 1 && in[at] == 0) {
    Bits r = base_map('y', -1, in, at + 1);
    out = {0, 0};
    out.insert(out.end(), r.begin(), r.end());
  } else if (n >= 2 && in[at + 1] == 0) {
    Bits r = base_map('y', 1, in, at + 2);
    out = {0, 1};
    out.insert(out.end(), r.begin(), r.end());
  } else if (n >= 2) {
    Bits r = base_map('y', -1, in, at + 2);
    out = {1};
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

Bits oracle_letter(const tlg::LMGenerator& g, const Bits& in) {
  const std::string& s = g.address;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i >= in.size()) return Bits(in.begin(), in.end());
    if (in[i] != s[i] - '0') return in;
  }
  Bits out(in.begin(), in.begin() + static_cast<long>(s.size()));
  Bits tail = base_map(g.kind == tlg::LMGenerator::Kind::X ? 'x' : 'y', g.sign, in, s.size());
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Bits oracle(const LMWord& w, const Bits& in) {
  Bits cur = in;
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) cur = oracle_letter(*it, cur);
  return cur;
}

EventuallyPeriodicSeq seq(const char* text) { return EventuallyPeriodicSeq::parse(text); }

Bits bits(const char* text) {
  Bits out;
  for (const char* c = text; *c; ++c) out.push_back(*c - '0');
  return out;
}

EventuallyPeriodicSeq random_seq(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 8), plen(1, 4), coin(0, 1);
  Bits pre(len(rng)), per(plen(rng));
  for (auto& b : pre) b = coin(rng);
  for (auto& b : per) b = coin(rng);
  return EventuallyPeriodicSeq(pre, per);
}

const LMVariant kVariants[] = {LMVariant::G, LMVariant::yG, LMVariant::Gy, LMVariant::yGy};

}  // namespace

TEST_CASE("sequence and word grammar") {
  CHECK(seq("0110(10)").to_string() == "01(10)");
  CHECK(seq("(1010)").to_string() == "(10)");
  CHECK(seq("000(0)") == seq("(0)"));
  CHECK(seq("01(1)").bit(5) == 1);
  CHECK_THROWS_AS(seq("01()"), tlg::ParseError);
  LMWord w = LMWord::parse("x(011) y(01)' x()", LMVariant::G);
  CHECK(w.letters().size() == 3);
  CHECK(w.letters()[1].sign == -1);
  CHECK(w.letters()[2].address.empty());
  CHECK(w.to_string() == "x(011) y(01)' x()");
  CHECK(LMWord::parse("e", LMVariant::G).empty());
  CHECK_THROWS_AS(LMWord::parse("y(00)", LMVariant::G), tlg::ParseError);
  CHECK_THROWS_AS(LMWord::parse("y()", LMVariant::yG), tlg::ParseError);
  CHECK_NOTHROW(LMWord::parse("y(000)", LMVariant::yG));
  CHECK_THROWS_AS(LMWord::parse("y(111)", LMVariant::yG), tlg::ParseError);
  CHECK_THROWS_AS(LMWord::parse("y(000)", LMVariant::Gy), tlg::ParseError);
  CHECK_NOTHROW(LMWord::parse("y() y(1) y(0)", LMVariant::yGy));
  CHECK_THROWS_AS(LMWord::y("", LMVariant::G), tlg::DomainError);
  CHECK(tlg::format_address("") == "ø");
}

TEST_CASE("prefix evaluation on the case rules") {
  LMWord x = LMWord::x("");
  CHECK(evaluate_prefix(x, seq("00(10)"), 5) == bits("01010"));
  CHECK(evaluate_prefix(x, seq("1(0)"), 2) == bits("11"));
  CHECK(evaluate_prefix(x, seq("1(01)"), 6) == bits("110101"));
  CHECK(evaluate_prefix(x, seq("01(1)"), 4) == bits("1011"));
  LMWord y = LMWord::y("");
  for (std::size_t k = 1; k <= 20; ++k) CHECK(evaluate_prefix(y, seq("(0)"), k) == Bits(k, 0));
  // y(01 1^w) = 10 y^-1(1^w) = 10 1^w.
  CHECK(evaluate_prefix(y, seq("01(1)"), 6) == bits("101111"));
  // x_s acts only below s.
  CHECK(evaluate_prefix(LMWord::x("10"), seq("01(0)"), 6) == bits("010000"));
  CHECK(evaluate_prefix(LMWord::x("10"), seq("1000(1)"), 6) == bits("100111"));
  CHECK_THROWS_AS(evaluate_prefix(x, seq("(0)"), 0), tlg::DomainError);
}

TEST_CASE("prefix evaluation agrees with the recursive rules") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 2000; ++k) {
    LMVariant v = kVariants[k % 4];
    LMWord w = LMWord::random(v, 1 + k % 5, 4, rng);
    EventuallyPeriodicSeq in = random_seq(rng);
    Bits expected = oracle(w, in.prefix(400));
    REQUIRE(expected.size() >= 24);
    CHECK(evaluate_prefix(w, in, 24) == Bits(expected.begin(), expected.begin() + 24));
  }
}

TEST_CASE("words act as homeomorphisms") {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 1000; ++k) {
    LMVariant v = kVariants[k % 4];
    LMWord w = LMWord::random(v, 1 + k % 6, 4, rng);
    EventuallyPeriodicSeq in = random_seq(rng);
    EventuallyPeriodicSeq img = apply(w, in);
    CHECK(img.prefix(40) == evaluate_prefix(w, in, 40));
    CHECK(apply(w.inverse(), img) == in);
    CHECK(evaluate_prefix(w.inverse(), img, 12) == in.prefix(12));
  }
}

TEST_CASE("depth-bounded equality") {
  LMWord x = LMWord::x(""), xi = x.inverse();
  CHECK_FALSE(equal_up_to_depth(x, x, 12).distinct);
  auto r = equal_up_to_depth(x, xi, 12);
  REQUIRE(r.distinct);
  REQUIRE(r.witness);
  CHECK(r.witness->bit(0) == 0);
  CHECK(r.witness->bit(1) == 0);
  CHECK(evaluate_prefix(x, *r.witness, r.position + 1) != evaluate_prefix(xi, *r.witness, r.position + 1));
  LMWord lhs = x * x;
  LMWord rhs = LMWord::x("1") * x * LMWord::x("0");
  CHECK_FALSE(equal_up_to_depth(lhs, rhs, 12).distinct);
  CHECK(equal_up_to_depth(lhs, LMWord::x("0") * x * LMWord::x("1"), 12).distinct);
  CHECK_THROWS_AS(equal_up_to_depth(x, x, 0), tlg::DomainError);
}

TEST_CASE("witnesses certify random distinct pairs") {
  std::mt19937_64 rng(79);
  int distinct = 0;
  for (int k = 0; k < 300; ++k) {
    LMWord a = LMWord::random(LMVariant::yGy, 3, 3, rng);
    LMWord b = LMWord::random(LMVariant::yGy, 3, 3, rng);
    auto r = equal_up_to_depth(a, b, 8);
    if (!r.distinct) {
      // Indistinguishable pairs agree on the oracle too.
      for (auto t : {"(0)", "(1)", "(10)", "0110(01)"}) {
        CHECK(oracle(a, seq(t).prefix(200)).front() == oracle(b, seq(t).prefix(200)).front());
      }
      continue;
    }
    ++distinct;
    Bits oa = oracle(a, r.witness->prefix(400)), ob = oracle(b, r.witness->prefix(400));
    REQUIRE(oa.size() > r.position);
    REQUIRE(ob.size() > r.position);
    CHECK(Bits(oa.begin(), oa.begin() + static_cast<long>(r.position)) ==
          Bits(ob.begin(), ob.begin() + static_cast<long>(r.position)));
    CHECK(oa[r.position] != ob[r.position]);
  }
  CHECK(distinct > 200);
}

TEST_CASE("address action") {
  CHECK(tlg::x_action_on_address("", "01") == "10");
  CHECK(tlg::x_action_on_address("", "00") == "0");
  CHECK(tlg::x_action_on_address("", "1") == "11");
  CHECK(tlg::x_action_on_address("1", "100") == "10");
  CHECK_FALSE(tlg::x_action_on_address("", "0"));
  CHECK_FALSE(tlg::x_action_on_address("", ""));
  CHECK_FALSE(tlg::x_action_on_address("01", "1"));
}

TEST_CASE("relation suite instances") {
  auto find = [](const std::vector<tlg::RelationInstance>& v, const char* name) {
    for (const auto& r : v) {
      if (r.name == name) return r;
    }
    FAIL("missing relation");
    return v.front();
  };
  auto a = relation_suite("", "01", 12, LMVariant::yGy);
  auto lm2 = find(a, "LM2");
  CHECK(lm2.status == tlg::RelationInstance::Status::passed);
  CHECK(lm2.rhs->to_string() == "x(10) x()");
  CHECK(find(a, "LM1").status == tlg::RelationInstance::Status::passed);
  CHECK(find(a, "LM5").status == tlg::RelationInstance::Status::passed);
  CHECK(find(a, "LM4").status == tlg::RelationInstance::Status::skipped);
  auto b = relation_suite("0", "1", 12, LMVariant::yGy);
  CHECK(find(b, "LM4").status == tlg::RelationInstance::Status::passed);
  CHECK(find(b, "LM2").status == tlg::RelationInstance::Status::skipped);
  auto g = relation_suite("0", "1", 12, LMVariant::G);
  CHECK(find(g, "LM4").status == tlg::RelationInstance::Status::skipped);
  CHECK(find(g, "LM5").status == tlg::RelationInstance::Status::skipped);
  CHECK(find(g, "LM1").status == tlg::RelationInstance::Status::passed);
}

TEST_CASE("relations hold for short addresses") {
  std::vector<std::string> addrs = {""};
  for (std::size_t i = 0; i < addrs.size(); ++i) {
    if (addrs[i].size() < 3) {
      addrs.push_back(addrs[i] + "0");
      addrs.push_back(addrs[i] + "1");
    }
  }
  int passed = 0;
  for (const auto& s : addrs) {
    for (const auto& t : addrs) {
      for (const auto& r : relation_suite(s, t, 10, LMVariant::yGy)) {
        CHECK(r.status != tlg::RelationInstance::Status::failed);
        passed += r.status == tlg::RelationInstance::Status::passed;
        if (r.status != tlg::RelationInstance::Status::passed) continue;
        for (auto [c, value] : lm_characters(*r.lhs)) CHECK(value == lm_character(*r.rhs, c));
      }
    }
  }
  CHECK(passed > 400);
}

TEST_CASE("perturbed relations are rejected") {
  using tlg::LMGenerator;
  auto X = [](const char* s, int e = 1) { return LMGenerator{LMGenerator::Kind::X, s, e}; };
  auto Y = [](const char* s, int e = 1) { return LMGenerator{LMGenerator::Kind::Y, s, e}; };
  LMVariant v = LMVariant::yGy;
  // LM5 with the middle sign flipped.
  CHECK(equal_up_to_depth(LMWord(v, {Y("")}), LMWord(v, {Y("11"), Y("10"), Y("0"), X("")}), 12).distinct);
  // LM5 without the trailing x.
  CHECK(equal_up_to_depth(LMWord(v, {Y("")}), LMWord(v, {Y("11"), Y("10", -1), Y("0")}), 12).distinct);
  // LM2 with the wrong image address.
  CHECK(equal_up_to_depth(LMWord(v, {X(""), X("01")}), LMWord(v, {X("01"), X("")}), 12).distinct);
  // LM3 at the wrong address.
  CHECK(equal_up_to_depth(LMWord(v, {X(""), Y("1")}), LMWord(v, {Y("1"), X("")}), 12).distinct);
  // y at comparable addresses does not commute.
  CHECK(equal_up_to_depth(LMWord(v, {Y("0"), Y("01")}), LMWord(v, {Y("01"), Y("0")}), 12).distinct);
}

TEST_CASE("characters") {
  LMVariant g = LMVariant::G;
  CHECK(lm_character(LMWord::x("000", g), LMCharacter::chi0) == -1);
  CHECK(lm_character(LMWord::x("01", g), LMCharacter::chi0) == 0);
  CHECK(lm_character(LMWord::x("11", g), LMCharacter::chi1) == 1);
  CHECK(lm_character(LMWord::x("", g), LMCharacter::chi1) == 1);
  CHECK(lm_character(LMWord::x("", g), LMCharacter::chi0) == -1);
  CHECK(lm_character(LMWord::x("00", g).inverse(), LMCharacter::chi0) == 1);
  for (std::string z; z.size() <= 5; z += '0') {
    CHECK(lm_character(LMWord::y(z), LMCharacter::psi0) == 1);
    if (!z.empty()) CHECK(lm_character(LMWord::y(z, LMVariant::yG), LMCharacter::psi0) == 1);
  }
  CHECK_THROWS_AS(lm_character(LMWord::x("", g), LMCharacter::psi0), tlg::DomainError);
  CHECK_THROWS_AS(lm_character(LMWord::x("", LMVariant::yG), LMCharacter::chi0), tlg::DomainError);
  // LM5 at s = 00 in yGy.
  LMWord lhs = LMWord::y("00");
  LMWord rhs = LMWord::parse("y(0011) y(0010)' y(000) x(00)", LMVariant::yGy);
  CHECK(lm_character(lhs, LMCharacter::psi0) == 1);
  CHECK(lm_character(rhs, LMCharacter::psi0) == 1);
  CHECK(lm_characters(lhs).size() == 2);
}

TEST_CASE("quotient images") {
  LMVariant g = LMVariant::G;
  using P = std::pair<std::int64_t, std::int64_t>;
  CHECK(quotient_image(LMWord::x("0", g)) == P{-1, 0});
  CHECK(quotient_image(LMWord::x("1", g)) == P{0, 1});
  CHECK(quotient_image(LMWord::x("", g)) == P{-1, 1});
  for (std::string z = "0"; z.size() <= 5; z += '0') CHECK(quotient_image(LMWord::x(z, g)) == P{-1, 0});
  // Values on the four generator pairs form invertible matrices.
  struct Row {
    LMVariant v;
    LMWord a, b;
    P ia, ib;
  };
  std::vector<Row> rows = {
      {g, LMWord::x("0", g), LMWord::x("1", g), {-1, 0}, {0, 1}},
      {LMVariant::yG, LMWord::y("0", LMVariant::yG), LMWord::x("1", LMVariant::yG), {1, 0}, {0, 1}},
      {LMVariant::Gy, LMWord::x("0", LMVariant::Gy), LMWord::y("1", LMVariant::Gy), {-1, 0}, {0, -1}},
      {LMVariant::yGy, LMWord::y("0"), LMWord::y("1"), {1, 0}, {0, -1}},
  };
  for (const auto& r : rows) {
    CHECK(quotient_image(r.a) == r.ia);
    CHECK(quotient_image(r.b) == r.ib);
    CHECK(r.ia.first * r.ib.second - r.ia.second * r.ib.first != 0);
  }
  std::mt19937_64 rng(83);
  for (int k = 0; k < 500; ++k) {
    LMVariant v = kVariants[k % 4];
    LMWord a = LMWord::random(v, 5, 3, rng), b = LMWord::random(v, 5, 3, rng);
    auto qa = quotient_image(a), qb = quotient_image(b), qab = quotient_image(a * b);
    CHECK(qab.first == qa.first + qb.first);
    CHECK(qab.second == qa.second + qb.second);
    CHECK(quotient_image(a * a.inverse()) == P{0, 0});
  }
}
