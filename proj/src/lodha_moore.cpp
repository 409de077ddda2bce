#include "tlg/lodha_moore.hpp"

#include <algorithm>
#include <map>

#include "tlg/detail/cursor.hpp"

namespace tlg {

std::string to_string(LMVariant v) {
  switch (v) {
    case LMVariant::yGy: return "yGy";
    case LMVariant::yG: return "yG";
    case LMVariant::Gy: return "Gy";
    case LMVariant::G: return "G";
  }
  return "?";
}

LMVariant parse_variant(std::string_view text) {
  if (text == "yGy") return LMVariant::yGy;
  if (text == "yG") return LMVariant::yG;
  if (text == "Gy") return LMVariant::Gy;
  if (text == "G") return LMVariant::G;
  throw ParseError("unknown variant '" + std::string(text) + "' (expected G, yG, Gy or yGy)", 0);
}

int gamma_index(LMVariant v) {
  switch (v) {
    case LMVariant::G: return 1;
    case LMVariant::yG: return 2;
    case LMVariant::Gy: return 3;
    case LMVariant::yGy: return 4;
  }
  return 0;
}

std::string format_address(const std::string& s) { return s.empty() ? "ø" : s; }

bool is_zeros(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0'; });
}

bool is_ones(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '1'; });
}

bool y_allowed(LMVariant v, const std::string& t) {
  switch (v) {
    case LMVariant::yGy: return true;
    case LMVariant::yG: return !is_ones(t);
    case LMVariant::Gy: return !is_zeros(t);
    case LMVariant::G: return !is_zeros(t) && !is_ones(t);
  }
  return false;
}

namespace {

void check_address(const std::string& s) {
  for (char c : s) {
    if (c != '0' && c != '1') throw DomainError("address must be a binary string");
  }
}

}  // namespace

LMWord::LMWord(LMVariant variant, std::vector<LMGenerator> letters)
    : variant_(variant), letters_(std::move(letters)) {
  for (const auto& g : letters_) {
    check_address(g.address);
    if (g.sign != 1 && g.sign != -1) throw DomainError("letter sign must be +1 or -1");
    if (g.kind == LMGenerator::Kind::Y && !y_allowed(variant_, g.address)) {
      throw DomainError("y(" + g.address + ") is not a generator of " + tlg::to_string(variant_));
    }
  }
}

LMWord LMWord::x(const std::string& s, LMVariant v) {
  return LMWord(v, {{LMGenerator::Kind::X, s, 1}});
}

LMWord LMWord::y(const std::string& t, LMVariant v) {
  return LMWord(v, {{LMGenerator::Kind::Y, t, 1}});
}

LMWord LMWord::operator*(const LMWord& other) const {
  if (variant_ != other.variant_) throw DomainError("words from different variants");
  std::vector<LMGenerator> l = letters_;
  l.insert(l.end(), other.letters_.begin(), other.letters_.end());
  LMWord w(variant_);
  w.letters_ = std::move(l);
  return w;
}

LMWord LMWord::inverse() const {
  LMWord w(variant_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

std::string LMWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const auto& g : letters_) {
    if (!out.empty()) out += ' ';
    out += g.kind == LMGenerator::Kind::X ? 'x' : 'y';
    out += '(' + g.address + ')';
    if (g.sign < 0) out += '\'';
  }
  return out;
}

LMWord LMWord::parse(std::string_view text, LMVariant v) {
  detail::Cursor cur(text);
  std::vector<LMGenerator> letters;
  if (cur.accept('e')) {
    cur.expect_end();
    return LMWord(v);
  }
  while (true) {
    cur.skip_ws();
    if (cur.at_end()) break;
    LMGenerator g;
    std::size_t at = cur.position();
    char k = cur.get();
    if (k == 'x') {
      g.kind = LMGenerator::Kind::X;
    } else if (k == 'y') {
      g.kind = LMGenerator::Kind::Y;
    } else {
      throw ParseError("expected 'x' or 'y' in '" + std::string(text) + "'", at);
    }
    cur.expect('(');
    while (cur.peek() == '0' || cur.peek() == '1') g.address += cur.get();
    cur.expect(')');
    if (cur.peek() == '\'') {
      cur.get();
      g.sign = -1;
    }
    if (g.kind == LMGenerator::Kind::Y && !y_allowed(v, g.address)) {
      throw ParseError("y(" + g.address + ") is not a generator of " + tlg::to_string(v), at);
    }
    letters.push_back(std::move(g));
  }
  return LMWord(v, std::move(letters));
}

LMWord LMWord::random(LMVariant v, std::size_t length, std::size_t max_address,
                      std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_address);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<LMGenerator> letters;
  while (letters.size() < length) {
    LMGenerator g;
    g.kind = coin(rng) ? LMGenerator::Kind::X : LMGenerator::Kind::Y;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) g.address += coin(rng) ? '1' : '0';
    g.sign = coin(rng) ? 1 : -1;
    if (g.kind == LMGenerator::Kind::Y && !y_allowed(v, g.address)) continue;
    letters.push_back(std::move(g));
  }
  return LMWord(v, std::move(letters));
}

EventuallyPeriodicSeq::EventuallyPeriodicSeq(std::vector<int> preperiod, std::vector<int> period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw DomainError("period must be nonempty");
  for (int b : pre_) {
    if (b != 0 && b != 1) throw DomainError("bits must be 0 or 1");
  }
  for (int b : per_) {
    if (b != 0 && b != 1) throw DomainError("bits must be 0 or 1");
  }
  const std::size_t n = per_.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = per_[i] == per_[i - p];
    if (ok) {
      per_.resize(p);
      break;
    }
  }
  while (!pre_.empty() && pre_.back() == per_.back()) {
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
    pre_.pop_back();
  }
}

int EventuallyPeriodicSeq::bit(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

std::vector<int> EventuallyPeriodicSeq::prefix(std::size_t k) const {
  std::vector<int> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = bit(i);
  return out;
}

std::string EventuallyPeriodicSeq::to_string() const {
  std::string out;
  for (int b : pre_) out += static_cast<char>('0' + b);
  out += '(';
  for (int b : per_) out += static_cast<char>('0' + b);
  out += ')';
  return out;
}

EventuallyPeriodicSeq EventuallyPeriodicSeq::parse(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<int> pre, per;
  cur.skip_ws();
  while (cur.peek() == '0' || cur.peek() == '1') pre.push_back(cur.get() - '0');
  cur.expect('(');
  while (cur.peek() == '0' || cur.peek() == '1') per.push_back(cur.get() - '0');
  if (per.empty()) cur.fail("empty period");
  cur.expect(')');
  cur.expect_end();
  return EventuallyPeriodicSeq(std::move(pre), std::move(per));
}

namespace {

// Push-driven transducer pipeline. Each stage reads bits from the stage to
// its right and emits every output bit as soon as it is determined.
enum Mode : std::int8_t { kX, kXinv, kId, kY, kYinv };
enum Phase : std::int8_t { kMatch, kPass, kBase };

struct StageState {
  std::int8_t phase = kMatch;
  std::int8_t mode = kId;
  std::int8_t pending = -1;
  std::uint16_t matched = 0;
  friend bool operator==(const StageState&, const StageState&) = default;
  friend auto operator<=>(const StageState&, const StageState&) = default;
};

struct StageSpec {
  std::string address;
  std::int8_t base_mode;
};

class Pipeline {
 public:
  explicit Pipeline(const LMWord& w) {
    const auto& l = w.letters();
    for (auto it = l.rbegin(); it != l.rend(); ++it) {
      bool x = it->kind == LMGenerator::Kind::X;
      std::int8_t m = x ? (it->sign > 0 ? kX : kXinv) : (it->sign > 0 ? kY : kYinv);
      specs_.push_back({it->address, m});
      StageState st;
      if (it->address.empty()) {
        st.phase = kBase;
        st.mode = m;
      }
      state_.push_back(st);
    }
  }

  const std::vector<StageState>& state() const { return state_; }
  void set_state(const std::vector<StageState>& s) { state_ = s; }

  void push(int bit, std::vector<int>& out) {
    buf_a_.assign(1, bit);
    for (std::size_t k = 0; k < specs_.size(); ++k) {
      buf_b_.clear();
      for (int b : buf_a_) step(k, b, buf_b_);
      buf_a_.swap(buf_b_);
      if (buf_a_.empty()) return;
    }
    out.insert(out.end(), buf_a_.begin(), buf_a_.end());
  }

 private:
  void step(std::size_t k, int b, std::vector<int>& out) {
    StageState& st = state_[k];
    switch (st.phase) {
      case kPass:
        out.push_back(b);
        return;
      case kMatch: {
        const std::string& a = specs_[k].address;
        out.push_back(b);
        if (a[st.matched] - '0' != b) {
          st.phase = kPass;
        } else if (++st.matched == a.size()) {
          st.phase = kBase;
          st.mode = specs_[k].base_mode;
        }
        return;
      }
      default:
        break;
    }
    auto emit = [&](std::initializer_list<int> bits) { out.insert(out.end(), bits); };
    switch (st.mode) {
      case kId:
        out.push_back(b);
        break;
      case kX:  // 00h -> 0h, 01h -> 10h, 1h -> 11h
        if (st.pending < 0) {
          if (b == 1) {
            emit({1, 1});
            st.mode = kId;
          } else {
            st.pending = 0;
          }
        } else {
          emit(b == 0 ? std::initializer_list<int>{0} : std::initializer_list<int>{1, 0});
          st.pending = -1;
          st.mode = kId;
        }
        break;
      case kXinv:  // 0h -> 00h, 10h -> 01h, 11h -> 1h
        if (st.pending < 0) {
          if (b == 0) {
            emit({0, 0});
            st.mode = kId;
          } else {
            st.pending = 1;
          }
        } else {
          emit(b == 0 ? std::initializer_list<int>{0, 1} : std::initializer_list<int>{1});
          st.pending = -1;
          st.mode = kId;
        }
        break;
      case kY:  // 00h -> 0y(h), 01h -> 10y^-1(h), 1h -> 11y(h)
        if (st.pending < 0) {
          if (b == 1) {
            emit({1, 1});
          } else {
            st.pending = 0;
          }
        } else {
          if (b == 0) {
            emit({0});
          } else {
            emit({1, 0});
            st.mode = kYinv;
          }
          st.pending = -1;
        }
        break;
      case kYinv:  // 0h -> 00y^-1(h), 10h -> 01y(h), 11h -> 1y^-1(h)
        if (st.pending < 0) {
          if (b == 0) {
            emit({0, 0});
          } else {
            st.pending = 1;
          }
        } else {
          if (b == 0) {
            emit({0, 1});
            st.mode = kY;
          } else {
            emit({1});
          }
          st.pending = -1;
        }
        break;
    }
  }

  std::vector<StageSpec> specs_;
  std::vector<StageState> state_;
  std::vector<int> buf_a_, buf_b_;
};

// Generous bound on input bits needed per output bit; each stage emits at
// least one bit per two it reads.
std::size_t push_budget(const LMWord& w, std::size_t k) {
  std::size_t maxlen = 0;
  for (const auto& g : w.letters()) maxlen = std::max(maxlen, g.address.size());
  std::size_t factor = std::size_t{1} << std::min<std::size_t>(w.letters().size(), 40);
  return (k + maxlen * w.letters().size() + 4) * factor + 64;
}

}  // namespace

std::vector<int> evaluate_prefix(const LMWord& w, const EventuallyPeriodicSeq& input, std::size_t k) {
  if (k == 0) throw DomainError("output length must be at least 1");
  Pipeline p(w);
  std::vector<int> out;
  const std::size_t budget = push_budget(w, k);
  for (std::size_t i = 0; out.size() < k; ++i) {
    if (i > budget) throw Error("transducer evaluation did not converge");
    p.push(input.bit(i), out);
  }
  out.resize(k);
  return out;
}

EventuallyPeriodicSeq apply(const LMWord& w, const EventuallyPeriodicSeq& input) {
  Pipeline p(w);
  std::vector<int> out;
  for (int b : input.preperiod()) p.push(b, out);
  std::map<std::vector<StageState>, std::size_t> seen;
  for (std::size_t rep = 0; rep < 1000000; ++rep) {
    auto [it, fresh] = seen.emplace(p.state(), out.size());
    if (!fresh) {
      std::size_t start = it->second;
      std::vector<int> pre(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(start));
      std::vector<int> per(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
      return EventuallyPeriodicSeq(std::move(pre), std::move(per));
    }
    for (int b : input.period()) p.push(b, out);
  }
  throw Error("transducer state did not cycle");
}

namespace {

struct DepthSearch {
  Pipeline p1, p2;
  std::size_t d;
  std::size_t budget;
  std::vector<int> prefix;
  DepthComparison result;

  // Index of the first difference among the first d bits, if any.
  std::optional<std::size_t> mismatch(const std::vector<int>& o1, const std::vector<int>& o2) const {
    std::size_t n = std::min({o1.size(), o2.size(), d});
    for (std::size_t i = 0; i < n; ++i) {
      if (o1[i] != o2[i]) return i;
    }
    return std::nullopt;
  }

  bool fail(std::vector<int> pre, std::vector<int> tail, std::size_t pos) {
    result.distinct = true;
    result.witness = EventuallyPeriodicSeq(std::move(pre), std::move(tail));
    result.position = pos;
    return false;
  }

  // Returns false once a difference has been recorded.
  bool dfs(std::vector<int>& o1, std::vector<int>& o2) {
    if (auto m = mismatch(o1, o2)) return fail(prefix, {0}, *m);
    if (prefix.size() == d) {
      static const std::vector<std::vector<int>> tails = {{0}, {1}, {1, 0}};
      auto s1 = p1.state(), s2 = p2.state();
      for (const auto& tail : tails) {
        std::vector<int> t1 = o1, t2 = o2;
        p1.set_state(s1);
        p2.set_state(s2);
        for (std::size_t i = 0; t1.size() < d || t2.size() < d; ++i) {
          if (i > budget) throw Error("transducer evaluation did not converge");
          int b = tail[i % tail.size()];
          if (t1.size() < d) p1.push(b, t1);
          if (t2.size() < d) p2.push(b, t2);
        }
        if (auto m = mismatch(t1, t2)) return fail(prefix, tail, *m);
      }
      return true;
    }
    auto s1 = p1.state(), s2 = p2.state();
    const std::size_t n1 = o1.size(), n2 = o2.size();
    for (int b = 0; b < 2; ++b) {
      p1.set_state(s1);
      p2.set_state(s2);
      o1.resize(n1);
      o2.resize(n2);
      prefix.push_back(b);
      if (o1.size() < d) p1.push(b, o1);
      if (o2.size() < d) p2.push(b, o2);
      bool ok = dfs(o1, o2);
      prefix.pop_back();
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace

DepthComparison equal_up_to_depth(const LMWord& w1, const LMWord& w2, std::size_t d) {
  if (d == 0) throw DomainError("depth must be at least 1");
  DepthSearch s{Pipeline(w1), Pipeline(w2), d,
                std::max(push_budget(w1, d), push_budget(w2, d)), {}, {}};
  std::vector<int> o1, o2;
  s.dfs(o1, o2);
  return s.result;
}

std::optional<std::string> x_action_on_address(const std::string& s, const std::string& t) {
  if (t.size() <= s.size() || t.compare(0, s.size(), s) != 0) return std::nullopt;
  std::string r = t.substr(s.size());
  if (r[0] == '1') return s + "11" + r.substr(1);
  if (r.size() < 2) return std::nullopt;
  if (r[1] == '0') return s + "0" + r.substr(2);
  return s + "10" + r.substr(2);
}

namespace {

bool comparable(const std::string& a, const std::string& b) {
  const std::string& shorter = a.size() <= b.size() ? a : b;
  const std::string& longer = a.size() <= b.size() ? b : a;
  return longer.compare(0, shorter.size(), shorter) == 0;
}

LMGenerator gx(const std::string& s, int sign = 1) { return {LMGenerator::Kind::X, s, sign}; }
LMGenerator gy(const std::string& s, int sign = 1) { return {LMGenerator::Kind::Y, s, sign}; }

RelationInstance check(std::string name, LMVariant v, std::vector<LMGenerator> lhs,
                       std::vector<LMGenerator> rhs, std::size_t d) {
  RelationInstance r;
  r.name = std::move(name);
  for (const auto* side : {&lhs, &rhs}) {
    for (const auto& g : *side) {
      if (g.kind == LMGenerator::Kind::Y && !y_allowed(v, g.address)) {
        r.note = "y(" + g.address + ") is not a generator of " + to_string(v);
        return r;
      }
    }
  }
  r.lhs = LMWord(v, std::move(lhs));
  r.rhs = LMWord(v, std::move(rhs));
  r.comparison = equal_up_to_depth(*r.lhs, *r.rhs, d);
  r.status = r.comparison.distinct ? RelationInstance::Status::failed
                                   : RelationInstance::Status::passed;
  return r;
}

RelationInstance skipped(std::string name, std::string note) {
  RelationInstance r;
  r.name = std::move(name);
  r.note = std::move(note);
  return r;
}

}  // namespace

std::vector<RelationInstance> relation_suite(const std::string& s, const std::string& t,
                                             std::size_t d, LMVariant v) {
  check_address(s);
  check_address(t);
  std::vector<RelationInstance> out;
  out.push_back(check("LM1", v, {gx(s), gx(s)}, {gx(s + "1"), gx(s), gx(s + "0")}, d));
  auto u = x_action_on_address(s, t);
  if (u) {
    out.push_back(check("LM2", v, {gx(s), gx(t)}, {gx(*u), gx(s)}, d));
    out.push_back(check("LM3", v, {gx(s), gy(t)}, {gy(*u), gx(s)}, d));
  } else {
    std::string why = "x_s(t) is not defined for s=" + format_address(s) + ", t=" + format_address(t);
    out.push_back(skipped("LM2", why));
    out.push_back(skipped("LM3", why));
  }
  if (comparable(s, t)) {
    out.push_back(skipped("LM4", "s and t are comparable"));
  } else {
    out.push_back(check("LM4", v, {gy(s), gy(t)}, {gy(t), gy(s)}, d));
  }
  out.push_back(check("LM5", v, {gy(s)}, {gy(s + "11"), gy(s + "10", -1), gy(s + "0"), gx(s)}, d));
  return out;
}

std::string to_string(LMCharacter c) {
  switch (c) {
    case LMCharacter::chi0: return "chi0";
    case LMCharacter::chi1: return "chi1";
    case LMCharacter::psi0: return "psi0";
    case LMCharacter::psi1: return "psi1";
  }
  return "?";
}

bool character_defined(LMCharacter c, LMVariant v) {
  int i = gamma_index(v);
  switch (c) {
    case LMCharacter::chi0: return i == 1 || i == 3;
    case LMCharacter::chi1: return i == 1 || i == 2;
    case LMCharacter::psi0: return i == 2 || i == 4;
    case LMCharacter::psi1: return i == 3 || i == 4;
  }
  return false;
}

std::int64_t lm_character(const LMWord& w, LMCharacter c) {
  if (!character_defined(c, w.variant())) {
    throw DomainError(to_string(c) + " is not defined on " + to_string(w.variant()));
  }
  std::int64_t total = 0;
  for (const auto& g : w.letters()) {
    bool x = g.kind == LMGenerator::Kind::X;
    std::int64_t value = 0;
    switch (c) {
      case LMCharacter::chi0: value = x && is_zeros(g.address) ? -1 : 0; break;
      case LMCharacter::chi1: value = x && is_ones(g.address) ? 1 : 0; break;
      case LMCharacter::psi0: value = !x && is_zeros(g.address) ? 1 : 0; break;
      case LMCharacter::psi1: value = !x && is_ones(g.address) ? 1 : 0; break;
    }
    total += g.sign * value;
  }
  return total;
}

std::vector<std::pair<LMCharacter, std::int64_t>> lm_characters(const LMWord& w) {
  std::vector<std::pair<LMCharacter, std::int64_t>> out;
  for (auto c : {LMCharacter::chi0, LMCharacter::chi1, LMCharacter::psi0, LMCharacter::psi1}) {
    if (character_defined(c, w.variant())) out.emplace_back(c, lm_character(w, c));
  }
  return out;
}

std::pair<QuotientCharacter, QuotientCharacter> quotient_characters(LMVariant v) {
  switch (v) {
    case LMVariant::G: return {{LMCharacter::chi0, 1}, {LMCharacter::chi1, 1}};
    case LMVariant::yG: return {{LMCharacter::psi0, 1}, {LMCharacter::chi1, 1}};
    case LMVariant::Gy: return {{LMCharacter::chi0, 1}, {LMCharacter::psi1, -1}};
    case LMVariant::yGy: return {{LMCharacter::psi0, 1}, {LMCharacter::psi1, -1}};
  }
  throw DomainError("unknown variant");
}

std::pair<std::int64_t, std::int64_t> quotient_image(const LMWord& w) {
  auto [a, b] = quotient_characters(w.variant());
  return {a.sign * lm_character(w, a.character), b.sign * lm_character(w, b.character)};
}

}  // namespace tlg
