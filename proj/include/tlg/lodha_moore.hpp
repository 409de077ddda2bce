#pragma once

// Lodha-Moore groups as words in x_s, y_t acting on infinite binary
// sequences. Words use left-hand notation: the rightmost letter acts first.
// Addresses are strings over {'0','1'}; the empty address prints as `ø`.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlg/error.hpp"

namespace tlg {

enum class LMVariant { yGy, yG, Gy, G };

std::string to_string(LMVariant v);
LMVariant parse_variant(std::string_view text);
// Gamma index 1..4 for G, yG, Gy, yGy.
int gamma_index(LMVariant v);

std::string format_address(const std::string& s);
// True iff s is 0^n (n >= 0).
bool is_zeros(const std::string& s);
bool is_ones(const std::string& s);
// Whether y_t is a generator of the variant.
bool y_allowed(LMVariant v, const std::string& t);

struct LMGenerator {
  enum class Kind { X, Y };
  Kind kind = Kind::X;
  std::string address;
  int sign = 1;

  LMGenerator inverse() const { return {kind, address, -sign}; }
  friend bool operator==(const LMGenerator&, const LMGenerator&) = default;
};

class LMWord {
 public:
  // Throws DomainError if a Y letter is excluded by the variant.
  explicit LMWord(LMVariant variant = LMVariant::yGy, std::vector<LMGenerator> letters = {});

  static LMWord x(const std::string& s, LMVariant v = LMVariant::yGy);
  static LMWord y(const std::string& t, LMVariant v = LMVariant::yGy);

  LMVariant variant() const { return variant_; }
  const std::vector<LMGenerator>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  LMWord operator*(const LMWord& other) const;
  LMWord inverse() const;
  friend bool operator==(const LMWord&, const LMWord&) = default;

  // `x(011) y(01)' x()`; the empty word prints as `e`.
  std::string to_string() const;
  static LMWord parse(std::string_view text, LMVariant v);

  // `length` letters with addresses of length <= max_address.
  static LMWord random(LMVariant v, std::size_t length, std::size_t max_address,
                       std::mt19937_64& rng);

 private:
  LMVariant variant_;
  std::vector<LMGenerator> letters_;
};

// preperiod followed by period repeated forever, kept canonical.
class EventuallyPeriodicSeq {
 public:
  // Throws DomainError if period is empty or a bit is not 0/1.
  EventuallyPeriodicSeq(std::vector<int> preperiod, std::vector<int> period);

  const std::vector<int>& preperiod() const { return pre_; }
  const std::vector<int>& period() const { return per_; }
  int bit(std::size_t i) const;
  std::vector<int> prefix(std::size_t k) const;

  friend bool operator==(const EventuallyPeriodicSeq&, const EventuallyPeriodicSeq&) = default;

  // `0110(10)`: preperiod, then the period in parentheses.
  std::string to_string() const;
  static EventuallyPeriodicSeq parse(std::string_view text);

 private:
  std::vector<int> pre_;
  std::vector<int> per_;
};

// First k bits of w(input).
std::vector<int> evaluate_prefix(const LMWord& w, const EventuallyPeriodicSeq& input, std::size_t k);
// The full image w(input), which is again eventually periodic.
EventuallyPeriodicSeq apply(const LMWord& w, const EventuallyPeriodicSeq& input);

struct DepthComparison {
  bool distinct = false;
  // Set when distinct: an input on which the outputs differ at `position`.
  std::optional<EventuallyPeriodicSeq> witness;
  std::size_t position = 0;
};

// Compares the first d output bits on every length-d prefix followed by the
// tails 0^w, 1^w, (10)^w.
DepthComparison equal_up_to_depth(const LMWord& w1, const LMWord& w2, std::size_t d);

// x_s(t) when t = s r and x can act on r; nullopt otherwise.
std::optional<std::string> x_action_on_address(const std::string& s, const std::string& t);

struct RelationInstance {
  std::string name;  // LM1..LM5
  enum class Status { passed, failed, skipped } status = Status::skipped;
  std::string note;  // reason for a skip
  std::optional<LMWord> lhs;
  std::optional<LMWord> rhs;
  DepthComparison comparison;
};

// LM1..LM5 at (s, t); instances that are inapplicable or use generators
// outside the variant are skipped.
std::vector<RelationInstance> relation_suite(const std::string& s, const std::string& t,
                                             std::size_t d, LMVariant v);

enum class LMCharacter { chi0, chi1, psi0, psi1 };
std::string to_string(LMCharacter c);
bool character_defined(LMCharacter c, LMVariant v);
// Throws DomainError if c is not defined on the word's variant.
std::int64_t lm_character(const LMWord& w, LMCharacter c);
std::vector<std::pair<LMCharacter, std::int64_t>> lm_characters(const LMWord& w);

// The two characters representing the variant's Sigma-complement classes,
// with the sign shown there: G (chi0, chi1), yG (psi0, chi1), Gy (chi0,
// -psi1), yGy (psi0, -psi1).
struct QuotientCharacter {
  LMCharacter character;
  int sign;
};
std::pair<QuotientCharacter, QuotientCharacter> quotient_characters(LMVariant v);
std::pair<std::int64_t, std::int64_t> quotient_image(const LMWord& w);

}  // namespace tlg
