#include "tlg/braid.hpp"

#include <algorithm>
#include <cstdlib>

#include "tlg/detail/cursor.hpp"

namespace tlg {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw DomainError("a braid has at least one strand");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_) {
      throw DomainError("generator index " + std::to_string(std::abs(l)) +
                        " out of range for " + std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  if (strands_ != other.strands_) throw DomainError("strand counts differ");
  std::vector<int> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  BraidWord w(strands_);
  w.letters_ = std::move(out);
  return w;
}

BraidWord BraidWord::inverse() const {
  BraidWord w(strands_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

BraidWord BraidWord::free_reduced() const {
  BraidWord w(strands_);
  for (int l : letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -l) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

std::string BraidWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    out += 's' + std::to_string(std::abs(letters_[k]));
    if (letters_[k] < 0) out += '\'';
  }
  return out;
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  detail::Cursor cur(text);
  std::vector<int> letters;
  cur.skip_ws();
  if (cur.accept('e')) {
    cur.expect_end();
    return BraidWord(strands);
  }
  while (true) {
    cur.skip_ws();
    if (cur.at_end()) break;
    cur.expect('s');
    std::size_t at = cur.position();
    long i = std::stol(cur.digits());
    if (i < 1 || i >= strands) {
      throw ParseError("generator s" + std::to_string(i) + " out of range for " +
                           std::to_string(strands) + " strands",
                       at);
    }
    int sign = cur.peek() == '\'' ? (cur.get(), -1) : 1;
    letters.push_back(sign * static_cast<int>(i));
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::random(int strands, std::size_t length, std::mt19937_64& rng) {
  BraidWord w(strands);
  if (strands < 2) return w;
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t k = 0; k < length; ++k) {
    w.letters_.push_back(coin(rng) ? gen(rng) : -gen(rng));
  }
  return w;
}

bool BraidInvariants::is_pure() const {
  for (std::size_t s = 0; s < permutation.size(); ++s) {
    if (permutation[s] != static_cast<int>(s)) return false;
  }
  return true;
}

std::vector<std::vector<std::int64_t>> BraidInvariants::linking() const {
  if (!is_pure()) throw DomainError("linking numbers need a pure braid");
  auto out = crossings;
  for (auto& row : out) {
    for (auto& v : row) {
      if (v % 2 != 0) throw Error("odd crossing count in a pure braid");
      v /= 2;
    }
  }
  return out;
}

BraidInvariants braid_invariants(const BraidWord& b) {
  const int n = b.strands();
  BraidInvariants inv;
  inv.crossings.assign(n, std::vector<std::int64_t>(n, 0));
  std::vector<int> at(n);  // at[position] = starting position of the strand there
  for (int p = 0; p < n; ++p) at[p] = p;
  for (int l : b.letters()) {
    int i = std::abs(l) - 1;
    int e = l > 0 ? 1 : -1;
    inv.exponent_sum += e;
    inv.crossings[at[i]][at[i + 1]] += e;
    inv.crossings[at[i + 1]][at[i]] += e;
    std::swap(at[i], at[i + 1]);
  }
  inv.permutation.assign(n, 0);
  for (int p = 0; p < n; ++p) inv.permutation[at[p]] = p;
  return inv;
}

BraidWord handle_reduce(const BraidWord& b, std::size_t max_steps) {
  std::vector<int> w = b.free_reduced().letters();
  const int n = b.strands();
  std::vector<long> last(n + 1);
  std::vector<int> next;
  std::size_t steps = 0;
  std::size_t restart = 0;  // letters before this index close no handle
  while (true) {
    // Find the handle whose closing letter is leftmost.
    std::fill(last.begin(), last.end(), -1);
    long open = -1, close = -1;
    for (std::size_t j = 0; j < w.size(); ++j) {
      int g = std::abs(w[j]);
      if (j >= restart) {
        long k = last[g];
        if (k >= 0 && w[k] == -w[j] && last[g - 1] < k) {
          open = k;
          close = static_cast<long>(j);
          break;
        }
      }
      last[g] = static_cast<long>(j);
    }
    if (open < 0) break;
    if (++steps > max_steps) {
      throw Error("handle reduction exceeded " + std::to_string(max_steps) + " steps");
    }
    const int i = std::abs(w[open]);
    const int e = w[open] > 0 ? 1 : -1;
    next.clear();
    next.insert(next.end(), w.begin(), w.begin() + open);
    for (long k = open + 1; k < close; ++k) {
      int l = w[k];
      if (std::abs(l) == i + 1) {
        int d = l > 0 ? 1 : -1;
        next.push_back(-e * (i + 1));
        next.push_back(d * i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), w.begin() + close + 1, w.end());
    // Free cancellation around the seams keeps words short.
    std::vector<int> reduced;
    reduced.reserve(next.size());
    for (int l : next) {
      if (!reduced.empty() && reduced.back() == -l) {
        reduced.pop_back();
      } else {
        reduced.push_back(l);
      }
    }
    // Letters before the handle that survived cancellation are untouched, so
    // no handle closes there.
    std::size_t common = 0;
    const std::size_t limit = std::min({w.size(), reduced.size(), static_cast<std::size_t>(open)});
    while (common < limit && w[common] == reduced[common]) ++common;
    restart = common;
    w.swap(reduced);
  }
  return BraidWord(n, std::move(w));
}

bool braid_equal(const BraidWord& b1, const BraidWord& b2) {
  if (b1.strands() != b2.strands()) throw DomainError("strand counts differ");
  BraidInvariants i1 = braid_invariants(b1);
  BraidInvariants i2 = braid_invariants(b2);
  if (i1.permutation != i2.permutation || i1.exponent_sum != i2.exponent_sum ||
      i1.crossings != i2.crossings) {
    return false;
  }
  return handle_reduce(b1 * b2.inverse()).empty();
}

BraidWord cable(const BraidWord& b, int s) {
  const int n = b.strands();
  if (s < 0 || s >= n) throw DomainError("strand index out of range");
  std::vector<int> out;
  out.reserve(b.length() * 2);
  int p = s + 1;  // 1-based position of the doubled strand (left member)
  for (int l : b.letters()) {
    int i = std::abs(l);
    int e = l > 0 ? 1 : -1;
    if (i == p) {
      out.push_back(e * (i + 1));
      out.push_back(e * i);
      p = i + 1;
    } else if (i + 1 == p) {
      out.push_back(e * i);
      out.push_back(e * (i + 1));
      p = i;
    } else if (i > p) {
      out.push_back(e * (i + 1));
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(n + 1, std::move(out));
}

BraidWord delete_strand(const BraidWord& b, int s) {
  const int n = b.strands();
  if (n < 2) throw DomainError("cannot delete the only strand");
  if (s < 0 || s >= n) throw DomainError("strand index out of range");
  std::vector<int> out;
  int p = s + 1;
  for (int l : b.letters()) {
    int i = std::abs(l);
    int e = l > 0 ? 1 : -1;
    if (i == p) {
      p = i + 1;
    } else if (i + 1 == p) {
      p = i;
    } else if (i > p) {
      out.push_back(e * (i - 1));
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(n - 1, std::move(out));
}

BraidWord wrap_braid(int i, int j, int n) {
  if (i < 1 || i >= j || j > n) throw DomainError("need 1 <= i < j <= n");
  std::vector<int> w;
  for (int k = j - 1; k > i; --k) w.push_back(k);
  w.push_back(i);
  w.push_back(i);
  for (int k = i + 1; k < j; ++k) w.push_back(-k);
  return BraidWord(n, std::move(w));
}

}  // namespace tlg
