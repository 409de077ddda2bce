#include "tlg/thompson.hpp"

#include <functional>

#include "tlg/detail/cursor.hpp"

namespace tlg {

TreePair::TreePair(BinaryTree minus_tree, BinaryTree plus_tree)
    : minus(std::move(minus_tree)), plus(std::move(plus_tree)) {
  if (minus.leaf_count() != plus.leaf_count()) {
    throw DomainError("tree pair needs equal leaf counts");
  }
}

TreePair TreePair::x0() {
  return {BinaryTree::parse("((..).)"), BinaryTree::parse("(.(..))")};
}

TreePair TreePair::x1() {
  return {BinaryTree::parse("(.((..).))"), BinaryTree::parse("(.(.(..)))")};
}

TreePair TreePair::x(unsigned n) {
  if (n == 0) return x0();
  TreePair conj = power(x0(), static_cast<long>(n) - 1);
  return multiply(multiply(inverse(conj), x1()), conj);
}

std::string TreePair::to_string() const { return minus.to_string() + "|" + plus.to_string(); }

TreePair TreePair::parse(std::string_view text) {
  std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw ParseError("expected 'minus|plus'", text.size());
  }
  BinaryTree m, p;
  try {
    m = BinaryTree::parse(text.substr(0, bar));
  } catch (const ParseError& e) {
    throw ParseError("bad minus tree", e.position());
  }
  try {
    p = BinaryTree::parse(text.substr(bar + 1));
  } catch (const ParseError& e) {
    throw ParseError("bad plus tree", bar + 1 + e.position());
  }
  return TreePair(std::move(m), std::move(p));
}

std::vector<std::size_t> reducible_carets(const TreePair& d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < d.leaf_count(); ++i) {
    if (d.minus.is_caret_at(i) && d.plus.is_caret_at(i)) out.push_back(i);
  }
  return out;
}

TreePair contract(const TreePair& d, std::size_t i) {
  return {d.minus.contract(i), d.plus.contract(i)};
}

TreePair expand(const TreePair& d, std::size_t leaf) {
  return {d.minus.expand(leaf), d.plus.expand(leaf)};
}

TreePair reduce(const TreePair& d) {
  TreePair cur = d;
  std::size_t i = 0;
  while (i + 1 < cur.leaf_count()) {
    if (cur.minus.is_caret_at(i) && cur.plus.is_caret_at(i)) {
      cur = contract(cur, i);
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
  return cur;
}

TreePair reduce_random_order(const TreePair& d, std::mt19937_64& rng) {
  TreePair cur = d;
  while (true) {
    auto options = reducible_carets(cur);
    if (options.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    cur = contract(cur, options[pick(rng)]);
  }
}

namespace {

// Replaces each leaf of `from` by the subtree of `target` hanging below it,
// mirroring the suffixes onto the matching leaf of `other`.
std::pair<std::vector<std::string>, std::vector<std::string>> refine(
    const BinaryTree& from, const BinaryTree& other, const BinaryTree& target) {
  std::vector<std::string> new_from, new_other;
  std::size_t k = 0;
  for (const auto& w : target.leaves()) {
    while (k < from.leaf_count() && w.compare(0, from.leaf(k).size(), from.leaf(k)) != 0) ++k;
    if (k == from.leaf_count()) {
      throw DomainError("target tree does not refine the diagram tree");
    }
    new_from.push_back(w);
    new_other.push_back(other.leaf(k) + w.substr(from.leaf(k).size()));
  }
  return {std::move(new_from), std::move(new_other)};
}

}  // namespace

TreePair refine_plus(const TreePair& d, const BinaryTree& target) {
  auto [p, m] = refine(d.plus, d.minus, target);
  return {BinaryTree::from_leaves(std::move(m)), BinaryTree::from_leaves(std::move(p))};
}

TreePair refine_minus(const TreePair& d, const BinaryTree& target) {
  auto [m, p] = refine(d.minus, d.plus, target);
  return {BinaryTree::from_leaves(std::move(m)), BinaryTree::from_leaves(std::move(p))};
}

TreePair multiply(const TreePair& d1, const TreePair& d2) {
  BinaryTree s = BinaryTree::common_refinement(d1.plus, d2.minus);
  TreePair a = refine_plus(d1, s);
  TreePair b = refine_minus(d2, s);
  return reduce(TreePair(a.minus, b.plus));
}

TreePair inverse(const TreePair& d) { return {d.plus, d.minus}; }

TreePair power(const TreePair& d, long n) {
  TreePair base = n < 0 ? inverse(d) : d;
  TreePair out;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out = multiply(out, base);
  return out;
}

PLMap to_pl(const TreePair& d) {
  std::vector<ExactNumber> xs, ys;
  for (std::size_t k = 0; k < d.leaf_count(); ++k) {
    xs.emplace_back(address_left(d.plus.leaf(k)));
    ys.emplace_back(address_left(d.minus.leaf(k)));
  }
  xs.emplace_back(1);
  ys.emplace_back(1);
  return PLMap::from_points(std::move(xs), std::move(ys));
}

namespace {

// Address of a standard dyadic interval [lo, lo + len], or false.
bool dyadic_address(const Rational& lo, const Rational& len, std::string& out) {
  if (len.get_num() != 1) return false;
  const BigInt& den = len.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) return false;
  std::size_t depth = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
  Rational scaled = lo / len;
  if (scaled.get_den() != 1) return false;
  BigInt idx = scaled.get_num();
  out.assign(depth, '0');
  for (std::size_t b = 0; b < depth; ++b) {
    if (mpz_tstbit(idx.get_mpz_t(), depth - 1 - b)) out[b] = '1';
  }
  return true;
}

}  // namespace

TreePair from_pl(const PLMap& f) {
  BieriStrebelSpec thompson{ExactNumber(1), AdditiveGroupSpec::z_inv(2),
                            SlopeGroupSpec({ExactNumber(2)})};
  auto report = is_member(f, thompson);
  if (!report.member) {
    throw DomainError("map is not in Thompson's group F: " + report.violations.front());
  }
  std::vector<std::string> plus, minus;
  const auto& xs = f.xs();
  std::function<void(const std::string&)> visit = [&](const std::string& w) {
    Rational lo = address_left(w);
    Rational len = address_length(w);
    ExactNumber a(lo), b(lo + len);
    // Linear on [a, b] iff no breakpoint lies strictly inside.
    bool linear = true;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
      if (a < xs[i] && xs[i] < b) {
        linear = false;
        break;
      }
    }
    if (linear) {
      ExactNumber fa = f.evaluate(a);
      ExactNumber fb = f.evaluate(b);
      std::string image;
      if (dyadic_address(fa.rational_part(), (fb - fa).rational_part(), image)) {
        plus.push_back(w);
        minus.push_back(image);
        return;
      }
    }
    visit(w + "0");
    visit(w + "1");
  };
  visit("");
  return reduce(TreePair(BinaryTree::from_leaves(std::move(minus)),
                         BinaryTree::from_leaves(std::move(plus))));
}

FCharacters f_characters(const TreePair& d) {
  return {static_cast<std::int64_t>(d.plus.left_depth()) -
              static_cast<std::int64_t>(d.minus.left_depth()),
          static_cast<std::int64_t>(d.plus.right_depth()) -
              static_cast<std::int64_t>(d.minus.right_depth())};
}

TreePair random_tree_pair(std::size_t max_leaves, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, max_leaves);
  std::size_t n = size(rng);
  return reduce(TreePair(BinaryTree::random(n, rng), BinaryTree::random(n, rng)));
}

}  // namespace tlg
