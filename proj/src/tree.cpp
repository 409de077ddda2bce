#include "tlg/tree.hpp"

#include <set>

#include "tlg/detail/cursor.hpp"

namespace tlg {

namespace {

void collect_leaves(const std::set<std::string>& internal, std::string& prefix,
                    std::vector<std::string>& out) {
  if (!internal.count(prefix)) {
    out.push_back(prefix);
    return;
  }
  prefix.push_back('0');
  collect_leaves(internal, prefix, out);
  prefix.back() = '1';
  collect_leaves(internal, prefix, out);
  prefix.pop_back();
}

void add_internal(const std::vector<std::string>& leaves, std::set<std::string>& internal) {
  for (const auto& w : leaves) {
    for (std::size_t k = 0; k < w.size(); ++k) internal.insert(w.substr(0, k));
  }
}

void parse_tree(detail::Cursor& cur, std::string& prefix, std::vector<std::string>& out) {
  cur.skip_ws();
  if (cur.accept('.')) {
    out.push_back(prefix);
    return;
  }
  if (!cur.accept('(')) cur.fail("expected '.' or '('");
  prefix.push_back('0');
  parse_tree(cur, prefix, out);
  prefix.back() = '1';
  parse_tree(cur, prefix, out);
  prefix.pop_back();
  cur.expect(')');
}

void print_tree(const std::vector<std::string>& leaves, std::size_t& next,
                std::string& prefix, std::string& out) {
  if (leaves[next] == prefix) {
    out += '.';
    ++next;
    return;
  }
  out += '(';
  prefix.push_back('0');
  print_tree(leaves, next, prefix, out);
  prefix.back() = '1';
  print_tree(leaves, next, prefix, out);
  prefix.pop_back();
  out += ')';
}

}  // namespace

BinaryTree BinaryTree::from_leaves(std::vector<std::string> leaves) {
  std::set<std::string> internal;
  add_internal(leaves, internal);
  std::vector<std::string> expected;
  std::string prefix;
  collect_leaves(internal, prefix, expected);
  if (expected != leaves) {
    throw DomainError("leaf list is not a complete binary prefix code");
  }
  return BinaryTree(std::move(leaves));
}

BinaryTree BinaryTree::right_vine(std::size_t n) {
  if (n == 0) throw DomainError("a tree has at least one leaf");
  std::vector<std::string> leaves;
  std::string ones;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    leaves.push_back(ones + "0");
    ones += "1";
  }
  leaves.push_back(ones);
  return BinaryTree(std::move(leaves));
}

BinaryTree BinaryTree::random(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw DomainError("a tree has at least one leaf");
  BinaryTree t;
  while (t.leaf_count() < n) {
    std::uniform_int_distribution<std::size_t> pick(0, t.leaf_count() - 1);
    t = t.expand(pick(rng));
  }
  return t;
}

std::size_t BinaryTree::find(std::string_view address) const {
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    if (leaves_[i] == address) return i;
  }
  return std::string::npos;
}

BinaryTree BinaryTree::expand(std::size_t i) const {
  if (i >= leaves_.size()) throw DomainError("leaf index out of range");
  std::vector<std::string> out;
  out.reserve(leaves_.size() + 1);
  out.insert(out.end(), leaves_.begin(), leaves_.begin() + i);
  out.push_back(leaves_[i] + "0");
  out.push_back(leaves_[i] + "1");
  out.insert(out.end(), leaves_.begin() + i + 1, leaves_.end());
  return BinaryTree(std::move(out));
}

bool BinaryTree::is_caret_at(std::size_t i) const {
  if (i + 1 >= leaves_.size()) return false;
  const std::string& a = leaves_[i];
  const std::string& b = leaves_[i + 1];
  return a.size() == b.size() && !a.empty() && a.back() == '0' && b.back() == '1' &&
         a.compare(0, a.size() - 1, b, 0, b.size() - 1) == 0;
}

BinaryTree BinaryTree::contract(std::size_t i) const {
  if (!is_caret_at(i)) throw DomainError("leaves do not form a caret");
  std::vector<std::string> out = leaves_;
  out[i].pop_back();
  out.erase(out.begin() + i + 1);
  return BinaryTree(std::move(out));
}

BinaryTree BinaryTree::common_refinement(const BinaryTree& a, const BinaryTree& b) {
  std::set<std::string> internal;
  add_internal(a.leaves_, internal);
  add_internal(b.leaves_, internal);
  std::vector<std::string> leaves;
  std::string prefix;
  collect_leaves(internal, prefix, leaves);
  return BinaryTree(std::move(leaves));
}

std::string BinaryTree::to_string() const {
  std::string out;
  std::size_t next = 0;
  std::string prefix;
  print_tree(leaves_, next, prefix, out);
  return out;
}

BinaryTree BinaryTree::parse(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<std::string> leaves;
  std::string prefix;
  parse_tree(cur, prefix, leaves);
  cur.expect_end();
  return BinaryTree(std::move(leaves));
}

Rational address_left(std::string_view address) {
  Rational x = 0;
  Rational w(1, 2);
  for (char c : address) {
    if (c == '1') x += w;
    w /= 2;
  }
  return x;
}

Rational address_length(std::string_view address) {
  Rational len = 1;
  mpq_div_2exp(len.get_mpq_t(), len.get_mpq_t(), address.size());
  return len;
}

}  // namespace tlg
