#include "tlg/braided.hpp"

namespace tlg {

BraidedDiagram::BraidedDiagram(BinaryTree minus_tree, BraidWord b, BinaryTree plus_tree)
    : minus(std::move(minus_tree)), braid(std::move(b)), plus(std::move(plus_tree)) {
  if (minus.leaf_count() != plus.leaf_count() ||
      static_cast<int>(minus.leaf_count()) != braid.strands()) {
    throw DomainError("trees and braid must have the same number of strands");
  }
}

BraidedDiagram BraidedDiagram::from_tree_pair(const TreePair& d) {
  return {d.minus, BraidWord(static_cast<int>(d.leaf_count())), d.plus};
}

bool BraidedDiagram::is_pure() const { return braid_invariants(braid).is_pure(); }

std::string BraidedDiagram::to_string() const {
  return minus.to_string() + " | " + braid.to_string() + " | " + plus.to_string();
}

BraidedDiagram BraidedDiagram::parse(std::string_view text) {
  std::size_t bar1 = text.find('|');
  std::size_t bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos) {
    throw ParseError("expected 'minus | braid | plus'", text.size());
  }
  auto rebase = [](std::size_t base, auto&& fn) {
    try {
      return fn();
    } catch (const ParseError& e) {
      throw ParseError("bad diagram component", base + e.position());
    }
  };
  BinaryTree m = rebase(0, [&] { return BinaryTree::parse(text.substr(0, bar1)); });
  BraidWord b = rebase(bar1 + 1, [&] {
    return BraidWord::parse(text.substr(bar1 + 1, bar2 - bar1 - 1),
                            static_cast<int>(m.leaf_count()));
  });
  BinaryTree p = rebase(bar2 + 1, [&] { return BinaryTree::parse(text.substr(bar2 + 1)); });
  return BraidedDiagram(std::move(m), std::move(b), std::move(p));
}

BraidedDiagram expansion(const BraidedDiagram& d, std::size_t leaf) {
  if (leaf >= d.leaf_count()) throw DomainError("leaf index out of range");
  auto perm = braid_invariants(d.braid).permutation;
  std::size_t target = static_cast<std::size_t>(perm[leaf]);
  return {d.minus.expand(leaf), cable(d.braid, static_cast<int>(leaf)), d.plus.expand(target)};
}

namespace {

bool is_leaf_of(const BinaryTree& t, const std::string& w) { return t.find(w) != std::string::npos; }

}  // namespace

BraidedDiagram refine_minus(const BraidedDiagram& d, const BinaryTree& target) {
  BraidedDiagram cur = d;
  while (cur.minus != target) {
    std::size_t k = 0;
    while (k < cur.leaf_count() && is_leaf_of(target, cur.minus.leaf(k))) ++k;
    if (k == cur.leaf_count() || cur.leaf_count() >= target.leaf_count()) {
      throw DomainError("target tree does not refine the minus tree");
    }
    cur = expansion(cur, k);
  }
  return cur;
}

BraidedDiagram refine_plus(const BraidedDiagram& d, const BinaryTree& target) {
  BraidedDiagram cur = d;
  while (cur.plus != target) {
    std::size_t q = 0;
    while (q < cur.leaf_count() && is_leaf_of(target, cur.plus.leaf(q))) ++q;
    if (q == cur.leaf_count() || cur.leaf_count() >= target.leaf_count()) {
      throw DomainError("target tree does not refine the plus tree");
    }
    auto perm = braid_invariants(cur.braid).permutation;
    std::size_t s = 0;
    while (static_cast<std::size_t>(perm[s]) != q) ++s;
    cur = expansion(cur, s);
  }
  return cur;
}

BraidedDiagram multiply(const BraidedDiagram& d1, const BraidedDiagram& d2) {
  BinaryTree s = BinaryTree::common_refinement(d1.plus, d2.minus);
  BraidedDiagram a = refine_plus(d1, s);
  BraidedDiagram b = refine_minus(d2, s);
  return try_reduce(BraidedDiagram(a.minus, (a.braid * b.braid).free_reduced(), b.plus));
}

BraidedDiagram inverse(const BraidedDiagram& d) { return {d.plus, d.braid.inverse(), d.minus}; }

bool diagram_equal(const BraidedDiagram& d1, const BraidedDiagram& d2) {
  BinaryTree s = BinaryTree::common_refinement(d1.minus, d2.minus);
  BraidedDiagram a = refine_minus(d1, s);
  BraidedDiagram b = refine_minus(d2, s);
  return a.plus == b.plus && braid_equal(a.braid, b.braid);
}

BraidedDiagram try_reduce(const BraidedDiagram& d) {
  BraidedDiagram cur = d;
  bool changed = true;
  while (changed) {
    changed = false;
    auto perm = braid_invariants(cur.braid).permutation;
    for (std::size_t i = 0; i + 1 < cur.leaf_count(); ++i) {
      if (!cur.minus.is_caret_at(i)) continue;
      std::size_t q = static_cast<std::size_t>(perm[i]);
      if (static_cast<std::size_t>(perm[i + 1]) != q + 1 || !cur.plus.is_caret_at(q)) continue;
      BraidWord thin = delete_strand(cur.braid, static_cast<int>(i) + 1).free_reduced();
      if (!braid_equal(cable(thin, static_cast<int>(i)), cur.braid)) continue;
      cur = BraidedDiagram(cur.minus.contract(i), thin, cur.plus.contract(q));
      changed = true;
      break;
    }
  }
  return cur;
}

PhiCharacters phi_characters(const BraidedDiagram& d) {
  auto diff = [](std::size_t a, std::size_t b) {
    return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
  };
  return {diff(d.plus.left_depth(), d.minus.left_depth()),
          diff(d.plus.right_depth(), d.minus.right_depth())};
}

BraidedDiagram fbr_alpha(int i, int j) {
  BinaryTree r = BinaryTree::right_vine(static_cast<std::size_t>(j) + 1);
  return {r, wrap_braid(i, j, j + 1), r};
}

BraidedDiagram fbr_beta(int i, int j) {
  BinaryTree r = BinaryTree::right_vine(static_cast<std::size_t>(j));
  return {r, wrap_braid(i, j, j), r};
}

std::vector<NamedDiagram> fbr_generators() {
  return {
      {"x0", BraidedDiagram::from_tree_pair(TreePair::x0())},
      {"x1", BraidedDiagram::from_tree_pair(TreePair::x1())},
      {"alpha12", fbr_alpha(1, 2)},
      {"alpha13", fbr_alpha(1, 3)},
      {"alpha23", fbr_alpha(2, 3)},
      {"alpha24", fbr_alpha(2, 4)},
      {"beta12", fbr_beta(1, 2)},
      {"beta13", fbr_beta(1, 3)},
      {"beta23", fbr_beta(2, 3)},
      {"beta24", fbr_beta(2, 4)},
  };
}

BraidedDiagram random_fbr_element(std::size_t length, std::mt19937_64& rng) {
  static const std::vector<NamedDiagram> gens = fbr_generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  BraidedDiagram out;
  for (std::size_t k = 0; k < length; ++k) {
    const BraidedDiagram& g = gens[pick(rng)].diagram;
    out = multiply(out, coin(rng) ? g : inverse(g));
  }
  return out;
}

}  // namespace tlg
