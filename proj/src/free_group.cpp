#include "tlg/free_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "tlg/detail/cursor.hpp"

namespace tlg {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

}  // namespace

FreeWord::FreeWord(std::vector<int> letters) {
  for (int l : letters) {
    if (l == 0) throw DomainError("letter 0 is not a generator");
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

FreeWord FreeWord::power(long n) const {
  FreeWord base = n < 0 ? inverse() : *this;
  FreeWord out;
  for (long i = 0; i < std::labs(n); ++i) out = out * base;
  return out;
}

int FreeWord::rank_used() const {
  int r = 0;
  for (int l : letters_) r = std::max(r, std::abs(l));
  return r;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (int l : b.letters_) push_reduced(out.letters_, l);
  return out;
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) { return a * b * a.inverse() * b.inverse(); }

std::string FreeWord::to_string(std::string_view alphabet) const {
  if (letters_.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    int gen = std::abs(letters_[i]) - 1;
    if (gen >= static_cast<int>(alphabet.size())) throw DomainError("alphabet too small for word");
    long exponent = static_cast<long>(j - i) * (letters_[i] > 0 ? 1 : -1);
    if (!out.empty()) out += ' ';
    out += alphabet[gen];
    if (exponent == -1) {
      out += '\'';
    } else if (exponent != 1) {
      out += '^' + std::to_string(exponent);
    }
    i = j;
  }
  return out;
}

FreeWord FreeWord::parse(std::string_view text, std::string_view alphabet) {
  detail::Cursor c(text);
  c.skip_ws();
  if ((c.peek() == 'e' && alphabet.find('e') == std::string_view::npos) || c.peek() == '1') {
    c.get();
    c.expect_end();
    return {};
  }
  std::vector<int> letters;
  c.skip_ws();
  if (c.at_end()) c.fail("expected a word");
  while (true) {
    c.skip_ws();
    if (c.at_end()) break;
    std::size_t pos = alphabet.find(c.peek());
    if (pos == std::string_view::npos) c.fail("expected a letter of '" + std::string(alphabet) + "'");
    c.get();
    int letter = static_cast<int>(pos) + 1;
    long exponent = 1;
    if (c.peek() == '\'') {
      c.get();
      exponent = -1;
    } else if (c.peek() == '^') {
      c.get();
      exponent = c.integer();
    }
    for (long k = 0; k < std::labs(exponent); ++k) letters.push_back(exponent < 0 ? -letter : letter);
  }
  return FreeWord(std::move(letters));
}

FreeEndomorphism::FreeEndomorphism(std::vector<FreeWord> images) : images_(std::move(images)) {
  for (const auto& w : images_) {
    if (w.rank_used() > rank()) throw DomainError("image uses a letter outside the basis");
  }
}

FreeWord FreeEndomorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (int l : w.letters()) {
    int gen = std::abs(l) - 1;
    if (gen >= rank()) throw DomainError("word uses a letter outside the basis");
    out = out * (l > 0 ? images_[gen] : images_[gen].inverse());
  }
  return out;
}

IntMatrix FreeEndomorphism::abelianization() const {
  IntMatrix m(rank(), rank());
  for (int j = 0; j < rank(); ++j) {
    for (int l : images_[j].letters()) m.at(std::abs(l) - 1, j) += l > 0 ? 1 : -1;
  }
  return m;
}

SubgroupGraph::SubgroupGraph(const std::vector<FreeWord>& generators, int rank) : rank_(rank) {
  // Petal per generator, then fold until deterministic.
  std::vector<FoldedEdge> raw;
  int next = 1;
  for (const auto& w : generators) {
    if (w.rank_used() > rank) throw DomainError("generator uses a letter outside the basis");
    if (w.is_identity()) continue;
    int v = 0;
    for (std::size_t i = 0; i < w.length(); ++i) {
      int l = w.letters()[i];
      int u = i + 1 == w.length() ? 0 : next++;
      if (l > 0) {
        raw.push_back({v, l - 1, u});
      } else {
        raw.push_back({u, -l - 1, v});
      }
      v = u;
    }
  }
  std::vector<int> parent(next);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::set<FoldedEdge> edges(raw.begin(), raw.end());
  while (true) {
    std::set<FoldedEdge> normal;
    for (const auto& e : edges) normal.insert({find(e.source), e.label, find(e.target)});
    edges.swap(normal);
    std::map<std::pair<int, int>, int> seen;
    bool merged = false;
    for (const auto& e : edges) {
      for (auto [key, other] : {std::pair{std::pair{e.source, 2 * e.label}, e.target},
                                std::pair{std::pair{e.target, 2 * e.label + 1}, e.source}}) {
        auto [it, fresh] = seen.emplace(key, other);
        if (!fresh && it->second != other) {
          // Lower representative wins so the base vertex stays 0.
          int a = find(it->second), b = find(other);
          parent[std::max(a, b)] = std::min(a, b);
          merged = true;
          break;
        }
      }
      if (merged) break;
    }
    if (!merged) break;
  }
  // Canonical numbering: BFS from the base, following letters in order, so
  // equal subgroups give identical graphs.
  std::map<std::pair<int, int>, int> step;
  for (const auto& e : edges) {
    step[{e.source, 2 * e.label}] = e.target;
    step[{e.target, 2 * e.label + 1}] = e.source;
  }
  std::map<int, int> index{{0, 0}};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int slot = 0; slot < 2 * rank_; ++slot) {
      auto it = step.find({v, slot});
      if (it == step.end()) continue;
      if (index.emplace(it->second, static_cast<int>(index.size())).second) queue.push_back(it->second);
    }
  }
  vertices_ = static_cast<int>(index.size());
  out_.assign(vertices_, std::vector<int>(2 * rank_, -1));
  for (const auto& e : edges) {
    FoldedEdge d{index.at(e.source), e.label, index.at(e.target)};
    edges_.push_back(d);
    out_[d.source][2 * d.label] = d.target;
    out_[d.target][2 * d.label + 1] = d.source;
  }
  std::sort(edges_.begin(), edges_.end());
}

int SubgroupGraph::follow(int v, int letter) const {
  int gen = std::abs(letter) - 1;
  if (gen >= rank_) return -1;
  return out_[v][2 * gen + (letter < 0 ? 1 : 0)];
}

bool SubgroupGraph::contains(const FreeWord& w) const {
  int v = 0;
  for (int l : w.letters()) {
    v = follow(v, l);
    if (v < 0) return false;
  }
  return v == 0;
}

std::vector<FreeWord> SubgroupGraph::basis() const {
  std::vector<FreeWord> path(vertices_);
  std::vector<bool> reached(vertices_, false);
  std::set<std::size_t> tree;
  std::deque<int> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      int u = -1, letter = 0;
      if (e.source == v && !reached[e.target]) {
        u = e.target;
        letter = e.label + 1;
      } else if (e.target == v && !reached[e.source]) {
        u = e.source;
        letter = -(e.label + 1);
      }
      if (u < 0) continue;
      reached[u] = true;
      path[u] = path[v] * FreeWord({letter});
      tree.insert(i);
      queue.push_back(u);
    }
  }
  std::vector<FreeWord> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (tree.count(i)) continue;
    const auto& e = edges_[i];
    out.push_back(path[e.source] * FreeWord({e.label + 1}) * path[e.target].inverse());
  }
  return out;
}

bool SubgroupGraph::is_full() const {
  return vertices_ == 1 && static_cast<int>(edges_.size()) == rank_;
}

std::string SubgroupGraph::describe(std::string_view alphabet) const {
  std::string out = std::to_string(vertices_) + " vertices:";
  for (const auto& e : edges_) {
    out += ' ' + std::to_string(e.source) + '-' + alphabet[e.label] + "->" + std::to_string(e.target);
  }
  return out;
}

}  // namespace tlg
