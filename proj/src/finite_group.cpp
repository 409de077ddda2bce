#include "tlg/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tlg {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  check_latin_identity();
  const int n = order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = table_[a][b];
      for (int c = 0; c < n; ++c) {
        if (table_[ab][c] != table_[a][table_[b][c]]) throw DomainError("table is not associative");
      }
    }
  }
}

FiniteGroup::FiniteGroup(Trusted, std::vector<std::vector<int>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  check_latin_identity();
}

void FiniteGroup::check_latin_identity() {
  const int n = order();
  if (n == 0) throw DomainError("a group has at least one element");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw DomainError("multiplication table is not square");
    std::vector<char> seen(n, 0);
    for (int v : row) {
      if (v < 0 || v >= n || seen[v]) throw DomainError("table row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) throw DomainError("element 0 must be the identity");
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == 0) inverse_[a] = b;
    }
    if (table_[inverse_[a]][a] != 0) throw DomainError("left and right inverses differ");
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, "C1"); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return FiniteGroup(Trusted{}, std::move(t), "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::metacyclic(int m, int n, int r, int s, std::string name) {
  auto mod = [](long a, long b) { return static_cast<int>(((a % b) + b) % b); };
  std::vector<long> rp(2 * n + 1, 1);
  for (int k = 1; k <= 2 * n; ++k) rp[k] = rp[k - 1] * r % m;
  const int size = m * n;
  std::vector<std::vector<int>> t(size, std::vector<int>(size));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < n; ++l) {
          long e = i + rp[j] * k;
          int jl = j + l;
          if (jl >= n) {
            jl -= n;
            e += rp[jl] * s;
          }
          t[i * n + j][k * n + l] = mod(e, m) * n + jl;
        }
      }
    }
  }
  return FiniteGroup(std::move(t), std::move(name));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x) {
    for (int y = 0; y < na * nb; ++y) {
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  return FiniteGroup(Trusted{}, std::move(t), a.name() + "x" + b.name());
}

FiniteGroup FiniteGroup::semidirect_cyclic(const FiniteGroup& n, const Perm& alpha, int k,
                                           std::string name) {
  const int nn = n.order();
  if (static_cast<int>(alpha.size()) != nn || !n.is_automorphism(alpha)) {
    throw DomainError("the action is not an automorphism");
  }
  std::vector<Perm> powers(k, Perm(nn));
  std::iota(powers[0].begin(), powers[0].end(), 0);
  for (int j = 1; j < k; ++j) {
    for (int x = 0; x < nn; ++x) powers[j][x] = alpha[powers[j - 1][x]];
  }
  std::vector<std::vector<int>> t(nn * k, std::vector<int>(nn * k));
  for (int a = 0; a < nn * k; ++a) {
    for (int b = 0; b < nn * k; ++b) {
      int x = a / k, j = a % k, y = b / k, l = b % k;
      t[a][b] = n.mul(x, powers[j][y]) * k + (j + l) % k;
    }
  }
  return FiniteGroup(std::move(t), std::move(name));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& gens, std::string name) {
  if (gens.empty()) return trivial();
  const std::size_t deg = gens[0].size();
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  std::vector<Perm> elems = {id};
  std::map<Perm, int> index = {{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : gens) {
      if (g.size() != deg) throw DomainError("permutations of different degrees");
      Perm p = compose(elems[k], g);
      if (index.emplace(p, static_cast<int>(elems.size())).second) elems.push_back(p);
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  }
  return FiniteGroup(std::move(t), std::move(name));
}

FiniteGroup FiniteGroup::from_abelian(const FGAbelianGroup& g) {
  auto elems = g.elements(20000);
  std::map<std::vector<BigInt>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[g.canonical(elems[i])] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<BigInt> s(elems[a].size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = elems[a][k] + elems[b][k];
      t[a][b] = index.at(g.canonical(s));
    }
  }
  return FiniteGroup(Trusted{}, std::move(t), g.describe());
}

FiniteGroup FiniteGroup::parse_csv(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_start = offset;
    offset += line.size() + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<int> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      std::string cell = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      std::size_t used = 0;
      try {
        row.push_back(std::stoi(cell, &used));
      } catch (const std::exception&) {
        throw ParseError("expected an integer table entry", line_start + pos);
      }
      if (cell.find_first_not_of(" \t\r", used) != std::string::npos) {
        throw ParseError("unexpected text in table entry", line_start + pos + used);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return FiniteGroup(std::move(rows));
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < a; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int a = 0; a < order(); ++a) {
    bool central = true;
    for (int b = 0; b < order() && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<int> FiniteGroup::subgroup_generated(const std::vector<int>& gens) const {
  std::vector<char> in(order(), 0);
  std::vector<int> out = {0};
  in[0] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int g : gens) {
      int x = mul(out[k], g);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteGroup::normal_closure(const std::vector<int>& gens) const {
  std::set<int> conj;
  for (int g : gens) {
    for (int h = 0; h < order(); ++h) conj.insert(mul(mul(h, g), inv(h)));
  }
  return subgroup_generated({conj.begin(), conj.end()});
}

std::vector<int> FiniteGroup::generating_set() const {
  std::vector<int> gens;
  std::vector<int> h = {0};
  while (static_cast<int>(h.size()) < order()) {
    int best = -1;
    for (int a = 0; a < order(); ++a) {
      if (std::binary_search(h.begin(), h.end(), a)) continue;
      if (best < 0 || element_order(a) > element_order(best)) best = a;
    }
    gens.push_back(best);
    h = subgroup_generated(gens);
  }
  return gens;
}

bool FiniteGroup::is_automorphism(const Perm& phi) const {
  const int n = order();
  if (static_cast<int>(phi.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : phi) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (phi[mul(a, b)] != mul(phi[a], phi[b])) return false;
    }
  }
  return true;
}

std::vector<Perm> FiniteGroup::automorphisms() const {
  const int n = order();
  const std::vector<int> gens = generating_set();
  std::vector<std::vector<int>> candidates;
  for (int g : gens) {
    std::vector<int> c;
    for (int a = 0; a < n; ++a) {
      if (element_order(a) == element_order(g)) c.push_back(a);
    }
    candidates.push_back(std::move(c));
  }
  std::vector<Perm> out;
  std::vector<int> images(gens.size());
  Perm map(n);
  std::vector<int> queue;
  // Extends generator images along the Cayley graph; fails on a conflict.
  auto extend = [&]() {
    std::fill(map.begin(), map.end(), -1);
    map[0] = 0;
    queue.assign(1, 0);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      int u = queue[k];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        int v = mul(u, gens[i]);
        int image = mul(map[u], images[i]);
        if (map[v] < 0) {
          map[v] = image;
          queue.push_back(v);
        } else if (map[v] != image) {
          return false;
        }
      }
    }
    std::vector<char> seen(n, 0);
    for (int v : map) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  std::vector<std::size_t> choice(gens.size(), 0);
  std::size_t depth = 0;
  // Iterative odometer over candidate tuples.
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][choice[i]];
    if (extend()) out.push_back(map);
    depth = gens.size();
    while (depth > 0) {
      if (++choice[depth - 1] < candidates[depth - 1].size()) break;
      choice[depth - 1] = 0;
      --depth;
    }
    if (depth == 0) break;
  }
  return out;
}

std::vector<std::vector<int>> FiniteGroup::normal_subgroups() const {
  std::set<std::vector<int>> found;
  found.insert({0});
  for (int a = 0; a < order(); ++a) found.insert(normal_closure({a}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<int> u = current[i];
        u.insert(u.end(), current[j].begin(), current[j].end());
        if (found.insert(subgroup_generated(u)).second) grew = true;
      }
    }
  }
  return {found.begin(), found.end()};
}

QuotientGroup quotient(const FiniteGroup& g, const std::vector<int>& n) {
  const int size = g.order();
  std::vector<char> in(size, 0);
  for (int x : n) in.at(x) = 1;
  std::vector<int> sorted = n;
  std::sort(sorted.begin(), sorted.end());
  if (g.subgroup_generated(n) != sorted) throw DomainError("not a subgroup");
  for (int x : n) {
    for (int h = 0; h < size; ++h) {
      if (!in[g.mul(g.mul(h, x), g.inv(h))]) throw DomainError("subgroup is not normal");
    }
  }
  std::vector<int> coset(size, -1), reps;
  for (int a = 0; a < size; ++a) {
    if (coset[a] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int x : n) coset[g.mul(a, x)] = c;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) t[a][b] = coset[g.mul(reps[a], reps[b])];
  }
  return {FiniteGroup(std::move(t), g.name() + "/N"), std::move(coset)};
}

Perm induced_automorphism(const FiniteGroup& g, const QuotientGroup& q, const Perm& phi) {
  const int size = g.order();
  for (int a = 0; a < size; ++a) {
    if ((q.coset_of[a] == 0) != (q.coset_of[phi[a]] == 0)) {
      throw DomainError("automorphism does not preserve the normal subgroup");
    }
  }
  Perm out(q.group.order(), -1);
  for (int a = 0; a < size; ++a) out[q.coset_of[a]] = q.coset_of[phi[a]];
  return out;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

TwistedClasses twisted_classes_finite(const FiniteGroup& g, const Perm& phi) {
  const int n = g.order();
  if (n > 10000) throw DomainError("group order exceeds 10^4");
  if (!g.is_automorphism(phi)) throw DomainError("map is not an automorphism");
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int h = 0; h < n; ++h) {
    const int phinv = g.inv(phi[h]);
    for (int a = 0; a < n; ++a) {
      int b = g.mul(g.mul(h, a), phinv);
      int ra = find_root(parent, a), rb = find_root(parent, b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int a = 0; a < n; ++a) groups[find_root(parent, a)].push_back(a);
  TwistedClasses out;
  for (auto& [root, members] : groups) out.classes.push_back(std::move(members));
  out.count = static_cast<int>(out.classes.size());
  return out;
}

Perm abelian_auto_perm(const AbelianAuto& a) {
  const FGAbelianGroup& g = a.group();
  auto elems = g.elements(20000);
  std::map<std::vector<BigInt>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[g.canonical(elems[i])] = static_cast<int>(i);
  Perm out(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) out[i] = index.at(g.canonical(a.apply(elems[i])));
  return out;
}

int fixed_point_count(const FiniteGroup& g, const Perm& phi) {
  int k = 0;
  for (int a = 0; a < g.order(); ++a) k += phi[a] == a;
  return k;
}

std::vector<FiniteGroup> small_groups_corpus() {
  using G = FiniteGroup;
  auto named = [](G g, std::string name) {
    g.set_name(std::move(name));
    return g;
  };
  const G c2 = G::cyclic(2), c4 = G::cyclic(4);
  const G d8 = G::metacyclic(4, 2, 3, 0, "D8");
  const G q8 = G::metacyclic(4, 2, 3, 2, "Q8");
  const G c4c2 = G::direct_product(c4, c2);
  // C4 x C2 elements are a*2 + b.
  Perm twist(8), pauli(8);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 2; ++b) {
      twist[a * 2 + b] = a * 2 + (a + b) % 2;
      pauli[a * 2 + b] = ((a + 2 * b) % 4) * 2 + b;
    }
  }
  std::vector<G> out = {
      G::trivial(),
      G::cyclic(2),
      G::cyclic(3),
      G::cyclic(4),
      G::direct_product(c2, c2),
      G::cyclic(5),
      G::cyclic(6),
      G::metacyclic(3, 2, 2, 0, "S3"),
      G::cyclic(7),
      G::cyclic(8),
      c4c2,
      G::direct_product(G::direct_product(c2, c2), c2),
      d8,
      q8,
      G::cyclic(9),
      G::direct_product(G::cyclic(3), G::cyclic(3)),
      G::cyclic(10),
      G::metacyclic(5, 2, 4, 0, "D10"),
      G::cyclic(11),
      G::cyclic(12),
      G::direct_product(G::cyclic(6), c2),
      G::metacyclic(6, 2, 5, 0, "D12"),
      G::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"),
      G::metacyclic(3, 4, 2, 0, "Dic12"),
      G::cyclic(13),
      G::cyclic(14),
      G::metacyclic(7, 2, 6, 0, "D14"),
      G::cyclic(15),
      G::cyclic(16),
      G::direct_product(c4, c4),
      G::semidirect_cyclic(c4c2, twist, 2, "(C4xC2):C2"),
      G::metacyclic(4, 4, 3, 0, "C4:C4"),
      G::direct_product(G::cyclic(8), c2),
      G::metacyclic(8, 2, 5, 0, "M16"),
      G::metacyclic(8, 2, 7, 0, "D16"),
      G::metacyclic(8, 2, 3, 0, "SD16"),
      G::metacyclic(8, 2, 7, 4, "Q16"),
      G::direct_product(c4c2, c2),
      named(G::direct_product(c2, d8), "C2xD8"),
      named(G::direct_product(c2, q8), "C2xQ8"),
      G::semidirect_cyclic(c4c2, pauli, 2, "Pauli"),
      G::direct_product(G::direct_product(G::direct_product(c2, c2), c2), c2),
  };
  return out;
}

}  // namespace tlg
