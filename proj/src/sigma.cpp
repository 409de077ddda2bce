#include "tlg/sigma.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "tlg/case_studies.hpp"
#include "tlg/detail/cursor.hpp"
#include "tlg/lodha_moore.hpp"
#include "tlg/pl.hpp"
#include "tlg/thompson.hpp"

namespace tlg {

namespace {

std::vector<long> parse_tuple(std::string_view text) {
  detail::Cursor c(text);
  std::vector<long> out;
  c.expect('(');
  if (!c.accept(')')) {
    do {
      out.push_back(c.integer());
    } while (c.accept(','));
    c.expect(')');
  }
  c.expect_end();
  return out;
}

std::string tuple_string(const std::vector<long>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

GWElement parse_gw(std::string_view text) {
  detail::Cursor c(text);
  GWElement g;
  c.expect('(');
  c.expect('(');
  g.x = c.integer();
  c.expect(',');
  g.y = c.integer();
  c.expect(')');
  c.expect(',');
  g.z = c.integer();
  c.expect(')');
  c.expect_end();
  return g;
}

std::string identity_key(const std::string& s) { return s; }

const SlopeGroupSpec& powers_of_two() {
  static const SlopeGroupSpec spec = SlopeGroupSpec::parse("<2>");
  return spec;
}

void add_generator(GroupOracle& o, const std::string& label, const std::string& literal) {
  o.generator_labels.push_back(label);
  o.generators.push_back(literal);
  o.generator_labels.push_back(label + "'");
  o.generators.push_back(o.invert(literal));
}

}  // namespace

GroupOracle oracle_free_abelian(std::size_t n) {
  if (n == 0 || n > 26) throw DomainError("rank must be between 1 and 26");
  GroupOracle o;
  o.name = n == 1 ? "Z" : "Z^" + std::to_string(n);
  o.identity = tuple_string(std::vector<long>(n, 0));
  o.multiply = [](const std::string& a, const std::string& b) {
    auto x = parse_tuple(a), y = parse_tuple(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return tuple_string(x);
  };
  o.invert = [](const std::string& a) {
    auto x = parse_tuple(a);
    for (auto& v : x) v = -v;
    return tuple_string(x);
  };
  o.key = identity_key;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    const std::string label(1, static_cast<char>('a' + i));
    add_generator(o, label, tuple_string(e));
    o.characters[label] = [i](const std::string& s) { return Rational(parse_tuple(s)[i]); };
  }
  return o;
}

GroupOracle oracle_gw(std::int64_t b) {
  if (b < 1) throw DomainError("b must be at least 1");
  GroupOracle o;
  o.name = "GW:" + std::to_string(b);
  o.identity = GWElement{}.to_string();
  o.multiply = [b](const std::string& x, const std::string& y) {
    return gw_multiply(b, parse_gw(x), parse_gw(y)).to_string();
  };
  o.invert = [b](const std::string& x) { return gw_inverse(b, parse_gw(x)).to_string(); };
  o.key = identity_key;
  const char* labels[] = {"e1", "e2", "t"};
  auto gens = gw_generators();
  for (std::size_t i = 0; i < 3; ++i) add_generator(o, labels[i], gens[i].to_string());
  o.characters["y"] = [](const std::string& s) { return Rational(parse_gw(s).y); };
  o.characters["z"] = [](const std::string& s) { return Rational(parse_gw(s).z); };
  return o;
}

GroupOracle oracle_f_tree_pairs() {
  GroupOracle o;
  o.name = "F";
  o.identity = TreePair::identity().to_string();
  o.multiply = [](const std::string& a, const std::string& b) {
    return reduce(multiply(TreePair::parse(a), TreePair::parse(b))).to_string();
  };
  o.invert = [](const std::string& a) { return reduce(inverse(TreePair::parse(a))).to_string(); };
  o.key = identity_key;
  add_generator(o, "x0", TreePair::x0().to_string());
  add_generator(o, "x1", TreePair::x1().to_string());
  o.characters["phi0"] = [](const std::string& s) { return Rational(f_characters(TreePair::parse(s)).left); };
  o.characters["phi1"] = [](const std::string& s) { return Rational(f_characters(TreePair::parse(s)).right); };
  return o;
}

GroupOracle oracle_f_pl() {
  GroupOracle o;
  o.name = "F-pl";
  o.identity = PLMap::identity().to_string();
  o.multiply = [](const std::string& a, const std::string& b) {
    // Same convention as tree-pair multiplication.
    return compose(PLMap::parse(a), PLMap::parse(b)).to_string();
  };
  o.invert = [](const std::string& a) { return invert(PLMap::parse(a)).to_string(); };
  o.key = identity_key;
  add_generator(o, "x0", to_pl(TreePair::x0()).to_string());
  add_generator(o, "x1", to_pl(TreePair::x1()).to_string());
  o.characters["phi0"] = [](const std::string& s) {
    return Rational(endpoint_characters(PLMap::parse(s), powers_of_two()).left.at(0));
  };
  o.characters["phi1"] = [](const std::string& s) {
    return Rational(endpoint_characters(PLMap::parse(s), powers_of_two()).right.at(0));
  };
  return o;
}

GroupOracle oracle_lodha_moore(std::size_t depth) {
  if (depth == 0 || depth > 12) throw DomainError("depth must be between 1 and 12");
  const LMVariant v = LMVariant::G;
  GroupOracle o;
  o.name = "LM:" + std::to_string(depth);
  o.identity = "e";
  o.exact_equality = false;
  o.multiply = [v](const std::string& a, const std::string& b) {
    return (LMWord::parse(a, v) * LMWord::parse(b, v)).to_string();
  };
  o.invert = [v](const std::string& a) { return LMWord::parse(a, v).inverse().to_string(); };
  o.key = [v, depth](const std::string& a) {
    LMWord w = LMWord::parse(a, v);
    std::string key;
    for (const auto& tail : {std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{1, 0}}) {
      for (std::size_t bits = 0; bits < (std::size_t{1} << depth); ++bits) {
        std::vector<int> pre(depth);
        for (std::size_t i = 0; i < depth; ++i) pre[i] = (bits >> (depth - 1 - i)) & 1;
        for (int bit : evaluate_prefix(w, EventuallyPeriodicSeq(pre, tail), depth)) key += static_cast<char>('0' + bit);
      }
    }
    return key;
  };
  add_generator(o, "x()", "x()");
  add_generator(o, "x(1)", "x(1)");
  add_generator(o, "y(10)", "y(10)");
  o.characters["chi0"] = [](const std::string& s) {
    return Rational(lm_character(LMWord::parse(s, LMVariant::G), LMCharacter::chi0));
  };
  o.characters["chi1"] = [](const std::string& s) {
    return Rational(lm_character(LMWord::parse(s, LMVariant::G), LMCharacter::chi1));
  };
  return o;
}

GroupOracle make_oracle(const std::string& spec) {
  if (spec == "Z") return oracle_free_abelian(1);
  if (spec.rfind("Z^", 0) == 0) {
    detail::Cursor c(std::string_view(spec).substr(2));
    long n = c.integer();
    c.expect_end();
    if (n < 1) throw DomainError("rank must be positive");
    return oracle_free_abelian(static_cast<std::size_t>(n));
  }
  if (spec.rfind("GW:", 0) == 0) {
    detail::Cursor c(std::string_view(spec).substr(3));
    long b = c.integer();
    c.expect_end();
    return oracle_gw(b);
  }
  if (spec == "F") return oracle_f_tree_pairs();
  if (spec == "F-pl") return oracle_f_pl();
  if (spec == "LM") return oracle_lodha_moore(6);
  if (spec.rfind("LM:", 0) == 0) {
    detail::Cursor c(std::string_view(spec).substr(3));
    long d = c.integer();
    c.expect_end();
    if (d < 1) throw DomainError("depth must be positive");
    return oracle_lodha_moore(static_cast<std::size_t>(d));
  }
  throw ParseError("unknown group '" + spec + "' (expected Z, Z^n, GW:b, F, F-pl, LM or LM:depth)", 0);
}

Ball ball(const GroupOracle& o, std::size_t radius, std::size_t cap) {
  if (radius > cap) throw DomainError("radius " + std::to_string(radius) + " exceeds the cap " + std::to_string(cap));
  Ball out;
  out.radius = radius;
  out.exact_equality = o.exact_equality;
  std::unordered_map<std::string, std::size_t> index;
  index.emplace(o.key(o.identity), 0);
  out.vertices.push_back(o.identity);
  out.distance.push_back(0);
  std::size_t layer_start = 0;
  for (std::size_t r = 0; r <= radius; ++r) {
    const std::size_t layer_end = out.vertices.size();
    for (std::size_t v = layer_start; v < layer_end; ++v) {
      for (std::size_t g = 0; g < o.generators.size(); ++g) {
        std::string product = o.multiply(out.vertices[v], o.generators[g]);
        std::string k = o.key(product);
        auto it = index.find(k);
        if (it != index.end()) {
          if (!o.exact_equality && out.vertices[it->second] != product) ++out.merged_literals;
          out.edges.push_back({v, g, it->second});
        } else if (r < radius) {
          index.emplace(std::move(k), out.vertices.size());
          out.edges.push_back({v, g, out.vertices.size()});
          out.vertices.push_back(std::move(product));
          out.distance.push_back(r + 1);
        }
      }
    }
    layer_start = layer_end;
  }
  return out;
}

std::string ComponentReport::label() const { return "evidence at radius " + std::to_string(radius); }

ComponentReport nonneg_subgraph_components(const GroupOracle& o, const Ball& b, const std::string& character) {
  auto it = o.characters.find(character);
  if (it == o.characters.end()) throw DomainError("unknown character '" + character + "' for " + o.name);
  ComponentReport rep;
  rep.character = character;
  rep.radius = b.radius;
  rep.ball_size = b.vertices.size();
  rep.exact_equality = b.exact_equality;
  std::vector<bool> keep(b.vertices.size());
  for (std::size_t v = 0; v < b.vertices.size(); ++v) {
    keep[v] = it->second(b.vertices[v]) >= 0;
    rep.subgraph_size += keep[v];
  }
  std::vector<std::size_t> parent(b.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : b.edges) {
    if (keep[e.from] && keep[e.to]) parent[find(e.from)] = find(e.to);
  }
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t v = 0; v < b.vertices.size(); ++v) {
    if (keep[v]) ++sizes[find(v)];
  }
  for (auto [root, n] : sizes) rep.component_sizes.push_back(n);
  std::sort(rep.component_sizes.rbegin(), rep.component_sizes.rend());
  return rep;
}

ComponentReport nonneg_subgraph_components(const GroupOracle& o, const std::string& character,
                                           std::size_t radius) {
  return nonneg_subgraph_components(o, ball(o, radius), character);
}

}  // namespace tlg
