#pragma once

// Cayley-graph balls and the connectivity of their nonnegative-character
// subgraphs. Everything here is evidence at a finite radius; nothing decides
// membership in the BNS invariant.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tlg/exact.hpp"

namespace tlg {

// Elements are handled as literals of the underlying module; `key` maps a
// literal to its equality class.
struct GroupOracle {
  std::string name;
  std::string identity;
  std::vector<std::string> generator_labels;
  std::vector<std::string> generators;  // literals, closed under inversion
  std::function<std::string(const std::string&, const std::string&)> multiply;
  std::function<std::string(const std::string&)> invert;
  std::function<std::string(const std::string&)> key;
  // False when equality is only tested to a finite depth, so distinct
  // elements may be merged.
  bool exact_equality = true;
  std::map<std::string, std::function<Rational(const std::string&)>> characters;
};

// Z^n with generators a, b, c, ... and coordinate characters of the same
// names. Elements print as (x1,...,xn).
GroupOracle oracle_free_abelian(std::size_t n);
// Z^2 x|_B Z, generators e1, e2, t; characters y and z.
GroupOracle oracle_gw(std::int64_t b);
// Thompson's F on x0, x1 as reduced tree pairs; characters phi0, phi1.
GroupOracle oracle_f_tree_pairs();
// The same group as PL maps of [0,1]; characters phi0, phi1 read from the
// endpoint slopes.
GroupOracle oracle_f_pl();
// Lodha-Moore group G on x(), x(1), y(10), equality tested to `depth`;
// characters chi0, chi1.
GroupOracle oracle_lodha_moore(std::size_t depth);

// `Z`, `Z^n`, `GW:b`, `F`, `F-pl`, `LM` or `LM:depth`.
GroupOracle make_oracle(const std::string& spec);

struct BallEdge {
  std::size_t from;
  std::size_t generator;
  std::size_t to;
};

struct Ball {
  std::size_t radius = 0;
  std::vector<std::string> vertices;  // BFS order, identity first
  std::vector<std::size_t> distance;
  std::vector<BallEdge> edges;        // every generator edge inside the ball
  bool exact_equality = true;
  // Products that the key merged with a different literal; only reported
  // when equality is depth-bounded.
  std::size_t merged_literals = 0;
};

// Throws DomainError if radius exceeds `cap`.
Ball ball(const GroupOracle& o, std::size_t radius, std::size_t cap = 12);

struct ComponentReport {
  std::string character;
  std::size_t radius = 0;
  std::size_t ball_size = 0;
  std::size_t subgraph_size = 0;
  std::vector<std::size_t> component_sizes;  // descending
  std::size_t components() const { return component_sizes.size(); }
  bool exact_equality = true;
  std::string label() const;  // "evidence at radius R"
};

// Components of the subgraph induced on {v : chi(v) >= 0}. Throws DomainError
// on an unknown character.
ComponentReport nonneg_subgraph_components(const GroupOracle& o, const std::string& character,
                                           std::size_t radius);
ComponentReport nonneg_subgraph_components(const GroupOracle& o, const Ball& b,
                                           const std::string& character);

}  // namespace tlg
