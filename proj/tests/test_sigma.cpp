#include <set>

#include "doctest.h"
#include "tlg/case_studies.hpp"
#include "tlg/sigma.hpp"

using namespace tlg;

namespace {

// Ball of Z^2 under the l1 metric, counted directly.
std::size_t l1_ball(long r) {
  std::size_t n = 0;
  for (long a = -r; a <= r; ++a) {
    for (long b = -r; b <= r; ++b) n += std::abs(a) + std::abs(b) <= r;
  }
  return n;
}

}  // namespace

TEST_CASE("balls in free abelian groups") {
  auto z = make_oracle("Z");
  CHECK(ball(z, 3).vertices.size() == 7);
  CHECK(ball(z, 0).vertices.size() == 1);
  auto z2 = make_oracle("Z^2");
  for (std::size_t r = 0; r <= 6; ++r) CHECK(ball(z2, r).vertices.size() == l1_ball(r));
  auto b = ball(z2, 3);
  for (std::size_t v = 0; v < b.vertices.size(); ++v) {
    CHECK(b.distance[v] <= 3);
  }
  // Every vertex has 4 generator edges unless the neighbour leaves the ball.
  std::size_t interior_edges = 0;
  for (const auto& e : b.edges) interior_edges += b.distance[e.from] < 3;
  CHECK(interior_edges == 4 * l1_ball(2));
  CHECK_THROWS_AS(ball(z, 13), DomainError);
  CHECK_THROWS_AS(make_oracle("Q"), ParseError);
  CHECK_THROWS_AS(make_oracle("Z^x"), ParseError);
}

TEST_CASE("nonnegative subgraphs in free abelian groups") {
  auto z = make_oracle("Z");
  for (std::size_t r = 0; r <= 6; ++r) {
    auto rep = nonneg_subgraph_components(z, "a", r);
    CHECK(rep.components() == 1);
    CHECK(rep.subgraph_size == r + 1);
  }
  auto z2 = make_oracle("Z^2");
  auto rep = nonneg_subgraph_components(z2, "a", 5);
  CHECK(rep.components() == 1);
  CHECK(rep.label() == "evidence at radius 5");
  CHECK_THROWS_AS(nonneg_subgraph_components(z2, "c", 2), DomainError);
}

TEST_CASE("GW ball matches the normal-form count") {
  for (std::int64_t b : {1, 2, 3}) {
    auto o = oracle_gw(b);
    for (int r = 0; r <= 4; ++r) {
      auto direct = gw_ball(b, r);
      auto bl = ball(o, r);
      CHECK(bl.vertices.size() == direct.size());
      std::set<std::string> a(bl.vertices.begin(), bl.vertices.end()), c;
      for (const auto& g : direct) c.insert(g.to_string());
      CHECK(a == c);
    }
  }
  auto rep = nonneg_subgraph_components(oracle_gw(2), "z", 4);
  CHECK(rep.components() >= 1);
}

TEST_CASE("F balls agree across representations") {
  auto trees = make_oracle("F");
  auto pl = make_oracle("F-pl");
  for (std::size_t r = 0; r <= 3; ++r) {
    auto bt = ball(trees, r), bp = ball(pl, r);
    CHECK(bt.vertices.size() == bp.vertices.size());
    CHECK(bt.edges.size() == bp.edges.size());
    for (const char* chi : {"phi0", "phi1"}) {
      auto ct = nonneg_subgraph_components(trees, bt, chi);
      auto cp = nonneg_subgraph_components(pl, bp, chi);
      CHECK(ct.component_sizes == cp.component_sizes);
    }
  }
  // The shortest relator of F has length 10, so small balls are free ones.
  CHECK(ball(trees, 1).vertices.size() == 5);
  CHECK(ball(trees, 2).vertices.size() == 17);
}

TEST_CASE("ball monotonicity and edge consistency") {
  for (const char* spec : {"Z^2", "GW:2", "F", "LM:4"}) {
    auto o = make_oracle(spec);
    std::size_t last = 0;
    for (std::size_t r = 0; r <= 3; ++r) {
      auto small = ball(o, r), big = ball(o, r + 1);
      CHECK(small.vertices.size() >= last);
      last = small.vertices.size();
      // Vertices of the smaller ball appear in the bigger one in the same order.
      REQUIRE(big.vertices.size() >= small.vertices.size());
      for (std::size_t v = 0; v < small.vertices.size(); ++v) CHECK(big.vertices[v] == small.vertices[v]);
      // Restricted to the smaller vertex set, the bigger ball has exactly the
      // same edges.
      std::set<std::tuple<std::size_t, std::size_t, std::size_t>> es, eb;
      for (const auto& e : small.edges) es.insert({e.from, e.generator, e.to});
      for (const auto& e : big.edges) {
        if (e.from < small.vertices.size() && e.to < small.vertices.size()) eb.insert({e.from, e.generator, e.to});
      }
      CHECK(es == eb);
      const std::string chi = o.characters.begin()->first;
      auto cs = nonneg_subgraph_components(o, small, chi);
      auto cb = nonneg_subgraph_components(o, big, chi);
      CHECK(cb.subgraph_size >= cs.subgraph_size);
    }
  }
}

TEST_CASE("depth-bounded equality") {
  auto o = make_oracle("LM:4");
  CHECK_FALSE(o.exact_equality);
  auto b = ball(o, 2);
  CHECK_FALSE(b.exact_equality);
  // x() x()' cancels symbolically, so at least identity is re-found.
  CHECK(b.vertices.size() > 1);
  auto rep = nonneg_subgraph_components(o, b, "chi0");
  CHECK_FALSE(rep.exact_equality);
  CHECK(rep.subgraph_size <= rep.ball_size);
}
