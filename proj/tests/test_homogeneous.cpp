#include "doctest.h"

#include "ehpath/generators.hpp"
#include "ehpath/homogeneous.hpp"
#include "oracles.hpp"

using namespace ehpath;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::build(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::build(n, e);
}

}  // namespace

TEST_CASE("find_epsilon_homogeneous examples") {
  for (auto strategy : {HomogeneousStrategy::exact, HomogeneousStrategy::greedy_peel}) {
    auto empty = find_epsilon_homogeneous(Graph::build(10, {}), Rational(0), 10, strategy);
    REQUIRE(empty);
    CHECK(empty->kind == HomogeneousKind::stable);
    CHECK(empty->vertices.size() == 10);

    auto k10 = find_epsilon_homogeneous(complete(10), Rational(0), 10, strategy);
    REQUIRE(k10);
    CHECK(k10->kind == HomogeneousKind::clique);
    CHECK(k10->vertices.size() == 10);
  }

  CHECK(oracle::max_homogeneous_exact(cycle(5), true) == 2);
  auto c5 = find_epsilon_homogeneous(cycle(5), Rational(0), 2, HomogeneousStrategy::exact);
  REQUIRE(c5);
  CHECK(c5->vertices.size() == 2);
  CHECK(c5->kind == HomogeneousKind::stable);
  CHECK(verify(cycle(5), *c5));
  CHECK_FALSE(find_epsilon_homogeneous(cycle(5), Rational(0), 3, HomogeneousStrategy::exact));

  auto t = find_epsilon_homogeneous(cycle(5), Rational(0), 1, HomogeneousStrategy::trivial);
  REQUIRE(t);
  CHECK(t->vertices == std::vector<Vertex>{0});
  CHECK_FALSE(find_epsilon_homogeneous(cycle(5), Rational(0), 2, HomogeneousStrategy::trivial));

  CHECK_THROWS_AS(find_epsilon_homogeneous(Graph::build(21, {}), Rational(0), 1, HomogeneousStrategy::exact),
                  InputError);
  CHECK_THROWS_AS(find_epsilon_homogeneous(cycle(5), Rational(3, 2), 1, HomogeneousStrategy::greedy_peel), InputError);
  CHECK_THROWS_AS(find_epsilon_homogeneous(cycle(5), Rational(0), 6, HomogeneousStrategy::greedy_peel), InputError);
}

TEST_CASE("greedy peel removes the smallest max-degree vertex first") {
  // P5 at eps=1/30: peel 1, then 3, leaving {0,2,4}
  auto r = find_epsilon_homogeneous(Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), Rational(1, 30), 1,
                                    HomogeneousStrategy::greedy_peel);
  REQUIRE(r);
  CHECK(r->kind == HomogeneousKind::stable);
  CHECK(r->vertices == std::vector<Vertex>{0, 2, 4});
}

TEST_CASE("exact strategy is complete against subset enumeration") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Rng rng(31, s);
    const int n = 1 + static_cast<int>(rng.below(8));
    auto g = gnp(n, Rational(1 + static_cast<int>(rng.below(3)), 4), rng);
    for (auto eps : {Rational(0), Rational(1, 4), Rational(1, 2)}) {
      const int best_stable = oracle::max_eps_homogeneous(g, eps, true);
      const int best_clique = oracle::max_eps_homogeneous(g, eps, false);
      const int best = std::max(best_stable, best_clique);
      auto found = find_epsilon_homogeneous(g, eps, 1, HomogeneousStrategy::exact);
      REQUIRE(found);
      CHECK(static_cast<int>(found->vertices.size()) == best);
      CHECK(verify(g, *found));
      if (best < n) CHECK_FALSE(find_epsilon_homogeneous(g, eps, best + 1, HomogeneousStrategy::exact));
      auto st = find_epsilon_homogeneous(g, eps, 1, HomogeneousStrategy::exact, HomogeneousKind::stable);
      auto cl = find_epsilon_homogeneous(g, eps, 1, HomogeneousStrategy::exact, HomogeneousKind::clique);
      REQUIRE(st);
      REQUIRE(cl);
      CHECK(static_cast<int>(st->vertices.size()) == best_stable);
      CHECK(static_cast<int>(cl->vertices.size()) == best_clique);
      CHECK(st->kind == HomogeneousKind::stable);
      CHECK(cl->kind == HomogeneousKind::clique);
      // the complement swaps the two kinds
      auto co = find_epsilon_homogeneous(g.complement(), eps, 1, HomogeneousStrategy::exact);
      REQUIRE(co);
      CHECK(static_cast<int>(co->vertices.size()) == best);
    }
  }
}

TEST_CASE("greedy results always verify") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(41, s);
    auto g = gnp(2 + static_cast<int>(rng.below(60)), Rational(static_cast<int>(rng.below(5)), 4), rng);
    auto r = find_epsilon_homogeneous(g, Rational(1, 10), 1, HomogeneousStrategy::greedy_peel);
    REQUIRE(r);
    CHECK(verify(g, *r));
  }
}

TEST_CASE("prune_high_degree") {
  auto tri = Graph::build(10, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(prune_high_degree(tri, VertexSet::range(10), Rational(1, 10)) == VertexSet::range(10));

  std::vector<Edge> star;
  for (int v = 1; v < 10; ++v) star.emplace_back(0, v);
  auto out = prune_high_degree(Graph::build(10, star), VertexSet::range(10), Rational(1, 10));
  CHECK(out == VertexSet{1, 2, 3, 4, 5, 6, 7, 8, 9});

  Rng rng(8);
  auto dense = gnp(15, Rational(1, 2), rng);
  CHECK(prune_high_degree(dense, VertexSet::range(15), Rational(1, 2)) == VertexSet::range(15));
  CHECK(prune_high_degree(complete(15), VertexSet::range(15), Rational(1, 2)) == VertexSet::range(15));

  // only degrees inside S count
  auto s = VertexSet{3, 4, 5, 6, 7, 8, 9};
  CHECK(prune_high_degree(Graph::build(10, star), s, Rational(1, 10)) == s);
  CHECK_THROWS_AS(prune_high_degree(tri, VertexSet{}, Rational(1, 10)), InputError);
}

TEST_CASE("fox_sudakov_delta") {
  CHECK(fox_sudakov_delta(5, Rational(1, 2)).exact() == -75);
  CHECK(fox_sudakov_delta(7, Rational(1)).exact() == 0);
  CHECK(fox_sudakov_delta(1, Rational(1, 2)).exact() == -15);
  CHECK(fox_sudakov_delta(2, Rational(1, 8)).exact() == -270);
  auto d30 = fox_sudakov_delta(5, Rational(1, 30));
  CHECK_FALSE(d30.exact());
  CHECK(d30.to_string() == "-75*(log2(30))^2");
  CHECK(static_cast<double>(d30.value()) == doctest::Approx(-75.0 * std::pow(std::log2(30.0), 2)));
  CHECK_THROWS_AS(fox_sudakov_delta(5, Rational(0)), InputError);
  CHECK_THROWS_AS(fox_sudakov_delta(0, Rational(1, 2)), InputError);

  for (int k = 1; k < 20; ++k)
    for (auto eps : {Rational(1, 2), Rational(1, 3), Rational(1, 30), Rational(2, 3)}) {
      CHECK(fox_sudakov_delta(k + 1, eps).value() < fox_sudakov_delta(k, eps).value());
      CHECK(fox_sudakov_delta(k, eps / 2).value() <= fox_sudakov_delta(k, eps).value());
    }
}

TEST_CASE("ceil_scaled") {
  // delta = 2^-3: ceil(n/8)
  DeltaExponent e{-3, Rational(2)};
  REQUIRE(e.exact() == -3);
  CHECK(ceil_scaled(Rational(1), e, 8) == 1);
  CHECK(ceil_scaled(Rational(1), e, 9) == 2);
  CHECK(ceil_scaled(Rational(1, 2), e, 17) == 2);
  CHECK(ceil_scaled(Rational(1), fox_sudakov_delta(5, Rational(1, 30)), 500) == 1);
}
