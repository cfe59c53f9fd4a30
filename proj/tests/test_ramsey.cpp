#include "doctest.h"

#include <cmath>

#include "ehpath/certificates.hpp"
#include "ehpath/generators.hpp"
#include "ehpath/ramsey.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ehpath;

namespace {

bool subset_is_p4free(const Graph& g, const VertexSet& s) {
  return !oracle::has_induced_p4(g.induced(s));
}

}  // namespace

TEST_CASE("p4free_extract on small examples") {
  auto k44 = generate({.family = Family::complete_bipartite, .n = 8, .a = 4});
  auto r = p4free_extract(k44, exact_oracle(Rational(1, 2)));
  CHECK(r.vertices.size() == 8);
  CHECK(subset_is_p4free(k44, r.vertices));

  auto one = Graph::build(1, {});
  auto r1 = p4free_extract(one, exact_oracle(Rational(1, 2)));
  CHECK(r1.vertices == VertexSet{0});
  CHECK(r1.depth == 0);

  auto p4 = path_graph(4);
  auto r4 = p4free_extract(p4, exact_oracle(Rational(1, 4)));
  CHECK(r4.vertices.size() == 2);
  CHECK(subset_is_p4free(p4, r4.vertices));
}

TEST_CASE("p4free_extract rejects a broken oracle") {
  auto g = Graph::build(4, {});
  // promises sides of 2 but hands back a non-empty, non-complete pair
  BipartiteOracle liar{[](std::int64_t n) { return n / 2; },
                       [](const Graph& h) {
                         auto ids = h.to_root(std::vector<Vertex>{0, 1, 2, 3});
                         return BipartitePairWitness{PairKind::complete, {ids[0], ids[1]}, {ids[2], ids[3]}};
                       }};
  CHECK_THROWS_AS(p4free_extract(g, liar), OracleFailure);
  BipartiteOracle stingy{[](std::int64_t n) { return n / 2; },
                         [](const Graph& h) {
                           auto ids = h.to_root(std::vector<Vertex>{0, 1});
                           return BipartitePairWitness{PairKind::empty, {ids[0]}, {ids[1]}};
                         }};
  CHECK_THROWS_AS(p4free_extract(g, stingy), OracleFailure);
  CHECK_THROWS(BipartiteOracle::linear(Rational(1), nullptr));
  CHECK_THROWS(BipartiteOracle::linear(Rational(0), nullptr));
}

TEST_CASE("p4free_extract size bound with an honest oracle") {
  auto check_bound = [](const Graph& g, const Rational& c) {
    auto r = p4free_extract(g, exact_oracle(c));
    CHECK(subset_is_p4free(g, r.vertices));
    CHECK(r.vertices.size() >= (std::size_t{1} << r.depth));
    const auto n = static_cast<long double>(g.order());
    CHECK(static_cast<long double>(r.vertices.size()) >= std::pow(n, exponent_for(c).value) / 2);
  };
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(5, s);
    check_bound(random_cograph(1 + static_cast<int>(rng.below(24)), rng, s % 2 == 1), Rational(1, 4));
    check_bound(random_cograph(1 << rng.below(5), rng, true), Rational(1, 2));
  }
  for (int a = 1; a < 12; ++a)
    check_bound(generate({.family = Family::complete_bipartite, .n = 2 * a + 1, .a = a}), Rational(1, 2));
}

TEST_CASE("half-size pairs need not exist in a cograph") {
  // 0 joined to (1 + (2 join 3)): no empty or complete pair with sides 2
  auto threshold = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}});
  CHECK_FALSE(oracle::has_bipartite_pair(threshold, 2));
  CHECK_THROWS_AS(p4free_extract(threshold, exact_oracle(Rational(1, 2))), OracleFailure);
  CHECK(p4free_extract(threshold, exact_oracle(Rational(1, 4))).vertices.size() == 2);
}

TEST_CASE("exact_bipartite_pair") {
  auto k44 = generate({.family = Family::complete_bipartite, .n = 8, .a = 4});
  auto w = exact_bipartite_pair(k44, 4);
  REQUIRE(w);
  CHECK(w->kind == PairKind::complete);
  CHECK(verify(k44, Witness{*w}));
  CHECK_FALSE(exact_bipartite_pair(fixture::cycle(5), 2));

  for (std::uint64_t s = 0; s < 80; ++s) {
    Rng rng(9, s);
    const int n = 2 + static_cast<int>(rng.below(8));
    auto g = gnp(n, Rational(1, 2), rng);
    for (int side = 1; 2 * side <= n; ++side) {
      auto found = exact_bipartite_pair(g, side);
      CHECK(found.has_value() == oracle::has_bipartite_pair(g, side));
      if (found) {
        CHECK(static_cast<int>(found->x.size()) == side);
        CHECK(static_cast<int>(found->y.size()) == side);
        CHECK(verify(g, Witness{*found}));
      }
    }
  }
}

TEST_CASE("cograph alpha and omega") {
  auto k33 = generate({.family = Family::complete_bipartite, .n = 6, .a = 3});
  auto ao = std::get<AlphaOmega>(cograph_alpha_omega(k33));
  CHECK(ao.stable == VertexSet{0, 1, 2});
  CHECK(ao.clique == VertexSet{0, 3});

  auto k5 = generate({.family = Family::complete, .n = 5});
  auto ao5 = std::get<AlphaOmega>(cograph_alpha_omega(k5));
  CHECK(ao5.stable == VertexSet{0});
  CHECK(ao5.clique.size() == 5);

  auto p4 = path_graph(4);
  auto obstruction = cograph_alpha_omega(p4);
  REQUIRE(std::holds_alternative<PatternEmbedding>(obstruction));
  CHECK(verify(p4, Witness{std::get<PatternEmbedding>(obstruction)}));
  CHECK(std::holds_alternative<PatternEmbedding>(decompose_cograph(fixture::cycle(5))));
}

TEST_CASE("alpha and omega agree with brute force and swap under complement") {
  for (std::uint64_t s = 0; s < 150; ++s) {
    Rng rng(13, s);
    const int n = 1 + static_cast<int>(rng.below(12));
    auto g = random_cograph(n, rng, s % 3 == 0);
    CHECK_FALSE(oracle::has_induced_p4(g));
    auto tree = decompose_cograph(g);
    REQUIRE(std::holds_alternative<CotreeNode>(tree));
    CHECK(std::get<CotreeNode>(tree).leaf_count() == static_cast<std::size_t>(n));

    auto ao = std::get<AlphaOmega>(cograph_alpha_omega(g));
    CHECK(static_cast<int>(ao.stable.size()) == oracle::max_homogeneous_exact(g, true));
    CHECK(static_cast<int>(ao.clique.size()) == oracle::max_homogeneous_exact(g, false));
    CHECK(edges_inside(g, ao.stable.ids()) == 0);
    CHECK(edges_inside(g, ao.clique.ids()) == pairs_of(static_cast<std::int64_t>(ao.clique.size())));
    CHECK(ao.stable.size() * ao.clique.size() >= static_cast<std::size_t>(n));

    auto co = std::get<AlphaOmega>(cograph_alpha_omega(g.complement()));
    CHECK(co.stable == ao.clique);
    CHECK(co.clique == ao.stable);
  }
}

TEST_CASE("exponent_for") {
  auto quarter = exponent_for(Rational(1, 4));
  REQUIRE(quarter.exact);
  CHECK(*quarter.exact == Rational(1, 2));
  CHECK(quarter.check_holds);
  CHECK(quarter.check_exact);

  auto half = exponent_for(Rational(1, 2));
  REQUIRE(half.exact);
  CHECK(*half.exact == Rational(1));

  auto third = exponent_for(Rational(1, 3));
  CHECK_FALSE(third.exact);
  CHECK(third.value == doctest::Approx(std::log(2.0) / std::log(3.0)));
  CHECK(third.check_holds);
  CHECK_FALSE(third.check_exact);

  CHECK(exponent_from_log2(2) == doctest::Approx(0.5));
  CHECK_THROWS(exponent_for(Rational(1)));
}
