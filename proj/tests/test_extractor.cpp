#include "doctest.h"

#include <string>

#include "ehpath/certificates.hpp"
#include "ehpath/extractor.hpp"
#include "ehpath/generators.hpp"
#include "fixtures.hpp"

using namespace ehpath;

namespace {

const InducedPathWitness& path_of(const ExtractorResult& r) { return std::get<InducedPathWitness>(r.witness); }
const BipartitePairWitness& pair_of(const ExtractorResult& r) { return std::get<BipartitePairWitness>(r.witness); }

}  // namespace

TEST_CASE("descent through the large component on P7") {
  auto g = path_graph(7);
  auto r = path_or_empty_bipartite(g, 0, {1, 3});
  REQUIRE(r.is_path());
  CHECK(path_of(r).vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(r.depth == 1);
  CHECK(r.final_case == ExtractorCase::base);
  CHECK(r.guaranteed_path == 1);
  CHECK(verify(g, Witness{path_of(r)}));
}

TEST_CASE("closed-degree precondition") {
  // two triangles joined by the edge 2-3: vertices 2 and 3 have closed degree 4
  auto g = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  try {
    path_or_empty_bipartite(g, 0, {1, 3});
    FAIL("expected rejection");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("vertex 2") != std::string::npos);
  }
  auto r = path_or_empty_bipartite(g, 0, {1, 4});
  REQUIRE(r.is_path());
  CHECK(r.final_case == ExtractorCase::base);
  CHECK(path_of(r).vertices == std::vector<Vertex>{0, 1});

  // friendship graph F3: hub 0 has closed degree 7
  auto f3 = generate({.family = Family::friendship, .n = 7});
  try {
    path_or_empty_bipartite(f3, 1, {1, 3});
    FAIL("expected rejection");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("vertex 0") != std::string::npos);
  }
}

TEST_CASE("middle case returns the first component against the rest") {
  auto g = fixture::spider(3, 3);
  auto r = path_or_empty_bipartite(g, 0, {1, 4});
  REQUIRE_FALSE(r.is_path());
  CHECK(r.final_case == ExtractorCase::large_component);
  const auto& w = pair_of(r);
  CHECK(w.kind == PairKind::empty);
  CHECK(w.x == std::vector<Vertex>{2, 3});
  CHECK(w.y == std::vector<Vertex>{5, 6, 8, 9});
  CHECK(verify(g, Witness{w}));
}

TEST_CASE("small components are packed greedily") {
  auto g = fixture::spider(7, 2);
  auto r = path_or_empty_bipartite(g, 0, {2, 8});
  REQUIRE_FALSE(r.is_path());
  CHECK(r.final_case == ExtractorCase::small_components);
  const auto& w = pair_of(r);
  CHECK(w.x == std::vector<Vertex>{2, 4});
  CHECK(w.y == std::vector<Vertex>{6, 8, 10, 12, 14});
  CHECK(verify(g, Witness{w}));
}

TEST_CASE("single vertex and argument errors") {
  auto g = Graph::build(1, {});
  auto r = path_or_empty_bipartite(g, 0, {1, 1});
  REQUIRE(r.is_path());
  CHECK(path_of(r).vertices == std::vector<Vertex>{0});

  auto p3 = path_graph(3);
  CHECK_THROWS_AS(path_or_empty_bipartite(p3, 0, {0, 3}), InputError);
  CHECK_THROWS_AS(path_or_empty_bipartite(p3, 0, {1, 0}), InputError);
  CHECK_THROWS_AS(path_or_empty_bipartite(p3, 5, {1, 3}), InputError);
  CHECK_THROWS_AS(path_or_empty_bipartite(Graph::build(4, {{0, 1}, {2, 3}}), 0, {1, 3}), InputError);
}

TEST_CASE("split_small_components") {
  std::vector<VertexSet> three_pairs{{0, 1}, {2, 3}, {4, 5}};
  auto [a, b] = split_small_components(three_pairs, 2, 6);
  CHECK(a == VertexSet{0, 1});
  CHECK(b == VertexSet{2, 3, 4, 5});

  std::vector<VertexSet> singles{{0}, {1}, {2}};
  auto [a1, b1] = split_small_components(singles, 1, 3);
  CHECK(a1 == VertexSet{0});
  CHECK(b1 == VertexSet{1, 2});

  std::vector<VertexSet> one{{0, 1, 2}};
  CHECK_THROWS_AS(split_small_components(one, 2, 3), InputError);
  CHECK_THROWS_AS(split_small_components(three_pairs, 2, 7), InputError);
  CHECK_THROWS_AS(split_small_components(singles, 2, 3), InputError);
}

TEST_CASE("pack_components") {
  std::vector<VertexSet> comps{{0, 1, 2}, {3}, {4}};
  auto packed = pack_components(comps, 2);
  REQUIRE(packed);
  CHECK(packed->first == VertexSet{0, 1, 2});
  CHECK(packed->second == VertexSet{3, 4});
  CHECK_FALSE(pack_components(comps, 3));
}

TEST_CASE("dichotomy holds on random connected graphs") {
  for (std::uint64_t s = 0; s < 150; ++s) {
    Rng rng(77, s);
    const int n = 1 + static_cast<int>(rng.below(40));
    auto g = fixture::random_connected(n, Rational(static_cast<int>(rng.below(4)), 40), rng);
    const ExtractorParams params{1 + static_cast<int>(rng.below(5)),
                                 g.max_closed_degree() + static_cast<int>(rng.below(3))};
    const Vertex start = static_cast<Vertex>(rng.below(n));
    auto r = path_or_empty_bipartite(g, start, params);
    CHECK(r.guaranteed_path == guaranteed_path_length(n, params));
    if (r.is_path()) {
      const auto& p = path_of(r);
      CHECK(p.start() == start);
      CHECK(static_cast<int>(p.length()) >= r.guaranteed_path);
      CHECK(verify(g, Witness{p}));
    } else {
      const auto& w = pair_of(r);
      CHECK(w.kind == PairKind::empty);
      CHECK(static_cast<int>(w.min_side()) >= params.side_target);
      CHECK(verify(g, Witness{w}));
    }
    // deterministic
    auto again = path_or_empty_bipartite(g, start, params);
    CHECK(again.witness == r.witness);
  }
}
