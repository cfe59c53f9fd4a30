#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ehpath/graph.hpp"
#include "ehpath/rational.hpp"

namespace ehpath {

// Witnesses always carry root-graph vertex ids. Producers translate through
// Graph::to_root before returning one.

/// Induced path; vertices in path order, the first one is the start.
struct InducedPathWitness {
  std::vector<Vertex> vertices;

  Vertex start() const { return vertices.front(); }
  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const InducedPathWitness&, const InducedPathWitness&) = default;
};

enum class PairKind { empty, complete };

/// Disjoint X, Y with all cross pairs adjacent (complete) or none (empty).
/// Nothing is required inside X or inside Y.
struct BipartitePairWitness {
  PairKind kind = PairKind::empty;
  std::vector<Vertex> x;
  std::vector<Vertex> y;

  std::size_t min_side() const { return std::min(x.size(), y.size()); }
  friend bool operator==(const BipartitePairWitness&, const BipartitePairWitness&) = default;
};

enum class HomogeneousKind { stable, clique };

/// epsilon-stable set (at most eps * C(|S|,2) edges) or epsilon-clique (at
/// most that many missing edges). `edge_count` is the number of edges
/// inside S as claimed by the producer.
struct HomogeneousSetWitness {
  HomogeneousKind kind = HomogeneousKind::stable;
  std::vector<Vertex> vertices;
  Rational epsilon{0};
  std::int64_t edge_count = 0;

  friend bool operator==(const HomogeneousSetWitness&, const HomogeneousSetWitness&) = default;
};

/// Induced embedding of a small named pattern: `map[i]` is the host vertex
/// playing pattern vertex i.
struct PatternEmbedding {
  std::string name;
  Graph pattern;
  std::vector<Vertex> map;

  friend bool operator==(const PatternEmbedding&, const PatternEmbedding&) = default;
};

using Witness = std::variant<InducedPathWitness, BipartitePairWitness, HomogeneousSetWitness, PatternEmbedding>;

struct Verdict {
  bool accepted = true;
  std::string reason;  // first violated condition; empty when accepted
  std::size_t size_a = 0;  // path length, |X|, |S| or pattern order
  std::size_t size_b = 0;  // |Y| for bipartite pairs

  explicit operator bool() const { return accepted; }
  static Verdict reject(std::string why) { return {false, std::move(why)}; }
};

// Checks run in a fixed order: range, distinctness, adjacency, count.
Verdict verify_induced_path(const Graph& g, const InducedPathWitness& w);
Verdict verify_bipartite_pair(const Graph& g, const BipartitePairWitness& w);
Verdict verify_homogeneous(const Graph& g, const HomogeneousSetWitness& w);
Verdict verify_embedding(const Graph& g, const PatternEmbedding& w);
Verdict verify(const Graph& g, const Witness& w);

std::int64_t pairs_of(std::int64_t s);  // C(s, 2)
std::int64_t edges_inside(const Graph& g, std::span<const Vertex> vertices);

Graph path_graph(int k);
PatternEmbedding path_pattern(int k, std::vector<Vertex> map);
PatternEmbedding antipath_pattern(int k, std::vector<Vertex> map);

const char* to_string(PairKind kind);
const char* to_string(HomogeneousKind kind);
PairKind flip(PairKind kind);

}  // namespace ehpath
