#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "ehpath/certificates.hpp"
#include "ehpath/graph.hpp"

namespace ehpath {

/// Outcome of a brute-force induced-subgraph query. The embedding, when
/// present, is in root ids of the queried graph.
struct PatternQueryResult {
  bool found = false;
  std::optional<PatternEmbedding> embedding;
  std::uint64_t nodes_explored = 0;
};

/// Largest pattern order accepted by contains_induced.
inline constexpr int kMaxPatternOrder = 10;
/// Largest k accepted by universality_check (2^C(5,2) = 1024 labeled graphs).
inline constexpr int kMaxUniversalityOrder = 5;

/// Backtracking search for an induced path on exactly k vertices. Paths are
/// grown from each start vertex in ascending id order, extending only with
/// neighbors of the last vertex that see no other path vertex.
PatternQueryResult find_induced_path(const Graph& g, int k);

/// Induced embedding of h into g; pattern vertices are mapped in index order
/// to host vertices in ascending id order.
PatternQueryResult contains_induced(const Graph& g, const Graph& h);
PatternQueryResult contains_induced(const Graph& g, const Graph& h, std::string name);

struct PkFree {};
/// PkFree, or the first certificate found (P_k is searched before co-P_k).
using FreenessResult = std::variant<PkFree, PatternEmbedding>;
FreenessResult is_pk_copk_free(const Graph& g, int k);

struct Universal {};
/// Universal, or the labeled k-graph with the smallest pair mask that does
/// not embed. Bit t of the mask is the t-th pair (i<j) in row-major order.
using UniversalityResult = std::variant<Universal, Graph>;
UniversalityResult universality_check(const Graph& g, int k);

/// Labeled graph on k vertices whose pair bits are given by `mask`.
Graph labeled_graph(int k, std::uint32_t mask);

}  // namespace ehpath
