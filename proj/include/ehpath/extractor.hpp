#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>

#include "ehpath/certificates.hpp"
#include "ehpath/graph.hpp"

namespace ehpath {

/// Absolute thresholds for the path-or-bipartite dichotomy: `side_target`
/// is the minimum side of an empty pair (c.n in relative form) and
/// `degree_bound` caps every closed degree (eps.n in relative form). Both
/// stay fixed through the descent.
struct ExtractorParams {
  int side_target = 1;
  int degree_bound = 1;
};

enum class ExtractorCase {
  base,              // 3T + D >= n: a P1 or P2 from the start vertex
  large_component,   // T <= |C1| < n - D - T: (C1, U \ C1)
  small_components,  // |C1| < T: greedy packing of the components of U
};

struct ExtractorResult {
  std::variant<InducedPathWitness, BipartitePairWitness> witness;
  ExtractorCase final_case = ExtractorCase::base;
  int depth = 0;  // descents into G[{y} u C1]
  int guaranteed_path = 1;  // ceil(n / (2(T+D))) for the input order n

  bool is_path() const { return std::holds_alternative<InducedPathWitness>(witness); }
};

/// ceil(n / (2(T + D))).
int guaranteed_path_length(int n, const ExtractorParams& params);

/// Either an induced path starting at `start` with at least
/// guaranteed_path_length(n) vertices, or an empty pair with both sides at
/// least T. `g` must be connected and every closed degree must be <= D.
/// Ids in the returned witness are root ids.
ExtractorResult path_or_empty_bipartite(const Graph& g, Vertex start, const ExtractorParams& params);

/// Components in order, A is the shortest prefix reaching `target`, B the
/// rest; nullopt if B ends up below target.
std::optional<std::pair<VertexSet, VertexSet>> pack_components(std::span<const VertexSet> comps, int target);

/// Splits components whose sizes sum to universe_size >= 3T into A, B with
/// |A| >= T and |B| >= T. Throws InputError when no such split exists.
std::pair<VertexSet, VertexSet> split_small_components(std::span<const VertexSet> comps, int target,
                                                       int universe_size);

const char* to_string(ExtractorCase c);

}  // namespace ehpath
