#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ehpath/certificates.hpp"
#include "ehpath/graph.hpp"
#include "ehpath/rational.hpp"

namespace ehpath {

/// Union/join tree of a P4-free graph. Leaves carry local vertex ids of the
/// decomposed graph; children of a union are the components, children of a
/// join are the co-components.
struct CotreeNode {
  enum class Kind { leaf, disjoint_union, join };
  Kind kind = Kind::leaf;
  Vertex vertex = -1;
  std::vector<CotreeNode> children;

  std::size_t leaf_count() const;
};

/// A cotree, or an induced P4 (root ids) showing the graph is not a cograph.
using CographDecomposition = std::variant<CotreeNode, PatternEmbedding>;

CographDecomposition decompose_cograph(const Graph& g);

/// Maximum stable set and maximum clique of a cograph, local ids. Among
/// equal-size optima the lexicographically smallest sorted list is chosen.
struct AlphaOmega {
  VertexSet stable;
  VertexSet clique;
};

std::variant<AlphaOmega, PatternEmbedding> cograph_alpha_omega(const Graph& g);

/// Supplies empty-or-complete pairs on any graph it is handed. `min_side(n)`
/// is the side size the oracle promises on an n-vertex graph; returned ids
/// are root ids of the graph passed in.
struct BipartiteOracle {
  std::function<std::int64_t(std::int64_t)> min_side;
  std::function<BipartitePairWitness(const Graph&)> find;

  /// Oracle promising sides of at least min(ceil(c * n), floor(n / 2)).
  static BipartiteOracle linear(Rational c, std::function<BipartitePairWitness(const Graph&)> find);
};

/// Thrown when an oracle breaks its promise; carries the offending witness
/// (if any) in root ids.
class OracleFailure : public std::runtime_error {
 public:
  OracleFailure(const std::string& what, std::optional<BipartitePairWitness> w)
      : std::runtime_error(what), witness(std::move(w)) {}
  std::optional<BipartitePairWitness> witness;
};

struct P4FreeResult {
  VertexSet vertices;  // local ids of the input graph
  int depth = 0;       // shallowest leaf of the recursion
  int max_depth = 0;
};

/// Recursively asks the oracle for a pair (X, Y), recurses into both sides
/// and returns the union. A side is a leaf when the graph has one vertex or
/// the promised side is 0 or too large to fit twice; the leaf keeps its
/// smallest vertex.
P4FreeResult p4free_extract(const Graph& g, const BipartiteOracle& oracle);

/// Largest order the exhaustive pair search accepts.
inline constexpr int kExactPairLimit = 32;

/// Exhaustive search for an empty or complete pair with both sides exactly
/// `side`. X is the lexicographically first feasible side; empty is
/// preferred over complete for the same X. Root ids.
std::optional<BipartitePairWitness> exact_bipartite_pair(const Graph& g, int side);

/// Linear oracle over exact_bipartite_pair with sides min(ceil(c * n), floor(n / 2)).
BipartiteOracle exact_oracle(const Rational& c);

/// c' = log 2 / log(1/c), the exponent with c^{c'} = 1/2.
struct CoExponent {
  long double value = 0;
  std::optional<Rational> exact;  // set when 1/c is a power of two
  bool check_holds = false;       // c^{c'} >= 1/2
  bool check_exact = false;       // decided in rational-exponent form
};

CoExponent exponent_for(const Rational& c);
/// Same exponent given log2(1/c) > 0, for constants too small for a Rational.
long double exponent_from_log2(long double log2_inverse_c);

}  // namespace ehpath
