#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ehpath/certificates.hpp"
#include "ehpath/graph.hpp"
#include "ehpath/rational.hpp"

namespace ehpath {

enum class HomogeneousStrategy { exact, greedy_peel, trivial };

/// Largest order the exact strategy accepts.
inline constexpr int kExactStrategyLimit = 20;

HomogeneousStrategy parse_strategy(const std::string& name);
const char* to_string(HomogeneousStrategy s);

/// Search for an epsilon-stable set or epsilon-clique with at least `target`
/// vertices. Witness ids are root ids.
///
///  - exact: subsets by decreasing size; within a size, every subset is tried
///    as a stable set (lexicographic order) before any as a clique; complete, so nullopt means neither kind exists.
///  - greedy_peel: repeatedly drop a maximum-degree vertex (smallest id on
///    ties) until the density is at most epsilon, on g and on its complement;
///    the larger result wins (stable on ties).
///  - trivial: vertex 0 as a stable set.
///
/// `only` restricts the search to one kind.
std::optional<HomogeneousSetWitness> find_epsilon_homogeneous(const Graph& g, const Rational& epsilon, int target,
                                                              HomogeneousStrategy strategy,
                                                              std::optional<HomogeneousKind> only = std::nullopt);

/// Removes, in one pass, every vertex whose degree inside s exceeds
/// 2 * epsilon * |s|. The threshold uses the size of the input set.
VertexSet prune_high_degree(const Graph& g, const VertexSet& s, const Rational& epsilon);

/// delta = 2^exponent with exponent = -15 k (log2(1/epsilon))^2.
///
/// The exponent is kept symbolic: `factor` = -15k and `log_argument` =
/// 1/epsilon. It is an integer exactly when 1/epsilon is a power of two.
struct DeltaExponent {
  std::int64_t factor = 0;
  Rational log_argument{1};

  /// Exact integer exponent, when 1/epsilon = 2^m.
  std::optional<std::int64_t> exact() const;
  long double value() const;
  /// "-75" or "-75*(log2(30))^2".
  std::string to_string() const;
};

DeltaExponent fox_sudakov_delta(int k, const Rational& epsilon);

/// Ceiling of r * 2^e * n for n >= 1. Exact when e is an integer exponent;
/// otherwise decided on log2 values, which is safe as long as the product is
/// not within rounding distance of an integer boundary.
std::int64_t ceil_scaled(const Rational& r, const DeltaExponent& e, std::int64_t n);

}  // namespace ehpath
