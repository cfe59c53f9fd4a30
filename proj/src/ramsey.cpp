#include "ehpath/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "ehpath/patterns.hpp"

namespace ehpath {

std::size_t CotreeNode::leaf_count() const {
  if (kind == Kind::leaf) return 1;
  std::size_t total = 0;
  for (const auto& c : children) total += c.leaf_count();
  return total;
}

namespace {

CographDecomposition decompose_within(const Graph& g, const Bits& mask) {
  if (mask.count() == 1) return CotreeNode{CotreeNode::Kind::leaf, static_cast<Vertex>(mask.find_first()), {}};

  auto parts = g.components_within(mask);
  auto kind = CotreeNode::Kind::disjoint_union;
  if (parts.size() == 1) {
    parts = g.co_components_within(mask);
    kind = CotreeNode::Kind::join;
  }
  if (parts.size() == 1) {
    // G and its complement are both connected on >= 2 vertices: an induced P4 exists
    auto p4 = find_induced_path(g.induced(VertexSet::from_bits(mask)), 4);
    if (!p4.found) throw std::logic_error("prime subgraph without an induced P4");
    return std::move(*p4.embedding);
  }

  CotreeNode node{kind, -1, {}};
  node.children.reserve(parts.size());
  for (const auto& part : parts) {
    auto child = decompose_within(g, part.to_bits(g.order()));
    if (auto* obstruction = std::get_if<PatternEmbedding>(&child)) return std::move(*obstruction);
    node.children.push_back(std::move(std::get<CotreeNode>(child)));
  }
  return node;
}

using Ids = std::vector<Vertex>;

// Larger wins; among equal sizes the lexicographically smaller sorted list.
bool better(const Ids& a, const Ids& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; }

Ids merged(const std::vector<Ids>& parts) {
  Ids out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Ids, Ids> alpha_omega(const CotreeNode& node) {
  if (node.kind == CotreeNode::Kind::leaf) return {{node.vertex}, {node.vertex}};
  std::vector<Ids> stables, cliques;
  for (const auto& child : node.children) {
    auto [s, c] = alpha_omega(child);
    stables.push_back(std::move(s));
    cliques.push_back(std::move(c));
  }
  auto pick = [](std::vector<Ids>& options) {
    return *std::min_element(options.begin(), options.end(), better);
  };
  if (node.kind == CotreeNode::Kind::disjoint_union) return {merged(stables), pick(cliques)};
  return {pick(stables), merged(cliques)};
}

}  // namespace

CographDecomposition decompose_cograph(const Graph& g) { return decompose_within(g, g.all()); }

std::variant<AlphaOmega, PatternEmbedding> cograph_alpha_omega(const Graph& g) {
  auto tree = decompose_cograph(g);
  if (auto* obstruction = std::get_if<PatternEmbedding>(&tree)) return std::move(*obstruction);
  auto [s, c] = alpha_omega(std::get<CotreeNode>(tree));
  return AlphaOmega{VertexSet::from(std::move(s)), VertexSet::from(std::move(c))};
}

BipartiteOracle BipartiteOracle::linear(Rational c, std::function<BipartitePairWitness(const Graph&)> find) {
  if (c <= 0 || c >= 1) throw InputError("oracle constant c must lie in (0,1), got " + to_string(c));
  return {[c](std::int64_t n) { return std::min(ceil_mul(c, n), n / 2); }, std::move(find)};
}

namespace {

struct Extracted {
  std::vector<Vertex> root_ids;
  int depth = 0;
  int max_depth = 0;
};

Extracted extract(const Graph& h, const BipartiteOracle& oracle) {
  const std::int64_t n = h.order();
  const std::int64_t side = oracle.min_side(n);
  if (n == 1 || side < 1 || 2 * side > n) return {{h.root_id(0)}, 0, 0};

  BipartitePairWitness w = oracle.find(h);
  std::vector<Vertex> x_local, y_local;
  try {
    x_local = h.to_local(w.x);
    y_local = h.to_local(w.y);
  } catch (const InputError& e) {
    throw OracleFailure(std::string("oracle returned foreign vertices: ") + e.what(), w);
  }
  const BipartitePairWitness local{w.kind, x_local, y_local};
  if (auto verdict = verify_bipartite_pair(h, local); !verdict)
    throw OracleFailure("oracle returned an invalid pair: " + verdict.reason, w);
  if (static_cast<std::int64_t>(w.min_side()) < side)
    throw OracleFailure("oracle returned a side smaller than the promised " + std::to_string(side), w);

  auto left = extract(h.induced(VertexSet::from(std::move(x_local))), oracle);
  auto right = extract(h.induced(VertexSet::from(std::move(y_local))), oracle);
  Extracted out;
  out.root_ids = std::move(left.root_ids);
  out.root_ids.insert(out.root_ids.end(), right.root_ids.begin(), right.root_ids.end());
  out.depth = 1 + std::min(left.depth, right.depth);
  out.max_depth = 1 + std::max(left.max_depth, right.max_depth);
  return out;
}

}  // namespace

P4FreeResult p4free_extract(const Graph& g, const BipartiteOracle& oracle) {
  auto found = extract(g, oracle);
  return {VertexSet::from(g.to_local(found.root_ids)), found.depth, found.max_depth};
}

namespace {

struct PairSearch {
  const Graph& g;
  int side;
  std::vector<Vertex> x;

  std::optional<BipartitePairWitness> run(Vertex from, const Bits& non_adjacent, const Bits& adjacent) {
    if (static_cast<int>(x.size()) == side) {
      auto take = [this](const Bits& cand, PairKind kind) {
        std::vector<Vertex> y;
        for (auto v = cand.find_first(); v != Bits::npos && static_cast<int>(y.size()) < side; v = cand.find_next(v))
          y.push_back(static_cast<Vertex>(v));
        return BipartitePairWitness{kind, g.to_root(x), g.to_root(y)};
      };
      if (static_cast<int>(non_adjacent.count()) >= side) return take(non_adjacent, PairKind::empty);
      return take(adjacent, PairKind::complete);
    }
    const int needed = side - static_cast<int>(x.size());
    for (Vertex v = from; v + needed <= g.order(); ++v) {
      Bits ne = non_adjacent - g.closed_neighbors(v);
      Bits co = adjacent & g.neighbors(v);
      const bool ne_ok = static_cast<int>(ne.count()) >= side;
      const bool co_ok = static_cast<int>(co.count()) >= side;
      if (!ne_ok && !co_ok) continue;
      x.push_back(v);
      auto found = run(v + 1, ne_ok ? ne : Bits(g.order()), co_ok ? co : Bits(g.order()));
      if (found) return found;
      x.pop_back();
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<BipartitePairWitness> exact_bipartite_pair(const Graph& g, int side) {
  if (g.order() > kExactPairLimit)
    throw InputError("exact pair search is limited to n <= " + std::to_string(kExactPairLimit));
  if (side < 1) throw InputError("pair side must be at least 1");
  if (2 * side > g.order()) return std::nullopt;
  PairSearch search{g, side, {}};
  Bits everyone = g.all();
  return search.run(0, everyone, everyone);
}

BipartiteOracle exact_oracle(const Rational& c) {
  auto oracle = BipartiteOracle::linear(c, nullptr);
  oracle.find = [side_of = oracle.min_side](const Graph& h) {
    const auto side = static_cast<int>(side_of(h.order()));
    auto found = exact_bipartite_pair(h, side);
    if (!found) throw OracleFailure("no empty or complete pair with sides " + std::to_string(side), std::nullopt);
    return std::move(*found);
  };
  return oracle;
}

CoExponent exponent_for(const Rational& c) {
  if (c <= 0 || c >= 1) throw InputError("c must lie in (0,1), got " + to_string(c));
  const Rational inverse = 1 / c;
  CoExponent out;
  const auto num = static_cast<std::uint64_t>(inverse.numerator());
  if (inverse.denominator() == 1 && std::has_single_bit(num)) {
    // 1/c = 2^m: c' = 1/m and c^{1/m} = 1/2 exactly
    const auto m = static_cast<std::int64_t>(std::countr_zero(num));
    out.exact = Rational(1, m);
    out.value = 1.0L / static_cast<long double>(m);
    out.check_holds = true;
    out.check_exact = true;
    return out;
  }
  const long double lg = std::log2(static_cast<long double>(inverse.numerator())) -
                         std::log2(static_cast<long double>(inverse.denominator()));
  out.value = exponent_from_log2(lg);
  // c^{c'} = 2^{-c' * log2(1/c)}; equals 1/2 up to rounding
  out.check_holds = std::exp2(-out.value * lg) >= 0.5L - 1e-15L;
  return out;
}

long double exponent_from_log2(long double log2_inverse_c) {
  if (!(log2_inverse_c > 0)) throw InputError("log2(1/c) must be positive");
  return 1.0L / log2_inverse_c;
}

}  // namespace ehpath
