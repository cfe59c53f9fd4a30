#include "ehpath/extractor.hpp"

#include <cassert>
#include <string>

namespace ehpath {

namespace {

VertexSet merge(std::span<const VertexSet> parts) {
  std::vector<Vertex> ids;
  for (const auto& p : parts) ids.insert(ids.end(), p.begin(), p.end());
  return VertexSet::from(std::move(ids));
}

void check_preconditions(const Graph& g, Vertex start, const ExtractorParams& params) {
  if (params.side_target < 1) throw InputError("side target T must be at least 1");
  if (params.degree_bound < 1) throw InputError("degree bound D must be at least 1");
  g.check_vertex(start);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.closed_degree(v) > params.degree_bound)
      throw InputError("vertex " + std::to_string(g.root_id(v)) + " has closed degree " +
                       std::to_string(g.closed_degree(v)) + " > D=" + std::to_string(params.degree_bound));
  if (!g.connected()) throw InputError("path_or_empty_bipartite needs a connected graph");
}

BipartitePairWitness empty_pair(const Graph& g, const VertexSet& a, const VertexSet& b) {
  return {PairKind::empty, g.to_root(a), g.to_root(b)};
}

}  // namespace

int guaranteed_path_length(int n, const ExtractorParams& params) {
  const int den = 2 * (params.side_target + params.degree_bound);
  return (n + den - 1) / den;
}

std::optional<std::pair<VertexSet, VertexSet>> pack_components(std::span<const VertexSet> comps, int target) {
  std::size_t taken = 0;
  std::size_t count = 0;
  while (count < comps.size() && taken < static_cast<std::size_t>(target)) taken += comps[count++].size();
  if (taken < static_cast<std::size_t>(target) || count == comps.size()) return std::nullopt;
  auto a = merge(comps.subspan(0, count));
  auto b = merge(comps.subspan(count));
  if (b.size() < static_cast<std::size_t>(target)) return std::nullopt;
  return std::pair{std::move(a), std::move(b)};
}

std::pair<VertexSet, VertexSet> split_small_components(std::span<const VertexSet> comps, int target,
                                                       int universe_size) {
  if (target < 1) throw InputError("split target must be at least 1");
  std::size_t total = 0;
  for (const auto& c : comps) total += c.size();
  if (static_cast<int>(total) != universe_size)
    throw InputError("component sizes sum to " + std::to_string(total) + ", expected " + std::to_string(universe_size));
  if (universe_size < 3 * target)
    throw InputError("cannot split: total " + std::to_string(universe_size) + " < 3T=" + std::to_string(3 * target));
  for (const auto& c : comps)
    if (static_cast<int>(c.size()) > universe_size - target)
      throw InputError("cannot split: a component of size " + std::to_string(c.size()) + " exceeds total - T");
  auto split = pack_components(comps, target);
  if (!split) throw InputError("cannot split: packing leaves fewer than T vertices on the second side");
  return std::move(*split);
}

ExtractorResult path_or_empty_bipartite(const Graph& g, Vertex start, const ExtractorParams& params) {
  check_preconditions(g, start, params);
  const int t = params.side_target;
  const int d = params.degree_bound;

  ExtractorResult result;
  result.guaranteed_path = guaranteed_path_length(g.order(), params);

  std::vector<Vertex> prefix;  // root ids of the path built so far
  Graph h = g;
  Vertex x = start;
  while (true) {
    const int n = h.order();
    if (3 * t + d >= n) {
      prefix.push_back(h.root_id(x));
      if (n > 1) prefix.push_back(h.root_id(static_cast<Vertex>(h.neighbors(x).find_first())));
      result.witness = InducedPathWitness{std::move(prefix)};
      result.final_case = ExtractorCase::base;
      return result;
    }

    Bits outside = ~h.closed_neighbors(x);
    auto comps = h.components_within(outside);  // nonempty: |U| >= n - D > 3T
    const int c1 = static_cast<int>(comps.front().size());
    const int u = static_cast<int>(outside.count());

    if (c1 >= n - d - t) {
      const Bits c1_bits = comps.front().to_bits(n);
      Vertex y = -1;
      const Bits& nx = h.neighbors(x);
      for (auto v = nx.find_first(); v != Bits::npos; v = nx.find_next(v)) {
        if (h.neighbors(static_cast<Vertex>(v)).intersects(c1_bits)) {
          y = static_cast<Vertex>(v);
          break;
        }
      }
      assert(y >= 0 && "a connected graph links C1 back to N(x)");
      std::vector<Vertex> next_ids = comps.front().ids();
      next_ids.push_back(y);
      const auto next_set = VertexSet::from(std::move(next_ids));
      Graph next = h.induced(next_set);
      assert(next.connected());
      assert(next.max_closed_degree() <= d);
      prefix.push_back(h.root_id(x));
      Vertex y_local = -1;
      for (std::size_t i = 0; i < next_set.size(); ++i)
        if (next_set[i] == y) y_local = static_cast<Vertex>(i);
      h = std::move(next);
      x = y_local;
      ++result.depth;
      continue;
    }

    if (c1 >= t) {
      Bits rest = outside;
      rest -= comps.front().to_bits(n);
      result.witness = empty_pair(h, comps.front(), VertexSet::from_bits(rest));
      result.final_case = ExtractorCase::large_component;
      return result;
    }

    auto [a, b] = split_small_components(comps, t, u);
    result.witness = empty_pair(h, a, b);
    result.final_case = ExtractorCase::small_components;
    return result;
  }
}

const char* to_string(ExtractorCase c) {
  switch (c) {
    case ExtractorCase::base: return "base";
    case ExtractorCase::large_component: return "large-component";
    case ExtractorCase::small_components: return "small-components";
  }
  return "?";
}

}  // namespace ehpath
