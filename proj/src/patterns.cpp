#include "ehpath/patterns.hpp"

#include <string>

namespace ehpath {

namespace {

struct PathSearch {
  const Graph& g;
  int k;
  std::vector<Vertex> path;
  Bits blocked;  // closed neighborhoods of all path vertices except the last
  std::uint64_t nodes = 0;

  bool extend() {
    ++nodes;
    if (static_cast<int>(path.size()) == k) return true;
    const Vertex last = path.back();
    Bits candidates = g.neighbors(last) - blocked;
    for (Vertex v : path) candidates.reset(v);
    if (candidates.none()) return false;
    const Bits saved = blocked;
    blocked |= g.closed_neighbors(last);
    for (auto c = candidates.find_first(); c != Bits::npos; c = candidates.find_next(c)) {
      path.push_back(static_cast<Vertex>(c));
      if (extend()) return true;
      path.pop_back();
    }
    blocked = saved;
    return false;
  }
};

struct EmbedSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> h_degree;
  std::vector<int> g_degree;
  std::vector<Vertex> map;
  Bits used;
  std::uint64_t nodes = 0;

  bool extend() {
    ++nodes;
    const int i = static_cast<int>(map.size());
    if (i == h.order()) return true;
    const int h_rest = h.order() - 1;
    const int g_rest = g.order() - 1;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (used[v]) continue;
      // degree-sequence pruning: v needs enough neighbors and non-neighbors
      if (g_degree[v] < h_degree[i] || g_rest - g_degree[v] < h_rest - h_degree[i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = h.adjacent(i, j) == g.adjacent(v, map[j]);
      if (!ok) continue;
      map.push_back(v);
      used.set(v);
      if (extend()) return true;
      used.reset(v);
      map.pop_back();
    }
    return false;
  }
};

}  // namespace

PatternQueryResult find_induced_path(const Graph& g, int k) {
  if (k < 1) throw InputError("path length must be at least 1");
  PatternQueryResult result;
  if (k > g.order()) return result;
  PathSearch search{g, k, {}, Bits(g.order())};
  for (Vertex start = 0; start < g.order(); ++start) {
    search.path.assign(1, start);
    search.blocked.reset();
    if (search.extend()) {
      result.found = true;
      result.embedding = path_pattern(k, g.to_root(search.path));
      break;
    }
  }
  result.nodes_explored = search.nodes;
  return result;
}

PatternQueryResult contains_induced(const Graph& g, const Graph& h) {
  return contains_induced(g, h, "H" + std::to_string(h.order()));
}

PatternQueryResult contains_induced(const Graph& g, const Graph& h, std::string name) {
  if (h.order() > kMaxPatternOrder)
    throw InputError("pattern order " + std::to_string(h.order()) + " exceeds the brute-force limit of " +
                     std::to_string(kMaxPatternOrder));
  PatternQueryResult result;
  if (h.order() > g.order()) return result;
  EmbedSearch search{g, h, h.degree_sequence(), g.degree_sequence(), {}, Bits(g.order())};
  if (search.extend()) {
    result.found = true;
    result.embedding = PatternEmbedding{std::move(name), h, g.to_root(search.map)};
  }
  result.nodes_explored = search.nodes;
  return result;
}

FreenessResult is_pk_copk_free(const Graph& g, int k) {
  if (k < 2) throw InputError("forbidden path length must be at least 2");
  if (auto p = find_induced_path(g, k); p.found) return std::move(*p.embedding);
  if (auto q = find_induced_path(g.complement(), k); q.found) return antipath_pattern(k, std::move(q.embedding->map));
  return PkFree{};
}

Graph labeled_graph(int k, std::uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j, ++bit)
      if (mask >> bit & 1u) edges.emplace_back(i, j);
  return Graph::build(k, edges);
}

UniversalityResult universality_check(const Graph& g, int k) {
  if (k < 1 || k > kMaxUniversalityOrder)
    throw InputError("universality order must lie in [1, " + std::to_string(kMaxUniversalityOrder) + "]");
  const int pairs = k * (k - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    Graph h = labeled_graph(k, mask);
    if (!contains_induced(g, h).found) return h;
  }
  return Universal{};
}

}  // namespace ehpath
