#include "ehpath/certificates.hpp"

#include <string>
#include <unordered_set>

namespace ehpath {

namespace {

std::string id(Vertex v) { return std::to_string(v); }

Verdict check_range(const Graph& g, std::span<const Vertex> ids, const char* what) {
  for (Vertex v : ids)
    if (v < 0 || v >= g.order())
      return Verdict::reject(std::string("range: ") + what + " vertex " + id(v) + " not in graph of order " +
                             std::to_string(g.order()));
  return {};
}

Verdict check_distinct(std::span<const Vertex> ids, const char* what) {
  std::unordered_set<Vertex> seen;
  for (Vertex v : ids)
    if (!seen.insert(v).second) return Verdict::reject(std::string("distinctness: ") + what + " repeats vertex " + id(v));
  return {};
}

}  // namespace

std::int64_t pairs_of(std::int64_t s) { return s * (s - 1) / 2; }

std::int64_t edges_inside(const Graph& g, std::span<const Vertex> vertices) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) ++count;
  return count;
}

Verdict verify_induced_path(const Graph& g, const InducedPathWitness& w) {
  const auto& p = w.vertices;
  if (p.empty()) return Verdict::reject("range: path has no vertices");
  if (auto r = check_range(g, p, "path"); !r) return r;
  if (auto r = check_distinct(p, "path"); !r) return r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const bool edge = g.adjacent(p[i], p[j]);
      if (j == i + 1 && !edge)
        return Verdict::reject("adjacency: consecutive vertices " + id(p[i]) + " and " + id(p[j]) + " are not adjacent");
      if (j > i + 1 && edge)
        return Verdict::reject("adjacency: chord between non-consecutive vertices " + id(p[i]) + " and " + id(p[j]));
    }
  }
  return {true, {}, p.size(), 0};
}

Verdict verify_bipartite_pair(const Graph& g, const BipartitePairWitness& w) {
  if (w.x.empty() || w.y.empty()) return Verdict::reject("range: bipartite side is empty");
  if (auto r = check_range(g, w.x, "X"); !r) return r;
  if (auto r = check_range(g, w.y, "Y"); !r) return r;
  if (auto r = check_distinct(w.x, "X"); !r) return r;
  if (auto r = check_distinct(w.y, "Y"); !r) return r;
  std::unordered_set<Vertex> xs(w.x.begin(), w.x.end());
  for (Vertex v : w.y)
    if (xs.count(v)) return Verdict::reject("distinctness: vertex " + id(v) + " lies in both X and Y");
  const bool want = w.kind == PairKind::complete;
  for (Vertex a : w.x) {
    for (Vertex b : w.y) {
      if (g.adjacent(a, b) != want)
        return Verdict::reject(std::string("adjacency: cross pair ") + id(a) + "-" + id(b) +
                               (want ? " is missing in a complete pair" : " is an edge in an empty pair"));
    }
  }
  return {true, {}, w.x.size(), w.y.size()};
}

Verdict verify_homogeneous(const Graph& g, const HomogeneousSetWitness& w) {
  if (w.vertices.empty()) return Verdict::reject("range: homogeneous set is empty");
  if (w.epsilon < 0 || w.epsilon > 1) return Verdict::reject("range: epsilon " + to_string(w.epsilon) + " outside [0,1]");
  if (auto r = check_range(g, w.vertices, "set"); !r) return r;
  if (auto r = check_distinct(w.vertices, "set"); !r) return r;
  const auto s = static_cast<std::int64_t>(w.vertices.size());
  const auto edges = edges_inside(g, w.vertices);
  if (edges != w.edge_count)
    return Verdict::reject("count: claimed edge_count " + std::to_string(w.edge_count) + " but the set spans " +
                           std::to_string(edges));
  const auto pairs = pairs_of(s);
  const auto bad = w.kind == HomogeneousKind::stable ? edges : pairs - edges;
  // bad <= eps * pairs, cross-multiplied
  if (bad * w.epsilon.denominator() > w.epsilon.numerator() * pairs)
    return Verdict::reject("count: " + std::to_string(bad) +
                           (w.kind == HomogeneousKind::stable ? " edges" : " missing edges") + " exceed " +
                           to_string(w.epsilon) + " * " + std::to_string(pairs));
  return {true, {}, w.vertices.size(), 0};
}

Verdict verify_embedding(const Graph& g, const PatternEmbedding& w) {
  const auto k = static_cast<std::size_t>(w.pattern.order());
  if (w.map.size() != k)
    return Verdict::reject("range: map has " + std::to_string(w.map.size()) + " entries for a pattern of order " +
                           std::to_string(k));
  if (auto r = check_range(g, w.map, "map"); !r) return r;
  if (auto r = check_distinct(w.map, "map"); !r) return r;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (w.pattern.adjacent(i, j) != g.adjacent(w.map[i], w.map[j]))
        return Verdict::reject("adjacency: pattern pair " + std::to_string(i) + "-" + std::to_string(j) +
                               " not preserved by host pair " + id(w.map[i]) + "-" + id(w.map[j]));
  return {true, {}, k, 0};
}

Verdict verify(const Graph& g, const Witness& w) {
  return std::visit(
      [&g](const auto& x) -> Verdict {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, InducedPathWitness>) return verify_induced_path(g, x);
        else if constexpr (std::is_same_v<T, BipartitePairWitness>) return verify_bipartite_pair(g, x);
        else if constexpr (std::is_same_v<T, HomogeneousSetWitness>) return verify_homogeneous(g, x);
        else return verify_embedding(g, x);
      },
      w);
}

Graph path_graph(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(k, edges);
}

PatternEmbedding path_pattern(int k, std::vector<Vertex> map) {
  return {"P" + std::to_string(k), path_graph(k), std::move(map)};
}

PatternEmbedding antipath_pattern(int k, std::vector<Vertex> map) {
  return {"co-P" + std::to_string(k), path_graph(k).complement(), std::move(map)};
}

const char* to_string(PairKind kind) { return kind == PairKind::empty ? "empty" : "complete"; }
const char* to_string(HomogeneousKind kind) { return kind == HomogeneousKind::stable ? "stable" : "clique"; }
PairKind flip(PairKind kind) { return kind == PairKind::empty ? PairKind::complete : PairKind::empty; }

}  // namespace ehpath
