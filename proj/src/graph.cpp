#include "ehpath/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace ehpath {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(from(std::vector<Vertex>(ids))) {}

VertexSet VertexSet::from(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw InputError("vertex set contains a duplicate id");
  if (!ids.empty() && ids.front() < 0) throw InputError("vertex set contains a negative id");
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

VertexSet VertexSet::from_bits(const Bits& bits) {
  VertexSet s;
  s.ids_.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
    s.ids_.push_back(static_cast<Vertex>(i));
  return s;
}

VertexSet VertexSet::range(Vertex n) {
  VertexSet s;
  s.ids_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) s.ids_[v] = v;
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

Bits VertexSet::to_bits(std::size_t n) const {
  Bits bits(n);
  for (Vertex v : ids_) {
    if (static_cast<std::size_t>(v) >= n)
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    bits.set(v);
  }
  return bits;
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  Graph g;
  g.adj_.assign(n, Bits(n));
  g.origin_.resize(n);
  for (int v = 0; v < n; ++v) g.origin_[v] = v;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                       std::to_string(n));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  return g;
}

Graph Graph::from_rows(std::vector<Bits> rows) {
  const auto n = rows.size();
  if (n < 1) throw InputError("graph needs at least one vertex");
  for (std::size_t u = 0; u < n; ++u) {
    if (rows[u].size() != n) throw InputError("adjacency row has wrong width");
    if (rows[u][u]) throw InputError("self-loop at vertex " + std::to_string(u));
    for (auto v = rows[u].find_first(); v != Bits::npos; v = rows[u].find_next(v))
      if (!rows[v][u]) throw InputError("adjacency matrix is not symmetric");
  }
  Graph g;
  g.adj_ = std::move(rows);
  g.origin_.resize(n);
  for (std::size_t v = 0; v < n; ++v) g.origin_[v] = static_cast<Vertex>(v);
  return g;
}

Bits Graph::closed_neighbors(Vertex v) const {
  Bits b = adj_[v];
  b.set(v);
  return b;
}

int Graph::max_closed_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, closed_degree(v));
  return best;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (auto v = adj_[u].find_next(u); v != Bits::npos; v = adj_[u].find_next(v))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(order());
  for (Vertex v = 0; v < order(); ++v) d[v] = degree(v);
  return d;
}

std::vector<Vertex> Graph::to_root(const VertexSet& local) const { return to_root(std::span(local.ids())); }

std::vector<Vertex> Graph::to_root(std::span<const Vertex> local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) {
    check_vertex(v);
    out.push_back(origin_[v]);
  }
  return out;
}

std::vector<Vertex> Graph::to_local(std::span<const Vertex> root_ids) const {
  std::unordered_map<Vertex, Vertex> inverse;
  inverse.reserve(origin_.size());
  for (Vertex v = 0; v < order(); ++v) inverse.emplace(origin_[v], v);
  std::vector<Vertex> out;
  out.reserve(root_ids.size());
  for (Vertex r : root_ids) {
    auto it = inverse.find(r);
    if (it == inverse.end()) throw InputError("root vertex " + std::to_string(r) + " is not part of this graph");
    out.push_back(it->second);
  }
  return out;
}

Graph Graph::complement() const {
  Graph g = *this;
  for (Vertex v = 0; v < order(); ++v) {
    g.adj_[v].flip();
    g.adj_[v].reset(v);
  }
  return g;
}

Graph Graph::induced(const VertexSet& s) const {
  if (s.empty()) throw InputError("induced subgraph on an empty vertex set");
  for (Vertex v : s) check_vertex(v);
  const int m = static_cast<int>(s.size());
  Graph g;
  g.adj_.assign(m, Bits(m));
  g.origin_.resize(m);
  for (int i = 0; i < m; ++i) {
    g.origin_[i] = origin_[s[i]];
    for (int j = i + 1; j < m; ++j) {
      if (adj_[s[i]][s[j]]) {
        g.adj_[i].set(j);
        g.adj_[j].set(i);
      }
    }
  }
  return g;
}

template <typename Step>
std::vector<VertexSet> Graph::components_by(const Bits& mask, Step step) const {
  std::vector<VertexSet> out;
  Bits remaining = mask;
  while (remaining.any()) {
    Bits comp(order());
    Bits frontier(order());
    frontier.set(remaining.find_first());
    while (frontier.any()) {
      comp |= frontier;
      Bits next(order());
      for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v))
        next |= step(static_cast<Vertex>(v));
      next &= remaining;
      next -= comp;
      frontier = std::move(next);
    }
    remaining -= comp;
    out.push_back(VertexSet::from_bits(comp));
  }
  std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

std::vector<VertexSet> Graph::components() const { return components_within(all()); }

std::vector<VertexSet> Graph::components_within(const Bits& mask) const {
  return components_by(mask, [this](Vertex v) -> const Bits& { return adj_[v]; });
}

std::vector<VertexSet> Graph::co_components_within(const Bits& mask) const {
  return components_by(mask, [this](Vertex v) {
    Bits b = ~adj_[v];
    b.reset(v);
    return b;
  });
}

bool Graph::connected() const { return components().size() == 1; }

Bits Graph::all() const {
  Bits b(order());
  b.set();
  return b;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(order()));
}

Graph complement(const Graph& g) { return g.complement(); }
Graph induced(const Graph& g, const VertexSet& s) { return g.induced(s); }
std::vector<VertexSet> components(const Graph& g) { return g.components(); }

}  // namespace ehpath
