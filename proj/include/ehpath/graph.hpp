#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ehpath {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Raised for malformed inputs: bad ids, loops, empty sets, violated
/// preconditions of an operation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free set of vertex ids local to one Graph.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);

  /// Sorts; throws InputError on duplicates or negative ids.
  static VertexSet from(std::vector<Vertex> ids);
  static VertexSet from_bits(const Bits& bits);
  static VertexSet range(Vertex n);  // {0, ..., n-1}

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(Vertex v) const;
  Vertex front() const { return ids_.front(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<Vertex>& ids() const { return ids_; }

  Bits to_bits(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Immutable simple undirected graph on n >= 1 vertices with a bit-matrix
/// adjacency. Every graph remembers, per local vertex, the id it had in the
/// root graph it was derived from, so witnesses found on induced subgraphs
/// or complements can be stated against the user's input.
class Graph {
 public:
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// From adjacency rows; rows must be symmetric with a zero diagonal.
  static Graph from_rows(std::vector<Bits> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u][v]; }
  const Bits& neighbors(Vertex v) const { return adj_[v]; }
  Bits closed_neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adj_[v].count()); }
  int closed_degree(Vertex v) const { return degree(v) + 1; }
  int max_closed_degree() const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;

  /// Root-graph id of local vertex v.
  Vertex root_id(Vertex v) const { return origin_[v]; }
  const std::vector<Vertex>& origin() const { return origin_; }
  std::vector<Vertex> to_root(const VertexSet& local) const;
  std::vector<Vertex> to_root(std::span<const Vertex> local) const;
  /// Inverse of to_root; throws InputError if an id is not in this graph.
  std::vector<Vertex> to_local(std::span<const Vertex> root_ids) const;

  Graph complement() const;
  Graph induced(const VertexSet& s) const;

  /// Components ordered by size descending, then smallest member ascending.
  std::vector<VertexSet> components() const;
  /// Components of the subgraph induced by `mask`, same ordering.
  std::vector<VertexSet> components_within(const Bits& mask) const;
  /// Components of the complement of the subgraph induced by `mask`.
  std::vector<VertexSet> co_components_within(const Bits& mask) const;
  bool connected() const;

  Bits all() const;
  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bits> adj_;
  std::vector<Vertex> origin_;

  template <typename Step>
  std::vector<VertexSet> components_by(const Bits& mask, Step step) const;
};

Graph complement(const Graph& g);
Graph induced(const Graph& g, const VertexSet& s);
std::vector<VertexSet> components(const Graph& g);

}  // namespace ehpath
