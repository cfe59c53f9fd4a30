#pragma once

// Small graph builders shared by the unit and acceptance tests.

#include <vector>

#include "ehpath/generators.hpp"
#include "ehpath/graph.hpp"

namespace fixture {

using ehpath::Edge;
using ehpath::Graph;
using ehpath::Vertex;

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::build(n, e);
}

/// Center 0 with `legs` paths of `length` vertices each; leg i is
/// 1 + i*length, ..., (i+1)*length, attached at its first vertex.
inline Graph spider(int legs, int length) {
  std::vector<Edge> e;
  for (int i = 0; i < legs; ++i) {
    const Vertex first = 1 + i * length;
    e.emplace_back(0, first);
    for (int j = 1; j < length; ++j) e.emplace_back(first + j - 1, first + j);
  }
  return Graph::build(1 + legs * length, e);
}

/// Random tree (each vertex v > 0 hangs off a uniform earlier vertex) plus
/// G(n, p) edges on top. Always connected.
inline Graph random_connected(int n, const ehpath::Rational& p, ehpath::Rng& rng) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(rng.below(v)), v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) e.emplace_back(u, v);
  return Graph::build(n, e);
}

}  // namespace fixture
