#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond Graph::adjacent and deliberately use the
// dumbest correct method (full subset or permutation enumeration).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "ehpath/graph.hpp"
#include "ehpath/rational.hpp"

namespace oracle {

using ehpath::Graph;
using ehpath::Vertex;

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order;
/// stops early when fn returns true. Returns whether it stopped early.
inline bool for_each_subset(int n, int k, const std::function<bool(const std::vector<Vertex>&)>& fn) {
  if (k > n || k < 0) return false;
  std::vector<Vertex> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (fn(pick)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

inline int edges_among(const Graph& g, const std::vector<Vertex>& s) {
  int e = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) e += g.adjacent(s[i], s[j]);
  return e;
}

/// A k-subset induces P_k iff it spans k-1 edges, is connected and has max
/// degree <= 2 (k >= 1).
inline bool subset_is_path(const Graph& g, const std::vector<Vertex>& s) {
  const int k = static_cast<int>(s.size());
  if (edges_among(g, s) != k - 1) return false;
  std::vector<int> deg(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && g.adjacent(s[i], s[j])) ++deg[i];
  if (*std::max_element(deg.begin(), deg.end()) > 2) return false;
  // connectivity by flood fill
  std::vector<bool> seen(k, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < k; ++b)
      if (!seen[b] && g.adjacent(s[a], s[b])) {
        seen[b] = true;
        ++count;
        stack.push_back(b);
      }
  }
  return count == k;
}

inline bool has_induced_path(const Graph& g, int k) {
  return for_each_subset(g.order(), k, [&](const auto& s) { return subset_is_path(g, s); });
}

inline bool has_induced_p4(const Graph& g) { return has_induced_path(g, 4); }

/// Every injective map of H's vertices into G, checked pair by pair.
inline bool contains_induced(const Graph& g, const Graph& h) {
  const int k = h.order();
  return for_each_subset(g.order(), k, [&](std::vector<Vertex> s) {
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        for (int j = i + 1; j < k && ok; ++j) ok = h.adjacent(i, j) == g.adjacent(s[i], s[j]);
      if (ok) return true;
    } while (std::next_permutation(s.begin(), s.end()));
    return false;
  });
}

/// Size of a maximum clique (complement=false) or stable set (true) by
/// enumerating all subsets from the largest size down.
inline int max_homogeneous_exact(const Graph& g, bool stable) {
  for (int k = g.order(); k >= 1; --k) {
    if (for_each_subset(g.order(), k, [&](const auto& s) {
          const int e = edges_among(g, s);
          return stable ? e == 0 : e == k * (k - 1) / 2;
        }))
      return k;
  }
  return 0;
}

/// Same as max_homogeneous_exact, by scanning every subset bitmask; n <= 20.
inline int max_homogeneous_bitmask(const Graph& g, bool stable) {
  const int n = g.order();
  std::vector<std::uint32_t> rows(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v) == stable) rows[u] |= 1u << v;
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (std::uint32_t rest = mask; rest && ok; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      ok = (rows[v] & mask) == 0;
    }
    if (ok) best = size;
  }
  return best;
}

/// Largest set whose bad-pair count is within eps * C(s,2), per kind.
inline int max_eps_homogeneous(const Graph& g, const ehpath::Rational& eps, bool stable) {
  for (int k = g.order(); k >= 1; --k) {
    const std::int64_t pairs = std::int64_t{k} * (k - 1) / 2;
    if (for_each_subset(g.order(), k, [&](const auto& s) {
          const std::int64_t e = edges_among(g, s);
          const std::int64_t bad = stable ? e : pairs - e;
          return bad * eps.denominator() <= eps.numerator() * pairs;
        }))
      return k;
  }
  return 0;
}

/// Empty/complete pair with both sides exactly `side` by enumerating every X
/// and every Y.
inline bool has_bipartite_pair(const Graph& g, int side) {
  const int n = g.order();
  return for_each_subset(n, side, [&](const auto& x) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (std::find(x.begin(), x.end(), v) == x.end()) rest.push_back(v);
    return for_each_subset(static_cast<int>(rest.size()), side, [&](const auto& yi) {
      bool all = true, none = true;
      for (Vertex a : x)
        for (int i : yi) {
          const bool e = g.adjacent(a, rest[i]);
          all = all && e;
          none = none && !e;
        }
      return all || none;
    });
  });
}

inline bool connected(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    Vertex a = stack.back();
    stack.pop_back();
    for (Vertex b = 0; b < n; ++b)
      if (!seen[b] && g.adjacent(a, b)) {
        seen[b] = true;
        ++count;
        stack.push_back(b);
      }
  }
  return count == n;
}

}  // namespace oracle
