#include "ehpath/homogeneous.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

namespace ehpath {

namespace {

bool within_density(std::int64_t bad, std::int64_t size, const Rational& eps) {
  return bad * eps.denominator() <= eps.numerator() * pairs_of(size);
}

HomogeneousSetWitness make_witness(const Graph& g, HomogeneousKind kind, const std::vector<Vertex>& local,
                                   const Rational& eps) {
  return {kind, g.to_root(local), eps, edges_inside(g, local)};
}

std::optional<HomogeneousSetWitness> exact_search(const Graph& g, const Rational& eps, int target,
                                                  std::optional<HomogeneousKind> only) {
  const bool want_stable = only != HomogeneousKind::clique;
  const bool want_clique = only != HomogeneousKind::stable;
  const int n = g.order();
  if (n > kExactStrategyLimit)
    throw InputError("exact homogeneous search is limited to n <= " + std::to_string(kExactStrategyLimit) +
                     " (got n=" + std::to_string(n) + ")");
  std::vector<std::uint32_t> rows(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u)
      if (g.adjacent(v, u)) rows[v] |= 1u << u;

  std::vector<Vertex> pick;
  for (int size = n; size >= std::max(target, 1); --size) {
    for (auto kind : {HomogeneousKind::stable, HomogeneousKind::clique}) {
      if (kind == HomogeneousKind::stable ? !want_stable : !want_clique) continue;
      pick.resize(size);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        std::uint32_t mask = 0;
        for (Vertex v : pick) mask |= 1u << v;
        std::int64_t twice = 0;
        for (Vertex v : pick) twice += std::popcount(rows[v] & mask);
        const std::int64_t bad = kind == HomogeneousKind::stable ? twice / 2 : pairs_of(size) - twice / 2;
        if (within_density(bad, size, eps)) return make_witness(g, kind, pick, eps);
        // next combination in lexicographic order
        int i = size - 1;
        while (i >= 0 && pick[i] == n - size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return std::nullopt;
}

// Peels max-degree vertices from `h` until its edge density is at most eps.
std::vector<Vertex> peel(const Graph& h, const Rational& eps) {
  const int n = h.order();
  Bits alive = h.all();
  std::vector<int> degree = h.degree_sequence();
  std::int64_t edges = static_cast<std::int64_t>(h.edge_count());
  std::int64_t size = n;
  while (!within_density(edges, size, eps)) {
    Vertex worst = -1;
    for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v))
      if (worst < 0 || degree[v] > degree[worst]) worst = static_cast<Vertex>(v);
    alive.reset(worst);
    edges -= degree[worst];
    --size;
    const Bits touched = h.neighbors(worst) & alive;
    for (auto u = touched.find_first(); u != Bits::npos; u = touched.find_next(u)) --degree[u];
  }
  return VertexSet::from_bits(alive).ids();
}

}  // namespace

HomogeneousStrategy parse_strategy(const std::string& name) {
  if (name == "exact") return HomogeneousStrategy::exact;
  if (name == "greedy" || name == "greedy-peel") return HomogeneousStrategy::greedy_peel;
  if (name == "trivial") return HomogeneousStrategy::trivial;
  throw InputError("unknown strategy '" + name + "' (expected exact, greedy or trivial)");
}

const char* to_string(HomogeneousStrategy s) {
  switch (s) {
    case HomogeneousStrategy::exact: return "exact";
    case HomogeneousStrategy::greedy_peel: return "greedy";
    case HomogeneousStrategy::trivial: return "trivial";
  }
  return "?";
}

std::optional<HomogeneousSetWitness> find_epsilon_homogeneous(const Graph& g, const Rational& epsilon, int target,
                                                              HomogeneousStrategy strategy,
                                                              std::optional<HomogeneousKind> only) {
  if (epsilon < 0 || epsilon > 1) throw InputError("epsilon must lie in [0,1], got " + to_string(epsilon));
  if (target < 1 || target > g.order())
    throw InputError("target " + std::to_string(target) + " outside [1, " + std::to_string(g.order()) + "]");

  switch (strategy) {
    case HomogeneousStrategy::exact:
      return exact_search(g, epsilon, target, only);
    case HomogeneousStrategy::greedy_peel: {
      std::vector<Vertex> stable, clique;
      if (only != HomogeneousKind::clique) stable = peel(g, epsilon);
      if (only != HomogeneousKind::stable) clique = peel(g.complement(), epsilon);
      const bool use_stable = stable.size() >= clique.size() && only != HomogeneousKind::clique;
      const auto& best = use_stable ? stable : clique;
      if (static_cast<int>(best.size()) < target) return std::nullopt;
      return make_witness(g, use_stable ? HomogeneousKind::stable : HomogeneousKind::clique, best, epsilon);
    }
    case HomogeneousStrategy::trivial:
      if (target > 1) return std::nullopt;
      return make_witness(g, only.value_or(HomogeneousKind::stable), {0}, epsilon);
  }
  return std::nullopt;
}

VertexSet prune_high_degree(const Graph& g, const VertexSet& s, const Rational& epsilon) {
  if (s.empty()) throw InputError("cannot prune an empty set");
  const Bits members = s.to_bits(g.order());
  const auto size = static_cast<std::int64_t>(s.size());
  // keep v iff deg_S(v) <= 2 * eps * size
  const std::int64_t bound_num = 2 * epsilon.numerator() * size;
  std::vector<Vertex> kept;
  for (Vertex v : s) {
    const auto deg = static_cast<std::int64_t>((g.neighbors(v) & members).count());
    if (deg * epsilon.denominator() <= bound_num) kept.push_back(v);
  }
  return VertexSet::from(std::move(kept));
}

std::optional<std::int64_t> DeltaExponent::exact() const {
  const auto num = log_argument.numerator();
  if (factor == 0) return 0;
  if (log_argument.denominator() != 1 || num <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(num)))
    return std::nullopt;
  const std::int64_t m = std::countr_zero(static_cast<std::uint64_t>(num));
  return factor * m * m;
}

long double DeltaExponent::value() const {
  if (auto e = exact()) return static_cast<long double>(*e);
  const long double lg = std::log2(static_cast<long double>(log_argument.numerator())) -
                         std::log2(static_cast<long double>(log_argument.denominator()));
  return static_cast<long double>(factor) * lg * lg;
}

std::string DeltaExponent::to_string() const {
  if (auto e = exact()) return std::to_string(*e);
  const std::string arg = log_argument.denominator() == 1 ? std::to_string(log_argument.numerator())
                                                          : ehpath::to_string(log_argument);
  return std::to_string(factor) + "*(log2(" + arg + "))^2";
}

DeltaExponent fox_sudakov_delta(int k, const Rational& epsilon) {
  if (k < 1) throw InputError("k must be at least 1");
  if (epsilon <= 0) throw InputError("epsilon must be positive for the delta formula");
  if (epsilon > 1) throw InputError("epsilon must be at most 1");
  return {-15 * static_cast<std::int64_t>(k), 1 / epsilon};
}

std::int64_t ceil_scaled(const Rational& r, const DeltaExponent& e, std::int64_t n) {
  if (r <= 0) throw InputError("scale must be positive");
  const std::int64_t num = r.numerator() * n;
  const std::int64_t den = r.denominator();
  if (auto exp = e.exact()) {
    if (*exp >= 0) {
      if (*exp > 62) throw InputError("positive exponent too large");
      const std::int64_t scaled = num << *exp;
      return (scaled + den - 1) / den;
    }
    if (-*exp >= 62) return 1;  // num < 2^62 at any realistic n
    const __int128 d = static_cast<__int128>(den) << -*exp;
    return static_cast<std::int64_t>((num + d - 1) / d);
  }
  const long double lg = std::log2(static_cast<long double>(num)) - std::log2(static_cast<long double>(den)) + e.value();
  if (lg <= 0) return 1;
  return static_cast<std::int64_t>(std::ceil(std::exp2(lg)));
}

}  // namespace ehpath
