#include "ehpath/generators.hpp"

#include <numeric>
#include <span>

#include "ehpath/patterns.hpp"

namespace ehpath {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(seed + (stream + 1) * 0x9E3779B97F4A7C15ull) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::below needs a positive bound");
  // largest multiple of bound that fits, minus one
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t x = next();
  while (x > limit) x = next();
  return x % bound;
}

bool Rng::chance(const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return below(static_cast<std::uint64_t>(p.denominator())) < static_cast<std::uint64_t>(p.numerator());
}

Family parse_family(const std::string& name) {
  if (name == "gnp") return Family::gnp;
  if (name == "cograph") return Family::cograph;
  if (name == "balanced-cograph") return Family::balanced_cograph;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "complete-bipartite") return Family::complete_bipartite;
  if (name == "friendship") return Family::friendship;
  if (name == "empty") return Family::empty;
  if (name == "ck-rejection") return Family::ck_rejection;
  throw InputError("unknown family '" + name + "'");
}

const char* to_string(Family f) {
  switch (f) {
    case Family::gnp: return "gnp";
    case Family::cograph: return "cograph";
    case Family::balanced_cograph: return "balanced-cograph";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete-bipartite";
    case Family::friendship: return "friendship";
    case Family::empty: return "empty";
    case Family::ck_rejection: return "ck-rejection";
  }
  return "?";
}

Graph gnp(int n, const Rational& p, Rng& rng) {
  if (p < 0 || p > 1) throw InputError("edge probability must lie in [0,1]");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

namespace {

void grow_cotree(std::span<const Vertex> leaves, Rng& rng, bool balanced, std::vector<Edge>& edges) {
  if (leaves.size() < 2) return;
  const std::size_t split = balanced ? (leaves.size() + 1) / 2 : 1 + rng.below(leaves.size() - 1);
  const bool join = rng.below(2) == 1;
  auto left = leaves.subspan(0, split);
  auto right = leaves.subspan(split);
  grow_cotree(left, rng, balanced, edges);
  grow_cotree(right, rng, balanced, edges);
  if (join)
    for (Vertex u : left)
      for (Vertex v : right) edges.emplace_back(u, v);
}

}  // namespace

Graph random_cograph(int n, Rng& rng, bool balanced) {
  if (n < 1) throw InputError("cograph needs n >= 1");
  std::vector<Vertex> leaves(n);
  std::iota(leaves.begin(), leaves.end(), 0);
  rng.shuffle(leaves);
  std::vector<Edge> edges;
  grow_cotree(leaves, rng, balanced, edges);
  return Graph::build(n, edges);
}

Graph generate(const GeneratorSpec& spec, std::uint64_t stream) {
  const int n = spec.n;
  if (n < 1) throw InputError("generator needs n >= 1");
  if (spec.p < 0 || spec.p > 1) throw InputError("edge probability must lie in [0,1]");
  Rng rng(spec.seed, stream);
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::gnp: return gnp(n, spec.p, rng);
    case Family::cograph: return random_cograph(n, rng);
    case Family::balanced_cograph: return random_cograph(n, rng, true);
    case Family::path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::cycle:
      if (n < 3) throw InputError("cycle needs n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case Family::complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case Family::complete_bipartite:
      if (spec.a < 0 || spec.a > n) throw InputError("complete-bipartite side a must lie in [0, n]");
      for (int u = 0; u < spec.a; ++u)
        for (int v = spec.a; v < n; ++v) edges.emplace_back(u, v);
      break;
    case Family::friendship:
      if (n < 3 || n % 2 == 0) throw InputError("friendship graph needs odd n >= 3");
      for (int t = 0; 2 * t + 2 < n; ++t) {
        edges.emplace_back(0, 2 * t + 1);
        edges.emplace_back(0, 2 * t + 2);
        edges.emplace_back(2 * t + 1, 2 * t + 2);
      }
      break;
    case Family::empty:
      break;
    case Family::ck_rejection:
      return rejection_sample_ck(n, spec.k, spec.p, spec.seed + stream * 0xD1B54A32D192ED03ull, spec.budget).graph;
  }
  return Graph::build(n, edges);
}

CkSample rejection_sample_ck(int n, int k, const Rational& p, std::uint64_t seed, std::uint64_t budget) {
  for (std::uint64_t draw = 0; draw < budget; ++draw) {
    Rng rng(seed, draw);
    Graph g = gnp(n, p, rng);
    if (std::holds_alternative<PkFree>(is_pk_copk_free(g, k))) return {std::move(g), draw + 1};
  }
  throw SamplingFailure("no P" + std::to_string(k) + "/co-P" + std::to_string(k) + "-free graph in " +
                            std::to_string(budget) + " draws",
                        budget);
}

}  // namespace ehpath
