#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehpath/graph.hpp"
#include "ehpath/rational.hpp"

namespace ehpath {

/// Seeded random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; stream `i` of seed `s` is seeded
/// with s + (i + 1) * 0x9E3779B97F4A7C15 (mod 2^64). Bounded draws use
/// plain rejection on the raw 64-bit outputs so results do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability p (exact for rational p).
  bool chance(const Rational& p);
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family {
  gnp,
  cograph,
  balanced_cograph,  // cotree splitting every node into halves
  path,
  cycle,
  complete,
  complete_bipartite,  // sides `a` and n - a
  friendship,          // n = 2t + 1, t triangles sharing vertex 0
  empty,
  ck_rejection,
};

Family parse_family(const std::string& name);
const char* to_string(Family f);

struct GeneratorSpec {
  Family family = Family::gnp;
  int n = 1;
  Rational p{1, 2};
  int k = 5;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1000;
  int a = 1;
};

/// Deterministic in (spec, stream).
Graph generate(const GeneratorSpec& spec, std::uint64_t stream = 0);

Graph gnp(int n, const Rational& p, Rng& rng);
/// Random cotree: each internal node is a union or a join with probability
/// 1/2; leaves get a random permutation of the ids.
Graph random_cograph(int n, Rng& rng, bool balanced = false);

class SamplingFailure : public std::runtime_error {
 public:
  SamplingFailure(const std::string& what, std::uint64_t draws) : std::runtime_error(what), draws(draws) {}
  std::uint64_t draws;
};

struct CkSample {
  Graph graph;
  std::uint64_t draws = 0;  // draws used, including the accepted one
};

/// Draws G(n, p) graphs (stream i for draw i) until one induces neither P_k
/// nor co-P_k. Throws SamplingFailure after `budget` rejected draws.
CkSample rejection_sample_ck(int n, int k, const Rational& p, std::uint64_t seed, std::uint64_t budget);

}  // namespace ehpath
