#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ehpath/certificates.hpp"
#include "ehpath/extractor.hpp"
#include "ehpath/graph.hpp"
#include "ehpath/homogeneous.hpp"
#include "ehpath/rational.hpp"

namespace ehpath {

/// Parameters of one extraction run for the class of graphs inducing
/// neither P_k nor its complement.
///
/// epsilon = c = 1/(6k), which makes the path bound 1/(2(2 eps + c)) equal
/// to k. delta and c_k = c * delta / 2 are far below double range for any k
/// of interest, so they are carried as (rational factor) * 2^(delta exponent).
struct PipelineConstants {
  int k = 0;
  Rational epsilon;
  Rational c;
  Rational path_bound;     // 1 / (2(2 eps + c))
  DeltaExponent delta;     // delta = 2^exponent
  Rational c_k_factor;     // c_k = c_k_factor * delta
  long double c_prime = 0;  // exponent_for(c_k), from log2(1/c_k)
  /// Smallest n with ceil(delta n) >= 2 (ceil(c_k n) >= 1 holds for all n);
  /// nullopt when it does not fit in 64 bits.
  std::optional<std::int64_t> n_min;
  long double n_min_log2 = 0;

  std::int64_t homogeneous_target(std::int64_t n) const;  // ceil(delta n)
  std::int64_t linear_side(std::int64_t n) const;         // ceil(c_k n)
  std::string c_k_string() const;
};

PipelineConstants choose_constants(int k);

enum class Outcome { bipartite_witness, pattern_certificate, trivial_witness };
/// `linear`: the run met the quantitative preconditions (n >= n_min and a
/// full-size stage 1 set), so sides >= ceil(c_k n) is a proven
/// guarantee. `desk_scale`: the witness verifies but no asymptotic claim.
enum class GuaranteeTier { linear, desk_scale };

const char* to_string(Outcome o);
const char* to_string(GuaranteeTier t);

struct PipelineTrace {
  int n = 0;
  bool probed = false;
  std::int64_t stage1_target = 0;
  std::optional<HomogeneousKind> stage1_kind;
  int s = 0;        // stage 1 set size
  int s_pruned = 0;  // after pruning
  int side_target = 0;   // T
  int degree_bound = 0;  // D
  std::vector<int> component_sizes;  // components of the pruned set
  int extractor_depth = 0;
  std::optional<ExtractorCase> extractor_case;
  int path_length = 0;
  std::vector<std::string> notes;
};

struct ExtractionReport {
  Outcome outcome = Outcome::trivial_witness;
  Witness witness;  // root ids of the input graph's root
  PipelineConstants constants;
  PipelineTrace trace;
  bool complemented = false;
  GuaranteeTier tier = GuaranteeTier::desk_scale;
  std::int64_t linear_side = 1;  // ceil(c_k n)
};

struct PipelineOptions {
  HomogeneousStrategy strategy = HomogeneousStrategy::greedy_peel;
  /// Before the staged extraction, look for an induced P_k / co-P_k by brute
  /// force on graphs with at most `probe_limit` vertices.
  bool probe = true;
  int probe_limit = 64;
};

/// Empty-or-complete pair, induced P_k / co-P_k certificate, or (when the
/// stages come up short at desk scale) a 1-pair.
ExtractionReport extract_linear_bipartite(const Graph& g, int k, const PipelineOptions& options = {});

struct EhReport {
  std::variant<HomogeneousSetWitness, PatternEmbedding> result;
  PipelineConstants constants;
  int p4free_size = 0;
  int p4free_depth = 0;
  std::size_t achieved = 0;     // size of the clique / stable set
  long double bound = 0;        // n^{c'/2}

  bool homogeneous() const { return std::holds_alternative<HomogeneousSetWitness>(result); }
};

/// Clique or stable set through the linear-pair recursion and the cograph
/// extraction; a certificate from any pipeline call aborts and is returned.
EhReport eh_homogeneous(const Graph& g, int k, const PipelineOptions& options = {});

}  // namespace ehpath
