#include "ehpath/pipeline.hpp"

#include <cmath>

#include "ehpath/patterns.hpp"
#include "ehpath/ramsey.hpp"

namespace ehpath {

std::int64_t PipelineConstants::homogeneous_target(std::int64_t n) const { return ceil_scaled(Rational(1), delta, n); }

std::int64_t PipelineConstants::linear_side(std::int64_t n) const { return ceil_scaled(c_k_factor, delta, n); }

std::string PipelineConstants::c_k_string() const {
  return to_string(c_k_factor) + "*2^(" + delta.to_string() + ")";
}

PipelineConstants choose_constants(int k) {
  if (k < 2) throw InputError("k must be at least 2");
  PipelineConstants pc;
  pc.k = k;
  pc.epsilon = Rational(1, 6 * k);
  pc.c = pc.epsilon;
  pc.path_bound = 1 / (2 * (2 * pc.epsilon + pc.c));
  pc.delta = fox_sudakov_delta(k, pc.epsilon);
  pc.c_k_factor = pc.c / 2;
  const long double log2_inv_ck = -pc.delta.value() - std::log2(static_cast<long double>(pc.c_k_factor.numerator())) +
                                  std::log2(static_cast<long double>(pc.c_k_factor.denominator()));
  pc.c_prime = exponent_from_log2(log2_inv_ck);
  pc.n_min_log2 = -pc.delta.value();
  if (auto e = pc.delta.exact(); e && -*e < 62) pc.n_min = (std::int64_t{1} << -*e) + 1;
  return pc;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::bipartite_witness: return "bipartite-witness";
    case Outcome::pattern_certificate: return "pattern-certificate";
    case Outcome::trivial_witness: return "trivial-witness";
  }
  return "?";
}

const char* to_string(GuaranteeTier t) { return t == GuaranteeTier::linear ? "linear" : "desk-scale"; }

namespace {

BipartitePairWitness trivial_pair(const Graph& g) {
  const auto kind = g.adjacent(0, 1) ? PairKind::complete : PairKind::empty;
  return {kind, {g.root_id(0)}, {g.root_id(1)}};
}

void finish_trivial(ExtractionReport& report, const Graph& g, std::string why) {
  report.outcome = Outcome::trivial_witness;
  report.witness = trivial_pair(g);
  report.tier = GuaranteeTier::desk_scale;
  report.trace.notes.push_back(std::move(why));
}

}  // namespace

ExtractionReport extract_linear_bipartite(const Graph& g, int k, const PipelineOptions& options) {
  const int n = g.order();
  if (n < 2) throw InputError("extract_linear_bipartite needs at least 2 vertices");
  ExtractionReport report;
  report.constants = choose_constants(k);
  const auto& pc = report.constants;
  report.linear_side = pc.linear_side(n);
  report.trace.n = n;

  if (options.probe && n <= options.probe_limit) {
    report.trace.probed = true;
    if (auto found = is_pk_copk_free(g, k); auto* cert = std::get_if<PatternEmbedding>(&found)) {
      report.outcome = Outcome::pattern_certificate;
      report.witness = std::move(*cert);
      report.trace.notes.push_back("probe found an induced " + std::get<PatternEmbedding>(report.witness).name);
      return report;
    }
  }

  // Stage 1: epsilon-homogeneous set of size >= ceil(delta n)
  const auto target = pc.homogeneous_target(n);
  report.trace.stage1_target = target;
  auto hom = find_epsilon_homogeneous(g, pc.epsilon, static_cast<int>(target), options.strategy);
  if (!hom) {
    finish_trivial(report, g, "stage 1 found no homogeneous set of the required size");
    return report;
  }
  report.trace.stage1_kind = hom->kind;
  report.complemented = hom->kind == HomogeneousKind::clique;
  const Graph work = report.complemented ? g.complement() : g;
  const auto stable = VertexSet::from(g.to_local(hom->vertices));

  // Stage 2: prune, then fix the absolute thresholds
  const auto s = static_cast<std::int64_t>(stable.size());
  const auto pruned = prune_high_degree(work, stable, pc.epsilon);
  const int degree_bound = static_cast<int>(floor_mul(2 * pc.epsilon, s)) + 1;
  const int side_target = static_cast<int>(ceil_mul(pc.c, static_cast<std::int64_t>(pruned.size())));
  report.trace.s = static_cast<int>(s);
  report.trace.s_pruned = static_cast<int>(pruned.size());
  report.trace.degree_bound = degree_bound;
  report.trace.side_target = side_target;

  // Stage 3: component split, or the dichotomy on a connected piece
  Graph piece = work.induced(pruned);
  auto comps = piece.components();
  for (const auto& comp : comps) report.trace.component_sizes.push_back(static_cast<int>(comp.size()));

  std::optional<BipartitePairWitness> pair;
  std::optional<InducedPathWitness> path;
  if (comps.size() > 1) {
    if (auto split = pack_components(comps, side_target)) {
      pair = BipartitePairWitness{PairKind::empty, piece.to_root(split->first), piece.to_root(split->second)};
      report.trace.notes.push_back("pruned set disconnected; split its components");
    } else {
      piece = piece.induced(comps.front());
      report.trace.notes.push_back("pruned set disconnected and unsplittable; descended into its largest component");
    }
  }
  if (!pair) {
    auto run = path_or_empty_bipartite(piece, 0, {side_target, degree_bound});
    report.trace.extractor_depth = run.depth;
    report.trace.extractor_case = run.final_case;
    if (run.is_path()) path = std::get<InducedPathWitness>(std::move(run.witness));
    else pair = std::get<BipartitePairWitness>(std::move(run.witness));
  }

  // Stage 4: report in terms of the input graph
  if (path) {
    report.trace.path_length = static_cast<int>(path->length());
    if (static_cast<int>(path->length()) < k) {
      finish_trivial(report, g, "extractor path has " + std::to_string(path->length()) + " < k vertices");
      return report;
    }
    std::vector<Vertex> map(path->vertices.begin(), path->vertices.begin() + k);
    report.outcome = Outcome::pattern_certificate;
    report.witness = report.complemented ? antipath_pattern(k, std::move(map)) : path_pattern(k, std::move(map));
    return report;
  }

  if (report.complemented) pair->kind = flip(pair->kind);
  report.outcome = Outcome::bipartite_witness;
  const bool full_regime = pc.n_min && n >= *pc.n_min && s >= target;
  report.tier = full_regime ? GuaranteeTier::linear : GuaranteeTier::desk_scale;
  report.witness = std::move(*pair);
  return report;
}

namespace {

struct CertificateFound {
  PatternEmbedding embedding;
};

}  // namespace

EhReport eh_homogeneous(const Graph& g, int k, const PipelineOptions& options) {
  EhReport report;
  report.constants = choose_constants(k);
  const auto pc = report.constants;

  BipartiteOracle oracle{
      [pc](std::int64_t n) { return pc.linear_side(n); },
      [k, &options](const Graph& h) {
        auto run = extract_linear_bipartite(h, k, options);
        if (run.outcome == Outcome::pattern_certificate)
          throw CertificateFound{std::get<PatternEmbedding>(std::move(run.witness))};
        return std::get<BipartitePairWitness>(std::move(run.witness));
      }};

  P4FreeResult cograph_part;
  try {
    cograph_part = p4free_extract(g, oracle);
  } catch (CertificateFound& found) {
    report.result = std::move(found.embedding);
    return report;
  }
  report.p4free_size = static_cast<int>(cograph_part.vertices.size());
  report.p4free_depth = cograph_part.depth;

  const Graph sub = g.induced(cograph_part.vertices);
  auto sets = cograph_alpha_omega(sub);
  if (std::holds_alternative<PatternEmbedding>(sets))
    throw std::logic_error("linear-pair recursion produced a set with an induced P4");
  const auto& ao = std::get<AlphaOmega>(sets);
  const bool stable = ao.stable.size() >= ao.clique.size();
  const auto& best = stable ? ao.stable : ao.clique;
  const auto root = sub.to_root(best);
  report.result = HomogeneousSetWitness{stable ? HomogeneousKind::stable : HomogeneousKind::clique, root, Rational(0),
                                        edges_inside(sub, best.ids())};
  report.achieved = best.size();
  report.bound = std::pow(static_cast<long double>(g.order()), pc.c_prime / 2);
  return report;
}

}  // namespace ehpath
