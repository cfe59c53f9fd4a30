#include "ehpath/cli.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "ehpath/extractor.hpp"
#include "ehpath/generators.hpp"
#include "ehpath/homogeneous.hpp"
#include "ehpath/io.hpp"
#include "ehpath/patterns.hpp"
#include "ehpath/pipeline.hpp"
#include "ehpath/ramsey.hpp"

namespace ehpath {

namespace {

struct GraphInput {
  std::string path;
  std::string format = "graph6";

  void attach(CLI::App* app) {
    app->add_option("--input,-i", path, "graph file")->required();
    app->add_option("--format,-f", format, "graph6 | edges")->capture_default_str();
  }
  Graph load() const { return read_graph_file(path, parse_format(format)); }
};

void emit(const json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw InputError("cannot write '" + out_path + "'");
  file << j.dump(2) << '\n';
}

json witness_report(const Graph& root, const Witness& w) {
  const auto verdict = verify(root, w);
  json j = {{"witness", witness_to_json(w)}, {"verified", verdict.accepted}};
  if (!verdict.accepted) j["reason"] = verdict.reason;
  return j;
}

std::string fixed3(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 3);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

struct BenchRow {
  int n = 0;
  std::string outcome;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::int64_t bound = 0;
  bool verified = false;
  double wall_ms = 0;
};

BenchRow bench_one(const GeneratorSpec& spec, std::uint64_t index, int k, const PipelineOptions& options) {
  const Graph g = generate(spec, index);
  const auto start = std::chrono::steady_clock::now();
  auto report = extract_linear_bipartite(g, k, options);
  const auto stop = std::chrono::steady_clock::now();
  const auto verdict = verify(g, report.witness);
  return {g.order(),
          to_string(report.outcome),
          verdict.size_a,
          verdict.size_b,
          report.linear_side,
          verdict.accepted,
          std::chrono::duration<double, std::milli>(stop - start).count()};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certifying extraction of linear bipartite pairs, homogeneous sets and induced-path certificates"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string family = "gnp", p_text = "1/2", gen_format = "graph6", gen_out;
  GeneratorSpec spec;
  std::uint64_t stream = 0;
  gen->add_option("--family", family, "gnp | cograph | balanced-cograph | path | cycle | complete | "
                                      "complete-bipartite | friendship | empty | ck-rejection")
      ->capture_default_str();
  gen->add_option("--n", spec.n)->required();
  gen->add_option("--p", p_text, "edge probability num/den")->capture_default_str();
  gen->add_option("--k", spec.k)->capture_default_str();
  gen->add_option("--a", spec.a, "first side of complete-bipartite")->capture_default_str();
  gen->add_option("--seed", spec.seed)->capture_default_str();
  gen->add_option("--stream", stream, "stream index within the seed")->capture_default_str();
  gen->add_option("--budget", spec.budget, "draws for ck-rejection")->capture_default_str();
  gen->add_option("--format", gen_format)->capture_default_str();
  gen->add_option("--out,-o", gen_out);

  // check
  auto* check = app.add_subcommand("check", "brute-force pattern queries");
  check->require_subcommand(1);
  GraphInput check_in;
  int check_k = 0;
  std::string pattern_g6;
  auto* check_free = check->add_subcommand("free", "is the graph P_k- and co-P_k-free?");
  auto* check_path = check->add_subcommand("path", "find an induced path on k vertices");
  auto* check_universal = check->add_subcommand("universal", "does the graph induce every labeled k-graph?");
  auto* check_contains = check->add_subcommand("contains", "find an induced copy of a graph6 pattern");
  for (auto* sub : {check_free, check_path, check_universal, check_contains}) check_in.attach(sub);
  for (auto* sub : {check_free, check_path, check_universal}) sub->add_option("--k", check_k)->required();
  check_contains->add_option("--pattern", pattern_g6, "pattern in graph6")->required();

  // extract
  auto* extract = app.add_subcommand("extract", "run one extraction stage");
  extract->require_subcommand(1);
  GraphInput extract_in;
  std::string extract_out;
  int start = 0, side_t = 1, degree_d = 1, target = 1;
  std::string c_text = "1/4", eps_text = "0", strategy_name = "greedy";
  auto* ex_path = extract->add_subcommand("path-or-bipartite", "induced path from a vertex or an empty pair");
  ex_path->add_option("--start", start)->required();
  ex_path->add_option("--T", side_t, "absolute side target")->required();
  ex_path->add_option("--D", degree_d, "closed-degree bound")->required();
  auto* ex_p4 = extract->add_subcommand("p4free", "P4-free subgraph through the exhaustive pair oracle (n <= 32)");
  ex_p4->add_option("--c", c_text, "oracle constant")->capture_default_str();
  auto* ex_cograph = extract->add_subcommand("cograph-ramsey", "maximum clique and stable set of a cograph");
  auto* ex_hom = extract->add_subcommand("homogeneous", "epsilon-stable set or epsilon-clique");
  ex_hom->add_option("--epsilon", eps_text)->capture_default_str();
  ex_hom->add_option("--target", target)->capture_default_str();
  ex_hom->add_option("--strategy", strategy_name, "exact | greedy | trivial")->capture_default_str();
  for (auto* sub : {ex_path, ex_p4, ex_cograph, ex_hom}) {
    extract_in.attach(sub);
    sub->add_option("--out,-o", extract_out, "write JSON here instead of stdout");
  }

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "linear bipartite pair or induced P_k / co-P_k certificate");
  GraphInput pipe_in;
  pipe_in.attach(pipe);
  int pipe_k = 5;
  std::string pipe_strategy = "greedy", pipe_out;
  bool pipe_eh = false, no_probe = false;
  pipe->add_option("--k", pipe_k)->required();
  pipe->add_option("--strategy", pipe_strategy, "exact | greedy | trivial")->capture_default_str();
  pipe->add_option("--out,-o", pipe_out, "report JSON path");
  pipe->add_flag("--eh", pipe_eh, "continue to a clique or stable set");
  pipe->add_flag("--no-probe", no_probe, "skip the brute-force P_k / co-P_k probe");

  // verify
  auto* ver = app.add_subcommand("verify", "check a witness JSON against a graph");
  GraphInput ver_in;
  ver_in.attach(ver);
  std::string witness_path;
  ver->add_option("--witness,-w", witness_path, "witness JSON (or a report containing one)")->required();

  // constants
  auto* cons = app.add_subcommand("constants", "print the pipeline constants");
  int cons_k = 5;
  std::string fs_eps;
  int fs_k = 0;
  cons->add_option("--k", cons_k)->required();
  cons->add_option("--delta-epsilon", fs_eps, "also evaluate the delta formula at this epsilon");
  cons->add_option("--delta-k", fs_k, "k for --delta-epsilon (defaults to --k)");

  // bench
  auto* bench = app.add_subcommand("bench", "batch pipeline runs, CSV output");
  std::string bench_family = "gnp", bench_p = "1/2", bench_strategy = "greedy", bench_out;
  GeneratorSpec bench_spec;
  int bench_count = 10, bench_k = 5;
  unsigned threads = 1;
  bench->add_option("--family", bench_family)->capture_default_str();
  bench->add_option("--n", bench_spec.n)->required();
  bench->add_option("--p", bench_p)->capture_default_str();
  bench->add_option("--a", bench_spec.a)->capture_default_str();
  bench->add_option("--seed", bench_spec.seed)->capture_default_str();
  bench->add_option("--budget", bench_spec.budget)->capture_default_str();
  bench->add_option("--count", bench_count)->capture_default_str();
  bench->add_option("--k", bench_k)->required();
  bench->add_option("--strategy", bench_strategy)->capture_default_str();
  bench->add_option("--threads", threads)->capture_default_str();
  bench->add_option("--out,-o", bench_out, "CSV path (stdout if omitted)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      spec.family = parse_family(family);
      spec.p = parse_rational(p_text);
      const auto text = write_graph(generate(spec, stream), parse_format(gen_format));
      if (gen_out.empty()) {
        out << text;
      } else {
        std::ofstream file(gen_out);
        if (!file) throw InputError("cannot write '" + gen_out + "'");
        file << text;
      }
      return kExitOk;
    }

    if (check->parsed()) {
      const Graph g = check_in.load();
      json j;
      if (check_free->parsed()) {
        auto r = is_pk_copk_free(g, check_k);
        if (std::holds_alternative<PkFree>(r)) j = {{"result", "free"}};
        else j = {{"result", "certificate"}, {"witness", witness_to_json(std::get<PatternEmbedding>(r))}};
      } else if (check_path->parsed() || check_contains->parsed()) {
        auto r = check_path->parsed() ? find_induced_path(g, check_k) : contains_induced(g, decode_graph6(pattern_g6));
        j = {{"result", r.found ? "found" : "not-found"}, {"nodes_explored", r.nodes_explored}};
        if (r.embedding) j["witness"] = witness_to_json(*r.embedding);
      } else {
        auto r = universality_check(g, check_k);
        if (std::holds_alternative<Universal>(r)) j = {{"result", "universal"}};
        else j = {{"result", "missing"}, {"pattern_graph6", encode_graph6(std::get<Graph>(r))}};
      }
      out << j.dump(2) << '\n';
      return kExitOk;
    }

    if (extract->parsed()) {
      const Graph g = extract_in.load();
      json j;
      if (ex_path->parsed()) {
        auto r = path_or_empty_bipartite(g, start, {side_t, degree_d});
        Witness w = std::visit([](auto x) -> Witness { return x; }, r.witness);
        j = witness_report(g, w);
        j["case"] = to_string(r.final_case);
        j["depth"] = r.depth;
        j["guaranteed_path"] = r.guaranteed_path;
      } else if (ex_p4->parsed()) {
        const auto c = parse_rational(c_text);
        auto r = p4free_extract(g, exact_oracle(c));
        const auto ce = exponent_for(c);
        j = {{"vertices", g.to_root(r.vertices)},
             {"size", r.vertices.size()},
             {"depth", r.depth},
             {"c_prime", static_cast<double>(ce.value)},
             {"p4_free", !contains_induced(g.induced(r.vertices), path_graph(4)).found}};
      } else if (ex_cograph->parsed()) {
        auto r = cograph_alpha_omega(g);
        if (auto* p4 = std::get_if<PatternEmbedding>(&r)) {
          j = {{"result", "not-a-cograph"}, {"obstruction", witness_to_json(*p4)}};
        } else {
          const auto& ao = std::get<AlphaOmega>(r);
          j = {{"result", "cograph"},
               {"alpha", ao.stable.size()},
               {"omega", ao.clique.size()},
               {"stable", g.to_root(ao.stable)},
               {"clique", g.to_root(ao.clique)}};
        }
      } else {
        auto r = find_epsilon_homogeneous(g, parse_rational(eps_text), target, parse_strategy(strategy_name));
        j = r ? witness_report(g, *r) : json{{"result", "not-found"}};
      }
      emit(j, extract_out, out);
      return kExitOk;
    }

    if (pipe->parsed()) {
      const Graph g = pipe_in.load();
      PipelineOptions options;
      options.strategy = parse_strategy(pipe_strategy);
      options.probe = !no_probe;
      json j;
      bool ok = true;
      if (pipe_eh) {
        auto r = eh_homogeneous(g, pipe_k, options);
        Witness w = std::visit([](auto x) -> Witness { return x; }, r.result);
        j = witness_report(g, w);
        ok = j["verified"].get<bool>();
        j["outcome"] = r.homogeneous() ? "homogeneous" : "pattern-certificate";
        j["constants"] = constants_to_json(r.constants);
        j["p4free_size"] = r.p4free_size;
        j["achieved"] = r.achieved;
        j["bound"] = static_cast<double>(r.bound);
      } else {
        auto r = extract_linear_bipartite(g, pipe_k, options);
        ok = verify(g, r.witness).accepted;
        j = report_to_json(r, ok);
      }
      emit(j, pipe_out, out);
      return ok ? kExitOk : kExitVerificationFailed;
    }

    if (ver->parsed()) {
      const Graph g = ver_in.load();
      std::ifstream file(witness_path);
      if (!file) throw InputError("cannot open '" + witness_path + "'");
      json j;
      try {
        j = json::parse(file);
      } catch (const json::parse_error& e) {
        throw InputError(std::string("witness JSON: ") + e.what());
      }
      if (j.is_object() && j.contains("witness") && !j.contains("type")) j = j.at("witness");
      const auto verdict = verify(g, witness_from_json(j));
      if (verdict.accepted) {
        out << "accepted\n";
        return kExitOk;
      }
      out << "rejected: " << verdict.reason << '\n';
      return kExitVerificationFailed;
    }

    if (cons->parsed()) {
      const auto pc = choose_constants(cons_k);
      json j = constants_to_json(pc);
      if (!fs_eps.empty()) {
        const auto d = fox_sudakov_delta(fs_k > 0 ? fs_k : cons_k, parse_rational(fs_eps));
        j["delta_formula"] = {{"k", fs_k > 0 ? fs_k : cons_k}, {"epsilon", fs_eps}, {"log2_delta", d.to_string()}};
      }
      out << j.dump(2) << '\n';
      return kExitOk;
    }

    if (bench->parsed()) {
      bench_spec.family = parse_family(bench_family);
      bench_spec.p = parse_rational(bench_p);
      bench_spec.k = bench_k;
      PipelineOptions options;
      options.strategy = parse_strategy(bench_strategy);
      if (bench_count < 0) throw InputError("--count must be non-negative");
      std::vector<BenchRow> rows(bench_count);
      std::vector<std::string> failures(bench_count);
      std::atomic<int> next{0};
      auto worker = [&] {
        for (int i = next++; i < bench_count; i = next++) {
          try {
            rows[i] = bench_one(bench_spec, static_cast<std::uint64_t>(i), bench_k, options);
          } catch (const std::exception& e) {
            failures[i] = e.what();
          }
        }
      };
      {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
      }
      for (int i = 0; i < bench_count; ++i)
        if (!failures[i].empty()) throw InputError("graph " + std::to_string(i) + ": " + failures[i]);

      std::ofstream file;
      if (!bench_out.empty()) {
        file.open(bench_out);
        if (!file) throw InputError("cannot write '" + bench_out + "'");
      }
      std::ostream& csv = bench_out.empty() ? out : file;
      csv << "index,n,outcome,size_a,size_b,linear_side,verified,wall_ms\n";
      bool all_ok = true;
      for (int i = 0; i < bench_count; ++i) {
        const auto& r = rows[i];
        all_ok = all_ok && r.verified;
        csv << i << ',' << r.n << ',' << r.outcome << ',' << r.size_a << ',' << r.size_b << ',' << r.bound << ','
            << (r.verified ? "true" : "false") << ',' << fixed3(r.wall_ms) << '\n';
      }
      return all_ok ? kExitOk : kExitVerificationFailed;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SamplingFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const OracleFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace ehpath
