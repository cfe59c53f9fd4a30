#include "ehpath/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace ehpath {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6Limit) throw InputError("graph6 output supports n <= 62, got " + std::to_string(n));
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input");
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw InputError("graph6: invalid byte " + std::to_string(c) + " at offset " + std::to_string(i));
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kGraph6Limit) throw InputError("graph6: multi-byte size form is not supported (offset 0)");
  if (n < 1) throw InputError("graph6: graphs need at least one vertex (offset 0)");
  const std::size_t pair_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (pair_bits + 5) / 6;
  if (text.size() != expected)
    throw InputError("graph6: expected " + std::to_string(expected) + " bytes for n=" + std::to_string(n) + ", got " +
                     std::to_string(text.size()) + " (offset " + std::to_string(std::min(text.size(), expected)) + ")");
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
      if (byte >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
    }
  }
  // padding bits must be zero
  if (bit % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if (last & ((1 << (6 - bit % 6)) - 1))
      throw InputError("graph6: nonzero padding bits at offset " + std::to_string(text.size() - 1));
  }
  return Graph::build(n, edges);
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph decode_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw InputError("edge list: missing 'n m' header");
  if (n < 1 || m < 0) throw InputError("edge list: invalid header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw InputError("edge list: trailing content '" + extra + "'");
  return Graph::build(static_cast<int>(n), edges);
}

GraphFormat parse_format(const std::string& name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edges" || name == "edgelist") return GraphFormat::edges;
  throw InputError("unknown graph format '" + name + "' (expected graph6 or edges)");
}

Graph read_graph(std::istream& in, GraphFormat format) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (format == GraphFormat::graph6) {
    auto end = text.find('\n');
    return decode_graph6(std::string_view(text).substr(0, end));
  }
  return decode_edge_list(text);
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_graph(in, format);
}

std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? encode_graph6(g) + "\n" : encode_edge_list(g);
}

namespace {

std::vector<Vertex> ids_from(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw InputError(std::string("witness: missing integer array '") + key + "'");
  std::vector<Vertex> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer()) throw InputError(std::string("witness: non-integer entry in '") + key + "'");
    out.push_back(v.get<Vertex>());
  }
  return out;
}

std::string string_from(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) throw InputError(std::string("witness: missing string '") + key + "'");
  return j.at(key).get<std::string>();
}

}  // namespace

json witness_to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, InducedPathWitness>) {
          return {{"type", "path"}, {"vertices", x.vertices}};
        } else if constexpr (std::is_same_v<T, BipartitePairWitness>) {
          return {{"type", "bipartite"}, {"kind", to_string(x.kind)}, {"X", x.x}, {"Y", x.y}};
        } else if constexpr (std::is_same_v<T, HomogeneousSetWitness>) {
          return {{"type", "homogeneous"},
                  {"kind", to_string(x.kind)},
                  {"vertices", x.vertices},
                  {"epsilon", to_string(x.epsilon)},
                  {"edge_count", x.edge_count}};
        } else {
          return {{"type", "embedding"}, {"pattern", x.name}, {"pattern_graph6", encode_graph6(x.pattern)}, {"map", x.map}};
        }
      },
      w);
}

Witness witness_from_json(const json& j) {
  if (!j.is_object()) throw InputError("witness: expected a JSON object");
  const auto type = string_from(j, "type");
  if (type == "path") return InducedPathWitness{ids_from(j, "vertices")};
  if (type == "bipartite") {
    const auto kind = string_from(j, "kind");
    if (kind != "empty" && kind != "complete") throw InputError("witness: bipartite kind must be empty or complete");
    return BipartitePairWitness{kind == "empty" ? PairKind::empty : PairKind::complete, ids_from(j, "X"), ids_from(j, "Y")};
  }
  if (type == "homogeneous") {
    const auto kind = string_from(j, "kind");
    if (kind != "stable" && kind != "clique") throw InputError("witness: homogeneous kind must be stable or clique");
    if (!j.contains("edge_count") || !j.at("edge_count").is_number_integer())
      throw InputError("witness: missing integer 'edge_count'");
    return HomogeneousSetWitness{kind == "stable" ? HomogeneousKind::stable : HomogeneousKind::clique,
                                 ids_from(j, "vertices"), parse_rational(string_from(j, "epsilon")),
                                 j.at("edge_count").get<std::int64_t>()};
  }
  if (type == "embedding") {
    const std::string name = j.contains("pattern") && j.at("pattern").is_string() ? j.at("pattern").get<std::string>() : "";
    return PatternEmbedding{name, decode_graph6(string_from(j, "pattern_graph6")), ids_from(j, "map")};
  }
  throw InputError("witness: unknown type '" + type + "'");
}

json constants_to_json(const PipelineConstants& pc) {
  json j = {{"k", pc.k},
            {"epsilon", to_string(pc.epsilon)},
            {"c", to_string(pc.c)},
            {"path_bound", to_string(pc.path_bound)},
            {"delta_log2", pc.delta.to_string()},
            {"delta_log2_value", static_cast<double>(pc.delta.value())},
            {"c_k", pc.c_k_string()},
            {"c_prime", static_cast<double>(pc.c_prime)},
            {"n_min_log2", static_cast<double>(pc.n_min_log2)}};
  j["n_min"] = pc.n_min ? json(*pc.n_min) : json(nullptr);
  return j;
}

json report_to_json(const ExtractionReport& report, bool verified) {
  const auto& t = report.trace;
  json trace = {{"n", t.n},
                {"probed", t.probed},
                {"stage1_target", t.stage1_target},
                {"s", t.s},
                {"s_pruned", t.s_pruned},
                {"T", t.side_target},
                {"D", t.degree_bound},
                {"component_sizes", t.component_sizes},
                {"extractor_depth", t.extractor_depth},
                {"path_length", t.path_length},
                {"notes", t.notes}};
  trace["stage1_kind"] = t.stage1_kind ? json(to_string(*t.stage1_kind)) : json(nullptr);
  trace["extractor_case"] = t.extractor_case ? json(to_string(*t.extractor_case)) : json(nullptr);
  return {{"outcome", to_string(report.outcome)},
          {"witness", witness_to_json(report.witness)},
          {"constants", constants_to_json(report.constants)},
          {"trace", trace},
          {"complemented", report.complemented},
          {"tier", to_string(report.tier)},
          {"linear_side", report.linear_side},
          {"verified", verified}};
}

}  // namespace ehpath
