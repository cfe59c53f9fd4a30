#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ehpath/certificates.hpp"
#include "ehpath/graph.hpp"
#include "ehpath/pipeline.hpp"

#include "json.hpp"

namespace ehpath {

/// Largest order handled by the single-byte graph6 size form.
inline constexpr int kGraph6Limit = 62;

/// graph6: one byte 63+n, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, each byte +63.
std::string encode_graph6(const Graph& g);
/// Trailing newline / CR are ignored. Throws InputError naming the offset
/// of the first bad byte.
Graph decode_graph6(std::string_view text);

/// Edge list: header "n m", then m lines "u v" (0-indexed).
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

enum class GraphFormat { graph6, edges };
GraphFormat parse_format(const std::string& name);
Graph read_graph(std::istream& in, GraphFormat format);
Graph read_graph_file(const std::string& path, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

using nlohmann::json;

json witness_to_json(const Witness& w);
/// Throws InputError on schema violations.
Witness witness_from_json(const json& j);

json constants_to_json(const PipelineConstants& pc);
json report_to_json(const ExtractionReport& report, bool verified);

}  // namespace ehpath
