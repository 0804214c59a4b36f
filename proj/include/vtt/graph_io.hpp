#pragma once

// Byte-deterministic text forms of a Digraph.
//
//   edge-list  "u v\n" per arc, sorted lexicographically
//   dot        `digraph` with `->` per arc, or `graph` with `--` per edge
//              when the digraph is symmetric
//   json       {"n":N,"edges":[[u,v],...]}
//
// Graph files read by the CLI are an edge list preceded by a header line
// "digraph N" or "graph N"; for "graph" every edge is added in both directions.

#include <string>
#include <string_view>

#include "vtt/digraph.hpp"

namespace vtt {

enum class GraphFormat { edge_list, dot, json };

/// "edge-list" | "edges" | "dot" | "json"; anything else throws InvalidArgument.
GraphFormat parse_graph_format(std::string_view name);

std::string export_graph(const Digraph& g, GraphFormat format);

/// "digraph N\n" followed by the edge list.
std::string to_graph_file(const Digraph& g);

/// Accepts the JSON form, a headed edge list, or a bare edge list (vertex
/// count inferred from the largest label). Throws ParseError.
Digraph parse_graph(std::string_view text);

}  // namespace vtt
