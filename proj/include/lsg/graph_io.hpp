#pragma once

#include <iosfwd>
#include <string>

#include "lsg/graph.hpp"

namespace lsg {

enum class GraphFormat { EdgeList, Dimacs, Json };

GraphFormat parse_graph_format(const std::string& name);
/// Guess from the file extension: .col/.dimacs -> DIMACS, .json -> JSON,
/// anything else -> edge list.
GraphFormat guess_graph_format(const std::string& path);

// Edge list: one "u v" pair per line, 0-indexed, '#' starts a comment.
// The comment "# vertices: N" fixes the vertex count so trailing isolated
// vertices survive a round trip; otherwise n = 1 + largest id.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// DIMACS .col: "c" comments, "p edge n m", "e u v" with 1-indexed vertices.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// {"n": int, "edges": [[u, v], ...]}
Graph read_graph_json(std::istream& in);

Graph read_graph(std::istream& in, GraphFormat format);
Graph read_graph_file(const std::string& path, GraphFormat format);
Graph read_graph_file(const std::string& path);

}  // namespace lsg
