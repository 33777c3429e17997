#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "kpartite/graph.hpp"

namespace kpartite {

enum class GraphFormat { graph6, edges, dimacs };

/// Accepts "graph6", "g6", "edges", "edgelist", "dimacs"; throws InvalidInput otherwise.
GraphFormat parse_format(std::string_view name);
/// .g6 -> graph6, .dimacs/.col/.clq -> dimacs, anything else -> edges.
GraphFormat guess_format(const std::filesystem::path& path);

// graph6: one graph per line, printable bytes offset by 63, upper triangle
// packed column by column, six bits per byte, most significant bit first.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

/// Edge list: "u v" per line; optional "n=<int>" header; '#' starts a comment.
/// Labels are relabeled to 0..n-1 in first-seen order unless a header is
/// present and every label is an integer in [0, n), in which case they are
/// taken as-is.
Graph read_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

/// DIMACS "p edge n m" / "e u v" with 1-indexed vertices; 'c' lines ignored.
Graph read_dimacs(std::istream& in);
std::string to_dimacs(const Graph& g);

/// Reads every graph in a stream. graph6 yields one graph per non-empty line;
/// the other formats yield exactly one graph.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);
std::vector<Graph> read_graph_file(const std::filesystem::path& path, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

}  // namespace kpartite
