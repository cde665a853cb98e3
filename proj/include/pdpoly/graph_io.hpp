#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pdpoly/graph.hpp"

namespace pdpoly {

/// graph6: size header (one byte for n <= 62, "~" + 3 bytes up to 258047),
/// then the upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed
/// six bits per byte, each byte offset by 63. Trailing newline is tolerated.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge-list text: "n m" then m lines "u v"; '#' starts a comment.
Graph from_edge_list_text(std::string_view text);
std::string to_edge_list_text(const Graph& g);

enum class GraphFormat { automatic, graph6, edgelist };

GraphFormat format_from_name(std::string_view name);

/// Reads the first graph of a file. `automatic` picks edge-list when the first
/// non-comment line holds two integers, graph6 otherwise.
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format = GraphFormat::automatic);
Graph parse_graph_text(std::string_view text, GraphFormat format = GraphFormat::automatic);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace pdpoly
