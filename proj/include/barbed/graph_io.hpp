#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "barbed/graph.hpp"

namespace barbed {

/// Parses the edge-list format:
///
///   # comment
///   n 4          (optional header; otherwise 1 + max vertex id)
///   0 1 1.5      (one edge per line: u v weight)
///
/// Throws ParseError carrying the offending 1-based line number.
WeightedGraph parse_graph(std::string_view text);

WeightedGraph read_graph_file(const std::filesystem::path& path);

/// Header line plus edges in canonical order, weights in shortest
/// round-trip form. parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const WeightedGraph& g);

/// Shortest decimal string that parses back to the same double.
std::string format_number(double value);

}  // namespace barbed
