#pragma once

// Slow reference implementations used only by the tests. None of them calls
// into the library beyond reading a WeightedGraph.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "barbed/graph.hpp"

namespace brute {

using barbed::Vertex;
using barbed::WeightedGraph;
using Path = std::vector<Vertex>;

/// Every simple path from a to b, by depth-first search.
std::vector<Path> all_simple_paths(const WeightedGraph& g, Vertex a, Vertex b);

double weight_of(const WeightedGraph& g, const Path& p);

/// Row-major n*n minimum over all simple paths of total weight.
std::vector<double> shortest_weights(const WeightedGraph& g);

/// Row-major n*n minimum weight among the simple paths with fewest edges.
std::vector<double> fewest_hop_weights(const WeightedGraph& g);

/// Row-major n*n breadth-first hop counts.
std::vector<std::uint32_t> bfs_hops(const WeightedGraph& g);

/// Spanning trees of minimum weight, by testing every (n-1)-subset of edges.
/// Each tree is a sorted list of edge ids; the list is sorted.
std::vector<std::vector<std::size_t>> all_msts(const WeightedGraph& g);

/// Consistent path systems, by taking the full product of simple-path
/// choices per pair and filtering. routes[pair_index] oriented min to max.
std::vector<std::vector<Path>> all_consistent_systems(const WeightedGraph& g);

bool consistent(std::size_t n, const std::vector<Path>& routes);

/// Some (u, v, w) with d(u, w) > d(u, v) + d(v, w), if any.
std::optional<std::array<Vertex, 3>> triangle_violation(std::size_t n, const std::vector<double>& d);

/// Fixture file under tests/fixtures.
std::string fixture_path(const std::string& name);

}  // namespace brute
