#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "barbed/graph.hpp"

namespace barbed {

/// Spanning tree of a specific graph, edges in canonical order.
struct SpanningTree {
  std::vector<VertexPair> edges;
  double total_weight = 0.0;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
  friend auto operator<=>(const SpanningTree& a, const SpanningTree& b) { return a.edges <=> b.edges; }
};

/// Checks that `edges` form a spanning tree of g (n-1 edges of g, acyclic)
/// and returns it canonicalized. Throws InvalidGraph otherwise.
SpanningTree make_spanning_tree(const WeightedGraph& g, std::vector<VertexPair> edges);

/// Kruskal over edges sorted by (weight, priority[edge id]). An empty
/// priority means canonical edge order. Throws DisconnectedGraph.
SpanningTree kruskal_mst(const WeightedGraph& g, std::span<const std::size_t> priority = {});

struct MstEnumerationLimits {
  std::size_t max_vertices = 10;
  std::size_t max_trees = 1'000'000;
};

/// Every minimum spanning tree of g, sorted. Works weight class by weight
/// class: the components left after all lighter classes are the same for
/// every MST, so MST(g) is the product of the per-class choices of
/// spanning forests on the contracted graph.
std::vector<SpanningTree> enumerate_msts(const WeightedGraph& g, const MstEnumerationLimits& limits = {});

/// Union-find with path halving; small utility shared by MST code and tests.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace barbed
