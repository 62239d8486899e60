#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace barbed {

using Vertex = std::uint32_t;

/// Undirected edge in canonical orientation (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unordered vertex pair stored as (min, max).
using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair make_pair_key(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

/// Index of the unordered pair {a, b} (a != b) in lexicographic order over
/// all pairs of an n-vertex set.
inline std::size_t pair_index(std::size_t n, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(a) * (2 * n - a - 1) / 2 + (b - a - 1);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Connected-or-not simple undirected graph with strictly positive weights.
///
/// Immutable once built. Edges are kept in canonical order (lexicographic on
/// (min endpoint, max endpoint)); an edge's position in that order is its id.
class WeightedGraph {
 public:
  struct Neighbor {
    Vertex vertex;
    std::size_t edge;
  };

  WeightedGraph() = default;

  /// Validates and canonicalizes. Throws InvalidGraph on self-loops, parallel
  /// edges, nonpositive or non-finite weights, or out-of-range endpoints.
  WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  std::optional<std::size_t> edge_id(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
  std::optional<double> weight(Vertex a, Vertex b) const;

  friend bool operator==(const WeightedGraph& x, const WeightedGraph& y) {
    return x.vertex_count_ == y.vertex_count_ && x.edges_ == y.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  // pair_index -> edge id + 1 (0 = no edge); dense since graphs are small.
  std::vector<std::size_t> pair_lookup_;
};

/// True iff every vertex is reachable from vertex 0.
bool is_connected(const WeightedGraph& g);

/// Cycle on n >= 3 vertices; edge (i, i+1 mod n) gets weights[i].
WeightedGraph cycle_graph(std::size_t n, std::span<const double> weights);

/// Path 0-1-...-(n-1); edge (i, i+1) gets weights[i].
WeightedGraph path_graph(std::span<const double> weights);

struct RandomGraphParams {
  std::size_t vertex_count = 6;
  double edge_probability = 0.5;
  double weight_lo = 1.0;
  double weight_hi = 10.0;
  /// Draw integer weights in [ceil(lo), floor(hi)] instead of reals. Integer
  /// weights keep all path sums exact.
  bool integer_weights = true;
  std::uint64_t seed = 0;
};

/// Random spanning tree first, then every remaining pair independently with
/// edge_probability. Same parameters produce the same graph.
WeightedGraph random_connected_graph(const RandomGraphParams& params);

/// Derives an independent 64-bit stream seed for trial `index` of a campaign.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace barbed
