#include "barbed/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "barbed/errors.hpp"

namespace barbed {

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count == 0) throw InvalidGraph("graph needs at least one vertex");
  for (Edge& e : edges) {
    if (e.u == e.v) throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw InvalidGraph("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside vertex range");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw InvalidGraph("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has nonpositive weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw InvalidGraph("duplicate edge (" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) + ")");
  }
  edges_ = std::move(edges);

  std::vector<std::size_t> degree(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(vertex_count_ + 1, 0);
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  pair_lookup_.assign(pair_count(vertex_count_), 0);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
    pair_lookup_[pair_index(vertex_count_, e.u, e.v)] = id + 1;
  }
  // Neighbor lists sorted by vertex id: traversal order is deterministic.
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

std::optional<std::size_t> WeightedGraph::edge_id(Vertex a, Vertex b) const {
  if (a == b || a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
  const std::size_t slot = pair_lookup_[pair_index(vertex_count_, a, b)];
  if (slot == 0) return std::nullopt;
  return slot - 1;
}

std::optional<double> WeightedGraph::weight(Vertex a, Vertex b) const {
  if (auto id = edge_id(a, b)) return edges_[*id].weight;
  return std::nullopt;
}

bool is_connected(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(v)) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        ++reached;
        stack.push_back(nb.vertex);
      }
    }
  }
  return reached == n;
}

WeightedGraph cycle_graph(std::size_t n, std::span<const double> weights) {
  if (n < 3) throw PreconditionFailed("cycle_graph needs n >= 3, got " + std::to_string(n));
  if (weights.size() != n)
    throw PreconditionFailed("cycle_graph expects " + std::to_string(n) + " weights, got " +
                             std::to_string(weights.size()));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), weights[i]});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph path_graph(std::span<const double> weights) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < weights.size(); ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), weights[i]});
  return WeightedGraph(weights.size() + 1, std::move(edges));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a mix of both inputs
  std::uint64_t z = seed ^ (index + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

WeightedGraph random_connected_graph(const RandomGraphParams& params) {
  const std::size_t n = params.vertex_count;
  if (n < 2) throw PreconditionFailed("random_connected_graph needs n >= 2");
  if (!(params.edge_probability >= 0.0 && params.edge_probability <= 1.0))
    throw PreconditionFailed("edge probability must lie in [0, 1]");
  if (!(params.weight_lo > 0.0 && params.weight_lo <= params.weight_hi))
    throw PreconditionFailed("weight bounds must satisfy 0 < lo <= hi");

  std::mt19937_64 rng(params.seed);
  auto draw_weight = [&]() -> double {
    if (params.integer_weights) {
      const auto lo = static_cast<long long>(std::ceil(params.weight_lo));
      const auto hi = static_cast<long long>(std::floor(params.weight_hi));
      if (lo > hi) throw PreconditionFailed("no integer weight inside [lo, hi]");
      return static_cast<double>(std::uniform_int_distribution<long long>(lo, hi)(rng));
    }
    return std::uniform_real_distribution<double>(params.weight_lo, params.weight_hi)(rng);
  };

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<char> present(pair_count(n), 0);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex parent = order[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
    const Vertex child = order[i];
    present[pair_index(n, parent, child)] = 1;
    edges.push_back({parent, child, draw_weight()});
  }
  std::bernoulli_distribution coin(params.edge_probability);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (present[pair_index(n, a, b)]) continue;
      if (coin(rng)) edges.push_back({a, b, draw_weight()});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

}  // namespace barbed
