#include "barbed/mst.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "barbed/errors.hpp"

namespace barbed {

DisjointSets::DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  parent_[b] = a;
  return true;
}

SpanningTree make_spanning_tree(const WeightedGraph& g, std::vector<VertexPair> edges) {
  const std::size_t n = g.vertex_count();
  if (edges.size() + 1 != n)
    throw InvalidGraph("spanning tree needs " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
  SpanningTree tree;
  DisjointSets sets(n);
  for (auto& [a, b] : edges) {
    const auto w = g.weight(a, b);
    if (!w) throw InvalidGraph("tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") is not in the graph");
    if (!sets.unite(a, b)) throw InvalidGraph("tree edges contain a cycle");
    if (a > b) std::swap(a, b);
    tree.total_weight += *w;
  }
  std::sort(edges.begin(), edges.end());
  tree.edges = std::move(edges);
  return tree;
}

SpanningTree kruskal_mst(const WeightedGraph& g, std::span<const std::size_t> priority) {
  if (!priority.empty() && priority.size() != g.edge_count())
    throw PreconditionFailed("tie-break priority must rank every edge");
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto rank = [&](std::size_t id) { return priority.empty() ? id : priority[id]; };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double wa = g.edge(a).weight, wb = g.edge(b).weight;
    if (wa != wb) return wa < wb;
    return rank(a) < rank(b);
  });

  DisjointSets sets(g.vertex_count());
  std::vector<VertexPair> chosen;
  for (std::size_t id : order) {
    const Edge& e = g.edge(id);
    if (sets.unite(e.u, e.v)) chosen.emplace_back(e.u, e.v);
  }
  if (chosen.size() + 1 != g.vertex_count()) throw DisconnectedGraph();
  return make_spanning_tree(g, std::move(chosen));
}

namespace {

// All maximal acyclic subsets of `edges` (given as component-id pairs) that
// merge exactly `rank` components. Each result is a list of indices into
// `edges`.
void enumerate_bases(const std::vector<VertexPair>& edges, std::size_t rank, std::size_t next,
                     std::vector<std::size_t>& current, std::vector<std::size_t>& parent,
                     std::vector<std::vector<std::size_t>>& out, std::size_t max_out) {
  if (current.size() == rank) {
    out.push_back(current);
    if (out.size() > max_out) throw CapExceeded("MST count exceeds cap of " + std::to_string(max_out));
    return;
  }
  if (edges.size() - next < rank - current.size()) return;
  for (std::size_t i = next; i < edges.size(); ++i) {
    if (edges.size() - i < rank - current.size()) break;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    const std::size_t a = find(edges[i].first), b = find(edges[i].second);
    if (a == b) continue;
    parent[b] = a;
    current.push_back(i);
    enumerate_bases(edges, rank, i + 1, current, parent, out, max_out);
    current.pop_back();
    parent[b] = b;
  }
}

}  // namespace

std::vector<SpanningTree> enumerate_msts(const WeightedGraph& g, const MstEnumerationLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (n > limits.max_vertices)
    throw CapExceeded("MST enumeration is capped at " + std::to_string(limits.max_vertices) + " vertices, graph has " +
                      std::to_string(n));
  if (!is_connected(g)) throw DisconnectedGraph();

  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.edge(a).weight < g.edge(b).weight; });

  // Partial trees built so far, as edge-id lists.
  std::vector<std::vector<std::size_t>> partial{{}};
  DisjointSets components(n);

  for (std::size_t start = 0; start < order.size();) {
    std::size_t stop = start;
    while (stop < order.size() && g.edge(order[stop]).weight == g.edge(order[start]).weight) ++stop;

    std::vector<std::size_t> class_ids;
    std::vector<VertexPair> contracted;
    for (std::size_t k = start; k < stop; ++k) {
      const Edge& e = g.edge(order[k]);
      const std::size_t a = components.find(e.u), b = components.find(e.v);
      if (a == b) continue;
      class_ids.push_back(order[k]);
      contracted.emplace_back(a, b);
    }
    if (!contracted.empty()) {
      DisjointSets probe = components;
      std::size_t rank = 0;
      for (const auto& [a, b] : contracted) rank += probe.unite(a, b) ? 1 : 0;

      std::vector<std::size_t> parent(n);
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      std::vector<std::size_t> current;
      std::vector<std::vector<std::size_t>> bases;
      enumerate_bases(contracted, rank, 0, current, parent, bases, limits.max_trees);

      if (partial.size() * bases.size() > limits.max_trees)
        throw CapExceeded("MST count exceeds cap of " + std::to_string(limits.max_trees));
      std::vector<std::vector<std::size_t>> extended;
      extended.reserve(partial.size() * bases.size());
      for (const auto& tree : partial) {
        for (const auto& basis : bases) {
          auto next = tree;
          for (std::size_t i : basis) next.push_back(class_ids[i]);
          extended.push_back(std::move(next));
        }
      }
      partial = std::move(extended);
      for (const auto& [a, b] : contracted) components.unite(a, b);
    }
    start = stop;
  }

  std::vector<SpanningTree> trees;
  trees.reserve(partial.size());
  for (const auto& ids : partial) {
    std::vector<VertexPair> pairs;
    for (std::size_t id : ids) pairs.emplace_back(g.edge(id).u, g.edge(id).v);
    trees.push_back(make_spanning_tree(g, std::move(pairs)));
  }
  std::sort(trees.begin(), trees.end());
  return trees;
}

}  // namespace barbed
