#include "barbed/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "barbed/errors.hpp"

namespace barbed {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Weight: return "weight";
    case Provenance::Edge: return "edge";
    case Provenance::PathSystem: return "path-system";
  }
  return "unknown";
}

std::string to_string(PartialOrder order) {
  switch (order) {
    case PartialOrder::Equal: return "equal";
    case PartialOrder::LessEqual: return "le";
    case PartialOrder::GreaterEqual: return "ge";
    case PartialOrder::Incomparable: return "incomparable";
  }
  return "unknown";
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values, Provenance provenance, std::string label,
                               std::optional<std::vector<std::uint32_t>> hop_counts)
    : n_(n), values_(std::move(values)), provenance_(provenance), label_(std::move(label)), hops_(std::move(hop_counts)) {
  if (values_.size() != n_ * n_) throw InvalidGraph("distance table must hold n*n values");
  if (hops_ && hops_->size() != n_ * n_) throw InvalidGraph("hop table must hold n*n values");
  for (double x : values_) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw InvalidGraph("distance entries must be finite and nonnegative");
  }
}

namespace {

// Binary number with bit i set for each edge id i, added with carry.
class EdgeSetKey {
 public:
  EdgeSetKey() = default;
  explicit EdgeSetKey(std::size_t edge_count) : words_((edge_count + 63) / 64, 0) {}

  EdgeSetKey plus_edge(std::size_t id) const {
    EdgeSetKey out = *this;
    std::size_t word = id / 64;
    std::uint64_t add = std::uint64_t{1} << (id % 64);
    while (word < out.words_.size() && add) {
      const std::uint64_t before = out.words_[word];
      out.words_[word] += add;
      add = out.words_[word] < before ? 1 : 0;
      ++word;
    }
    return out;
  }

  friend int compare(const EdgeSetKey& a, const EdgeSetKey& b) {
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i] ? -1 : 1;
    }
    return 0;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Label {
  std::uint32_t hops = 0;
  double weight = 0.0;
  EdgeSetKey tie;
};

bool better(const Label& a, const Label& b, PathMode mode) {
  if (mode == PathMode::Edge && a.hops != b.hops) return a.hops < b.hops;
  if (a.weight != b.weight) return a.weight < b.weight;
  return compare(a.tie, b.tie) < 0;
}

}  // namespace

std::vector<Vertex> OptimalPathForest::route(Vertex s, Vertex t) const {
  std::vector<Vertex> out{t};
  Vertex v = t;
  while (v != s) {
    v = parent[s * n + v];
    out.push_back(v);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

OptimalPathForest optimal_paths(const WeightedGraph& g, PathMode mode) {
  const std::size_t n = g.vertex_count();
  OptimalPathForest forest;
  forest.n = n;
  forest.parent.assign(n * n, 0);
  forest.cost.assign(n * n, 0.0);
  forest.hops.assign(n * n, 0);

  // Dense Dijkstra: graphs here are small and keys are not cheap to heap.
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::optional<Label>> label(n);
    std::vector<char> done(n, 0);
    std::vector<Vertex> parent(n, s);
    label[s] = Label{0, 0.0, EdgeSetKey(g.edge_count())};
    for (std::size_t round = 0; round < n; ++round) {
      std::optional<Vertex> pick;
      for (Vertex v = 0; v < n; ++v) {
        if (done[v] || !label[v]) continue;
        if (!pick || better(*label[v], *label[*pick], mode)) pick = v;
      }
      if (!pick) throw DisconnectedGraph();
      const Vertex u = *pick;
      done[u] = 1;
      for (const auto& nb : g.neighbors(u)) {
        if (done[nb.vertex]) continue;
        Label cand{label[u]->hops + 1, label[u]->weight + g.edge(nb.edge).weight, label[u]->tie.plus_edge(nb.edge)};
        if (!label[nb.vertex] || better(cand, *label[nb.vertex], mode)) {
          label[nb.vertex] = std::move(cand);
          parent[nb.vertex] = u;
        }
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      forest.parent[s * n + v] = parent[v];
      forest.cost[s * n + v] = label[v]->weight;
      forest.hops[s * n + v] = label[v]->hops;
    }
  }
  return forest;
}

DistanceMatrix d_weight(const WeightedGraph& g) {
  auto forest = optimal_paths(g, PathMode::Weight);
  return DistanceMatrix(g.vertex_count(), std::move(forest.cost), Provenance::Weight);
}

DistanceMatrix d_edge(const WeightedGraph& g) {
  auto forest = optimal_paths(g, PathMode::Edge);
  return DistanceMatrix(g.vertex_count(), std::move(forest.cost), Provenance::Edge, {}, std::move(forest.hops));
}

PartialOrder compare_pointwise(const DistanceMatrix& d1, const DistanceMatrix& d2) {
  if (d1.size() != d2.size())
    throw PreconditionFailed("cannot compare distances on " + std::to_string(d1.size()) + " and " +
                             std::to_string(d2.size()) + " vertices");
  bool below = false, above = false;
  const auto& a = d1.values();
  const auto& b = d2.values();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) below = true;
    if (a[i] > b[i]) above = true;
  }
  if (below && above) return PartialOrder::Incomparable;
  if (below) return PartialOrder::LessEqual;
  if (above) return PartialOrder::GreaterEqual;
  return PartialOrder::Equal;
}

MetricReport metric_axioms(const DistanceMatrix& d) {
  MetricReport report;
  const std::size_t n = d.size();
  for (Vertex v = 0; v < n; ++v) {
    if (d(v, v) != 0.0) report.identity = false;
    for (Vertex w = 0; w < n; ++w) {
      if (d(v, w) != d(w, v)) report.symmetric = false;
      if (v != w && !(d(v, w) > 0.0)) report.identity = false;
      for (Vertex u = 0; u < n; ++u) {
        if (d(v, w) > d(v, u) + d(u, w)) report.triangle = false;
      }
    }
  }
  return report;
}

}  // namespace barbed
