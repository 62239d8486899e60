#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "barbed/graph.hpp"

namespace barbed {

enum class Provenance { Weight, Edge, PathSystem };

std::string to_string(Provenance p);

/// Symmetric all-pairs distance table with zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  /// values is row-major n*n. Throws InvalidGraph on a size mismatch or
  /// on negative or non-finite entries; symmetry is reported by
  /// metric_axioms rather than enforced here.
  DistanceMatrix(std::size_t n, std::vector<double> values, Provenance provenance, std::string label = {},
                 std::optional<std::vector<std::uint32_t>> hop_counts = std::nullopt);

  std::size_t size() const noexcept { return n_; }
  double operator()(Vertex v, Vertex w) const { return values_[v * n_ + w]; }
  const std::vector<double>& values() const noexcept { return values_; }
  Provenance provenance() const noexcept { return provenance_; }
  /// Free-form tag for path-system distances (e.g. the pcf file name).
  const std::string& label() const noexcept { return label_; }
  /// Minimum edge counts m_vw; populated for Provenance::Edge.
  const std::optional<std::vector<std::uint32_t>>& hop_counts() const noexcept { return hops_; }
  std::optional<std::uint32_t> hops(Vertex v, Vertex w) const {
    if (!hops_) return std::nullopt;
    return (*hops_)[v * n_ + w];
  }

  /// Same entries, regardless of provenance.
  bool same_values(const DistanceMatrix& other) const { return n_ == other.n_ && values_ == other.values_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
  Provenance provenance_ = Provenance::Weight;
  std::string label_;
  std::optional<std::vector<std::uint32_t>> hops_;
};

/// Which optimality criterion a path family follows.
enum class PathMode { Weight, Edge };

/// Minimum total weight over all paths.
DistanceMatrix d_weight(const WeightedGraph& g);

/// Minimum total weight among the paths with the fewest edges.
DistanceMatrix d_edge(const WeightedGraph& g);

inline DistanceMatrix distance_for(const WeightedGraph& g, PathMode mode) {
  return mode == PathMode::Weight ? d_weight(g) : d_edge(g);
}

/// Per-source optimal path trees under the mode's key, with ties broken by a
/// fixed edge-set order: among equally good paths the one whose set of edge
/// ids is smallest as a binary number (highest id most significant) wins.
/// That tie-break is an infinitesimal additive perturbation of the weights,
/// so every optimal path is unique and every sub-path of an optimal path is
/// itself the optimal path between its endpoints.
struct OptimalPathForest {
  std::size_t n = 0;
  /// parent[s * n + v] = predecessor of v on the path from s (v itself if v == s).
  std::vector<Vertex> parent;
  std::vector<double> cost;
  std::vector<std::uint32_t> hops;

  /// Vertex sequence from s to t.
  std::vector<Vertex> route(Vertex s, Vertex t) const;
};

/// Throws DisconnectedGraph.
OptimalPathForest optimal_paths(const WeightedGraph& g, PathMode mode);

enum class PartialOrder { Equal, LessEqual, GreaterEqual, Incomparable };

std::string to_string(PartialOrder order);

/// Pointwise comparison. LessEqual means d1 <= d2 everywhere and strictly
/// smaller somewhere. Throws PreconditionFailed on size mismatch.
PartialOrder compare_pointwise(const DistanceMatrix& d1, const DistanceMatrix& d2);

/// True for Equal or LessEqual.
inline bool is_below(PartialOrder order) { return order == PartialOrder::Equal || order == PartialOrder::LessEqual; }

struct MetricReport {
  bool symmetric = true;
  /// Zero on the diagonal and positive off it.
  bool identity = true;
  bool triangle = true;
};

/// Checks each axiom over all pairs and triples, with exact comparisons.
MetricReport metric_axioms(const DistanceMatrix& d);

}  // namespace barbed
