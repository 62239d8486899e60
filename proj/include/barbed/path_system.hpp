#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "barbed/distance.hpp"
#include "barbed/graph.hpp"

namespace barbed {

/// Vertex sequence of a simple path.
using Path = std::vector<Vertex>;

/// One simple path per unordered vertex pair.
///
/// Stored on unordered pairs: the route for {a, b} (a < b) runs from a to b
/// and is read backwards for (b, a). Construction checks that every route is
/// a simple path of the graph with the right endpoints; consistency is a
/// separate, reportable property (see check_consistency).
class PathChoiceFunction {
 public:
  PathChoiceFunction() = default;

  /// routes[pair_index(n, a, b)] is the route for {a, b}, in either
  /// orientation. Throws InvalidGraph if a route is missing or invalid.
  PathChoiceFunction(const WeightedGraph& g, std::vector<Path> routes);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t pair_count() const noexcept { return routes_.size(); }

  /// Route oriented from a to b (a != b).
  Path route(Vertex a, Vertex b) const;
  /// Route for {a, b} oriented from min to max.
  const Path& stored_route(Vertex a, Vertex b) const { return routes_[pair_index(n_, a, b)]; }
  std::span<const Path> routes() const noexcept { return routes_; }

  friend bool operator==(const PathChoiceFunction&, const PathChoiceFunction&) = default;
  friend auto operator<=>(const PathChoiceFunction& a, const PathChoiceFunction& b) { return a.routes_ <=> b.routes_; }

 private:
  std::size_t n_ = 0;
  std::vector<Path> routes_;
};

/// Builds a pcf from (pair, route) entries. Throws InvalidGraph when a pair is
/// missing or assigned twice.
PathChoiceFunction make_path_choice(const WeightedGraph& g, std::span<const Path> routes_any_order);

struct ConsistencyViolation {
  /// Pair whose route encloses `inner`'s endpoints.
  VertexPair outer;
  /// Pair whose stored route disagrees with the enclosing sub-path.
  VertexPair inner;

  friend bool operator==(const ConsistencyViolation&, const ConsistencyViolation&) = default;
};

struct ConsistencyReport {
  bool ok = true;
  std::vector<ConsistencyViolation> violations;
};

/// Every route's sub-path between any two of its vertices must be the route
/// stored for that pair.
ConsistencyReport check_consistency(const PathChoiceFunction& pcf);

/// Repeatedly overwrites a violating pair with the enclosing sub-path,
/// longest enclosing route first, until no violation remains. Throws
/// InconsistentPaths if no fixpoint is reached within pair_count^2 rounds.
PathChoiceFunction repair_consistency(const WeightedGraph& g, PathChoiceFunction pcf);

/// Sum of edge weights along each route. Throws InconsistentPaths unless the
/// pcf is consistent.
DistanceMatrix distance_from_paths(const WeightedGraph& g, const PathChoiceFunction& pcf, std::string label = {});

/// The path system realizing d_weight (mode Weight) or d_edge (mode Edge).
/// Ties between optimal paths follow the edge-set order of optimal_paths,
/// which already yields a consistent system; repair_consistency runs as a
/// fallback if the check ever fails.
PathChoiceFunction extract_paths(const WeightedGraph& g, PathMode mode);

enum class DominanceFilter { None, Weight, Cost };

struct PcfEnumerationOptions {
  std::size_t max_vertices = 7;
  std::size_t max_results = 2'000'000;
  /// Prune branches that break the chosen dominance condition.
  DominanceFilter filter = DominanceFilter::None;
};

/// Every consistent pcf on g exactly once, in lexicographic order of the
/// route sequence. Throws CapExceeded above the vertex or result caps.
std::vector<PathChoiceFunction> enumerate_pcfs(const WeightedGraph& g, const PcfEnumerationOptions& options = {});

/// All simple paths from a to b, lexicographically sorted.
std::vector<Path> simple_paths(const WeightedGraph& g, Vertex a, Vertex b);

struct DominanceReport {
  bool weight_dominated = true;
  bool cost_dominated = true;
  /// Graph edges routed around without being strictly heavier than every
  /// edge on the route.
  std::vector<VertexPair> weight_violations;
  /// Graph edges routed around that are lighter than the route's total.
  std::vector<VertexPair> cost_violations;
};

/// Throws InconsistentPaths.
DominanceReport classify_dominance(const WeightedGraph& g, const PathChoiceFunction& pcf);

/// Complete graph on the same vertices weighted by the induced distance.
/// Throws InconsistentPaths.
WeightedGraph graph_completion(const WeightedGraph& g, const PathChoiceFunction& pcf);

/// Routes not contained in any other route, sorted. Throws InconsistentPaths.
std::vector<Path> maximal_paths(const PathChoiceFunction& pcf);

/// Inverse of maximal_paths: every sub-path of every given path becomes the
/// route of its endpoints. Throws InvalidGraph if the paths disagree on a
/// pair or leave a pair uncovered.
PathChoiceFunction expand_maximal_paths(const WeightedGraph& g, std::span<const Path> paths);

/// Sum of edge weights along a path of g.
double path_weight(const WeightedGraph& g, std::span<const Vertex> path);

}  // namespace barbed
