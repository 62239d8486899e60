#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "barbed/distance.hpp"
#include "barbed/graph.hpp"
#include "barbed/mst.hpp"
#include "barbed/path_system.hpp"
#include "barbed/persistence.hpp"

namespace barbed {

// ---------------------------------------------------------------------------
// Seeded random corpora

/// Parameters of a reproducible family of random connected graphs. Graph i
/// depends only on (seed, i).
struct CorpusParams {
  std::uint64_t seed = 1;
  std::size_t n_min = 4;
  std::size_t n_max = 10;
  double p_min = 0.2;
  double p_max = 0.8;
  double w_min = 1.0;
  double w_max = 10.0;
  bool integer_weights = true;
};

/// Throws PreconditionFailed on inconsistent bounds.
void validate(const CorpusParams& params);

WeightedGraph corpus_graph(const CorpusParams& params, std::uint64_t index);

// ---------------------------------------------------------------------------
// Injection between 1-dimensional barcodes

enum class InjectionFailure { MissingInTarget, BirthMismatch, DeathDecreased };

std::string to_string(InjectionFailure reason);

struct InjectionReport {
  struct Match {
    VertexPair birth_edge;
    Bar source;
    Bar target;
  };
  struct Failure {
    VertexPair birth_edge;
    InjectionFailure reason;
  };

  std::string source_label;
  std::string target_label;
  /// The MST both reductions share; its edges lead the tie order.
  SpanningTree shared_mst;
  Barcode source_barcode;
  Barcode target_barcode;
  std::vector<Match> matched;
  std::vector<Bar> unmatched_target;
  std::vector<Failure> failures;
  bool ok = true;
};

/// Computes bcd_1 of both induced distances under one shared tie order
/// (canonical MST of g first), matches bars by birth edge and checks equal
/// births and non-decreasing deaths.
///
/// Throws PreconditionFailed if either pcf is not cost-dominated or the
/// small distance is not pointwise below the large one; InconsistentPaths
/// if a pcf is inconsistent.
InjectionReport verify_injection(const WeightedGraph& g, const PathChoiceFunction& pcf_small,
                                 const PathChoiceFunction& pcf_large, std::string small_label = "small",
                                 std::string large_label = "large");

// ---------------------------------------------------------------------------
// Birth-edge audit

enum class BirthEdgeViolation { NotAGraphEdge, WeightMismatch, DominatingMidpoint, DuplicateBirthEdge };

std::string to_string(BirthEdgeViolation kind);

struct BirthEdgeAudit {
  struct Violation {
    std::vector<Vertex> birth_simplex;
    BirthEdgeViolation kind;
    /// Offending vertex for DominatingMidpoint.
    std::optional<Vertex> midpoint;
  };

  Barcode barcode;
  std::vector<Violation> violations;
  bool ok = true;
};

/// For bcd_1 of the pcf's distance: every birth simplex is an edge of g,
/// its weight equals the distance between its endpoints, and no vertex is
/// strictly closer than that to both endpoints.
BirthEdgeAudit audit_birth_edges(const WeightedGraph& g, const PathChoiceFunction& pcf,
                                 const SimplexOrdering& ordering = SimplexOrdering::lexicographic());

// ---------------------------------------------------------------------------
// MST invariance under completion

struct MstInvarianceReport {
  /// MST(G) and MST(K^g) as sets of weighted edge lists.
  std::vector<std::vector<Edge>> mst_g;
  std::vector<std::vector<Edge>> mst_kg;
  bool equal = false;
  bool weight_dominated = false;
};

/// Reports whether MST(G) = MST(K^g); it never asserts, callers decide what
/// a difference means (it is only a violation when weight_dominated holds).
MstInvarianceReport check_mst_invariance(const WeightedGraph& g, const PathChoiceFunction& pcf,
                                         const MstEnumerationLimits& limits = {});

// ---------------------------------------------------------------------------
// Poset of distances

struct PosetExtremes {
  std::optional<std::size_t> least;
  std::optional<std::size_t> greatest;
};

/// Index of an element below (above) every other, by pointwise comparison.
/// Throws PreconditionFailed for an empty list or mixed sizes.
PosetExtremes poset_extremes(const std::vector<DistanceMatrix>& distances);

struct DominatedFamily {
  /// One pcf per distinct induced distance, first in enumeration order.
  std::vector<PathChoiceFunction> pcfs;
  std::vector<DistanceMatrix> distances;
  /// Number of cost-dominated pcfs before collapsing equal distances.
  std::size_t pcf_count = 0;
};

/// All cost-dominated path-representable distances on g.
DominatedFamily cost_dominated_distances(const WeightedGraph& g, const PcfEnumerationOptions& options = {});

/// Two cost-dominated pcfs on a cycle with no common upper bound.
///
/// With v0 = 0 and consecutive vertices i, i+1 not adjacent to v0, the first
/// routes v0 -> i the way that avoids i+1 and v0 -> i+1 through i; the second
/// does the opposite. When |A - B| < c (A, B the two one-sided lengths, c
/// the weight of edge (i, i+1)) each is strictly larger on one of the two
/// pairs, so an upper bound must route v0 -> i through i+1 and v0 -> i+1
/// through i, which no consistent pcf can do.
struct NoGreatestCertificate {
  Vertex v0 = 0;
  Vertex vi = 0;
  PathChoiceFunction first;
  PathChoiceFunction second;
  DistanceMatrix first_distance;
  DistanceMatrix second_distance;
};

/// Returns nullopt when g is not a cycle on >= 5 vertices or no consecutive
/// pair satisfies the length condition.
std::optional<NoGreatestCertificate> find_no_greatest_certificate(const WeightedGraph& g);

// ---------------------------------------------------------------------------
// Higher-dimensional counterexample search

struct SearchParams {
  std::size_t k = 2;
  std::size_t trials = 10'000;
  CorpusParams corpus{.seed = 7, .n_min = 6, .n_max = 10, .p_min = 0.4, .p_max = 0.9, .w_min = 1.0, .w_max = 10.0};
  std::size_t threads = 1;
};

struct CounterexampleWitness {
  std::uint64_t trial = 0;
  WeightedGraph graph;
  std::size_t edge_bars = 0;
  std::size_t weight_bars = 0;
};

struct SearchResult {
  std::optional<CounterexampleWitness> witness;
  /// Trials up to and including the witness, or all of them.
  std::size_t trials_examined = 0;
};

/// |bcd_k(d_edge)| and |bcd_k(d_weight)| for one graph.
std::pair<std::size_t, std::size_t> barcode_sizes(const WeightedGraph& g, std::size_t k);

/// First trial (lowest index) whose graph has |bcd_k(d_edge)| <
/// |bcd_k(d_weight)|. The result does not depend on the thread count.
/// Throws PreconditionFailed for k < 2.
SearchResult search_counterexample(const SearchParams& params);

}  // namespace barbed
