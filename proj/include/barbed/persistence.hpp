#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "barbed/distance.hpp"
#include "barbed/graph.hpp"
#include "barbed/mst.hpp"

namespace barbed {

struct Simplex {
  /// Sorted vertex ids.
  std::vector<Vertex> vertices;
  /// Filtration value: 0 for vertices, otherwise the largest pairwise
  /// distance among the vertices.
  double value = 0.0;

  std::size_t dim() const noexcept { return vertices.size() - 1; }
};

/// Tie order among simplices of equal filtration value.
///
/// The full order is (value, dimension, tie key), so faces always precede
/// their cofaces and only same-value, same-dimension simplices are permuted.
class SimplexOrdering {
 public:
  /// Sorted vertex tuples, lexicographically.
  static SimplexOrdering lexicographic();
  /// Listed edges come first among equal-valued edges (in canonical edge
  /// order); everything else is lexicographic.
  static SimplexOrdering preferring_edges(std::vector<VertexPair> edges);
  /// Pseudo-random tie order derived from the seed.
  static SimplexOrdering shuffled(std::uint64_t seed);

  bool tie_less(std::span<const Vertex> a, std::span<const Vertex> b) const;

  std::string describe() const;

 private:
  enum class Kind { Lexicographic, PreferredEdges, Shuffled };
  std::uint64_t primary_key(std::span<const Vertex> s) const;

  Kind kind_ = Kind::Lexicographic;
  std::vector<VertexPair> preferred_;
  std::uint64_t seed_ = 0;
};

/// Vietoris-Rips complex up to a fixed dimension, sorted in filtration
/// order. Position in `simplices()` is the column/row index used by the
/// reduction.
class FilteredComplex {
 public:
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t max_dim() const noexcept { return max_dim_; }
  std::span<const Simplex> simplices() const noexcept { return simplices_; }
  const Simplex& simplex(std::size_t index) const { return simplices_.at(index); }
  std::size_t size() const noexcept { return simplices_.size(); }
  const SimplexOrdering& ordering() const noexcept { return ordering_; }

  /// Filtration index of the simplex with these sorted vertices.
  std::size_t index_of(std::span<const Vertex> vertices) const;

  /// Same simplices, re-sorted under another tie order.
  FilteredComplex with_ordering(SimplexOrdering ordering) const;

  /// Facet indices of simplex `index`, ascending.
  std::vector<std::size_t> boundary(std::size_t index) const;

 private:
  friend FilteredComplex build_filtration(const DistanceMatrix&, std::size_t, SimplexOrdering, std::size_t);
  void sort_and_index();

  std::size_t n_ = 0;
  std::size_t max_dim_ = 0;
  std::vector<Simplex> simplices_;
  SimplexOrdering ordering_;
  // binomial_[k][v] = C(v, k)
  std::vector<std::vector<std::uint64_t>> binomial_;
  // position_[dim][combinatorial index] = filtration index
  std::vector<std::vector<std::size_t>> position_;
};

inline constexpr std::size_t kDefaultSimplexBudget = 2'000'000;

/// Number of simplices of dimension <= max_dim on n vertices.
std::uint64_t simplex_count(std::size_t n, std::size_t max_dim);

/// All simplices of dimension <= max_dim (dimensions above n-1 are simply
/// empty). Throws PreconditionFailed for max_dim == 0 and CapExceeded when
/// the simplex count exceeds the budget.
FilteredComplex build_filtration(const DistanceMatrix& d, std::size_t max_dim,
                                 SimplexOrdering ordering = SimplexOrdering::lexicographic(),
                                 std::size_t budget = kDefaultSimplexBudget);

/// Reduced boundary matrix over Z/2.
struct ReducedMatrix {
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  /// Reduced columns as ascending row-index sets.
  std::vector<std::vector<std::size_t>> columns;
  /// low[j] = last nonzero row of column j, or kNone for a zero column.
  std::vector<std::size_t> low;
  /// (birth index, death index) with low[death] == birth.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// Zero columns that no column reduces to (infinite bars).
  std::vector<std::size_t> essential;
  /// Column operations as ascending index sets (R = D V); only filled when
  /// requested.
  std::optional<std::vector<std::vector<std::size_t>>> v_columns;
};

/// Left-to-right column reduction: while an earlier column shares the low
/// of column j, add it to column j.
ReducedMatrix reduce(const FilteredComplex& complex, bool keep_v = false);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Bar {
  double birth = 0.0;
  /// kInfinity for essential classes.
  double death = kInfinity;
  /// Simplex whose arrival creates the class; empty for unannotated bars.
  std::vector<Vertex> birth_simplex;

  friend bool operator==(const Bar&, const Bar&) = default;
};

struct Barcode {
  std::size_t k = 0;
  /// Sorted by (birth, death, birth_simplex).
  std::vector<Bar> bars;

  std::size_t size() const noexcept { return bars.size(); }
  /// (birth, death) multiset, sorted.
  std::vector<std::pair<double, double>> intervals() const;
};

void sort_bars(std::vector<Bar>& bars);

/// Bars of dimension k: pairs with strictly smaller birth value than death
/// value, plus essential k-columns. Requires k < complex.max_dim().
Barcode extract_barcode(const ReducedMatrix& rm, const FilteredComplex& complex, std::size_t k);

/// Filtration + reduction + extraction in one call; builds the
/// (k+1)-skeleton.
Barcode compute_barcode(const DistanceMatrix& d, std::size_t k,
                        const SimplexOrdering& ordering = SimplexOrdering::lexicographic(),
                        std::size_t budget = kDefaultSimplexBudget);

/// Tie order that places the tree's edges first among equal-valued edges.
/// Throws PreconditionFailed if the tree does not span n vertices.
SimplexOrdering canonical_ordering(std::size_t n, const SpanningTree& mst);
SimplexOrdering canonical_ordering(const FilteredComplex& complex, const SpanningTree& mst);

/// Complete graph on the complex's vertices weighted by edge values.
WeightedGraph one_skeleton(const FilteredComplex& complex);

/// The edges whose reduced column has its low in a vertex row. These are
/// exactly the merges of Kruskal's algorithm run in filtration order.
/// Throws Error if they do not form a spanning tree.
SpanningTree mst_from_reduction(const ReducedMatrix& rm, const FilteredComplex& complex);

}  // namespace barbed
