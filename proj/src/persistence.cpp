#include "barbed/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "barbed/errors.hpp"
#include "barbed/graph_io.hpp"

namespace barbed {

// ---------------------------------------------------------------------------
// Ordering

SimplexOrdering SimplexOrdering::lexicographic() { return {}; }

SimplexOrdering SimplexOrdering::preferring_edges(std::vector<VertexPair> edges) {
  SimplexOrdering o;
  o.kind_ = Kind::PreferredEdges;
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  o.preferred_ = std::move(edges);
  return o;
}

SimplexOrdering SimplexOrdering::shuffled(std::uint64_t seed) {
  SimplexOrdering o;
  o.kind_ = Kind::Shuffled;
  o.seed_ = seed;
  return o;
}

std::uint64_t SimplexOrdering::primary_key(std::span<const Vertex> s) const {
  switch (kind_) {
    case Kind::Lexicographic: return 0;
    case Kind::PreferredEdges:
      if (s.size() != 2) return 0;
      return std::binary_search(preferred_.begin(), preferred_.end(), VertexPair{s[0], s[1]}) ? 0 : 1;
    case Kind::Shuffled: {
      std::uint64_t h = seed_;
      for (Vertex v : s) h = trial_seed(h, v);
      return h;
    }
  }
  return 0;
}

bool SimplexOrdering::tie_less(std::span<const Vertex> a, std::span<const Vertex> b) const {
  const auto ka = primary_key(a), kb = primary_key(b);
  if (ka != kb) return ka < kb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string SimplexOrdering::describe() const {
  switch (kind_) {
    case Kind::Lexicographic: return "lexicographic";
    case Kind::PreferredEdges: return "preferred-edges(" + std::to_string(preferred_.size()) + ")";
    case Kind::Shuffled: return "shuffled(" + std::to_string(seed_) + ")";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Filtration

std::uint64_t simplex_count(std::size_t n, std::size_t max_dim) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;  // C(n, 0)
  for (std::size_t k = 1; k <= std::min(max_dim + 1, n); ++k) {
    c = c * (n - k + 1) / k;
    total += c;
  }
  return total;
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

void FilteredComplex::sort_and_index() {
  std::vector<std::size_t> order(simplices_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const Simplex& a = simplices_[x];
    const Simplex& b = simplices_[y];
    if (a.value != b.value) return a.value < b.value;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return ordering_.tie_less(a.vertices, b.vertices);
  });
  std::vector<Simplex> sorted;
  sorted.reserve(simplices_.size());
  for (std::size_t i : order) sorted.push_back(std::move(simplices_[i]));
  simplices_ = std::move(sorted);

  const std::size_t top = std::min(max_dim_, n_ - 1);
  binomial_.assign(top + 2, std::vector<std::uint64_t>(n_ + 1, 0));
  for (std::size_t k = 0; k <= top + 1; ++k) {
    for (std::size_t v = 0; v <= n_; ++v) binomial_[k][v] = binomial(v, k);
  }
  position_.assign(top + 1, {});
  for (std::size_t d = 0; d <= top; ++d) position_[d].assign(binomial(n_, d + 1), 0);
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    const auto& s = simplices_[i].vertices;
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < s.size(); ++j) code += binomial_[j + 1][s[j]];
    position_[s.size() - 1][code] = i;
  }
}

std::size_t FilteredComplex::index_of(std::span<const Vertex> vertices) const {
  if (vertices.empty() || vertices.size() > position_.size())
    throw PreconditionFailed("simplex dimension outside the complex");
  std::uint64_t code = 0;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (vertices[j] >= n_ || (j > 0 && vertices[j] <= vertices[j - 1]))
      throw PreconditionFailed("simplex vertices must be sorted, distinct and in range");
    code += binomial_[j + 1][vertices[j]];
  }
  return position_[vertices.size() - 1][code];
}

FilteredComplex FilteredComplex::with_ordering(SimplexOrdering ordering) const {
  FilteredComplex out = *this;
  out.ordering_ = std::move(ordering);
  out.sort_and_index();
  return out;
}

std::vector<std::size_t> FilteredComplex::boundary(std::size_t index) const {
  const auto& s = simplices_.at(index).vertices;
  std::vector<std::size_t> out;
  if (s.size() == 1) return out;
  std::vector<Vertex> facet(s.size() - 1);
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != skip) facet[w++] = s[j];
    }
    out.push_back(index_of(facet));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FilteredComplex build_filtration(const DistanceMatrix& d, std::size_t max_dim, SimplexOrdering ordering,
                                 std::size_t budget) {
  const std::size_t n = d.size();
  if (n == 0) throw PreconditionFailed("distance matrix is empty");
  if (max_dim == 0) throw PreconditionFailed("max_dim must be at least 1");
  const std::uint64_t needed = simplex_count(n, max_dim);
  if (needed > budget) {
    std::ostringstream msg;
    msg << "simplex budget exceeded: max_dim " << max_dim << " on " << n << " vertices needs " << needed
        << " simplices (C(" << n << "," << max_dim + 1 << ") = " << binomial(n, max_dim + 1)
        << " in the top dimension), budget " << budget;
    throw CapExceeded(msg.str());
  }

  FilteredComplex complex;
  complex.n_ = n;
  complex.max_dim_ = max_dim;
  complex.ordering_ = std::move(ordering);
  complex.simplices_.reserve(needed);

  const std::size_t top = std::min(max_dim + 1, n);
  for (std::size_t size = 1; size <= top; ++size) {
    std::vector<Vertex> comb(size);
    std::iota(comb.begin(), comb.end(), Vertex{0});
    while (true) {
      double value = 0.0;
      for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = a + 1; b < size; ++b) value = std::max(value, d(comb[a], comb[b]));
      }
      complex.simplices_.push_back({comb, value});
      // next combination
      std::size_t i = size;
      while (i > 0 && comb[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  complex.sort_and_index();
  return complex;
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

void add_into(std::vector<std::size_t>& target, const std::vector<std::size_t>& source,
              std::vector<std::size_t>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

}  // namespace

ReducedMatrix reduce(const FilteredComplex& complex, bool keep_v) {
  const std::size_t m = complex.size();
  ReducedMatrix rm;
  rm.columns.resize(m);
  rm.low.assign(m, ReducedMatrix::kNone);
  if (keep_v) {
    rm.v_columns.emplace(m);
    for (std::size_t j = 0; j < m; ++j) (*rm.v_columns)[j] = {j};
  }
  std::vector<std::size_t> column_with_low(m, ReducedMatrix::kNone);
  std::vector<std::size_t> scratch;

  for (std::size_t j = 0; j < m; ++j) {
    auto& col = rm.columns[j];
    col = complex.boundary(j);
    while (!col.empty()) {
      const std::size_t pivot = column_with_low[col.back()];
      if (pivot == ReducedMatrix::kNone) break;
      add_into(col, rm.columns[pivot], scratch);
      if (keep_v) add_into((*rm.v_columns)[j], (*rm.v_columns)[pivot], scratch);
    }
    if (!col.empty()) {
      rm.low[j] = col.back();
      column_with_low[col.back()] = j;
      rm.pairs.emplace_back(col.back(), j);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (rm.columns[j].empty() && column_with_low[j] == ReducedMatrix::kNone) rm.essential.push_back(j);
  }
  std::sort(rm.pairs.begin(), rm.pairs.end());
  return rm;
}

// ---------------------------------------------------------------------------
// Barcodes

std::vector<std::pair<double, double>> Barcode::intervals() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(bars.size());
  for (const Bar& b : bars) out.emplace_back(b.birth, b.death);
  std::sort(out.begin(), out.end());
  return out;
}

void sort_bars(std::vector<Bar>& bars) {
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
    return std::tie(a.birth, a.death, a.birth_simplex) < std::tie(b.birth, b.death, b.birth_simplex);
  });
}

Barcode extract_barcode(const ReducedMatrix& rm, const FilteredComplex& complex, std::size_t k) {
  if (k + 1 > complex.max_dim())
    throw PreconditionFailed("dimension " + std::to_string(k) + " needs a complex of dimension at least " +
                             std::to_string(k + 1) + ", have " + std::to_string(complex.max_dim()));
  Barcode code;
  code.k = k;
  for (const auto& [birth, death] : rm.pairs) {
    const Simplex& s = complex.simplex(birth);
    if (s.dim() != k) continue;
    const double b = s.value, e = complex.simplex(death).value;
    if (b < e) code.bars.push_back({b, e, s.vertices});
  }
  for (std::size_t j : rm.essential) {
    const Simplex& s = complex.simplex(j);
    if (s.dim() == k) code.bars.push_back({s.value, kInfinity, s.vertices});
  }
  sort_bars(code.bars);
  return code;
}

Barcode compute_barcode(const DistanceMatrix& d, std::size_t k, const SimplexOrdering& ordering, std::size_t budget) {
  const auto complex = build_filtration(d, k + 1, ordering, budget);
  return extract_barcode(reduce(complex), complex, k);
}

SimplexOrdering canonical_ordering(std::size_t n, const SpanningTree& mst) {
  if (mst.edges.size() + 1 != n)
    throw PreconditionFailed("tree has " + std::to_string(mst.edges.size()) + " edges, a spanning tree on " +
                             std::to_string(n) + " vertices needs " + std::to_string(n - 1));
  DisjointSets sets(n);
  for (const auto& [a, b] : mst.edges) {
    if (a >= n || b >= n || a == b) throw PreconditionFailed("tree edge outside the vertex range");
    if (!sets.unite(a, b)) throw PreconditionFailed("tree edges contain a cycle");
  }
  return SimplexOrdering::preferring_edges(mst.edges);
}

SimplexOrdering canonical_ordering(const FilteredComplex& complex, const SpanningTree& mst) {
  return canonical_ordering(complex.vertex_count(), mst);
}

WeightedGraph one_skeleton(const FilteredComplex& complex) {
  std::vector<Edge> edges;
  for (const Simplex& s : complex.simplices()) {
    if (s.dim() == 1) edges.push_back({s.vertices[0], s.vertices[1], s.value});
  }
  return WeightedGraph(complex.vertex_count(), std::move(edges));
}

SpanningTree mst_from_reduction(const ReducedMatrix& rm, const FilteredComplex& complex) {
  SpanningTree tree;
  DisjointSets sets(complex.vertex_count());
  for (std::size_t j = 0; j < complex.size(); ++j) {
    const Simplex& s = complex.simplex(j);
    if (s.dim() != 1 || rm.low[j] == ReducedMatrix::kNone) continue;
    if (complex.simplex(rm.low[j]).dim() != 0) continue;
    if (!sets.unite(s.vertices[0], s.vertices[1])) throw Error("reduction produced a cycle among vertex-killing edges");
    tree.edges.emplace_back(s.vertices[0], s.vertices[1]);
    tree.total_weight += s.value;
  }
  if (tree.edges.size() + 1 != complex.vertex_count())
    throw Error("vertex-killing edges do not span the complex");
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

}  // namespace barbed
