#include "barbed/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "barbed/errors.hpp"

namespace barbed {

namespace {

using BitRow = std::vector<std::uint64_t>;

BitRow make_row(std::size_t bits) { return BitRow((bits + 63) / 64, 0); }
void set_bit(BitRow& r, std::size_t i) { r[i / 64] |= std::uint64_t{1} << (i % 64); }

// Rank over Z/2 of a set of vectors.
std::size_t rank_gf2(std::vector<BitRow> vectors) {
  std::size_t rank = 0;
  if (vectors.empty()) return 0;
  const std::size_t words = vectors.front().size();
  for (std::size_t bit = 0; bit < words * 64 && rank < vectors.size(); ++bit) {
    const std::size_t w = bit / 64;
    const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
    std::size_t pivot = rank;
    while (pivot < vectors.size() && !(vectors[pivot][w] & mask)) ++pivot;
    if (pivot == vectors.size()) continue;
    std::swap(vectors[pivot], vectors[rank]);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      if (r != rank && (vectors[r][w] & mask)) {
        for (std::size_t x = 0; x < words; ++x) vectors[r][x] ^= vectors[rank][x];
      }
    }
    ++rank;
  }
  return rank;
}

struct Level {
  std::vector<std::vector<Vertex>> simplices;
  std::vector<double> values;
  std::map<std::vector<Vertex>, std::size_t> index;
};

}  // namespace

Barcode naive_homology_oracle(const FilteredComplex& complex, std::size_t k, std::size_t max_vertices) {
  if (complex.vertex_count() > max_vertices)
    throw CapExceeded("rank oracle is capped at " + std::to_string(max_vertices) + " vertices");
  if (k + 1 > complex.max_dim())
    throw PreconditionFailed("oracle needs simplices of dimension " + std::to_string(k + 1));

  // Simplices of dimension k-1, k, k+1 with their values.
  std::vector<Level> level(3);
  for (const Simplex& s : complex.simplices()) {
    const std::size_t dim = s.dim();
    if (dim + 1 < k || dim > k + 1) continue;
    Level& l = level[dim + 1 - k];
    l.index[s.vertices] = l.simplices.size();
    l.simplices.push_back(s.vertices);
    l.values.push_back(s.value);
  }

  auto facets_as_row = [](const std::vector<Vertex>& s, const Level& lower) {
    BitRow row = make_row(lower.simplices.size());
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      std::vector<Vertex> f;
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j != skip) f.push_back(s[j]);
      }
      set_bit(row, lower.index.at(f));
    }
    return row;
  };

  std::vector<double> grid;
  for (const Simplex& s : complex.simplices()) grid.push_back(s.value);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const std::size_t m = grid.size();

  // boundary columns of k-simplices (for cycles) and (k+1)-simplices (for boundaries)
  std::vector<BitRow> del_k, del_k1;
  for (const auto& s : level[1].simplices) del_k.push_back(k == 0 ? make_row(1) : facets_as_row(s, level[0]));
  for (const auto& s : level[2].simplices) del_k1.push_back(facets_as_row(s, level[1]));

  // beta[i][j] for i <= j
  std::vector<std::vector<long long>> beta(m, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<BitRow> cycle_cols;
    std::size_t k_count = 0;
    BitRow outside = make_row(level[1].simplices.size());
    for (std::size_t s = 0; s < level[1].simplices.size(); ++s) {
      if (level[1].values[s] <= grid[i]) {
        ++k_count;
        cycle_cols.push_back(del_k[s]);
      } else {
        set_bit(outside, s);
      }
    }
    const auto cycles = static_cast<long long>(k_count - (k == 0 ? 0 : rank_gf2(cycle_cols)));
    for (std::size_t j = i; j < m; ++j) {
      std::vector<BitRow> bnd, projected;
      for (std::size_t s = 0; s < level[2].simplices.size(); ++s) {
        if (level[2].values[s] > grid[j]) continue;
        bnd.push_back(del_k1[s]);
        BitRow p = del_k1[s];
        for (std::size_t w = 0; w < p.size(); ++w) p[w] &= outside[w];
        projected.push_back(std::move(p));
      }
      const auto trapped = static_cast<long long>(rank_gf2(bnd)) - static_cast<long long>(rank_gf2(projected));
      beta[i][j] = cycles - trapped;
    }
  }

  auto b = [&](long long i, std::size_t j) -> long long { return i < 0 ? 0 : beta[static_cast<std::size_t>(i)][j]; };
  Barcode code;
  code.k = k;
  for (std::size_t i = 0; i < m; ++i) {
    const auto si = static_cast<long long>(i);
    for (std::size_t j = i + 1; j < m; ++j) {
      const long long mult = b(si, j - 1) - b(si, j) - b(si - 1, j - 1) + b(si - 1, j);
      if (mult < 0) throw Error("rank oracle produced a negative multiplicity");
      for (long long c = 0; c < mult; ++c) code.bars.push_back({grid[i], grid[j], {}});
    }
    const long long open = b(si, m - 1) - b(si - 1, m - 1);
    if (open < 0) throw Error("rank oracle produced a negative multiplicity");
    for (long long c = 0; c < open; ++c) code.bars.push_back({grid[i], kInfinity, {}});
  }
  sort_bars(code.bars);
  return code;
}

}  // namespace barbed
