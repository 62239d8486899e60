#include "brute.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

namespace brute {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t pair_slot(std::size_t n, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  std::size_t slot = 0;
  for (Vertex i = 0; i < a; ++i) slot += n - 1 - i;
  return slot + (b - a - 1);
}

}  // namespace

std::vector<Path> all_simple_paths(const WeightedGraph& g, Vertex a, Vertex b) {
  std::vector<Path> out;
  Path stack{a};
  std::vector<bool> used(g.vertex_count(), false);
  used[a] = true;
  std::function<void()> walk = [&] {
    const Vertex v = stack.back();
    if (v == b) {
      out.push_back(stack);
      return;
    }
    for (const auto& e : g.edges()) {
      Vertex next;
      if (e.u == v) next = e.v;
      else if (e.v == v) next = e.u;
      else continue;
      if (used[next]) continue;
      used[next] = true;
      stack.push_back(next);
      walk();
      stack.pop_back();
      used[next] = false;
    }
  };
  walk();
  std::sort(out.begin(), out.end());
  return out;
}

double weight_of(const WeightedGraph& g, const Path& p) {
  double total = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) total += *g.weight(p[i], p[i + 1]);
  return total;
}

std::vector<double> shortest_weights(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> d(n * n, 0.0);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a == b) continue;
      double best = kInf;
      for (const auto& p : all_simple_paths(g, a, b)) best = std::min(best, weight_of(g, p));
      d[a * n + b] = best;
    }
  }
  return d;
}

std::vector<double> fewest_hop_weights(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> d(n * n, 0.0);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a == b) continue;
      std::size_t hops = std::numeric_limits<std::size_t>::max();
      double best = kInf;
      for (const auto& p : all_simple_paths(g, a, b)) {
        const double w = weight_of(g, p);
        if (p.size() < hops || (p.size() == hops && w < best)) {
          hops = p.size();
          best = w;
        }
      }
      d[a * n + b] = best;
    }
  }
  return d;
}

std::vector<std::uint32_t> bfs_hops(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> out(n * n, std::numeric_limits<std::uint32_t>::max());
  for (Vertex s = 0; s < n; ++s) {
    std::queue<Vertex> q;
    q.push(s);
    out[s * n + s] = 0;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (const auto& e : g.edges()) {
        if (e.u != v && e.v != v) continue;
        const Vertex w = e.u == v ? e.v : e.u;
        if (out[s * n + w] != std::numeric_limits<std::uint32_t>::max()) continue;
        out[s * n + w] = out[s * n + v] + 1;
        q.push(w);
      }
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> all_msts(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<std::vector<std::size_t>> best;
  double best_weight = kInf;
  if (n == 0 || m + 1 < n) return best;
  // Iterate (n-1)-subsets via a selection mask.
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n - 1), true);
  do {
    std::vector<std::size_t> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t x) {
      while (root[x] != x) x = root[x];
      return x;
    };
    bool acyclic = true;
    double total = 0;
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!pick[i]) continue;
      const auto& e = g.edge(i);
      const auto ru = find(e.u), rv = find(e.v);
      if (ru == rv) acyclic = false;
      root[ru] = rv;
      total += e.weight;
      ids.push_back(i);
    }
    if (!acyclic) continue;
    if (total < best_weight) {
      best_weight = total;
      best.clear();
    }
    if (total == best_weight) best.push_back(ids);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(best.begin(), best.end());
  return best;
}

bool consistent(std::size_t n, const std::vector<Path>& routes) {
  for (const auto& r : routes) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = i + 1; j < r.size(); ++j) {
        Path sub(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        if (sub.front() > sub.back()) std::reverse(sub.begin(), sub.end());
        if (routes[pair_slot(n, sub.front(), sub.back())] != sub) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Path>> all_consistent_systems(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Path>> options;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) options.push_back(all_simple_paths(g, a, b));

  std::vector<std::vector<Path>> out;
  std::vector<std::size_t> choice(options.size(), 0);
  while (true) {
    std::vector<Path> routes;
    for (std::size_t i = 0; i < options.size(); ++i) routes.push_back(options[i][choice[i]]);
    if (consistent(n, routes)) out.push_back(std::move(routes));
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == options[i].size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::array<Vertex, 3>> triangle_violation(std::size_t n, const std::vector<double>& d) {
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w)
        if (d[u * n + w] > d[u * n + v] + d[v * n + w]) return std::array<Vertex, 3>{u, v, w};
  return std::nullopt;
}

std::string fixture_path(const std::string& name) { return std::string(BARBED_FIXTURE_DIR) + "/" + name; }

}  // namespace brute
