#include "barbed/path_system.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "barbed/errors.hpp"

namespace barbed {

namespace {

std::string pair_text(Vertex a, Vertex b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

// Sub-path p[i..j] in min-to-max orientation.
Path oriented_subpath(const Path& p, std::size_t i, std::size_t j) {
  Path sub(p.begin() + static_cast<std::ptrdiff_t>(i), p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  if (sub.front() > sub.back()) std::reverse(sub.begin(), sub.end());
  return sub;
}

bool subpath_matches(const Path& stored, const Path& p, std::size_t i, std::size_t j) {
  const std::size_t len = j - i + 1;
  if (stored.size() != len) return false;
  if (p[i] < p[j]) return std::equal(stored.begin(), stored.end(), p.begin() + static_cast<std::ptrdiff_t>(i));
  return std::equal(stored.begin(), stored.end(), p.rbegin() + static_cast<std::ptrdiff_t>(p.size() - 1 - j));
}

void require_consistent(const PathChoiceFunction& pcf) {
  const auto report = check_consistency(pcf);
  if (!report.ok) {
    const auto& v = report.violations.front();
    throw InconsistentPaths("path choice is inconsistent: route for " + pair_text(v.inner.first, v.inner.second) +
                            " disagrees with the route for " + pair_text(v.outer.first, v.outer.second) + " (" +
                            std::to_string(report.violations.size()) + " violations)");
  }
}

void validate_route(const WeightedGraph& g, const Path& p, Vertex a, Vertex b) {
  if (p.size() < 2 || !((p.front() == a && p.back() == b) || (p.front() == b && p.back() == a)))
    throw InvalidGraph("route for " + pair_text(a, b) + " has the wrong endpoints");
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= g.vertex_count()) throw InvalidGraph("route for " + pair_text(a, b) + " leaves the vertex range");
    if (seen[p[i]]) throw InvalidGraph("route for " + pair_text(a, b) + " repeats vertex " + std::to_string(p[i]));
    seen[p[i]] = 1;
    if (i > 0 && !g.has_edge(p[i - 1], p[i]))
      throw InvalidGraph("route for " + pair_text(a, b) + " uses missing edge " + pair_text(p[i - 1], p[i]));
  }
}

}  // namespace

PathChoiceFunction::PathChoiceFunction(const WeightedGraph& g, std::vector<Path> routes)
    : n_(g.vertex_count()), routes_(std::move(routes)) {
  if (routes_.size() != barbed::pair_count(n_))
    throw InvalidGraph("path choice needs " + std::to_string(barbed::pair_count(n_)) + " routes, got " +
                       std::to_string(routes_.size()));
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = a + 1; b < n_; ++b) {
      Path& p = routes_[pair_index(n_, a, b)];
      validate_route(g, p, a, b);
      if (p.front() != a) std::reverse(p.begin(), p.end());
    }
  }
}

Path PathChoiceFunction::route(Vertex a, Vertex b) const {
  Path p = stored_route(a, b);
  if (p.front() != a) std::reverse(p.begin(), p.end());
  return p;
}

PathChoiceFunction make_path_choice(const WeightedGraph& g, std::span<const Path> routes_any_order) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Path>> slots(pair_count(n));
  for (const Path& p : routes_any_order) {
    if (p.size() < 2 || p.front() >= n || p.back() >= n || p.front() == p.back())
      throw InvalidGraph("route must join two distinct vertices of the graph");
    auto& slot = slots[pair_index(n, p.front(), p.back())];
    if (slot) throw InvalidGraph("pair " + pair_text(p.front(), p.back()) + " is assigned twice");
    slot = p;
  }
  std::vector<Path> routes;
  routes.reserve(slots.size());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      auto& slot = slots[pair_index(n, a, b)];
      if (!slot) throw InvalidGraph("partial path choice: pair " + pair_text(a, b) + " has no route");
      routes.push_back(std::move(*slot));
    }
  }
  return PathChoiceFunction(g, std::move(routes));
}

ConsistencyReport check_consistency(const PathChoiceFunction& pcf) {
  ConsistencyReport report;
  const std::size_t n = pcf.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const Path& p = pcf.stored_route(a, b);
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
          if (i == 0 && j + 1 == p.size()) continue;
          if (!subpath_matches(pcf.stored_route(p[i], p[j]), p, i, j)) {
            report.violations.push_back({{a, b}, make_pair_key(p[i], p[j])});
          }
        }
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

PathChoiceFunction repair_consistency(const WeightedGraph& g, PathChoiceFunction pcf) {
  const std::size_t pairs = pcf.pair_count();
  const std::size_t budget = std::max<std::size_t>(1, pairs * pairs);
  for (std::size_t round = 0; round <= budget; ++round) {
    const auto report = check_consistency(pcf);
    if (report.ok) return pcf;
    // Longest enclosing route wins; ties go to the earliest pair.
    const auto& v = *std::max_element(report.violations.begin(), report.violations.end(),
                                      [&](const ConsistencyViolation& x, const ConsistencyViolation& y) {
                                        const auto lx = pcf.stored_route(x.outer.first, x.outer.second).size();
                                        const auto ly = pcf.stored_route(y.outer.first, y.outer.second).size();
                                        if (lx != ly) return lx < ly;
                                        return std::tie(x.outer, x.inner) > std::tie(y.outer, y.inner);
                                      });
    const Path& outer = pcf.stored_route(v.outer.first, v.outer.second);
    const auto i = static_cast<std::size_t>(std::find(outer.begin(), outer.end(), v.inner.first) - outer.begin());
    const auto j = static_cast<std::size_t>(std::find(outer.begin(), outer.end(), v.inner.second) - outer.begin());
    std::vector<Path> routes(pcf.routes().begin(), pcf.routes().end());
    routes[pair_index(pcf.vertex_count(), v.inner.first, v.inner.second)] =
        oriented_subpath(outer, std::min(i, j), std::max(i, j));
    pcf = PathChoiceFunction(g, std::move(routes));
  }
  throw InconsistentPaths("consistency repair did not reach a fixpoint within " + std::to_string(budget) +
                          " rounds");
}

double path_weight(const WeightedGraph& g, std::span<const Vertex> path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const auto w = g.weight(path[i - 1], path[i]);
    if (!w) throw InvalidGraph("path uses missing edge " + pair_text(path[i - 1], path[i]));
    total += *w;
  }
  return total;
}

DistanceMatrix distance_from_paths(const WeightedGraph& g, const PathChoiceFunction& pcf, std::string label) {
  if (pcf.vertex_count() != g.vertex_count()) throw PreconditionFailed("path choice belongs to a different graph");
  require_consistent(pcf);
  const std::size_t n = g.vertex_count();
  std::vector<double> values(n * n, 0.0);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const double w = path_weight(g, pcf.stored_route(a, b));
      values[a * n + b] = w;
      values[b * n + a] = w;
    }
  }
  return DistanceMatrix(n, std::move(values), Provenance::PathSystem, std::move(label));
}

PathChoiceFunction extract_paths(const WeightedGraph& g, PathMode mode) {
  const auto forest = optimal_paths(g, mode);
  const std::size_t n = g.vertex_count();
  std::vector<Path> routes;
  routes.reserve(pair_count(n));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) routes.push_back(forest.route(a, b));
  }
  PathChoiceFunction pcf(g, std::move(routes));
  if (!check_consistency(pcf).ok) pcf = repair_consistency(g, std::move(pcf));
  return pcf;
}

std::vector<Path> simple_paths(const WeightedGraph& g, Vertex a, Vertex b) {
  std::vector<Path> out;
  Path current{a};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[a] = 1;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (v == b) {
      out.push_back(current);
      return;
    }
    for (const auto& nb : g.neighbors(v)) {
      if (on_path[nb.vertex]) continue;
      on_path[nb.vertex] = 1;
      current.push_back(nb.vertex);
      self(self, nb.vertex);
      current.pop_back();
      on_path[nb.vertex] = 0;
    }
  };
  dfs(dfs, a);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class PcfEnumerator {
 public:
  PcfEnumerator(const WeightedGraph& g, const PcfEnumerationOptions& options) : g_(g), options_(options) {
    n_ = g.vertex_count();
    candidates_.resize(pair_count(n_));
    for (Vertex a = 0; a < n_; ++a) {
      for (Vertex b = a + 1; b < n_; ++b) {
        auto paths = simple_paths(g, a, b);
        if (const auto w = g.weight(a, b); w && options.filter != DominanceFilter::None) {
          std::erase_if(paths, [&](const Path& p) { return p.size() > 2 && !dominated(p, *w); });
        }
        candidates_[pair_index(n_, a, b)] = std::move(paths);
      }
    }
    choice_.assign(pair_count(n_), kUnset);
  }

  std::vector<PathChoiceFunction> run() {
    recurse(0);
    return std::move(results_);
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool dominated(const Path& p, double edge_weight) const {
    double total = 0.0, heaviest = 0.0;
    for (std::size_t i = 1; i < p.size(); ++i) {
      const double w = *g_.weight(p[i - 1], p[i]);
      total += w;
      heaviest = std::max(heaviest, w);
    }
    return options_.filter == DominanceFilter::Cost ? edge_weight >= total : edge_weight > heaviest;
  }

  // Assigns route `which` to pair `slot` and forces all of its sub-pairs.
  // Returns false on conflict; newly set slots are appended to trail.
  bool assign(std::size_t slot, std::size_t which, std::vector<std::size_t>& trail) {
    const Path& p = candidates_[slot][which];
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        const std::size_t q = pair_index(n_, p[i], p[j]);
        const auto& options = candidates_[q];
        const Path sub = oriented_subpath(p, i, j);
        const auto it = std::lower_bound(options.begin(), options.end(), sub);
        if (it == options.end() || *it != sub) return false;
        const auto idx = static_cast<std::size_t>(it - options.begin());
        if (choice_[q] == kUnset) {
          choice_[q] = idx;
          trail.push_back(q);
        } else if (choice_[q] != idx) {
          return false;
        }
      }
    }
    return true;
  }

  void recurse(std::size_t from) {
    std::size_t slot = from;
    while (slot < choice_.size() && choice_[slot] != kUnset) ++slot;
    if (slot == choice_.size()) {
      emit();
      return;
    }
    for (std::size_t which = 0; which < candidates_[slot].size(); ++which) {
      std::vector<std::size_t> trail;
      if (assign(slot, which, trail)) recurse(slot + 1);
      for (std::size_t q : trail) choice_[q] = kUnset;
    }
  }

  void emit() {
    if (results_.size() >= options_.max_results)
      throw CapExceeded("path choice enumeration exceeds cap of " + std::to_string(options_.max_results) +
                        " functions");
    std::vector<Path> routes;
    routes.reserve(choice_.size());
    for (std::size_t q = 0; q < choice_.size(); ++q) routes.push_back(candidates_[q][choice_[q]]);
    results_.emplace_back(g_, std::move(routes));
  }

  const WeightedGraph& g_;
  PcfEnumerationOptions options_;
  std::size_t n_ = 0;
  std::vector<std::vector<Path>> candidates_;
  std::vector<std::size_t> choice_;
  std::vector<PathChoiceFunction> results_;
};

}  // namespace

std::vector<PathChoiceFunction> enumerate_pcfs(const WeightedGraph& g, const PcfEnumerationOptions& options) {
  if (g.vertex_count() > options.max_vertices)
    throw CapExceeded("path choice enumeration is capped at " + std::to_string(options.max_vertices) +
                      " vertices, graph has " + std::to_string(g.vertex_count()));
  return PcfEnumerator(g, options).run();
}

DominanceReport classify_dominance(const WeightedGraph& g, const PathChoiceFunction& pcf) {
  if (pcf.vertex_count() != g.vertex_count()) throw PreconditionFailed("path choice belongs to a different graph");
  require_consistent(pcf);
  DominanceReport report;
  for (const Edge& e : g.edges()) {
    const Path& p = pcf.stored_route(e.u, e.v);
    if (p.size() == 2) continue;
    double total = 0.0, heaviest = 0.0;
    for (std::size_t i = 1; i < p.size(); ++i) {
      const double w = *g.weight(p[i - 1], p[i]);
      total += w;
      heaviest = std::max(heaviest, w);
    }
    if (!(e.weight > heaviest)) report.weight_violations.emplace_back(e.u, e.v);
    if (!(e.weight >= total)) report.cost_violations.emplace_back(e.u, e.v);
  }
  report.weight_dominated = report.weight_violations.empty();
  report.cost_dominated = report.cost_violations.empty();
  return report;
}

WeightedGraph graph_completion(const WeightedGraph& g, const PathChoiceFunction& pcf) {
  const auto d = distance_from_paths(g, pcf);
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(pair_count(n));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b, d(a, b)});
  }
  return WeightedGraph(n, std::move(edges));
}

std::vector<Path> maximal_paths(const PathChoiceFunction& pcf) {
  require_consistent(pcf);
  const std::size_t n = pcf.vertex_count();
  const auto routes = pcf.routes();
  std::vector<std::vector<char>> members(routes.size(), std::vector<char>(n, 0));
  for (std::size_t r = 0; r < routes.size(); ++r) {
    for (Vertex v : routes[r]) members[r][v] = 1;
  }
  std::vector<Path> out;
  for (std::size_t r = 0; r < routes.size(); ++r) {
    const Vertex a = routes[r].front(), b = routes[r].back();
    bool contained = false;
    for (std::size_t q = 0; q < routes.size() && !contained; ++q) {
      contained = q != r && members[q][a] && members[q][b];
    }
    if (!contained) out.push_back(routes[r]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PathChoiceFunction expand_maximal_paths(const WeightedGraph& g, std::span<const Path> paths) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Path>> slots(pair_count(n));
  for (const Path& p : paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (p[i] >= n || p[j] >= n || p[i] == p[j]) throw InvalidGraph("maximal path is not a simple path of the graph");
        auto& slot = slots[pair_index(n, p[i], p[j])];
        Path sub = oriented_subpath(p, i, j);
        if (slot && *slot != sub)
          throw InvalidGraph("maximal paths disagree on pair " + pair_text(p[i], p[j]));
        slot = std::move(sub);
      }
    }
  }
  std::vector<Path> routes;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      auto& slot = slots[pair_index(n, a, b)];
      if (!slot) throw InvalidGraph("maximal paths leave pair " + pair_text(a, b) + " uncovered");
      routes.push_back(std::move(*slot));
    }
  }
  return PathChoiceFunction(g, std::move(routes));
}

}  // namespace barbed
