#include "barbed/theory.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "barbed/errors.hpp"

namespace barbed {

// ---------------------------------------------------------------------------
// Corpora

void validate(const CorpusParams& p) {
  if (p.n_min < 2 || p.n_min > p.n_max) throw PreconditionFailed("vertex range must satisfy 2 <= n_min <= n_max");
  if (!(p.p_min >= 0.0 && p.p_min <= p.p_max && p.p_max <= 1.0))
    throw PreconditionFailed("edge probability range must satisfy 0 <= p_min <= p_max <= 1");
  if (!(p.w_min > 0.0 && p.w_min <= p.w_max)) throw PreconditionFailed("weight range must satisfy 0 < w_min <= w_max");
}

WeightedGraph corpus_graph(const CorpusParams& params, std::uint64_t index) {
  validate(params);
  std::mt19937_64 rng(trial_seed(params.seed, index));
  RandomGraphParams g;
  g.vertex_count = std::uniform_int_distribution<std::size_t>(params.n_min, params.n_max)(rng);
  g.edge_probability = params.p_min == params.p_max
                           ? params.p_min
                           : std::uniform_real_distribution<double>(params.p_min, params.p_max)(rng);
  g.weight_lo = params.w_min;
  g.weight_hi = params.w_max;
  g.integer_weights = params.integer_weights;
  g.seed = rng();
  return random_connected_graph(g);
}

// ---------------------------------------------------------------------------
// Injection

std::string to_string(InjectionFailure reason) {
  switch (reason) {
    case InjectionFailure::MissingInTarget: return "missing-in-target";
    case InjectionFailure::BirthMismatch: return "birth-mismatch";
    case InjectionFailure::DeathDecreased: return "death-decreased";
  }
  return "unknown";
}

namespace {

VertexPair edge_of(const Bar& bar) {
  if (bar.birth_simplex.size() != 2) throw Error("1-dimensional bar without a birth edge");
  return {bar.birth_simplex[0], bar.birth_simplex[1]};
}

std::map<VertexPair, Bar> by_birth_edge(const Barcode& code) {
  std::map<VertexPair, Bar> out;
  for (const Bar& bar : code.bars) {
    if (!out.emplace(edge_of(bar), bar).second)
      throw Error("two bars share a birth edge under a fixed ordering");
  }
  return out;
}

Barcode bcd1(const DistanceMatrix& d, const SimplexOrdering& ordering) { return compute_barcode(d, 1, ordering); }

}  // namespace

InjectionReport verify_injection(const WeightedGraph& g, const PathChoiceFunction& pcf_small,
                                 const PathChoiceFunction& pcf_large, std::string small_label,
                                 std::string large_label) {
  for (const auto* pcf : {&pcf_small, &pcf_large}) {
    if (!classify_dominance(g, *pcf).cost_dominated)
      throw PreconditionFailed("injection check needs cost-dominated path choices");
  }
  const auto d_small = distance_from_paths(g, pcf_small, small_label);
  const auto d_large = distance_from_paths(g, pcf_large, large_label);
  if (!is_below(compare_pointwise(d_small, d_large)))
    throw PreconditionFailed("the '" + small_label + "' distance is not pointwise below the '" + large_label + "' one");

  InjectionReport report;
  report.source_label = std::move(small_label);
  report.target_label = std::move(large_label);
  report.shared_mst = kruskal_mst(g);
  const auto ordering = canonical_ordering(g.vertex_count(), report.shared_mst);
  report.source_barcode = bcd1(d_small, ordering);
  report.target_barcode = bcd1(d_large, ordering);

  const auto source = by_birth_edge(report.source_barcode);
  auto target = by_birth_edge(report.target_barcode);
  for (const auto& [edge, bar] : source) {
    const auto it = target.find(edge);
    if (it == target.end()) {
      report.failures.push_back({edge, InjectionFailure::MissingInTarget});
      continue;
    }
    if (it->second.birth != bar.birth) {
      report.failures.push_back({edge, InjectionFailure::BirthMismatch});
    } else if (it->second.death < bar.death) {
      report.failures.push_back({edge, InjectionFailure::DeathDecreased});
    }
    report.matched.push_back({edge, bar, it->second});
    target.erase(it);
  }
  for (auto& [edge, bar] : target) report.unmatched_target.push_back(std::move(bar));
  sort_bars(report.unmatched_target);
  report.ok = report.failures.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Birth-edge audit

std::string to_string(BirthEdgeViolation kind) {
  switch (kind) {
    case BirthEdgeViolation::NotAGraphEdge: return "not-a-graph-edge";
    case BirthEdgeViolation::WeightMismatch: return "weight-mismatch";
    case BirthEdgeViolation::DominatingMidpoint: return "dominating-midpoint";
    case BirthEdgeViolation::DuplicateBirthEdge: return "duplicate-birth-edge";
  }
  return "unknown";
}

BirthEdgeAudit audit_birth_edges(const WeightedGraph& g, const PathChoiceFunction& pcf,
                                 const SimplexOrdering& ordering) {
  const auto d = distance_from_paths(g, pcf);
  BirthEdgeAudit audit;
  audit.barcode = bcd1(d, ordering);
  std::vector<VertexPair> seen;
  for (const Bar& bar : audit.barcode.bars) {
    const auto [v, w] = edge_of(bar);
    if (std::find(seen.begin(), seen.end(), VertexPair{v, w}) != seen.end())
      audit.violations.push_back({bar.birth_simplex, BirthEdgeViolation::DuplicateBirthEdge, std::nullopt});
    seen.emplace_back(v, w);
    const auto weight = g.weight(v, w);
    if (!weight) {
      audit.violations.push_back({bar.birth_simplex, BirthEdgeViolation::NotAGraphEdge, std::nullopt});
    } else if (*weight != d(v, w)) {
      audit.violations.push_back({bar.birth_simplex, BirthEdgeViolation::WeightMismatch, std::nullopt});
    }
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (d(v, x) < d(v, w) && d(w, x) < d(v, w)) {
        audit.violations.push_back({bar.birth_simplex, BirthEdgeViolation::DominatingMidpoint, x});
      }
    }
  }
  audit.ok = audit.violations.empty();
  return audit;
}

// ---------------------------------------------------------------------------
// MST invariance

MstInvarianceReport check_mst_invariance(const WeightedGraph& g, const PathChoiceFunction& pcf,
                                         const MstEnumerationLimits& limits) {
  MstInvarianceReport report;
  report.weight_dominated = classify_dominance(g, pcf).weight_dominated;
  const WeightedGraph completion = graph_completion(g, pcf);
  auto weighted = [](const WeightedGraph& host, const std::vector<SpanningTree>& trees) {
    std::vector<std::vector<Edge>> out;
    for (const auto& t : trees) {
      std::vector<Edge> edges;
      for (const auto& [a, b] : t.edges) edges.push_back({a, b, *host.weight(a, b)});
      out.push_back(std::move(edges));
    }
    return out;
  };
  report.mst_g = weighted(g, enumerate_msts(g, limits));
  report.mst_kg = weighted(completion, enumerate_msts(completion, limits));
  report.equal = report.mst_g == report.mst_kg;
  return report;
}

// ---------------------------------------------------------------------------
// Poset

PosetExtremes poset_extremes(const std::vector<DistanceMatrix>& distances) {
  if (distances.empty()) throw PreconditionFailed("poset needs at least one distance");
  for (const auto& d : distances) {
    if (d.size() != distances.front().size()) throw PreconditionFailed("distances disagree on the vertex count");
  }
  PosetExtremes out;
  for (std::size_t i = 0; i < distances.size() && !(out.least && out.greatest); ++i) {
    bool below_all = true, above_all = true;
    for (std::size_t j = 0; j < distances.size(); ++j) {
      const auto order = compare_pointwise(distances[i], distances[j]);
      below_all = below_all && is_below(order);
      above_all = above_all && (order == PartialOrder::Equal || order == PartialOrder::GreaterEqual);
    }
    if (below_all && !out.least) out.least = i;
    if (above_all && !out.greatest) out.greatest = i;
  }
  return out;
}

DominatedFamily cost_dominated_distances(const WeightedGraph& g, const PcfEnumerationOptions& options) {
  auto opts = options;
  opts.filter = DominanceFilter::Cost;
  DominatedFamily family;
  for (auto& pcf : enumerate_pcfs(g, opts)) {
    ++family.pcf_count;
    auto d = distance_from_paths(g, pcf);
    const bool repeat = std::any_of(family.distances.begin(), family.distances.end(),
                                    [&](const DistanceMatrix& x) { return x.same_values(d); });
    if (repeat) continue;
    family.pcfs.push_back(std::move(pcf));
    family.distances.push_back(std::move(d));
  }
  return family;
}

namespace {

// Path choice of the cycle with edge (cut, cut+1) removed from the spanning
// path, except that the cut pair keeps its direct edge.
PathChoiceFunction cycle_cut_choice(const WeightedGraph& g, Vertex cut) {
  const std::size_t n = g.vertex_count();
  Path hamiltonian;
  for (std::size_t s = 1; s <= n; ++s) hamiltonian.push_back(static_cast<Vertex>((cut + s) % n));
  std::vector<Path> routes;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (i == 0 && j == n - 1) {
        routes.push_back({hamiltonian.front(), hamiltonian.back()});
      } else {
        routes.emplace_back(hamiltonian.begin() + static_cast<std::ptrdiff_t>(i),
                            hamiltonian.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      }
    }
  }
  return make_path_choice(g, routes);
}

bool is_cycle(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() != n) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (!g.has_edge(v, static_cast<Vertex>((v + 1) % n))) return false;
  }
  return true;
}

}  // namespace

std::optional<NoGreatestCertificate> find_no_greatest_certificate(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 5 || !is_cycle(g)) return std::nullopt;
  for (Vertex i = 2; i + 2 < n; ++i) {
    // first: cut after i+1, so 0 -> i -> i+1 runs upward
    // second: cut after i-1, so 0 -> i+1 -> i runs downward
    auto first = cycle_cut_choice(g, i + 1);
    auto second = cycle_cut_choice(g, i - 1);
    auto d1 = distance_from_paths(g, first, "first");
    auto d2 = distance_from_paths(g, second, "second");
    if (!classify_dominance(g, first).cost_dominated || !classify_dominance(g, second).cost_dominated) continue;
    if (d1(0, i) < d2(0, i) && d1(0, i + 1) > d2(0, i + 1)) {
      return NoGreatestCertificate{0, i, std::move(first), std::move(second), std::move(d1), std::move(d2)};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Counterexample search

std::pair<std::size_t, std::size_t> barcode_sizes(const WeightedGraph& g, std::size_t k) {
  const auto edge = compute_barcode(d_edge(g), k);
  const auto weight = compute_barcode(d_weight(g), k);
  return {edge.size(), weight.size()};
}

SearchResult search_counterexample(const SearchParams& params) {
  if (params.k < 2)
    throw PreconditionFailed("theorem holds in dimension " + std::to_string(params.k) + "; search needs k >= 2");
  validate(params.corpus);

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{params.trials};
  auto worker = [&]() {
    while (true) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= params.trials || t >= best.load()) return;
      const auto g = corpus_graph(params.corpus, t);
      const auto [edge_bars, weight_bars] = barcode_sizes(g, params.k);
      if (edge_bars < weight_bars) {
        std::uint64_t current = best.load();
        while (t < current && !best.compare_exchange_weak(current, t)) {
        }
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, params.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  SearchResult result;
  const std::uint64_t found = best.load();
  if (found < params.trials) {
    auto g = corpus_graph(params.corpus, found);
    const auto [edge_bars, weight_bars] = barcode_sizes(g, params.k);
    result.witness = CounterexampleWitness{found, std::move(g), edge_bars, weight_bars};
    result.trials_examined = found + 1;
  } else {
    result.trials_examined = params.trials;
  }
  return result;
}

}  // namespace barbed
