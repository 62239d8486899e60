#include "doctest.h"

#include <algorithm>

#include "barbed/errors.hpp"
#include "barbed/graph_io.hpp"
#include "barbed/theory.hpp"
#include "support/brute.hpp"

using namespace barbed;

namespace {

const std::vector<double> kUnit4{1, 1, 1, 1};

WeightedGraph fixture(const std::string& name) { return read_graph_file(brute::fixture_path(name)); }

std::vector<std::pair<double, double>> spans(std::initializer_list<std::pair<double, double>> v) { return v; }

}  // namespace

TEST_CASE("verify_injection of a pcf against itself is the identity") {
  const auto g = corpus_graph({.seed = 51}, 2);
  const auto pcf = extract_paths(g, PathMode::Weight);
  const auto r = verify_injection(g, pcf, pcf);
  CHECK(r.ok);
  CHECK(r.matched.size() == r.source_barcode.size());
  CHECK(r.unmatched_target.empty());
  for (const auto& m : r.matched) CHECK(m.source == m.target);
}

TEST_CASE("verify_injection on the reconstructed two-cycle example") {
  const auto g = fixture("fig5_injection.txt");
  const auto r = verify_injection(g, extract_paths(g, PathMode::Weight), extract_paths(g, PathMode::Edge), "weight", "edge");
  CHECK(r.ok);
  CHECK(r.source_barcode.intervals() == spans({{3, 4}}));
  CHECK(r.target_barcode.intervals() == spans({{3, 4}, {4, 5}}));
  REQUIRE(r.matched.size() == 1);
  CHECK(r.matched[0].source.birth == 3);
  CHECK(r.matched[0].source.death == 4);
  CHECK(r.matched[0].target.birth == 3);
  CHECK(r.matched[0].target.death == 4);
  REQUIRE(r.unmatched_target.size() == 1);
  CHECK(r.unmatched_target[0].birth == 4);
}

TEST_CASE("verify_injection preconditions") {
  const auto g = fixture("c4_toy.txt");
  const auto pcfs = enumerate_pcfs(g);
  const auto not_cost = std::find_if(pcfs.begin(), pcfs.end(), [&](const auto& p) { return !classify_dominance(g, p).cost_dominated; });
  REQUIRE(not_cost != pcfs.end());
  const auto w = extract_paths(g, PathMode::Weight);
  CHECK_THROWS_AS(verify_injection(g, w, *not_cost), PreconditionFailed);

  const auto tri = WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}});
  CHECK_THROWS_AS(verify_injection(tri, extract_paths(tri, PathMode::Edge), extract_paths(tri, PathMode::Weight)),
                  PreconditionFailed);
}

TEST_CASE("injection between weight and edge extractions") {
  const CorpusParams params{.seed = 52, .n_max = 9};
  for (std::uint64_t i = 0; i < 150; ++i) {
    const auto g = corpus_graph(params, i);
    const auto r = verify_injection(g, extract_paths(g, PathMode::Weight), extract_paths(g, PathMode::Edge));
    CHECK(r.ok);
    CHECK(r.matched.size() == r.source_barcode.size());
  }
}

TEST_CASE("injection between all comparable cost-dominated systems") {
  const CorpusParams params{.seed = 53, .n_min = 4, .n_max = 6, .p_min = 0.2, .p_max = 0.5};
  std::size_t pairs = 0;
  for (std::uint64_t i = 0; i < 15; ++i) {
    const auto g = corpus_graph(params, i);
    const auto family = cost_dominated_distances(g);
    for (std::size_t a = 0; a < family.distances.size(); ++a) {
      for (std::size_t b = 0; b < family.distances.size(); ++b) {
        if (a == b || !is_below(compare_pointwise(family.distances[a], family.distances[b]))) continue;
        ++pairs;
        CHECK(verify_injection(g, family.pcfs[a], family.pcfs[b]).ok);
      }
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("birth-edge audit") {
  const auto c4 = cycle_graph(4, kUnit4);
  const auto audit = audit_birth_edges(c4, extract_paths(c4, PathMode::Weight));
  CHECK(audit.ok);
  REQUIRE(audit.barcode.size() == 1);
  const auto& s = audit.barcode.bars[0].birth_simplex;
  REQUIRE(s.size() == 2);
  CHECK(c4.has_edge(s[0], s[1]));

  const auto tree = path_graph(std::vector<double>{1, 2, 3});
  const auto vacuous = audit_birth_edges(tree, extract_paths(tree, PathMode::Edge));
  CHECK(vacuous.ok);
  CHECK(vacuous.barcode.size() == 0);

  const CorpusParams params{.seed = 54};
  for (std::uint64_t i = 0; i < 60; ++i) {
    const auto g = corpus_graph(params, i);
    CHECK(audit_birth_edges(g, extract_paths(g, PathMode::Weight)).ok);
    CHECK(audit_birth_edges(g, extract_paths(g, PathMode::Edge), SimplexOrdering::shuffled(i)).ok);
  }
}

TEST_CASE("MST invariance under completion") {
  const auto tree = path_graph(std::vector<double>{4, 1, 2});
  const auto r = check_mst_invariance(tree, extract_paths(tree, PathMode::Weight));
  CHECK(r.equal);
  CHECK(r.weight_dominated);

  const CorpusParams params{.seed = 55, .n_max = 7, .w_min = 1, .w_max = 4};
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto g = corpus_graph(params, i);
    for (const auto mode : {PathMode::Weight, PathMode::Edge}) {
      const auto report = check_mst_invariance(g, extract_paths(g, mode));
      CHECK(report.weight_dominated);
      CHECK(report.equal);
    }
  }
}

TEST_CASE("without weight domination the MST sets may differ") {
  const auto g = fixture("fig6_triangle.txt");
  const auto routed = make_path_choice(g, std::vector<Path>{{0, 1}, {1, 2}, {0, 1, 2}});
  const auto r = check_mst_invariance(g, routed);
  CHECK_FALSE(r.weight_dominated);
  CHECK_FALSE(r.equal);
  CHECK(r.mst_g.size() == 3);
  CHECK(r.mst_kg.size() == 1);
}

TEST_CASE("poset_extremes") {
  const auto g = cycle_graph(4, std::vector<double>{1, 2, 3, 4});
  const auto dw = d_weight(g);
  const auto single = poset_extremes({dw});
  CHECK(single.least == 0u);
  CHECK(single.greatest == 0u);

  const auto d1 = distance_from_paths(g, expand_maximal_paths(g, std::vector<Path>{{0, 1, 2, 3}}));
  const auto d2 = distance_from_paths(g, expand_maximal_paths(g, std::vector<Path>{{1, 2, 3, 0}}));
  const auto neither = poset_extremes({d1, d2});
  CHECK_FALSE(neither.least.has_value());
  CHECK_FALSE(neither.greatest.has_value());

  const WeightedGraph tri(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}});
  const auto chain = poset_extremes({d_edge(tri), d_weight(tri)});
  CHECK(chain.least == 1u);
  CHECK(chain.greatest == 0u);

  CHECK_THROWS_AS(poset_extremes({}), PreconditionFailed);
}

TEST_CASE("d_weight is the least cost-dominated distance") {
  const CorpusParams params{.seed = 56, .n_min = 4, .n_max = 6, .p_min = 0.2, .p_max = 0.6};
  for (std::uint64_t i = 0; i < 15; ++i) {
    const auto g = corpus_graph(params, i);
    const auto family = cost_dominated_distances(g);
    const auto extremes = poset_extremes(family.distances);
    REQUIRE(extremes.least.has_value());
    CHECK(family.distances[*extremes.least].same_values(d_weight(g)));
  }
}

TEST_CASE("the 5-cycle has no greatest cost-dominated distance") {
  const auto g = fixture("c5_poset.txt");
  const auto family = cost_dominated_distances(g);
  const auto extremes = poset_extremes(family.distances);
  REQUIRE(extremes.least.has_value());
  CHECK(family.distances[*extremes.least].same_values(d_weight(g)));
  CHECK_FALSE(extremes.greatest.has_value());

  const auto cert = find_no_greatest_certificate(g);
  REQUIRE(cert.has_value());
  CHECK(classify_dominance(g, cert->first).cost_dominated);
  CHECK(classify_dominance(g, cert->second).cost_dominated);
  CHECK(compare_pointwise(cert->first_distance, cert->second_distance) == PartialOrder::Incomparable);
  CHECK(cert->first_distance(cert->v0, cert->vi) < cert->second_distance(cert->v0, cert->vi));
  CHECK(cert->first_distance(cert->v0, cert->vi + 1) > cert->second_distance(cert->v0, cert->vi + 1));
  // No enumerated distance bounds both from above.
  for (const auto& d : family.distances) {
    const bool above_first = is_below(compare_pointwise(cert->first_distance, d));
    const bool above_second = is_below(compare_pointwise(cert->second_distance, d));
    CHECK_FALSE((above_first && above_second));
  }
}

TEST_CASE("find_no_greatest_certificate needs a long enough cycle") {
  CHECK_FALSE(find_no_greatest_certificate(cycle_graph(4, kUnit4)).has_value());
  CHECK_FALSE(find_no_greatest_certificate(corpus_graph({.seed = 57}, 0)).has_value());
  // The only candidate pair is (2, 3); its one-sided lengths 2 and 11 differ by more than c = 1.
  CHECK_FALSE(find_no_greatest_certificate(cycle_graph(5, std::vector<double>{1, 1, 1, 1, 10})).has_value());
}

TEST_CASE("search_counterexample") {
  CHECK_THROWS_WITH_AS(search_counterexample({.k = 1}), "theorem holds in dimension 1; search needs k >= 2",
                       PreconditionFailed);
  CHECK_THROWS_AS(search_counterexample({.k = 0}), PreconditionFailed);

  SearchParams params{.k = 2, .trials = 200};
  const auto one = search_counterexample(params);
  params.threads = 3;
  const auto three = search_counterexample(params);
  REQUIRE(one.witness.has_value());
  REQUIRE(three.witness.has_value());
  CHECK(one.witness->trial == three.witness->trial);
  CHECK(one.witness->graph == three.witness->graph);
  CHECK(one.trials_examined == one.witness->trial + 1);
  const auto [edge_bars, weight_bars] = barcode_sizes(one.witness->graph, 2);
  CHECK(edge_bars == one.witness->edge_bars);
  CHECK(weight_bars == one.witness->weight_bars);
  CHECK(edge_bars < weight_bars);

  const auto none = search_counterexample({.k = 2, .trials = 3, .corpus = {.n_min = 4, .n_max = 4}});
  CHECK_FALSE(none.witness.has_value());
  CHECK(none.trials_examined == 3);
}

TEST_CASE("stored witnesses replay") {
  const auto k2 = fixture("witness_k2.txt");
  const auto [e2, w2] = barcode_sizes(k2, 2);
  CHECK(e2 == 0);
  CHECK(w2 == 1);
  CHECK(verify_injection(k2, extract_paths(k2, PathMode::Weight), extract_paths(k2, PathMode::Edge)).ok);

  const auto k3 = fixture("witness_k3.txt");
  const auto [e3, w3] = barcode_sizes(k3, 3);
  CHECK(e3 < w3);
}
