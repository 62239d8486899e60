#include "doctest.h"

#include "barbed/distance.hpp"
#include "barbed/errors.hpp"
#include "barbed/path_system.hpp"
#include "barbed/theory.hpp"
#include "support/brute.hpp"

using namespace barbed;

namespace {

WeightedGraph triangle_113() { return WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}}); }

const std::vector<double> kUnit4{1, 1, 1, 1};

}  // namespace

TEST_CASE("d_weight small cases") {
  CHECK(d_weight(path_graph(std::vector<double>{1, 2}))(0, 2) == 3);
  CHECK(d_weight(triangle_113())(0, 2) == 2);
  const auto c4 = d_weight(cycle_graph(4, kUnit4));
  CHECK(c4(0, 2) == 2);
  CHECK(c4(1, 3) == 2);
  CHECK(c4.provenance() == Provenance::Weight);
  CHECK_FALSE(c4.hop_counts().has_value());
}

TEST_CASE("d_edge small cases") {
  const auto tri = d_edge(triangle_113());
  CHECK(tri(0, 2) == 3);
  CHECK(*tri.hops(0, 2) == 1);

  // 0-1-3 with weights 5,5 and 0-2-3 with weights 1,1
  const WeightedGraph two_routes(4, {{0, 1, 5}, {1, 3, 5}, {0, 2, 1}, {2, 3, 1}});
  CHECK(d_edge(two_routes)(0, 3) == 2);
  CHECK(*d_edge(two_routes).hops(0, 3) == 2);
}

TEST_CASE("trees have a single distance") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const auto tree = random_connected_graph({.vertex_count = 3 + i % 8, .edge_probability = 0, .seed = i});
    CHECK(d_weight(tree).values() == d_edge(tree).values());
  }
}

TEST_CASE("distances agree with simple-path enumeration") {
  const CorpusParams params{.seed = 21, .n_min = 3, .n_max = 7};
  for (std::uint64_t i = 0; i < 80; ++i) {
    const auto g = corpus_graph(params, i);
    const auto de = d_edge(g);
    CHECK(d_weight(g).values() == brute::shortest_weights(g));
    CHECK(de.values() == brute::fewest_hop_weights(g));
    CHECK(*de.hop_counts() == brute::bfs_hops(g));
  }
}

TEST_CASE("disconnected graphs are rejected") {
  const WeightedGraph g(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK_THROWS_AS(d_weight(g), DisconnectedGraph);
  CHECK_THROWS_AS(d_edge(g), DisconnectedGraph);
}

TEST_CASE("DistanceMatrix validation") {
  CHECK_THROWS_AS(DistanceMatrix(2, {0, 1, 1}, Provenance::PathSystem), InvalidGraph);
  CHECK_THROWS_AS(DistanceMatrix(2, {0, -1, -1, 0}, Provenance::PathSystem), InvalidGraph);
  CHECK_NOTHROW(DistanceMatrix(2, {0, 1, 2, 0}, Provenance::PathSystem));
}

TEST_CASE("compare_pointwise") {
  const auto g = triangle_113();
  CHECK(compare_pointwise(d_weight(g), d_edge(g)) == PartialOrder::LessEqual);
  CHECK(compare_pointwise(d_edge(g), d_weight(g)) == PartialOrder::GreaterEqual);
  CHECK(compare_pointwise(d_edge(g), d_edge(g)) == PartialOrder::Equal);
  CHECK(is_below(PartialOrder::Equal));
  CHECK_FALSE(is_below(PartialOrder::Incomparable));
  CHECK_THROWS_AS(compare_pointwise(d_weight(g), d_weight(cycle_graph(4, kUnit4))), PreconditionFailed);
  CHECK(to_string(PartialOrder::LessEqual) == "le");
}

TEST_CASE("opposite routings on a weighted 4-cycle are incomparable") {
  const std::vector<double> w{1, 2, 3, 4};
  const auto g = cycle_graph(4, w);
  // Hamiltonian paths that route around edge (0,3) and around edge (0,1).
  const std::vector<Path> around_03{{0, 1, 2, 3}};
  const std::vector<Path> around_01{{1, 2, 3, 0}};
  const auto d1 = distance_from_paths(g, expand_maximal_paths(g, around_03));
  const auto d2 = distance_from_paths(g, expand_maximal_paths(g, around_01));
  CHECK(d1(0, 3) == 6);
  CHECK(d2(0, 1) == 9);
  CHECK(compare_pointwise(d1, d2) == PartialOrder::Incomparable);
}

TEST_CASE("metric_axioms") {
  const CorpusParams params{.seed = 22};
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto r = metric_axioms(d_weight(corpus_graph(params, i)));
    CHECK(r.symmetric);
    CHECK(r.identity);
    CHECK(r.triangle);
  }
  CHECK_FALSE(metric_axioms(DistanceMatrix(2, {0, 1, 2, 0}, Provenance::PathSystem)).symmetric);
  CHECK_FALSE(metric_axioms(DistanceMatrix(2, {0, 0, 0, 0}, Provenance::PathSystem)).identity);
}

TEST_CASE("d_edge of the (1,1,3) triangle breaks the triangle inequality") {
  const auto d = d_edge(triangle_113());
  const auto witness = brute::triangle_violation(3, d.values());
  REQUIRE(witness.has_value());
  CHECK_FALSE(metric_axioms(d).triangle);
  CHECK(metric_axioms(d).symmetric);
  CHECK(metric_axioms(d).identity);
}

TEST_CASE("metric_axioms reports the same triangle verdict as a triple scan") {
  // Heavy one-hop edges next to light detours are common in this corpus.
  const CorpusParams params{.seed = 23, .n_min = 3, .n_max = 6, .w_min = 1, .w_max = 10};
  std::size_t violations = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto d = d_edge(corpus_graph(params, i));
    const bool brute_ok = !brute::triangle_violation(d.size(), d.values()).has_value();
    CHECK(metric_axioms(d).triangle == brute_ok);
    violations += !brute_ok;
  }
  CHECK(violations > 0);
}

TEST_CASE("optimal routes take the lower edge set on ties") {
  const auto g = cycle_graph(4, kUnit4);
  const auto forest = optimal_paths(g, PathMode::Weight);
  CHECK(forest.route(0, 2) == std::vector<Vertex>{0, 1, 2});
  CHECK(forest.route(1, 3) == std::vector<Vertex>{1, 0, 3});
  CHECK(forest.route(3, 1) == std::vector<Vertex>{3, 0, 1});
}
