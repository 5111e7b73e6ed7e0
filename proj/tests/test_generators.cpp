#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pcube/error.hpp"
#include "pcube/generators.hpp"

using namespace pcube;

TEST_CASE("deterministic families have the expected shape") {
  CHECK(hypercube(0) == fixture::k1());
  CHECK(hypercube(4).edge_count() == 32);
  CHECK(hypercube(3).has_edge(2, 6));
  CHECK(even_cycle(4).vertex_count() == 8);
  CHECK(even_cycle(4).edge_count() == 8);
  CHECK(path(1) == fixture::k1());
  CHECK(path(5).edge_count() == 4);
  CHECK(complete(5).edge_count() == 10);
  CHECK(hypercube_minus_vertex(2) == Graph(3, {{0, 1}, {0, 2}}));
  CHECK(hypercube_minus_vertex(4).vertex_count() == 15);
  CHECK(hypercube_minus_vertex(4).edge_count() == 28);

  const auto th = trihex();
  CHECK(th.vertex_count() == 13);
  CHECK(th.edge_count() == 15);
  CHECK(th.degree(3) == 3);
  CHECK(th.degree(2) == 3);
  CHECK(th.degree(4) == 3);
  CHECK(th.has_edge(2, 3));
  CHECK(th.has_edge(3, 4));
}

TEST_CASE("generator parameter errors") {
  CHECK_THROWS_AS(hypercube(-1), InputError);
  CHECK_THROWS_AS(hypercube(21), InputError);
  CHECK_THROWS_AS(even_cycle(1), InputError);
  CHECK_THROWS_AS(path(0), InputError);
  CHECK_THROWS_AS(complete(0), InputError);
  CHECK_THROWS_AS(hypercube_minus_vertex(1), InputError);
  CHECK_THROWS_AS(example_41(0, 2), InputError);
  CHECK_THROWS_AS(example_42(0, 2), InputError);
  CHECK_THROWS_AS(example_41(5, 100, 50), GuardError);
  CHECK_THROWS_AS(example_42(10, 1, 1000), GuardError);
  CHECK_THROWS_AS(attach_pendants(Graph(0, {}), 1, 0), InputError);
}

TEST_CASE("examples with isolated vertices and pendants") {
  const auto e41 = example_41(4, 3);
  CHECK(e41.vertex_count() == 7);
  CHECK(e41.edge_count() == 6);
  CHECK(e41.degree(6) == 0);

  const auto e42 = example_42(3, 10);
  CHECK(e42.vertex_count() == 18);
  CHECK(e42.edge_count() == 22);
  CHECK(is_partial_cube(e42).verdict);
  for (VertexId v = 8; v < 18; ++v) CHECK(e42.degree(v) == 1);
}

TEST_CASE("attach_pendants spreads leaves round-robin") {
  const auto g = attach_pendants(fixture::c4(), 9, 5);
  CHECK(g.vertex_count() == 13);
  std::vector<std::size_t> extra(4, 0);
  for (VertexId leaf = 4; leaf < 13; ++leaf) {
    REQUIRE(g.degree(leaf) == 1);
    extra[static_cast<std::size_t>(g.neighbors(leaf)[0])] += 1;
  }
  for (auto e : extra) CHECK((e == 2 || e == 3));
  CHECK(attach_pendants(fixture::c4(), 0, 1) == fixture::c4());
}

TEST_CASE("seeded generators are deterministic") {
  for (Seed s = 0; s < 5; ++s) {
    CHECK(random_tree(12, s) == random_tree(12, s));
    CHECK(random_graph(9, 1, 2, s) == random_graph(9, 1, 2, s));
    CHECK(random_median_graph(12, s) == random_median_graph(12, s));
    CHECK(random_partial_cube(9, s) == random_partial_cube(9, s));
    const auto g = random_median_graph(6, s);
    CHECK(random_connected_subset(g, 4, s) == random_connected_subset(g, 4, s));
  }
  CHECK_FALSE(random_median_graph(15, 1) == random_median_graph(15, 2));
}

TEST_CASE("random trees and graphs") {
  for (Seed s = 0; s < 10; ++s) {
    const auto t = random_tree(10, s);
    CHECK(t.edge_count() == 9);
    CHECK(is_connected(t));
    const auto g = random_graph(8, 1, 3, s);
    CHECK(g.vertex_count() == 8);
  }
  CHECK(random_graph(6, 1, 1, 0) == complete(6));
  CHECK(random_graph(6, 0, 1, 0).edge_count() == 0);
}

TEST_CASE("random medians are median and grow by one class per step") {
  for (Seed s = 0; s < 20; ++s) {
    const int steps = 1 + static_cast<int>(s);
    const auto traced = random_median_graph_traced(steps, s);
    CHECK(traced.steps.size() == static_cast<std::size_t>(steps));
    const auto cert = is_partial_cube(traced.graph);
    REQUIRE(cert.verdict);
    CHECK(cert.idim == static_cast<std::size_t>(steps));
    if (traced.graph.vertex_count() <= 40) CHECK(oracle::median(traced.graph));
    CHECK(traced.steps.front().before == fixture::k1());
  }
  CHECK_THROWS_AS(random_median_graph(0, 3), InputError);
}

TEST_CASE("random median vertex cap falls back to pendants") {
  const auto g = random_median_graph(30, 4, {3, 20});
  CHECK(g.vertex_count() <= 20 + 30);
  const auto cert = is_partial_cube(g);
  CHECK(cert.verdict);
  CHECK(cert.idim == 30);
}

TEST_CASE("random partial cubes are partial cubes") {
  std::size_t non_median = 0;
  for (Seed s = 0; s < 20; ++s) {
    const auto g = random_partial_cube(10, s);
    REQUIRE(oracle::partial_cube(g));
    if (!oracle::median(g)) ++non_median;
  }
  CHECK(non_median > 0);
}

TEST_CASE("random connected subsets") {
  const auto g = hypercube(4);
  for (Seed s = 0; s < 20; ++s) {
    const auto sub = random_connected_subset(g, 1 + s % 10, s);
    CHECK(sub.count() == 1 + s % 10);
    CHECK(is_connected(induced_subgraph(g, sub).graph));
  }
}
