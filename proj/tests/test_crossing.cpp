#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pcube/crossing.hpp"
#include "pcube/error.hpp"
#include "pcube/generators.hpp"
#include "pcube/median.hpp"

using namespace pcube;

namespace {

std::set<std::vector<VertexId>> as_set(const std::vector<IsometricCycle>& cycles) {
  std::set<std::vector<VertexId>> out;
  for (const auto& c : cycles) out.insert(c.vertices);
  return out;
}

// All four W-quadrants nonempty, computed from Floyd-Warshall distances.
bool oracle_crosses(const Graph& g, const PartialCubeCertificate& cert, ClassId c1, ClassId c2) {
  const auto d = oracle::distances(g);
  const auto e = g.edge(cert.theta.classes[c1].front());
  const auto f = g.edge(cert.theta.classes[c2].front());
  bool seen[2][2] = {{false, false}, {false, false}};
  for (std::size_t x = 0; x < g.vertex_count(); ++x) seen[d[x][e.u] < d[x][e.v]][d[x][f.u] < d[x][f.v]] = true;
  return seen[0][0] && seen[0][1] && seen[1][0] && seen[1][1];
}

std::vector<Graph> sample() {
  std::vector<Graph> out = {fixture::c6(), fixture::q3(), trihex(), hypercube_minus_vertex(3),
                            even_cycle(4), fixture::k23(), fixture::k3(), complete(4)};
  for (Seed s = 0; s < 6; ++s) {
    out.push_back(random_median_graph(6, s));
    out.push_back(random_partial_cube(6, s));
    out.push_back(random_tree(7, s));
  }
  return out;
}

}  // namespace

TEST_CASE("canonical cycle picks the least rotation or reflection") {
  CHECK(canonical_cycle({3, 1, 2}) == std::vector<VertexId>{1, 2, 3});
  CHECK(canonical_cycle({5, 0, 4, 2}) == std::vector<VertexId>{0, 4, 2, 5});
  CHECK(canonical_cycle({2, 7, 0, 9}) == std::vector<VertexId>{0, 7, 2, 9});
}

TEST_CASE("isometric cycles agree with exhaustive search") {
  for (const auto& g : sample()) {
    if (g.vertex_count() > 16 || !is_connected(g)) continue;
    const auto found = isometric_cycles(g, all_pairs_distances(g));
    CHECK(std::is_sorted(found.begin(), found.end()));
    REQUIRE(as_set(found) == oracle::isometric_cycles(g));
    CHECK(as_set(found).size() == found.size());
  }
}

TEST_CASE("isometric cycles of named graphs") {
  const auto q3 = fixture::q3();
  const auto cycles = isometric_cycles(q3, all_pairs_distances(q3));
  // Six faces and four hexagons: a 6-cycle of Q3 misses one antipodal pair
  // and realizes every distance.
  std::size_t squares = 0, hexagons = 0;
  for (const auto& c : cycles) (c.length() == 4 ? squares : hexagons) += 1;
  CHECK(squares == 6);
  CHECK(hexagons == 4);

  const auto tree = random_tree(10, 3);
  CHECK(isometric_cycles(tree, all_pairs_distances(tree)).empty());
  const auto c6 = fixture::c6();
  const auto one = isometric_cycles(c6, all_pairs_distances(c6));
  REQUIRE(one.size() == 1);
  CHECK(one[0].vertices == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
  const auto k4 = complete(4);
  CHECK(isometric_cycles(k4, all_pairs_distances(k4)).size() == 4);
  const auto c5 = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(isometric_cycles(c5, all_pairs_distances(c5)).size() == 1);
  const auto th = trihex();
  CHECK(isometric_cycles(th, all_pairs_distances(th)).size() == 3);
}

TEST_CASE("isometric cycle guards") {
  const auto c6 = fixture::c6();
  CHECK_THROWS_AS(isometric_cycles(c6, all_pairs_distances(c6), {3, 100}), GuardError);
  const auto q3 = fixture::q3();
  CHECK_THROWS_AS(isometric_cycles(q3, all_pairs_distances(q3), {100, 5}), GuardError);
  const auto d = all_pairs_distances(q3);
  CHECK(is_isometric_cycle(d, {0, 1, 3, 7, 6, 4}));
  CHECK(is_isometric_cycle(d, {0, 1, 3, 2}));
  CHECK_FALSE(is_isometric_cycle(d, {0, 1, 3, 2, 6, 7, 5, 4}));
}

TEST_CASE("quadrant and cycle crossing agree with each other and the oracle") {
  for (const auto& g : sample()) {
    const auto cert = is_partial_cube(g);
    if (!cert.verdict) continue;
    const auto& d = cert.distances;
    const auto cycles = isometric_cycles(g, d);
    const auto k = static_cast<ClassId>(cert.theta.class_count());
    for (ClassId a = 0; a < k; ++a)
      for (ClassId b = 0; b < k; ++b) {
        if (a == b) continue;
        const bool q = crosses_quadrant(g, d, cert, a, b);
        REQUIRE(q == oracle_crosses(g, cert, a, b));
        REQUIRE(q == crosses_cycle(g, cert, cycles, a, b));
      }
  }
}

TEST_CASE("crossing graphs of named graphs") {
  CHECK(crossing_graph(fixture::c6()).graph == complete(3));
  CHECK(crossing_graph(fixture::q3()).graph == complete(3));
  CHECK(crossing_graph(hypercube(4)).graph == complete(4));
  CHECK(crossing_graph(fixture::c4()).graph == complete(2));
  const auto tree = random_tree(9, 1);
  const auto cg = crossing_graph(tree).graph;
  CHECK(cg.vertex_count() == 8);
  CHECK(cg.edge_count() == 0);
  // Trihex: each hexagon's three classes cross pairwise.
  const auto th = crossing_graph(trihex()).graph;
  CHECK(th.vertex_count() == 6);
  CHECK(th.edge_count() == 9);
}

TEST_CASE("crossing preconditions") {
  CHECK_THROWS_AS(crossing_graph(fixture::k1()), InputError);
  CHECK_THROWS_AS(crossing_graph(fixture::k3()), InputError);
  CHECK_THROWS_AS(crossing_graph(fixture::k23()), InputError);
  const auto g = fixture::q3();
  const auto cert = is_partial_cube(g);
  CHECK_THROWS_AS(crosses_quadrant(g, cert.distances, cert, 1, 1), InputError);
  CHECK_THROWS_AS(crosses_cycle(g, cert, {}, 2, 2), InputError);
}

TEST_CASE("alternating squares") {
  const auto q3 = fixture::q3();
  const auto cert = is_partial_cube(q3);
  for (ClassId a = 0; a < 3; ++a)
    for (ClassId b = 0; b < 3; ++b) {
      if (a == b) continue;
      const auto sq = alternating_square(q3, cert, a, b);
      REQUIRE(sq);
      const auto& cls = cert.theta.class_of;
      CHECK(cls[*q3.edge_id(sq->u, sq->v)] == a);
      CHECK(cls[*q3.edge_id(sq->x, sq->w)] == a);
      CHECK(cls[*q3.edge_id(sq->u, sq->x)] == b);
      CHECK(cls[*q3.edge_id(sq->v, sq->w)] == b);
    }
  const auto c6 = fixture::c6();
  const auto c6cert = is_partial_cube(c6);
  CHECK_FALSE(alternating_square(c6, c6cert, 0, 1));
}

TEST_CASE("clique enumeration order") {
  const auto cliques = enumerate_cliques(fixture::p3(), 100);
  const std::vector<std::vector<VertexId>> want = {{}, {0}, {0, 1}, {1}, {1, 2}, {2}};
  CHECK(cliques == want);
  CHECK_THROWS_AS(enumerate_cliques(complete(5), 10), GuardError);
}

TEST_CASE("simplex graphs of small graphs") {
  CHECK(simplex_graph(fixture::k1()).graph == fixture::k2());
  const auto c4 = simplex_graph(fixture::k2());
  CHECK(c4.graph.vertex_count() == 4);
  CHECK(c4.graph.edge_count() == 4);
  CHECK(is_partial_cube(c4.graph).verdict);
  CHECK(crossing_graph(c4.graph).graph == fixture::k2());

  const auto sp = simplex_graph(fixture::p3());
  CHECK(sp.graph.vertex_count() == 6);
  CHECK(sp.graph.edge_count() == 7);
  CHECK(sp.clique_of_vertex[0].empty());
  CHECK(isometric_cycles(sp.graph, all_pairs_distances(sp.graph)).size() == 2);

  const auto cube = simplex_graph(fixture::k3());
  CHECK(cube.graph.vertex_count() == 8);
  CHECK(cube.graph.edge_count() == 12);
  CHECK(crossing_graph(cube.graph).graph == fixture::k3());

  const auto star = simplex_graph(Graph(4, {}));
  CHECK(star.graph.vertex_count() == 5);
  CHECK(star.graph.degree(0) == 4);

  CHECK(simplex_graph(Graph(0, {})).graph == fixture::k1());
  CHECK_THROWS_AS(simplex_graph(complete(6), 20), GuardError);
}

TEST_CASE("simplex adjacency is single-vertex difference") {
  for (Seed s = 0; s < 5; ++s) {
    const auto h = random_graph(6, 1, 2, s);
    const auto sg = simplex_graph(h);
    const auto n = static_cast<VertexId>(sg.graph.vertex_count());
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b) {
        const auto& ka = sg.clique_of_vertex[a];
        const auto& kb = sg.clique_of_vertex[b];
        const auto& small = ka.size() < kb.size() ? ka : kb;
        const auto& big = ka.size() < kb.size() ? kb : ka;
        const bool differ_by_one =
            big.size() == small.size() + 1 && std::includes(big.begin(), big.end(), small.begin(), small.end());
        REQUIRE(sg.graph.has_edge(a, b) == differ_by_one);
      }
    CHECK(is_median_by_triples(sg.graph, all_pairs_distances(sg.graph)));
  }
}

TEST_CASE("every graph is the crossing graph of its simplex graph") {
  CHECK(verify_simplex_identity(Graph(0, {})));
  for (int n = 1; n <= 4; ++n)
    for (const auto& h : fixture::all_labeled(n)) REQUIRE(verify_simplex_identity(h));
  for (Seed s = 0; s < 10; ++s) CHECK(verify_simplex_identity(random_graph(7, 1, 2, s)));
}
