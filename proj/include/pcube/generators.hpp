#pragma once

#include <cstdint>
#include <vector>

#include "pcube/graph.hpp"
#include "pcube/median.hpp"

namespace pcube {

/// Seed for the generators' std::mt19937_64 streams.
using Seed = std::uint64_t;

inline constexpr std::size_t kDefaultVertexGuard = 200'000;

/// Q_n, vertex id = label value; 0 <= n <= 20.
Graph hypercube(int n);
/// C_{2k}, k >= 2.
Graph even_cycle(int half_length);
/// P_n on n >= 1 vertices.
Graph path(int n);
/// K_n, n >= 1.
Graph complete(int n);
/// Seeded uniform attachment: vertex i joins a uniform earlier vertex.
Graph random_tree(int n, Seed seed);
/// G(n, p) with p = numerator / denominator.
Graph random_graph(int n, int numerator, int denominator, Seed seed);

/// m new leaves attached round-robin over V(G); the seed picks the start.
Graph attach_pendants(const Graph& g, std::size_t m, Seed seed,
                      std::size_t max_vertices = kDefaultVertexGuard);

/// K_n plus m isolated vertices.
Graph example_41(int n, std::size_t m, std::size_t max_vertices = kDefaultVertexGuard);
/// Q_n with m pendant vertices.
Graph example_42(int n, std::size_t m, std::size_t max_vertices = kDefaultVertexGuard);

/// Three 6-cycles around a common vertex, each pair sharing an edge:
/// u1..u6, u3 u7 u8 u9 u10 u4, u5 u4 u10 u11 u12 u13 (u_i is vertex i-1).
Graph trihex();

/// Q_n minus the all-ones vertex, n >= 2.
Graph hypercube_minus_vertex(int n);

struct RandomMedianOptions {
  int max_picks = 3;            // hull of 1..max_picks random vertices per step
  std::size_t max_vertices = 256;  // past this, a step falls back to a pendant
};

struct RecordedExpansion {
  Graph before;
  VertexSet convex_set;
};

struct RandomMedian {
  Graph graph;
  std::vector<RecordedExpansion> steps;
};

/// Grows a median graph from K1 by `steps` peripheral convex expansions over
/// hulls of random vertex picks.
RandomMedian random_median_graph_traced(int steps, Seed seed, const RandomMedianOptions& options = {});
Graph random_median_graph(int steps, Seed seed, const RandomMedianOptions& options = {});

/// A random median graph with a few random vertices deleted, kept only when
/// the result is still a partial cube.  Usually not median.
Graph random_partial_cube(int steps, Seed seed);

/// Random connected vertex subset of g of roughly `size` vertices, grown
/// from a random start by random boundary picks.
VertexSet random_connected_subset(const Graph& g, std::size_t size, Seed seed);

}  // namespace pcube
