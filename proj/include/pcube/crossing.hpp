#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "pcube/graph.hpp"
#include "pcube/theta.hpp"

namespace pcube {

/// A cycle that is distance-preserving in its host graph.
struct IsometricCycle {
  std::vector<VertexId> vertices;  // canonical: least rotation/reflection

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const IsometricCycle&, const IsometricCycle&) = default;
  friend auto operator<=>(const IsometricCycle&, const IsometricCycle&) = default;
};

/// Least rotation/reflection of a cyclic vertex sequence.
std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle);

/// Cyclic distances equal graph distances for every pair on the cycle.
bool is_isometric_cycle(const DistanceMatrix& d, const std::vector<VertexId>& cycle);

struct CycleLimits {
  std::size_t max_vertices = 4096;
  std::size_t max_cycles = 2'000'000;
};

/// Every isometric cycle of a connected graph exactly once, sorted.  Cycles
/// are found as pairs of internally disjoint geodesics from their least
/// vertex to its antipode (or antipodal edge, for odd lengths).  Throws
/// GuardError rather than truncating when a limit is hit.
std::vector<IsometricCycle> isometric_cycles(const Graph& g, const DistanceMatrix& d,
                                             const CycleLimits& limits = {});

/// All four W-quadrants of the two classes are nonempty.
bool crosses_quadrant(const Graph& g, const DistanceMatrix& d, const PartialCubeCertificate& cert,
                      ClassId c1, ClassId c2);

/// Some isometric cycle carries an edge of each class.
bool crosses_cycle(const Graph& g, const PartialCubeCertificate& cert,
                   const std::vector<IsometricCycle>& cycles, ClassId c1, ClassId c2);

struct CrossingGraph {
  Graph graph;  // vertex i is Θ-class i
};

/// Throws InputError when g is not a partial cube or is K1.
CrossingGraph crossing_graph(const Graph& g, const PartialCubeCertificate& cert);
CrossingGraph crossing_graph(const Graph& g);

/// A 4-cycle u v w x with uv, xw in the first class and ux, vw in the second.
struct AlternatingSquare {
  VertexId u, v, w, x;
};

/// The square with the least canonical vertex sequence, if any.
std::optional<AlternatingSquare> alternating_square(const Graph& g, const PartialCubeCertificate& cert,
                                                    ClassId c1, ClassId c2);

struct SimplexGraph {
  Graph graph;
  std::vector<std::vector<VertexId>> clique_of_vertex;  // vertex 0 is the empty clique
};

/// Every clique of a graph (including the empty one) in ascending-id DFS
/// order, each sorted.  Throws GuardError past max_cliques.
std::vector<std::vector<VertexId>> enumerate_cliques(const Graph& h, std::size_t max_cliques);

SimplexGraph simplex_graph(const Graph& h, std::size_t max_cliques = 1'000'000);

/// Checks that the crossing graph of S(h) is h under the natural bijection
/// sending the class of edge (K, K+v) to v.
bool verify_simplex_identity(const Graph& h, std::size_t max_cliques = 1'000'000);

}  // namespace pcube
