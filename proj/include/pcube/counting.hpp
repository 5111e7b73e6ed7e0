#pragma once

#include <functional>
#include <vector>

#include "pcube/graph.hpp"
#include "pcube/median.hpp"
#include "pcube/polynomial.hpp"
#include "pcube/theta.hpp"

namespace pcube {

/// Visits the vertex set of every induced hypercube of a partial cube that
/// lies inside `within`, each exactly once, keyed by its coordinatewise
/// least corner and an ascending set of free coordinates.
void for_each_induced_cube(const Graph& g, const PartialCubeCertificate& cert,
                           const HypercubeEmbedding& embedding, const VertexSet& within,
                           const std::function<void(const std::vector<VertexId>&)>& visit);

/// C(G, x) of a partial cube by anchor enumeration.
Polynomial cube_polynomial(const Graph& g, const PartialCubeCertificate& cert,
                           const HypercubeEmbedding& embedding);

/// C(G[s], x) for an induced subgraph of a partial cube.  G[s] itself need not
/// be a partial cube.
Polynomial cube_polynomial_within(const Graph& g, const PartialCubeCertificate& cert,
                                  const HypercubeEmbedding& embedding, const VertexSet& s);

/// C(G, x) for any graph: Q_k found by joining two disjoint induced Q_{k-1}
/// through a perfect matching that is an isomorphism between them.  Throws
/// GuardError when a level holds more than `max_per_level` cubes.
Polynomial cube_polynomial_oracle(const Graph& g, std::size_t max_per_level = 2048);

/// Cl(G, x) by Cl(G) = Cl(G - v) + x Cl(G[N(v)]) with v the least vertex.
Polynomial clique_polynomial_recursive(const Graph& g);

/// Cl(G, x) by direct clique enumeration.
Polynomial clique_polynomial_enumerate(const Graph& g);

struct TheoremReport {
  bool is_partial_cube = false;
  bool is_median = false;
  std::size_t idim = 0;
  Polynomial cube_poly;
  Polynomial crossing_clique_shifted;  // Cl(G#, x + 1)
  bool leq_holds = false;
  bool equality = false;

  /// leq always, and equality exactly for median graphs.
  bool theorem_holds() const {
    return !is_partial_cube || (leq_holds && equality == is_median);
  }
};

/// Throws InputError for K1.  Non-partial-cubes yield a report with
/// is_partial_cube false and empty polynomials.
TheoremReport verify_theorem(const Graph& g);

struct ExpansionCheck {
  Polynomial expanded;           // C(G*)
  Polynomial first, second, overlap;  // C(G[V1]), C(G[V2]), C(G[V0])
  bool three_term_holds = false;  // C(G*) = C(G1) + C(G2) + x C(G0)
  bool peripheral = false;
  bool two_term_holds = false;    // C(G*) = C(G1) + (x+1) C(G0); only when peripheral
  bool holds() const { return three_term_holds && (!peripheral || two_term_holds); }
};

/// Expands a partial cube over `spec` and checks the cube-polynomial
/// expansion identities.  Throws InputError when g is not a partial cube, the
/// spec is invalid, or {G[V1], G[V2]} is not a cubical cover.
ExpansionCheck expansion_formula_check(const Graph& g, const ExpansionSpec& spec);

/// Coefficients of p in the basis (x+1)^i.  Signed: non-median inputs may
/// produce negative entries.
std::vector<BigInt> x_plus_one_expansion(const Polynomial& p);

/// Clique counts a_0..a_w as plain integers (a_0 = 1).
std::vector<BigInt> clique_counts(const Graph& g);

}  // namespace pcube
