#pragma once

#include <optional>
#include <vector>

#include "pcube/crossing.hpp"
#include "pcube/graph.hpp"
#include "pcube/theta.hpp"

namespace pcube {

/// Every triple of distinct vertices has exactly one median.  Throws
/// InputError on disconnected input.
bool is_median_by_triples(const Graph& g, const DistanceMatrix& d);

/// Partial cube whose U-sides are all convex.
bool is_median_by_convex_U(const Graph& g);
bool is_median_by_convex_U(const Graph& g, const PartialCubeCertificate& cert);

/// Cover {V1, V2} of V(G) for an expansion; V0 = V1 ∩ V2.
struct ExpansionSpec {
  VertexSet v1;
  VertexSet v2;
};

/// Result of expanding g over a spec.  Copy 1 of G[V1] occupies ids
/// 0..|V1|-1 in ascending order of V1; copy 2 of G[V2] follows.
struct Expansion {
  Graph graph;
  std::vector<VertexId> source;     // expanded vertex -> vertex of g
  std::vector<bool> in_second_copy;
  std::vector<EdgeId> matching;     // the new edges joining the two copies of V0
};

/// Throws InputError naming the first violated precondition: the sets must
/// cover V(g), share a vertex, have no edge between V1∖V2 and V2∖V1, and each
/// induce an isometric subgraph.
Expansion expansion(const Graph& g, const ExpansionSpec& spec);

/// Expansion with V1 = V(g) and V2 = s.  Throws InputError when s is empty or
/// not convex.
Expansion peripheral_convex_expansion(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

struct Contraction {
  Graph graph;
  std::vector<VertexId> to_new;  // old vertex -> contracted vertex
};

/// Identifies the endpoints of every edge of class c.  Contracted ids follow
/// the least original vertex of each merged group.
Contraction contract_class(const Graph& g, const PartialCubeCertificate& cert, ClassId c);

/// Least class whose W-side coincides with its U-side on either end.
std::optional<ClassId> find_peripheral_class(const Graph& g, const PartialCubeCertificate& cert);

/// One peripheral convex expansion in a replay from K1.
struct PeripheralStep {
  Graph before;                  // the contracted graph
  VertexSet convex_set;          // expanded over, convex in `before`
  std::vector<VertexId> to_parent;  // expanded vertex -> vertex of the next graph up
};

/// Contractions down to K1, returned in replay order (K1 first).  Replaying
/// peripheral_convex_expansion(before, convex_set) and composing to_parent
/// maps gives an explicit isomorphism onto the input.  Throws InputError when
/// no peripheral class exists before reaching K1, which happens only for
/// non-median input.
std::vector<PeripheralStep> peripheral_decomposition(const Graph& g);

/// The subcube { base with the bits of `free` set arbitrarily }.
struct Subcube {
  Label base;  // free coordinates cleared
  Label free;

  bool contains(const Label& x) const { return ((x ^ base) & ~free).none(); }
  bool contains(const Subcube& other) const {
    return other.free.is_subset_of(free) && contains(other.base);
  }
  std::size_t dimension() const { return free.count(); }
  std::vector<Label> vertices() const;
  friend bool operator==(const Subcube&, const Subcube&) = default;
};

/// Smallest subcube containing every label; equals the convex hull in Q_n.
Subcube subcube_hull(const std::vector<Label>& labels);
std::vector<Label> hull_in_hypercube(const std::vector<Label>& labels);

/// Cycles whose hypercube hull is not strictly inside another cycle's hull.
/// Cycles sharing a hull are kept together.
std::vector<IsometricCycle> maximal_isometric_cycles(const Graph& g, const DistanceMatrix& d,
                                                     const HypercubeEmbedding& embedding,
                                                     const CycleLimits& limits = {});

struct ClosureRound {
  Graph graph;                         // G^(i); vertex ids persist across rounds
  std::vector<Label> labels;           // per vertex, in the fixed Q_n frame
  std::vector<IsometricCycle> maximal_cycles;
  std::vector<VertexId> added;         // vertices new in this round (empty for round 0)
};

struct ClosureTrace {
  std::size_t dimension = 0;
  std::vector<ClosureRound> rounds;  // rounds.back() is G+; l = rounds.size() - 1

  const Graph& final_graph() const { return rounds.back().graph; }
  std::size_t stabilization_index() const { return rounds.size() - 1; }
};

/// Iterates S_{i+1} = S_i ∪ hulls of the maximal isometric cycles of G^(i)
/// on label sets until nothing changes.  Throws InputError on non-partial
/// cubes and K1, GuardError when cycle enumeration trips its limits, and
/// InternalError if the fixpoint is not a median graph.
ClosureTrace median_closure(const Graph& g, const CycleLimits& limits = {});

/// Classes with an edge inside s.
std::vector<ClassId> theta_occurrence(const Graph& g, const PartialCubeCertificate& cert, const VertexSet& s);

}  // namespace pcube
