#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pcube/graph.hpp"

namespace pcube {

using ClassId = std::int32_t;

/// A 0-1 coordinate vector.  Bit i is coordinate i.
using Label = boost::dynamic_bitset<std::uint64_t>;

/// Renders bit 0 first, e.g. "110".
std::string label_string(const Label& label);
Label label_from_string(const std::string& bits);

/// Edge partition induced by the Djoković–Winkler relation.
///
/// Classes are the connected components of Θ on edges, ordered by their
/// least EdgeId.  `is_equivalence` records whether every pair inside every
/// component is Θ-related; when it is not, `witness` holds edges (e, f, g)
/// with e Θ f, f Θ g and not e Θ g.
struct ThetaPartition {
  std::vector<ClassId> class_of;
  std::vector<std::vector<EdgeId>> classes;
  bool is_equivalence = false;
  std::optional<std::array<EdgeId, 3>> witness;

  std::size_t class_count() const { return classes.size(); }
};

struct PartialCubeCertificate {
  bool verdict = false;
  bool connected = false;
  std::optional<std::vector<VertexId>> odd_cycle;  // set when G is not bipartite
  ThetaPartition theta;
  std::size_t idim = 0;                            // meaningful when verdict
  DistanceMatrix distances;
};

struct HypercubeEmbedding {
  std::vector<Label> labels;
  std::vector<std::size_t> class_bit;  // ClassId -> coordinate
  VertexId base = 0;

  std::size_t dimension() const { return class_bit.size(); }
};

/// W and U sides of a class, oriented by its least edge (a, b) with a < b.
struct Sides {
  VertexId a = 0;
  VertexId b = 0;
  VertexSet w_ab, w_ba, u_ab, u_ba;
};

bool theta_related(const Graph& g, const DistanceMatrix& d, EdgeId e, EdgeId f);

/// Throws InputError for disconnected graphs.
ThetaPartition theta_classes(const Graph& g, const DistanceMatrix& d);
ThetaPartition theta_classes(const Graph& g);

/// Winkler: connected, bipartite and Θ transitive.
PartialCubeCertificate is_partial_cube(const Graph& g);

/// Base vertex 0 gets the all-zero label.  The Hamming-distance invariant is
/// verified for every pair; a failure raises InternalError.
HypercubeEmbedding embed(const Graph& g, const PartialCubeCertificate& cert);

Sides sides(const Graph& g, const DistanceMatrix& d, const PartialCubeCertificate& cert, ClassId c);

/// Convexity of an induced connected G[s] in a bipartite g: no edge leaving s
/// is Θ-related to an edge inside s.  Throws InputError if G[s] is
/// disconnected or g is not bipartite.
bool convexity_by_boundary(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

}  // namespace pcube
