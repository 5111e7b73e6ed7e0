#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pcube {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Membership set over the vertices 0..n-1 of some graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
  VertexSet(std::size_t universe, std::span<const VertexId> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  bool contains(VertexId v) const { return bits_[static_cast<std::size_t>(v)]; }
  void insert(VertexId v) { bits_[static_cast<std::size_t>(v)] = true; }
  void erase(VertexId v) { bits_[static_cast<std::size_t>(v)] = false; }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<VertexId> members() const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> bits_;
};

VertexSet operator|(VertexSet a, const VertexSet& b);
VertexSet operator&(VertexSet a, const VertexSet& b);

/// Finite simple undirected graph.  Immutable after construction.
///
/// Edges are stored canonically (u < v) and sorted lexicographically, so an
/// EdgeId is the index of the edge in that order.  Everything downstream
/// (Θ-class ids, embeddings, reports) inherits its determinism from this.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on loops, duplicate edges and out-of-range ids.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return incident_[static_cast<std::size_t>(v)];
  }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  bool has_edge(VertexId u, VertexId v) const { return edge_id(u, v).has_value(); }
  std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph(n, edges);
}

/// Dense hop-count matrix.  Unreachable pairs hold kInfinite.
class DistanceMatrix {
 public:
  static constexpr std::int32_t kInfinite = std::numeric_limits<std::int32_t>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kInfinite) {}

  std::size_t size() const { return n_; }
  std::int32_t operator()(VertexId u, VertexId v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }
  std::int32_t& operator()(VertexId u, VertexId v) {
    return dist_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }
  bool connected(VertexId u, VertexId v) const { return (*this)(u, v) != kInfinite; }
  std::int32_t max_finite() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> dist_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_original;  // new id -> old id, ascending
  std::vector<VertexId> to_new;       // old id -> new id, or -1 when outside S
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// Either a proper 2-coloring or an odd closed walk witnessing failure.
struct BipartiteResult {
  std::optional<std::vector<int>> coloring;
  std::vector<VertexId> odd_cycle;  // v0 v1 ... vk with vk ~ v0; empty when bipartite

  explicit operator bool() const { return coloring.has_value(); }
};

BipartiteResult is_bipartite(const Graph& g);
bool is_connected(const Graph& g);

std::vector<std::int32_t> bfs_distances(const Graph& g, VertexId source);
DistanceMatrix all_pairs_distances(const Graph& g);

/// I(u,v): vertices on some u,v-geodesic.  Throws InputError when u and v are
/// in different components.
VertexSet interval(const Graph& g, const DistanceMatrix& d, VertexId u, VertexId v);

/// Union of I(u,v) over all pairs of s.
VertexSet ell_step(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

/// Least convex superset of s, by iterating ell_step to a fixpoint.
VertexSet convex_hull(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

/// The empty set and singletons are convex; otherwise s must be closed under
/// ell_step and induce a connected subgraph.
bool is_convex(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

/// True when distances inside G[s] match the distances of g.
bool is_isometric(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

VertexSet medians_of_triple(const Graph& g, const DistanceMatrix& d, VertexId u, VertexId v,
                            VertexId w);

}  // namespace pcube
