#include "pcube/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pcube/error.hpp"

namespace pcube {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : VertexSet(universe, std::span<const VertexId>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members)
    : bits_(universe, false) {
  for (VertexId v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe) {
      throw InputError("vertex " + std::to_string(v) + " outside 0.." +
                       std::to_string(universe));
    }
    bits_[static_cast<std::size_t>(v)] = true;
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.assign(universe, true);
  return s;
}

std::size_t VertexSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<VertexId>(i));
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] || other.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] && other.bits_[i];
  return *this;
}

VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : adjacency_(n), incident_(n) {
  auto pair_text = [](const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
  };
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n) {
      throw InputError("edge " + pair_text(e) + " has a vertex id outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) throw InputError("edge " + pair_text(e) + " is a loop");
    edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw InputError("duplicate edge " + pair_text(*dup));

  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const auto [u, v] = edges_[id];
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  // Sort each row together with its edge ids.
  for (std::size_t v = 0; v < n; ++v) {
    auto& row = adjacency_[v];
    std::sort(row.begin(), row.end());
    auto& ids = incident_[v];
    ids.reserve(row.size());
    for (VertexId w : row) {
      const Edge key{std::min(static_cast<VertexId>(v), w), std::max(static_cast<VertexId>(v), w)};
      ids.push_back(static_cast<EdgeId>(
          std::lower_bound(edges_.begin(), edges_.end(), key) - edges_.begin()));
    }
  }
}

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count() ||
      static_cast<std::size_t>(v) >= vertex_count()) {
    return std::nullopt;
  }
  const auto row = neighbors(u);
  const auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - row.begin())];
}

std::int32_t DistanceMatrix::max_finite() const {
  std::int32_t best = 0;
  for (auto x : dist_) {
    if (x != kInfinite) best = std::max(best, x);
  }
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_new.assign(g.vertex_count(), -1);
  for (VertexId v : s.members()) {
    out.to_new[static_cast<std::size_t>(v)] = static_cast<VertexId>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const VertexId a = out.to_new[static_cast<std::size_t>(e.u)];
    const VertexId b = out.to_new[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  out.graph = Graph(out.to_original.size(), edges);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto shift = static_cast<VertexId>(g.vertex_count());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g.vertex_count() + h.vertex_count(), edges);
}

Graph complement(const Graph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(g.vertex_count(), edges);
}

BipartiteResult is_bipartite(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<VertexId> parent(n, -1);
  std::vector<std::int32_t> depth(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::queue<VertexId> queue;
    queue.push(static_cast<VertexId>(root));
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop();
      for (VertexId w : g.neighbors(u)) {
        const auto wi = static_cast<std::size_t>(w);
        if (color[wi] < 0) {
          color[wi] = 1 - color[static_cast<std::size_t>(u)];
          parent[wi] = u;
          depth[wi] = depth[static_cast<std::size_t>(u)] + 1;
          queue.push(w);
        } else if (color[wi] == color[static_cast<std::size_t>(u)]) {
          // Climb both BFS-tree branches to their meeting point.
          std::vector<VertexId> left{u}, right{w};
          VertexId a = u, b = w;
          while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            left.push_back(a);
          }
          while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
            b = parent[static_cast<std::size_t>(b)];
            right.push_back(b);
          }
          while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            b = parent[static_cast<std::size_t>(b)];
            left.push_back(a);
            right.push_back(b);
          }
          right.pop_back();  // meeting vertex is already the tail of `left`
          BipartiteResult fail;
          fail.odd_cycle.assign(left.rbegin(), left.rend());
          fail.odd_cycle.insert(fail.odd_cycle.end(), right.begin(), right.end());
          return fail;
        }
      }
    }
  }
  BipartiteResult ok;
  ok.coloring = std::move(color);
  return ok;
}

std::vector<std::int32_t> bfs_distances(const Graph& g, VertexId source) {
  std::vector<std::int32_t> dist(g.vertex_count(), DistanceMatrix::kInfinite);
  std::queue<VertexId> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop();
    for (VertexId w : g.neighbors(u)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw == DistanceMatrix::kInfinite) {
        dw = dist[static_cast<std::size_t>(u)] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::int32_t x) { return x == DistanceMatrix::kInfinite; });
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const auto n = g.vertex_count();
  DistanceMatrix d(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto row = bfs_distances(g, static_cast<VertexId>(s));
    for (std::size_t t = 0; t < n; ++t) d(static_cast<VertexId>(s), static_cast<VertexId>(t)) = row[t];
  }
  return d;
}

VertexSet interval(const Graph& g, const DistanceMatrix& d, VertexId u, VertexId v) {
  if (!d.connected(u, v)) {
    throw InputError("interval: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                     " lie in different components");
  }
  const auto n = static_cast<VertexId>(g.vertex_count());
  VertexSet out(g.vertex_count());
  const auto duv = d(u, v);
  for (VertexId w = 0; w < n; ++w) {
    if (d.connected(u, w) && d(u, w) + d(w, v) == duv) out.insert(w);
  }
  return out;
}

VertexSet ell_step(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  const auto members = s.members();
  VertexSet out = s;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      out |= interval(g, d, members[i], members[j]);
    }
  }
  return out;
}

VertexSet convex_hull(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  VertexSet current = s;
  // Each productive round adds a vertex, so n rounds suffice.
  for (std::size_t round = 0; round <= g.vertex_count(); ++round) {
    VertexSet next = ell_step(g, d, current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw InternalError("convex_hull: no fixpoint after n rounds");
}

namespace {

bool induces_connected(const Graph& g, const VertexSet& s) {
  const auto members = s.members();
  if (members.size() <= 1) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{members.front()};
  seen[static_cast<std::size_t>(members.front())] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(u)) {
      if (s.contains(w) && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == members.size();
}

}  // namespace

bool is_convex(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  if (s.count() <= 1) return true;
  if (!induces_connected(g, s)) return false;
  return ell_step(g, d, s) == s;
}

bool is_isometric(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  const auto sub = induced_subgraph(g, s);
  const auto n = static_cast<VertexId>(sub.to_original.size());
  for (VertexId a = 0; a < n; ++a) {
    const auto row = bfs_distances(sub.graph, a);
    for (VertexId b = 0; b < n; ++b) {
      if (row[static_cast<std::size_t>(b)] !=
          d(sub.to_original[static_cast<std::size_t>(a)], sub.to_original[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  return true;
}

VertexSet medians_of_triple(const Graph& g, const DistanceMatrix& d, VertexId u, VertexId v,
                            VertexId w) {
  if (!d.connected(u, v) || !d.connected(u, w)) {
    throw InputError("medians_of_triple: vertices not in one component");
  }
  const auto n = static_cast<VertexId>(g.vertex_count());
  VertexSet out(g.vertex_count());
  for (VertexId x = 0; x < n; ++x) {
    if (!d.connected(u, x)) continue;
    if (d(u, x) + d(x, v) == d(u, v) && d(u, x) + d(x, w) == d(u, w) &&
        d(v, x) + d(x, w) == d(v, w)) {
      out.insert(x);
    }
  }
  return out;
}

}  // namespace pcube
