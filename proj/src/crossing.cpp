#include "pcube/crossing.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pcube/error.hpp"

namespace pcube {

std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle) {
  if (cycle.size() < 3) return cycle;
  const auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

bool is_isometric_cycle(const DistanceMatrix& d, const std::vector<VertexId>& cycle) {
  const auto len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const auto cyclic = static_cast<std::int32_t>(std::min(j - i, len - (j - i)));
      if (d(cycle[i], cycle[j]) != cyclic) return false;
    }
  }
  return true;
}

namespace {

using Path = std::vector<VertexId>;

// Geodesics leaving `s` through vertices greater than `s`, bucketed by
// endpoint.  Every prefix of a geodesic is a geodesic, so d(s, .) rising by
// one per step is the only pruning needed.
void grow_geodesics(const Graph& g, const DistanceMatrix& d, Path& path,
                    std::vector<std::vector<Path>>& by_end, std::size_t& stored,
                    const CycleLimits& limits) {
  const VertexId s = path.front();
  const VertexId tip = path.back();
  for (VertexId w : g.neighbors(tip)) {
    if (w <= s || d(s, w) != static_cast<std::int32_t>(path.size())) continue;
    path.push_back(w);
    by_end[static_cast<std::size_t>(w)].push_back(path);
    if (++stored > limits.max_cycles) {
      throw GuardError("isometric cycle search exceeded " + std::to_string(limits.max_cycles) +
                       " geodesic paths; raise the limit or use a smaller graph");
    }
    grow_geodesics(g, d, path, by_end, stored, limits);
    path.pop_back();
  }
}

bool interiors_disjoint(const Path& p, const Path& q, std::size_t last) {
  for (std::size_t i = 1; i <= last; ++i) {
    for (std::size_t j = 1; j <= last; ++j) {
      if (p[i] == q[j]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<IsometricCycle> isometric_cycles(const Graph& g, const DistanceMatrix& d,
                                             const CycleLimits& limits) {
  const auto n = g.vertex_count();
  if (n > limits.max_vertices) {
    throw GuardError("isometric cycle search limited to " + std::to_string(limits.max_vertices) +
                     " vertices, graph has " + std::to_string(n));
  }
  std::vector<IsometricCycle> out;
  for (VertexId s = 0; s < static_cast<VertexId>(n); ++s) {
    std::vector<std::vector<Path>> by_end(n);
    std::size_t stored = 0;
    Path path{s};
    grow_geodesics(g, d, path, by_end, stored, limits);

    for (VertexId t = s + 1; t < static_cast<VertexId>(n); ++t) {
      const auto& here = by_end[static_cast<std::size_t>(t)];
      if (here.empty()) continue;
      const auto m = here.front().size() - 1;

      // Even cycles: two geodesics s -> t.
      for (std::size_t i = 0; m >= 2 && i < here.size(); ++i) {
        for (std::size_t j = i + 1; j < here.size(); ++j) {
          if (!interiors_disjoint(here[i], here[j], m - 1)) continue;
          std::vector<VertexId> cycle(here[i]);
          for (std::size_t k = m - 1; k >= 1; --k) cycle.push_back(here[j][k]);
          if (is_isometric_cycle(d, cycle)) out.push_back({canonical_cycle(std::move(cycle))});
        }
      }
      // Odd cycles: geodesics s -> t and s -> t' with t ~ t', t < t'.
      for (VertexId t2 : g.neighbors(t)) {
        if (t2 <= t) continue;
        const auto& there = by_end[static_cast<std::size_t>(t2)];
        if (there.empty() || there.front().size() != here.front().size()) continue;
        for (const Path& p : here) {
          for (const Path& q : there) {
            if (!interiors_disjoint(p, q, m)) continue;
            std::vector<VertexId> cycle(p);
            for (std::size_t k = m; k >= 1; --k) cycle.push_back(q[k]);
            if (is_isometric_cycle(d, cycle)) out.push_back({canonical_cycle(std::move(cycle))});
          }
        }
      }
      if (out.size() > limits.max_cycles) {
        throw GuardError("more than " + std::to_string(limits.max_cycles) + " isometric cycles");
      }
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InternalError("isometric_cycles: a cycle was produced twice");
  }
  return out;
}

namespace {

void require_distinct_classes(const PartialCubeCertificate& cert, ClassId c1, ClassId c2) {
  if (!cert.verdict) throw InputError("crossing: graph is not a partial cube");
  const auto k = static_cast<ClassId>(cert.theta.class_count());
  if (c1 < 0 || c2 < 0 || c1 >= k || c2 >= k) throw InputError("crossing: class id out of range");
  if (c1 == c2) throw InputError("crossing is irreflexive: both class ids are " + std::to_string(c1));
}

bool quadrants_nonempty(const Sides& a, const Sides& b) {
  return !(a.w_ab & b.w_ab).empty() && !(a.w_ab & b.w_ba).empty() &&
         !(a.w_ba & b.w_ab).empty() && !(a.w_ba & b.w_ba).empty();
}

}  // namespace

bool crosses_quadrant(const Graph& g, const DistanceMatrix& d, const PartialCubeCertificate& cert,
                      ClassId c1, ClassId c2) {
  require_distinct_classes(cert, c1, c2);
  return quadrants_nonempty(sides(g, d, cert, c1), sides(g, d, cert, c2));
}

bool crosses_cycle(const Graph& g, const PartialCubeCertificate& cert,
                   const std::vector<IsometricCycle>& cycles, ClassId c1, ClassId c2) {
  require_distinct_classes(cert, c1, c2);
  for (const auto& cycle : cycles) {
    bool has1 = false, has2 = false;
    const auto len = cycle.vertices.size();
    for (std::size_t i = 0; i < len; ++i) {
      const auto e = g.edge_id(cycle.vertices[i], cycle.vertices[(i + 1) % len]);
      if (!e) throw InputError("crosses_cycle: cycle uses a non-edge");
      const auto c = cert.theta.class_of[static_cast<std::size_t>(*e)];
      has1 = has1 || c == c1;
      has2 = has2 || c == c2;
    }
    if (has1 && has2) return true;
  }
  return false;
}

CrossingGraph crossing_graph(const Graph& g, const PartialCubeCertificate& cert) {
  if (!cert.verdict) throw InputError("crossing_graph: graph is not a partial cube");
  if (g.vertex_count() == 1) throw InputError("crossing_graph: G must not be K1");
  const auto k = cert.theta.class_count();
  std::vector<Sides> all;
  all.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    all.push_back(sides(g, cert.distances, cert, static_cast<ClassId>(c)));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (quadrants_nonempty(all[i], all[j])) {
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
      }
    }
  }
  return {Graph(k, edges)};
}

CrossingGraph crossing_graph(const Graph& g) { return crossing_graph(g, is_partial_cube(g)); }

std::optional<AlternatingSquare> alternating_square(const Graph& g, const PartialCubeCertificate& cert,
                                                    ClassId c1, ClassId c2) {
  if (!cert.verdict) throw InputError("alternating_square: graph is not a partial cube");
  const auto class_of = [&](VertexId a, VertexId b) -> ClassId {
    const auto e = g.edge_id(a, b);
    return e ? cert.theta.class_of[static_cast<std::size_t>(*e)] : -1;
  };
  std::optional<AlternatingSquare> best;
  std::vector<VertexId> best_key;
  for (EdgeId e : cert.theta.classes.at(static_cast<std::size_t>(c1))) {
    const auto [p, q] = g.edge(e);
    for (auto [u, v] : {std::pair{p, q}, std::pair{q, p}}) {
      for (VertexId x : g.neighbors(u)) {
        if (x == v || class_of(u, x) != c2) continue;
        for (VertexId w : g.neighbors(v)) {
          if (w == u || w == x || class_of(v, w) != c2 || class_of(x, w) != c1) continue;
          auto key = canonical_cycle({u, v, w, x});
          if (!best || key < best_key) {
            best = AlternatingSquare{u, v, w, x};
            best_key = std::move(key);
          }
        }
      }
    }
  }
  return best;
}

namespace {

void extend_cliques(const Graph& h, std::vector<VertexId>& clique, const std::vector<VertexId>& candidates,
                    std::vector<std::vector<VertexId>>& out, std::size_t max_cliques) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const VertexId v = candidates[i];
    clique.push_back(v);
    out.push_back(clique);
    if (out.size() > max_cliques) {
      throw GuardError("clique enumeration exceeded " + std::to_string(max_cliques) +
                       " cliques; use a smaller or sparser graph");
    }
    std::vector<VertexId> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (h.has_edge(v, candidates[j])) next.push_back(candidates[j]);
    }
    extend_cliques(h, clique, next, out, max_cliques);
    clique.pop_back();
  }
}

}  // namespace

std::vector<std::vector<VertexId>> enumerate_cliques(const Graph& h, std::size_t max_cliques) {
  std::vector<std::vector<VertexId>> out{{}};
  std::vector<VertexId> all(h.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<VertexId>(v);
  std::vector<VertexId> clique;
  extend_cliques(h, clique, all, out, max_cliques);
  return out;
}

SimplexGraph simplex_graph(const Graph& h, std::size_t max_cliques) {
  SimplexGraph out;
  out.clique_of_vertex = enumerate_cliques(h, max_cliques);
  std::map<std::vector<VertexId>, VertexId> index;
  for (std::size_t i = 0; i < out.clique_of_vertex.size(); ++i) {
    index.emplace(out.clique_of_vertex[i], static_cast<VertexId>(i));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < out.clique_of_vertex.size(); ++i) {
    const auto& clique = out.clique_of_vertex[i];
    for (std::size_t drop = 0; drop < clique.size(); ++drop) {
      auto smaller = clique;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      edges.push_back({index.at(smaller), static_cast<VertexId>(i)});
    }
  }
  out.graph = Graph(out.clique_of_vertex.size(), edges);
  return out;
}

bool verify_simplex_identity(const Graph& h, std::size_t max_cliques) {
  if (h.vertex_count() == 0) return true;  // S(h) = K1, whose crossing graph is empty
  const auto s = simplex_graph(h, max_cliques);
  const auto cert = is_partial_cube(s.graph);
  if (!cert.verdict || cert.idim != h.vertex_count()) return false;
  const auto cg = crossing_graph(s.graph, cert);

  std::vector<VertexId> vertex_of_class(cert.idim, -1);
  for (std::size_t c = 0; c < cert.idim; ++c) {
    for (EdgeId e : cert.theta.classes[c]) {
      const auto [a, b] = s.graph.edge(e);
      const auto& ka = s.clique_of_vertex[static_cast<std::size_t>(a)];
      const auto& kb = s.clique_of_vertex[static_cast<std::size_t>(b)];
      std::vector<VertexId> diff;
      std::set_symmetric_difference(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(diff));
      if (diff.size() != 1) return false;
      if (vertex_of_class[c] >= 0 && vertex_of_class[c] != diff.front()) return false;
      vertex_of_class[c] = diff.front();
    }
  }
  auto sorted = vertex_of_class;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t v = 0; v < sorted.size(); ++v) {
    if (sorted[v] != static_cast<VertexId>(v)) return false;
  }
  for (VertexId i = 0; i < static_cast<VertexId>(cert.idim); ++i) {
    for (VertexId j = i + 1; j < static_cast<VertexId>(cert.idim); ++j) {
      if (cg.graph.has_edge(i, j) != h.has_edge(vertex_of_class[static_cast<std::size_t>(i)],
                                                vertex_of_class[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace pcube
