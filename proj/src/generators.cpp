#include "pcube/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "pcube/error.hpp"
#include "pcube/theta.hpp"

namespace pcube {

namespace {

// Uniform in [0, bound) by multiply-shift; avoids the implementation-defined
// std::uniform_int_distribution so streams match across standard libraries.
std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void check_guard(std::size_t vertices, std::size_t max_vertices) {
  if (vertices > max_vertices) {
    throw GuardError(std::to_string(vertices) + " vertices exceed the guard of " + std::to_string(max_vertices) +
                     "; use the closed-form polynomial path instead");
  }
}

}  // namespace

Graph hypercube(int n) {
  require(n >= 0 && n <= 20, "hypercube: dimension must lie in 0..20");
  const std::size_t count = std::size_t{1} << n;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < count; ++v) {
    for (int bit = 0; bit < n; ++bit) {
      const auto w = v | (std::size_t{1} << bit);
      if (w != v) edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(w)});
    }
  }
  return Graph(count, edges);
}

Graph even_cycle(int half_length) {
  require(half_length >= 2, "even_cycle: half-length must be at least 2");
  const int n = 2 * half_length;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph path(int n) {
  require(n >= 1, "path: need at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph complete(int n) {
  require(n >= 1, "complete: need at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph random_tree(int n, Seed seed) {
  require(n >= 1, "random_tree: need at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    edges.push_back({static_cast<VertexId>(below(rng, static_cast<std::size_t>(v))), v});
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph random_graph(int n, int numerator, int denominator, Seed seed) {
  require(n >= 0, "random_graph: negative vertex count");
  require(denominator > 0 && numerator >= 0 && numerator <= denominator, "random_graph: bad edge probability");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (below(rng, static_cast<std::size_t>(denominator)) < static_cast<std::size_t>(numerator)) {
        edges.push_back({u, v});
      }
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph attach_pendants(const Graph& g, std::size_t m, Seed seed, std::size_t max_vertices) {
  const auto n = g.vertex_count();
  require(n >= 1 || m == 0, "attach_pendants: cannot attach to an empty graph");
  check_guard(n + m, max_vertices);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  if (m > 0) {
    std::mt19937_64 rng(seed);
    const auto start = below(rng, n);
    for (std::size_t i = 0; i < m; ++i) {
      edges.push_back({static_cast<VertexId>((start + i) % n), static_cast<VertexId>(n + i)});
    }
  }
  return Graph(n + m, edges);
}

Graph example_41(int n, std::size_t m, std::size_t max_vertices) {
  require(n >= 1, "example_41: n must be at least 1");
  check_guard(static_cast<std::size_t>(n) + m, max_vertices);
  return disjoint_union(complete(n), Graph(m, std::span<const Edge>{}));
}

Graph example_42(int n, std::size_t m, std::size_t max_vertices) {
  require(n >= 1 && n <= 20, "example_42: n must lie in 1..20");
  check_guard((std::size_t{1} << n) + m, max_vertices);
  return attach_pendants(hypercube(n), m, 0, max_vertices);
}

Graph trihex() {
  // Vertex u_i is id i-1.
  const std::vector<std::vector<VertexId>> cycles = {
      {1, 2, 3, 4, 5, 6},
      {3, 7, 8, 9, 10, 4},
      {5, 4, 10, 11, 12, 13},
  };
  std::vector<Edge> edges;
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const VertexId a = cycle[i] - 1;
      const VertexId b = cycle[(i + 1) % cycle.size()] - 1;
      const Edge e{std::min(a, b), std::max(a, b)};
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
  }
  return Graph(13, edges);
}

Graph hypercube_minus_vertex(int n) {
  require(n >= 2, "hypercube_minus_vertex: n must be at least 2");
  const auto cube = hypercube(n);
  auto keep = VertexSet::full(cube.vertex_count());
  keep.erase(static_cast<VertexId>(cube.vertex_count() - 1));
  return induced_subgraph(cube, keep).graph;
}

RandomMedian random_median_graph_traced(int steps, Seed seed, const RandomMedianOptions& options) {
  require(steps >= 1, "random_median_graph: steps must be at least 1");
  require(options.max_picks >= 1, "random_median_graph: max_picks must be at least 1");
  std::mt19937_64 rng(seed);
  RandomMedian out;
  out.graph = Graph(1, std::span<const Edge>{});
  for (int step = 0; step < steps; ++step) {
    const auto& g = out.graph;
    const auto n = g.vertex_count();
    const auto d = all_pairs_distances(g);
    const auto picks = 1 + below(rng, static_cast<std::size_t>(options.max_picks));
    VertexSet chosen(n);
    for (std::size_t i = 0; i < picks; ++i) chosen.insert(static_cast<VertexId>(below(rng, n)));
    VertexSet hull = convex_hull(g, d, chosen);
    if (n + hull.count() > options.max_vertices) {
      hull = VertexSet(n, {chosen.members().front()});
    }
    auto next = peripheral_convex_expansion(g, d, hull).graph;
    out.steps.push_back({g, std::move(hull)});
    out.graph = std::move(next);
  }
  return out;
}

Graph random_median_graph(int steps, Seed seed, const RandomMedianOptions& options) {
  return random_median_graph_traced(steps, seed, options).graph;
}

Graph random_partial_cube(int steps, Seed seed) {
  const auto base = random_median_graph(steps, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const auto n = base.vertex_count();
  for (int attempt = 0; attempt < 64 && n > 2; ++attempt) {
    auto keep = VertexSet::full(n);
    const auto drops = 1 + below(rng, 3);
    for (std::size_t i = 0; i < drops; ++i) keep.erase(static_cast<VertexId>(below(rng, n)));
    auto candidate = induced_subgraph(base, keep).graph;
    if (candidate.vertex_count() >= 2 && is_partial_cube(candidate).verdict) return candidate;
  }
  return base;
}

VertexSet random_connected_subset(const Graph& g, std::size_t size, Seed seed) {
  const auto n = g.vertex_count();
  VertexSet out(n);
  if (n == 0 || size == 0) return out;
  std::mt19937_64 rng(seed);
  out.insert(static_cast<VertexId>(below(rng, n)));
  while (out.count() < size) {
    std::vector<VertexId> frontier;
    for (VertexId v : out.members()) {
      for (VertexId w : g.neighbors(v)) {
        if (!out.contains(w)) frontier.push_back(w);
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    if (frontier.empty()) break;
    out.insert(frontier[below(rng, frontier.size())]);
  }
  return out;
}

}  // namespace pcube
