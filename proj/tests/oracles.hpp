#pragma once

// Brute-force reference implementations.  Deliberately naive and written from
// the definitions, sharing no code with the library beyond the Graph type.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "pcube/graph.hpp"

namespace oracle {

using pcube::Edge;
using pcube::Graph;
using pcube::VertexId;

inline constexpr int kInf = 1 << 29;

using Matrix = std::vector<std::vector<int>>;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

/// Floyd-Warshall.
inline Matrix distances(const Graph& g) {
  const auto n = g.vertex_count();
  Matrix d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline bool connected(const Matrix& d) {
  for (const auto& row : d)
    for (int x : row)
      if (x >= kInf) return false;
  return true;
}

inline bool bipartite(const Graph& g) {
  // An odd cycle always has an edge whose ends are equidistant from some vertex.
  const auto d = distances(g);
  for (std::size_t s = 0; s < g.vertex_count(); ++s)
    for (const auto& e : g.edges())
      if (d[s][e.u] < kInf && d[s][e.u] == d[s][e.v]) return false;
  return true;
}

/// Θ straight from the definition.
inline bool theta(const Matrix& d, const Edge& e, const Edge& f) {
  return d[e.u][f.u] + d[e.v][f.v] != d[e.u][f.v] + d[e.v][f.u];
}

/// Θ is an equivalence on a connected bipartite graph.
inline bool partial_cube(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  const auto d = distances(g);
  if (!connected(d) || !bipartite(g)) return false;
  const auto edges = g.edges();
  for (const auto& a : edges)
    for (const auto& b : edges)
      for (const auto& c : edges)
        if (theta(d, a, b) && theta(d, b, c) && !theta(d, a, c)) return false;
  return true;
}

inline std::set<VertexId> interval(const Matrix& d, VertexId u, VertexId v) {
  std::set<VertexId> out;
  for (std::size_t w = 0; w < d.size(); ++w)
    if (d[u][w] + d[w][v] == d[u][v]) out.insert(static_cast<VertexId>(w));
  return out;
}

inline bool convex(const Graph& g, const std::set<VertexId>& s) {
  if (s.size() <= 1) return true;
  const auto d = distances(g);
  for (VertexId u : s)
    for (VertexId v : s) {
      if (d[u][v] >= kInf) return false;
      for (VertexId w : interval(d, u, v))
        if (!s.contains(w)) return false;
    }
  return true;
}

/// Every triple has exactly one median.
inline bool median(const Graph& g) {
  const auto d = distances(g);
  if (g.vertex_count() == 0 || !connected(d)) return false;
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c) {
        int count = 0;
        for (VertexId x = 0; x < n; ++x)
          if (d[a][x] + d[x][b] == d[a][b] && d[b][x] + d[x][c] == d[b][c] && d[a][x] + d[x][c] == d[a][c])
            ++count;
        if (count != 1) return false;
      }
  return true;
}

/// Least rotation/reflection of a cyclic sequence.
inline std::vector<VertexId> canonical(const std::vector<VertexId>& c) {
  std::vector<VertexId> best;
  const auto k = c.size();
  for (int dir = 0; dir < 2; ++dir)
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<VertexId> cand(k);
      for (std::size_t i = 0; i < k; ++i) cand[i] = dir == 0 ? c[(r + i) % k] : c[(r + k - i) % k];
      if (best.empty() || cand < best) best = cand;
    }
  return best;
}

/// Every simple cycle (length >= 3) once, canonical.
inline std::set<std::vector<VertexId>> simple_cycles(const Graph& g) {
  const auto a = adjacency(g);
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::set<std::vector<VertexId>> out;
  std::vector<VertexId> path;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId v) {
    for (VertexId w = start; w < n; ++w) {
      if (!a[v][w]) continue;
      if (w == start && path.size() >= 3) out.insert(canonical(path));
      if (used[w] || w == start) continue;
      used[w] = true;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      used[w] = false;
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    used[s] = true;
    path = {s};
    dfs(s, s);
    used[s] = false;
  }
  return out;
}

inline std::set<std::vector<VertexId>> isometric_cycles(const Graph& g) {
  const auto d = distances(g);
  std::set<std::vector<VertexId>> out;
  for (const auto& c : simple_cycles(g)) {
    const auto k = static_cast<int>(c.size());
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j) ok = d[c[i]][c[j]] == std::min(j - i, k - (j - i));
    if (ok) out.insert(c);
  }
  return out;
}

/// G[s] is isomorphic to Q_k, by backtracking over label assignments.
inline bool induces_cube(const std::vector<std::vector<bool>>& a, const std::vector<VertexId>& s, int k) {
  const auto size = s.size();
  if (size != (std::size_t{1} << k)) return false;
  std::vector<int> label(size, -1);
  std::vector<bool> taken(size, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == size) return true;
    for (std::size_t x = 0; x < size; ++x) {
      if (taken[x]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const bool cube_edge = std::popcount(static_cast<unsigned>(x ^ static_cast<std::size_t>(label[j]))) == 1;
        ok = cube_edge == a[s[i]][s[j]];
      }
      if (!ok) continue;
      taken[x] = true;
      label[i] = static_cast<int>(x);
      if (place(i + 1)) return true;
      taken[x] = false;
    }
    return false;
  };
  return place(0);
}

/// alpha_k = number of induced Q_k, by trying every vertex subset of size 2^k.
inline std::vector<std::uint64_t> cube_counts(const Graph& g) {
  const auto n = g.vertex_count();
  const auto a = adjacency(g);
  std::vector<std::uint64_t> out;
  for (int k = 0; (std::size_t{1} << k) <= n; ++k) {
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) != (1 << k)) continue;
      std::vector<VertexId> s;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1U) s.push_back(static_cast<VertexId>(v));
      std::size_t edges = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) edges += a[s[i]][s[j]];
      if (edges != static_cast<std::size_t>(k) * (std::size_t{1} << k) / 2) continue;
      if (induces_cube(a, s, k)) ++count;
    }
    if (count == 0) break;
    out.push_back(count);
  }
  return out;
}

/// a_i = number of i-cliques, by subset enumeration.
inline std::vector<std::uint64_t> clique_counts(const Graph& g) {
  const auto n = g.vertex_count();
  const auto a = adjacency(g);
  std::vector<std::uint64_t> out(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i)
      for (std::size_t j = i + 1; j < n && clique; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U) && !a[i][j]) clique = false;
    if (clique) ++out[static_cast<std::size_t>(std::popcount(mask))];
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace oracle
