#pragma once

#include <string>
#include <vector>

#include "pcube/generators.hpp"
#include "pcube/graph.hpp"
#include "pcube/polynomial.hpp"

namespace fixture {

using pcube::Graph;

inline Graph k1() { return Graph(1, {}); }
inline Graph k2() { return pcube::complete(2); }
inline Graph k3() { return pcube::complete(3); }
inline Graph p3() { return pcube::path(3); }
inline Graph c4() { return pcube::even_cycle(2); }
inline Graph c6() { return pcube::even_cycle(3); }
inline Graph q3() { return pcube::hypercube(3); }
inline Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }
inline Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

/// Every labeled graph on n vertices, edges chosen by the bits of a mask.
inline std::vector<Graph> all_labeled(int n) {
  std::vector<pcube::Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1U << slots.size()); ++mask) {
    std::vector<pcube::Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1U) edges.push_back(slots[i]);
    out.emplace_back(static_cast<std::size_t>(n), edges);
  }
  return out;
}

inline std::vector<std::uint64_t> as_u64(const pcube::Polynomial& p) {
  std::vector<std::uint64_t> out;
  for (const auto& c : p.coeffs()) out.push_back(c.convert_to<std::uint64_t>());
  return out;
}

}  // namespace fixture
