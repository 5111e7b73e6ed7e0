#include "pcube/counting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "pcube/crossing.hpp"
#include "pcube/error.hpp"

namespace pcube {

namespace {

// up[v]: (coordinate, neighbor) pairs where the neighbor's label is v's label
// with that coordinate raised from 0 to 1.  Sorted by coordinate.
using UpTable = std::vector<std::vector<std::pair<std::size_t, VertexId>>>;

UpTable up_table(const Graph& g, const PartialCubeCertificate& cert, const HypercubeEmbedding& embedding,
                 const VertexSet& within) {
  UpTable up(g.vertex_count());
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    const auto [u, v] = g.edge(e);
    if (!within.contains(u) || !within.contains(v)) continue;
    const auto bit = embedding.class_bit[static_cast<std::size_t>(cert.theta.class_of[static_cast<std::size_t>(e)])];
    const bool u_low = !embedding.labels[static_cast<std::size_t>(u)].test(bit);
    const auto low = u_low ? u : v;
    const auto high = u_low ? v : u;
    up[static_cast<std::size_t>(low)].emplace_back(bit, high);
  }
  for (auto& row : up) std::sort(row.begin(), row.end());
  return up;
}

VertexId step_up(const UpTable& up, VertexId v, std::size_t bit) {
  const auto& row = up[static_cast<std::size_t>(v)];
  const auto it = std::lower_bound(row.begin(), row.end(), std::pair<std::size_t, VertexId>{bit, -1});
  return it != row.end() && it->first == bit ? it->second : -1;
}

void grow_cube(const UpTable& up, VertexId anchor, std::vector<VertexId>& cube, std::size_t next_slot,
               const std::function<void(const std::vector<VertexId>&)>& visit) {
  const auto& candidates = up[static_cast<std::size_t>(anchor)];
  for (std::size_t slot = next_slot; slot < candidates.size(); ++slot) {
    const auto bit = candidates[slot].first;
    const auto half = cube.size();
    bool complete = true;
    for (std::size_t i = 0; i < half && complete; ++i) {
      const VertexId w = step_up(up, cube[i], bit);
      if (w < 0) {
        complete = false;
      } else {
        cube.push_back(w);
      }
    }
    if (complete) {
      visit(cube);
      grow_cube(up, anchor, cube, slot + 1, visit);
    }
    cube.resize(half);
  }
}

}  // namespace

void for_each_induced_cube(const Graph& g, const PartialCubeCertificate& cert,
                           const HypercubeEmbedding& embedding, const VertexSet& within,
                           const std::function<void(const std::vector<VertexId>&)>& visit) {
  if (!cert.verdict) throw InputError("cube enumeration requires a partial cube");
  const auto up = up_table(g, cert, embedding, within);
  for (VertexId v : within.members()) {
    std::vector<VertexId> cube{v};
    visit(cube);
    grow_cube(up, v, cube, 0, visit);
  }
}

Polynomial cube_polynomial_within(const Graph& g, const PartialCubeCertificate& cert,
                                  const HypercubeEmbedding& embedding, const VertexSet& s) {
  std::vector<std::uint64_t> counts;
  for_each_induced_cube(g, cert, embedding, s, [&](const std::vector<VertexId>& cube) {
    const auto dim = static_cast<std::size_t>(std::countr_zero(cube.size()));
    if (counts.size() <= dim) counts.resize(dim + 1, 0);
    ++counts[dim];
  });
  return Polynomial(std::vector<BigInt>(counts.begin(), counts.end()));
}

Polynomial cube_polynomial(const Graph& g, const PartialCubeCertificate& cert,
                           const HypercubeEmbedding& embedding) {
  return cube_polynomial_within(g, cert, embedding, VertexSet::full(g.vertex_count()));
}

Polynomial cube_polynomial_oracle(const Graph& g, std::size_t max_per_level) {
  const auto n = g.vertex_count();
  std::vector<BigInt> counts;
  std::vector<std::vector<VertexId>> level;
  for (std::size_t v = 0; v < n; ++v) level.push_back({static_cast<VertexId>(v)});

  while (!level.empty()) {
    if (level.size() > max_per_level) {
      throw GuardError("cube oracle: more than " + std::to_string(max_per_level) + " cubes on level " +
                       std::to_string(counts.size()));
    }
    counts.emplace_back(level.size());

    std::vector<std::vector<std::size_t>> cubes_at(n);
    std::vector<std::vector<bool>> member(level.size(), std::vector<bool>(n, false));
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (VertexId v : level[i]) {
        cubes_at[static_cast<std::size_t>(v)].push_back(i);
        member[i][static_cast<std::size_t>(v)] = true;
      }
    }

    std::set<std::vector<VertexId>> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto& a = level[i];
      for (VertexId b0 : g.neighbors(a.front())) {
        for (std::size_t j : cubes_at[static_cast<std::size_t>(b0)]) {
          if (j <= i) continue;
          const auto& b = level[j];
          // Every vertex of A needs exactly one neighbor in B, the matching
          // must be injective, and it must carry A's edges onto B's.
          std::vector<VertexId> match(n, -1);
          std::vector<bool> hit(n, false);
          bool ok = true;
          for (VertexId x : a) {
            if (member[j][static_cast<std::size_t>(x)]) ok = false;
            VertexId partner = -1;
            int found = 0;
            for (VertexId y : g.neighbors(x)) {
              if (member[j][static_cast<std::size_t>(y)]) {
                partner = y;
                ++found;
              }
            }
            if (!ok || found != 1 || hit[static_cast<std::size_t>(partner)]) {
              ok = false;
              break;
            }
            hit[static_cast<std::size_t>(partner)] = true;
            match[static_cast<std::size_t>(x)] = partner;
          }
          for (std::size_t p = 0; ok && p < a.size(); ++p) {
            for (std::size_t q = p + 1; ok && q < a.size(); ++q) {
              if (g.has_edge(a[p], a[q]) &&
                  !g.has_edge(match[static_cast<std::size_t>(a[p])], match[static_cast<std::size_t>(a[q])])) {
                ok = false;
              }
            }
          }
          if (!ok) continue;
          std::vector<VertexId> joined(a);
          joined.insert(joined.end(), b.begin(), b.end());
          std::sort(joined.begin(), joined.end());
          next.insert(std::move(joined));
        }
      }
    }
    level.assign(next.begin(), next.end());
  }
  return Polynomial(std::move(counts));
}

namespace {

using Mask = std::vector<std::uint64_t>;

class CliqueRecursion {
 public:
  explicit CliqueRecursion(const Graph& g) : words_((g.vertex_count() + 63) / 64) {
    neighbors_.assign(g.vertex_count(), Mask(words_, 0));
    for (const Edge& e : g.edges()) {
      set(neighbors_[static_cast<std::size_t>(e.u)], static_cast<std::size_t>(e.v));
      set(neighbors_[static_cast<std::size_t>(e.v)], static_cast<std::size_t>(e.u));
    }
  }

  Polynomial run(const Mask& s) {
    const auto v = least(s);
    if (v < 0) return Polynomial{1};
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    Mask rest = s;
    rest[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(v) % 64));
    Mask link = rest;
    for (std::size_t i = 0; i < words_; ++i) link[i] &= neighbors_[static_cast<std::size_t>(v)][i];
    Polynomial out = add(run(rest), mul(Polynomial::x(), run(link)));
    memo_.emplace(s, out);
    return out;
  }

  Mask full(std::size_t n) const {
    Mask m(words_, 0);
    for (std::size_t v = 0; v < n; ++v) set(m, v);
    return m;
  }

 private:
  static void set(Mask& m, std::size_t v) { m[v / 64] |= std::uint64_t{1} << (v % 64); }
  long least(const Mask& m) const {
    for (std::size_t i = 0; i < words_; ++i) {
      if (m[i] != 0) return static_cast<long>(i * 64 + static_cast<std::size_t>(std::countr_zero(m[i])));
    }
    return -1;
  }

  std::size_t words_;
  std::vector<Mask> neighbors_;
  std::map<Mask, Polynomial> memo_;
};

void count_cliques(const Graph& g, std::size_t size, const std::vector<VertexId>& candidates,
                   std::vector<BigInt>& counts) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (counts.size() <= size + 1) counts.resize(size + 2, 0);
    ++counts[size + 1];
    std::vector<VertexId> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.has_edge(candidates[i], candidates[j])) next.push_back(candidates[j]);
    }
    count_cliques(g, size + 1, next, counts);
  }
}

}  // namespace

Polynomial clique_polynomial_recursive(const Graph& g) {
  CliqueRecursion recursion(g);
  return recursion.run(recursion.full(g.vertex_count()));
}

std::vector<BigInt> clique_counts(const Graph& g) {
  std::vector<BigInt> counts{1};
  std::vector<VertexId> all(g.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<VertexId>(v);
  count_cliques(g, 0, all, counts);
  return counts;
}

Polynomial clique_polynomial_enumerate(const Graph& g) { return Polynomial(clique_counts(g)); }

TheoremReport verify_theorem(const Graph& g) {
  if (g.vertex_count() == 1) throw InputError("verify_theorem: G must not be K1");
  TheoremReport report;
  const auto cert = is_partial_cube(g);
  report.is_partial_cube = cert.verdict;
  if (!cert.verdict) return report;
  report.idim = cert.idim;
  const auto embedding = embed(g, cert);
  report.cube_poly = cube_polynomial(g, cert, embedding);
  const auto cg = crossing_graph(g, cert);
  report.crossing_clique_shifted = shift(clique_polynomial_recursive(cg.graph), 1);
  report.leq_holds = poly_leq(report.cube_poly, report.crossing_clique_shifted);
  report.equality = report.cube_poly == report.crossing_clique_shifted;
  report.is_median = is_median_by_convex_U(g, cert);
  return report;
}

ExpansionCheck expansion_formula_check(const Graph& g, const ExpansionSpec& spec) {
  const auto cert = is_partial_cube(g);
  if (!cert.verdict) throw InputError("expansion_formula_check: graph is not a partial cube");
  const auto expanded = expansion(g, spec);
  const auto star_cert = is_partial_cube(expanded.graph);
  if (!star_cert.verdict) throw InternalError("expansion of a partial cube is not a partial cube");
  const auto embedding = embed(g, cert);

  const VertexSet overlap = spec.v1 & spec.v2;
  for_each_induced_cube(g, cert, embedding, VertexSet::full(g.vertex_count()),
                        [&](const std::vector<VertexId>& cube) {
                          const VertexSet c(g.vertex_count(), cube);
                          if (!c.is_subset_of(spec.v1) && !c.is_subset_of(spec.v2)) {
                            throw InputError("expansion_formula_check: {G[V1], G[V2]} is not a cubical cover");
                          }
                        });

  ExpansionCheck out;
  out.expanded = cube_polynomial(expanded.graph, star_cert, embed(expanded.graph, star_cert));
  out.first = cube_polynomial_within(g, cert, embedding, spec.v1);
  out.second = cube_polynomial_within(g, cert, embedding, spec.v2);
  out.overlap = cube_polynomial_within(g, cert, embedding, overlap);
  out.three_term_holds = out.expanded == out.first + out.second + Polynomial::x() * out.overlap;
  out.peripheral = overlap == spec.v1 || overlap == spec.v2;
  if (out.peripheral) {
    const auto& bulk = overlap == spec.v2 ? out.first : out.second;
    out.two_term_holds = out.expanded == bulk + Polynomial{1, 1} * out.overlap;
  }
  return out;
}

std::vector<BigInt> x_plus_one_expansion(const Polynomial& p) {
  // Repeated synthetic division by (x + 1); remainders are the coefficients.
  std::vector<BigInt> rest(p.coeffs());
  std::vector<BigInt> out;
  while (!rest.empty()) {
    std::vector<BigInt> quotient(rest.size() - 1);
    BigInt carry = 0;
    for (std::size_t k = rest.size(); k-- > 0;) {
      const BigInt value = rest[k] - carry;
      if (k == 0) {
        out.push_back(value);
      } else {
        quotient[k - 1] = value;
      }
      carry = value;
    }
    rest = std::move(quotient);
  }
  return out;
}

}  // namespace pcube
