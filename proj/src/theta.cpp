#include "pcube/theta.hpp"

#include <numeric>
#include <queue>

#include "pcube/error.hpp"

namespace pcube {

std::string label_string(const Label& label) {
  std::string out(label.size(), '0');
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label.test(i)) out[i] = '1';
  }
  return out;
}

Label label_from_string(const std::string& bits) {
  Label out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw InputError("label must be a 0/1 string: " + bits);
    }
  }
  return out;
}

bool theta_related(const Graph& g, const DistanceMatrix& d, EdgeId e, EdgeId f) {
  const auto [u, v] = g.edge(e);
  const auto [x, y] = g.edge(f);
  return std::int64_t{d(u, x)} + d(v, y) != std::int64_t{d(u, y)} + d(v, x);
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Shortest path in the Θ graph restricted to one class; its first three
// edges form a transitivity witness when the endpoints are unrelated.
std::array<EdgeId, 3> transitivity_witness(const std::vector<EdgeId>& members,
                                           const std::vector<bool>& related, std::size_t m,
                                           std::size_t from, std::size_t to) {
  std::vector<std::ptrdiff_t> prev(members.size(), -1);
  std::vector<bool> seen(members.size(), false);
  std::queue<std::size_t> queue;
  queue.push(from);
  seen[from] = true;
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop();
    if (i == to) break;
    for (std::size_t j = 0; j < members.size(); ++j) {
      const auto a = static_cast<std::size_t>(members[i]);
      const auto b = static_cast<std::size_t>(members[j]);
      if (!seen[j] && related[a * m + b]) {
        seen[j] = true;
        prev[j] = static_cast<std::ptrdiff_t>(i);
        queue.push(j);
      }
    }
  }
  std::vector<std::size_t> path;
  for (auto at = static_cast<std::ptrdiff_t>(to); at >= 0; at = prev[static_cast<std::size_t>(at)]) {
    path.push_back(static_cast<std::size_t>(at));
  }
  // path runs to -> from; a shortest path of length >= 2 has unrelated ends
  // at every distance-2 pair.
  const auto n = path.size();
  return {members[path[n - 1]], members[path[n - 2]], members[path[n - 3]]};
}

}  // namespace

ThetaPartition theta_classes(const Graph& g, const DistanceMatrix& d) {
  if (!is_connected(g)) throw InputError("theta_classes: graph is disconnected");
  const auto m = g.edge_count();
  std::vector<bool> related(m * m, false);
  DisjointSets sets(m);
  for (std::size_t e = 0; e < m; ++e) {
    related[e * m + e] = true;
    for (std::size_t f = e + 1; f < m; ++f) {
      if (theta_related(g, d, static_cast<EdgeId>(e), static_cast<EdgeId>(f))) {
        related[e * m + f] = related[f * m + e] = true;
        sets.unite(e, f);
      }
    }
  }

  ThetaPartition out;
  out.class_of.assign(m, -1);
  std::vector<ClassId> class_of_root(m, -1);
  for (std::size_t e = 0; e < m; ++e) {
    const auto root = sets.find(e);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<ClassId>(out.classes.size());
      out.classes.emplace_back();
    }
    out.class_of[e] = class_of_root[root];
    out.classes[static_cast<std::size_t>(class_of_root[root])].push_back(static_cast<EdgeId>(e));
  }

  out.is_equivalence = true;
  for (const auto& members : out.classes) {
    for (std::size_t i = 0; i < members.size() && out.is_equivalence; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto a = static_cast<std::size_t>(members[i]);
        const auto b = static_cast<std::size_t>(members[j]);
        if (!related[a * m + b]) {
          out.is_equivalence = false;
          out.witness = transitivity_witness(members, related, m, i, j);
          break;
        }
      }
    }
    if (!out.is_equivalence) break;
  }
  return out;
}

ThetaPartition theta_classes(const Graph& g) { return theta_classes(g, all_pairs_distances(g)); }

PartialCubeCertificate is_partial_cube(const Graph& g) {
  PartialCubeCertificate cert;
  cert.connected = is_connected(g) && g.vertex_count() > 0;
  if (auto bip = is_bipartite(g); !bip) cert.odd_cycle = std::move(bip.odd_cycle);
  if (!cert.connected) return cert;
  cert.distances = all_pairs_distances(g);
  cert.theta = theta_classes(g, cert.distances);
  cert.verdict = !cert.odd_cycle.has_value() && cert.theta.is_equivalence;
  if (cert.verdict) cert.idim = cert.theta.class_count();
  return cert;
}

HypercubeEmbedding embed(const Graph& g, const PartialCubeCertificate& cert) {
  if (!cert.verdict) throw InputError("embed: graph is not a partial cube");
  const auto& d = cert.distances;
  const auto n = static_cast<VertexId>(g.vertex_count());
  const auto dim = cert.theta.class_count();

  HypercubeEmbedding out;
  out.base = 0;
  out.class_bit.resize(dim);
  std::iota(out.class_bit.begin(), out.class_bit.end(), std::size_t{0});
  out.labels.assign(g.vertex_count(), Label(dim));
  for (std::size_t c = 0; c < dim; ++c) {
    const auto [a, b] = g.edge(cert.theta.classes[c].front());
    const bool base_near_a = d(a, out.base) < d(b, out.base);
    for (VertexId u = 0; u < n; ++u) {
      const bool near_a = d(a, u) < d(b, u);
      if (near_a != base_near_a) out.labels[static_cast<std::size_t>(u)].set(out.class_bit[c]);
    }
  }

  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const auto hamming = (out.labels[static_cast<std::size_t>(u)] ^ out.labels[static_cast<std::size_t>(v)]).count();
      if (hamming != static_cast<std::size_t>(d(u, v))) {
        throw InternalError("embed: Hamming distance mismatch between " + std::to_string(u) +
                            " and " + std::to_string(v));
      }
    }
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    const auto [u, v] = g.edge(e);
    const auto diff = out.labels[static_cast<std::size_t>(u)] ^ out.labels[static_cast<std::size_t>(v)];
    const auto bit = out.class_bit[static_cast<std::size_t>(cert.theta.class_of[static_cast<std::size_t>(e)])];
    if (diff.count() != 1 || !diff.test(bit)) {
      throw InternalError("embed: edge " + std::to_string(e) + " does not flip its class bit");
    }
  }
  return out;
}

Sides sides(const Graph& g, const DistanceMatrix& d, const PartialCubeCertificate& cert, ClassId c) {
  if (!cert.verdict) throw InputError("sides: graph is not a partial cube");
  if (c < 0 || static_cast<std::size_t>(c) >= cert.theta.class_count()) {
    throw InputError("sides: class id " + std::to_string(c) + " out of range");
  }
  const auto& members = cert.theta.classes[static_cast<std::size_t>(c)];
  Sides out;
  out.a = g.edge(members.front()).u;
  out.b = g.edge(members.front()).v;
  const auto n = g.vertex_count();
  out.w_ab = VertexSet(n);
  out.w_ba = VertexSet(n);
  out.u_ab = VertexSet(n);
  out.u_ba = VertexSet(n);
  for (VertexId w = 0; w < static_cast<VertexId>(n); ++w) {
    if (d(out.a, w) < d(out.b, w)) {
      out.w_ab.insert(w);
    } else if (d(out.b, w) < d(out.a, w)) {
      out.w_ba.insert(w);
    }
  }
  for (EdgeId e : members) {
    const auto [x, y] = g.edge(e);
    for (VertexId v : {x, y}) {
      if (out.w_ab.contains(v)) {
        out.u_ab.insert(v);
      } else {
        out.u_ba.insert(v);
      }
    }
  }
  return out;
}

bool convexity_by_boundary(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  if (!is_bipartite(g)) throw InputError("convexity_by_boundary: graph is not bipartite");
  const auto sub = induced_subgraph(g, s);
  if (!is_connected(sub.graph)) {
    throw InputError("convexity_by_boundary: induced subgraph is disconnected");
  }
  std::vector<EdgeId> inner, boundary;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    const auto [u, v] = g.edge(e);
    const int inside = int{s.contains(u)} + int{s.contains(v)};
    if (inside == 2) inner.push_back(e);
    if (inside == 1) boundary.push_back(e);
  }
  for (EdgeId f : boundary) {
    for (EdgeId e : inner) {
      if (theta_related(g, d, e, f)) return false;
    }
  }
  return true;
}

}  // namespace pcube
