#include "pcube/median.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "pcube/error.hpp"

namespace pcube {

namespace {

// Interval bitsets I(u, v) for every pair, packed row-major.
class IntervalTable {
 public:
  IntervalTable(const Graph& g, const DistanceMatrix& d) : n_(g.vertex_count()), words_((n_ + 63) / 64) {
    bits_.assign(n_ * n_ * words_, 0);
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = u; v < n_; ++v) {
        auto* row = slot(u, v);
        const auto duv = d(static_cast<VertexId>(u), static_cast<VertexId>(v));
        for (std::size_t w = 0; w < n_; ++w) {
          if (d(static_cast<VertexId>(u), static_cast<VertexId>(w)) +
                  d(static_cast<VertexId>(w), static_cast<VertexId>(v)) == duv) {
            row[w / 64] |= std::uint64_t{1} << (w % 64);
          }
        }
        std::copy(row, row + words_, slot(v, u));
      }
    }
  }

  std::size_t median_count(std::size_t u, std::size_t v, std::size_t w, std::size_t cap) const {
    const auto* a = slot(u, v);
    const auto* b = slot(u, w);
    const auto* c = slot(v, w);
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_ && total < cap; ++i) {
      total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i] & c[i]));
    }
    return total;
  }

 private:
  std::uint64_t* slot(std::size_t u, std::size_t v) { return bits_.data() + (u * n_ + v) * words_; }
  const std::uint64_t* slot(std::size_t u, std::size_t v) const {
    return bits_.data() + (u * n_ + v) * words_;
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

bool is_median_by_triples(const Graph& g, const DistanceMatrix& d) {
  if (!is_connected(g)) throw InputError("is_median_by_triples: graph is disconnected");
  const auto n = g.vertex_count();
  if (n > 2048) throw GuardError("is_median_by_triples: limited to 2048 vertices");
  const IntervalTable table(g, d);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      for (std::size_t w = v + 1; w < n; ++w) {
        if (table.median_count(u, v, w, 2) != 1) return false;
      }
    }
  }
  return true;
}

bool is_median_by_convex_U(const Graph& g, const PartialCubeCertificate& cert) {
  if (!cert.verdict) return false;
  for (std::size_t c = 0; c < cert.theta.class_count(); ++c) {
    const auto sd = sides(g, cert.distances, cert, static_cast<ClassId>(c));
    if (!is_convex(g, cert.distances, sd.u_ab) || !is_convex(g, cert.distances, sd.u_ba)) return false;
  }
  return true;
}

bool is_median_by_convex_U(const Graph& g) { return is_median_by_convex_U(g, is_partial_cube(g)); }

Expansion expansion(const Graph& g, const ExpansionSpec& spec) {
  const auto n = g.vertex_count();
  if (spec.v1.universe() != n || spec.v2.universe() != n) {
    throw InputError("expansion: V1 and V2 must be subsets of the graph's vertices");
  }
  if (!(spec.v1 | spec.v2).is_subset_of(VertexSet::full(n)) || (spec.v1 | spec.v2).count() != n) {
    throw InputError("expansion: V1 and V2 must cover V(G)");
  }
  const VertexSet v0 = spec.v1 & spec.v2;
  if (v0.empty()) throw InputError("expansion: V0 = V1 ∩ V2 is empty");
  for (const Edge& e : g.edges()) {
    const bool u_only1 = spec.v1.contains(e.u) && !spec.v2.contains(e.u);
    const bool v_only1 = spec.v1.contains(e.v) && !spec.v2.contains(e.v);
    const bool u_only2 = spec.v2.contains(e.u) && !spec.v1.contains(e.u);
    const bool v_only2 = spec.v2.contains(e.v) && !spec.v1.contains(e.v);
    if ((u_only1 && v_only2) || (u_only2 && v_only1)) {
      throw InputError("expansion: edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") joins V1∖V2 to V2∖V1");
    }
  }
  const auto d = all_pairs_distances(g);
  if (!is_isometric(g, d, spec.v1)) throw InputError("expansion: G[V1] is not isometric in G");
  if (!is_isometric(g, d, spec.v2)) throw InputError("expansion: G[V2] is not isometric in G");

  const auto first = induced_subgraph(g, spec.v1);
  const auto second = induced_subgraph(g, spec.v2);
  const auto offset = static_cast<VertexId>(first.to_original.size());

  Expansion out;
  out.source = first.to_original;
  out.source.insert(out.source.end(), second.to_original.begin(), second.to_original.end());
  out.in_second_copy.assign(out.source.size(), false);
  std::fill(out.in_second_copy.begin() + offset, out.in_second_copy.end(), true);

  std::vector<Edge> edges(first.graph.edges().begin(), first.graph.edges().end());
  for (const Edge& e : second.graph.edges()) edges.push_back({e.u + offset, e.v + offset});
  std::vector<Edge> matching;
  for (VertexId v : v0.members()) {
    matching.push_back({first.to_new[static_cast<std::size_t>(v)],
                        second.to_new[static_cast<std::size_t>(v)] + offset});
  }
  edges.insert(edges.end(), matching.begin(), matching.end());
  out.graph = Graph(out.source.size(), edges);
  for (const Edge& e : matching) out.matching.push_back(*out.graph.edge_id(e.u, e.v));
  return out;
}

Expansion peripheral_convex_expansion(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  if (s.empty()) throw InputError("peripheral_convex_expansion: the expanded set is empty");
  if (!is_convex(g, d, s)) throw InputError("peripheral_convex_expansion: the expanded set is not convex");
  return expansion(g, {VertexSet::full(g.vertex_count()), s});
}

Contraction contract_class(const Graph& g, const PartialCubeCertificate& cert, ClassId c) {
  if (!cert.verdict) throw InputError("contract_class: graph is not a partial cube");
  if (c < 0 || static_cast<std::size_t>(c) >= cert.theta.class_count()) {
    throw InputError("contract_class: class id out of range");
  }
  const auto n = g.vertex_count();
  // Θ-class edges form a perfect matching between U-sides: partner lookup.
  std::vector<VertexId> partner(n, -1);
  for (EdgeId e : cert.theta.classes[static_cast<std::size_t>(c)]) {
    const auto [u, v] = g.edge(e);
    partner[static_cast<std::size_t>(u)] = v;
    partner[static_cast<std::size_t>(v)] = u;
  }
  Contraction out;
  out.to_new.assign(n, -1);
  VertexId next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (out.to_new[v] >= 0) continue;
    out.to_new[v] = next;
    if (partner[v] >= 0) out.to_new[static_cast<std::size_t>(partner[v])] = next;
    ++next;
  }
  std::set<Edge> edges;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    if (cert.theta.class_of[static_cast<std::size_t>(e)] == c) continue;
    const auto [u, v] = g.edge(e);
    const auto a = out.to_new[static_cast<std::size_t>(u)];
    const auto b = out.to_new[static_cast<std::size_t>(v)];
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  out.graph = Graph(static_cast<std::size_t>(next), list);
  return out;
}

std::optional<ClassId> find_peripheral_class(const Graph& g, const PartialCubeCertificate& cert) {
  if (!cert.verdict) throw InputError("find_peripheral_class: graph is not a partial cube");
  for (std::size_t c = 0; c < cert.theta.class_count(); ++c) {
    const auto sd = sides(g, cert.distances, cert, static_cast<ClassId>(c));
    if (sd.u_ab == sd.w_ab || sd.u_ba == sd.w_ba) return static_cast<ClassId>(c);
  }
  return std::nullopt;
}

std::vector<PeripheralStep> peripheral_decomposition(const Graph& g) {
  std::vector<PeripheralStep> steps;
  Graph current = g;
  while (current.vertex_count() > 1) {
    const auto cert = is_partial_cube(current);
    if (!cert.verdict) throw InputError("peripheral_decomposition: graph is not a partial cube");
    const auto c = find_peripheral_class(current, cert);
    if (!c) {
      throw InputError("peripheral_decomposition: no peripheral class at " +
                       std::to_string(current.vertex_count()) + " vertices; input is not median");
    }
    const auto sd = sides(current, cert.distances, cert, *c);
    const bool ab_peripheral = sd.u_ab == sd.w_ab;
    const VertexSet& peripheral = ab_peripheral ? sd.w_ab : sd.w_ba;
    const VertexSet& bulk = ab_peripheral ? sd.w_ba : sd.w_ab;

    auto contraction = contract_class(current, cert, *c);
    const auto h_n = contraction.graph.vertex_count();
    VertexSet image(h_n);
    for (VertexId v : peripheral.members()) image.insert(contraction.to_new[static_cast<std::size_t>(v)]);

    PeripheralStep step;
    step.to_parent.assign(h_n + image.count(), -1);
    for (VertexId v : bulk.members()) {
      step.to_parent[static_cast<std::size_t>(contraction.to_new[static_cast<std::size_t>(v)])] = v;
    }
    std::vector<std::size_t> rank(h_n, 0);
    std::size_t k = 0;
    for (VertexId s : image.members()) rank[static_cast<std::size_t>(s)] = k++;
    for (VertexId v : peripheral.members()) {
      const auto s = static_cast<std::size_t>(contraction.to_new[static_cast<std::size_t>(v)]);
      step.to_parent[h_n + rank[s]] = v;
    }
    step.before = contraction.graph;
    step.convex_set = std::move(image);
    steps.push_back(std::move(step));
    current = std::move(contraction.graph);
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::vector<Label> Subcube::vertices() const {
  std::vector<std::size_t> coords;
  for (auto i = free.find_first(); i != Label::npos; i = free.find_next(i)) coords.push_back(i);
  if (coords.size() >= 8 * sizeof(std::size_t) - 1) throw GuardError("subcube too large to list");
  std::vector<Label> out;
  out.reserve(std::size_t{1} << coords.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << coords.size()); ++mask) {
    Label x = base;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (mask >> j & 1U) x.set(coords[j]);
    }
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subcube subcube_hull(const std::vector<Label>& labels) {
  if (labels.empty()) throw InputError("subcube_hull: empty label set");
  Subcube out{labels.front(), Label(labels.front().size())};
  for (const auto& x : labels) {
    if (x.size() != out.base.size()) throw InputError("subcube_hull: labels differ in length");
    out.free |= x ^ labels.front();
  }
  out.base &= ~out.free;
  return out;
}

std::vector<Label> hull_in_hypercube(const std::vector<Label>& labels) {
  return subcube_hull(labels).vertices();
}

namespace {

Subcube cycle_hull(const IsometricCycle& cycle, const HypercubeEmbedding& embedding) {
  std::vector<Label> labels;
  labels.reserve(cycle.vertices.size());
  for (VertexId v : cycle.vertices) labels.push_back(embedding.labels[static_cast<std::size_t>(v)]);
  return subcube_hull(labels);
}

}  // namespace

std::vector<IsometricCycle> maximal_isometric_cycles(const Graph& g, const DistanceMatrix& d,
                                                     const HypercubeEmbedding& embedding,
                                                     const CycleLimits& limits) {
  const auto cycles = isometric_cycles(g, d, limits);
  std::vector<Subcube> hulls;
  hulls.reserve(cycles.size());
  for (const auto& c : cycles) hulls.push_back(cycle_hull(c, embedding));

  // A strictly larger hull has strictly larger dimension, so only distinct
  // hulls of higher dimension need to be compared.
  std::map<std::pair<Label, Label>, bool> distinct;
  for (const auto& h : hulls) distinct.emplace(std::pair{h.free, h.base}, true);
  std::vector<Subcube> unique;
  for (const auto& [key, unused] : distinct) unique.push_back({key.second, key.first});
  for (auto& [key, maximal] : distinct) {
    const Subcube self{key.second, key.first};
    for (const auto& other : unique) {
      if (other.dimension() > self.dimension() && other.contains(self)) {
        maximal = false;
        break;
      }
    }
  }
  std::vector<IsometricCycle> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (distinct.at({hulls[i].free, hulls[i].base})) out.push_back(cycles[i]);
  }
  return out;
}

namespace {

Graph hypercube_induced(const std::vector<Label>& labels, const std::map<Label, VertexId>& index) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    Label probe = labels[v];
    for (std::size_t bit = 0; bit < probe.size(); ++bit) {
      probe.flip(bit);
      if (auto it = index.find(probe); it != index.end() && it->second > static_cast<VertexId>(v)) {
        edges.push_back({static_cast<VertexId>(v), it->second});
      }
      probe.flip(bit);
    }
  }
  return Graph(labels.size(), edges);
}

}  // namespace

ClosureTrace median_closure(const Graph& g, const CycleLimits& limits) {
  const auto cert = is_partial_cube(g);
  if (!cert.verdict) throw InputError("median_closure: graph is not a partial cube");
  if (g.vertex_count() == 1) throw InputError("median_closure: G must not be K1");
  const auto embedding = embed(g, cert);

  ClosureTrace trace;
  trace.dimension = embedding.dimension();
  std::vector<Label> labels = embedding.labels;
  std::map<Label, VertexId> index;
  for (std::size_t v = 0; v < labels.size(); ++v) index.emplace(labels[v], static_cast<VertexId>(v));

  std::vector<VertexId> added;
  while (true) {
    ClosureRound round;
    round.graph = hypercube_induced(labels, index);
    if (trace.rounds.empty() && !(round.graph == g)) {
      throw InternalError("median_closure: embedding does not induce the input graph");
    }
    round.labels = labels;
    round.added = std::move(added);
    const auto d = all_pairs_distances(round.graph);
    HypercubeEmbedding frame{labels, {}, 0};
    round.maximal_cycles = maximal_isometric_cycles(round.graph, d, frame, limits);

    std::set<Label> fresh;
    for (const auto& cycle : round.maximal_cycles) {
      for (auto& x : cycle_hull(cycle, frame).vertices()) {
        if (!index.contains(x)) fresh.insert(std::move(x));
      }
    }
    trace.rounds.push_back(std::move(round));
    if (fresh.empty()) break;
    added.clear();
    for (const auto& x : fresh) {
      const auto id = static_cast<VertexId>(labels.size());
      index.emplace(x, id);
      labels.push_back(x);
      added.push_back(id);
    }
    if (labels.size() > limits.max_vertices) {
      throw GuardError("median_closure: closure exceeded " + std::to_string(limits.max_vertices) + " vertices");
    }
  }
  if (!is_median_by_convex_U(trace.final_graph())) {
    throw InternalError("median_closure: fixpoint is not a median graph");
  }
  return trace;
}

std::vector<ClassId> theta_occurrence(const Graph& g, const PartialCubeCertificate& cert, const VertexSet& s) {
  if (!cert.verdict) throw InputError("theta_occurrence: graph is not a partial cube");
  std::set<ClassId> found;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    const auto [u, v] = g.edge(e);
    if (s.contains(u) && s.contains(v)) found.insert(cert.theta.class_of[static_cast<std::size_t>(e)]);
  }
  return {found.begin(), found.end()};
}

}  // namespace pcube
