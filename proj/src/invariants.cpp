#include "pcube/invariants.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "pcube/counting.hpp"
#include "pcube/crossing.hpp"
#include "pcube/error.hpp"
#include "pcube/median.hpp"
#include "pcube/theta.hpp"

namespace pcube {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "skip";
}

namespace {

class Collector {
 public:
  void check(std::string name, bool ok, std::string detail = {}) {
    out_.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, ok ? std::string{} : std::move(detail)});
  }
  void skip(std::string name, std::string reason) {
    out_.push_back({std::move(name), CheckStatus::skip, std::move(reason)});
  }
  std::vector<CheckOutcome> take() { return std::move(out_); }

 private:
  std::vector<CheckOutcome> out_;
};

std::string too_big(std::size_t n, std::size_t cap) {
  return std::to_string(n) + " vertices exceed the cap of " + std::to_string(cap);
}

bool is_isomorphism(const Graph& from, const Graph& to, const std::vector<VertexId>& map) {
  if (from.vertex_count() != to.vertex_count() || from.edge_count() != to.edge_count()) return false;
  if (map.size() != from.vertex_count()) return false;
  std::vector<bool> hit(to.vertex_count(), false);
  for (VertexId v : map) {
    if (v < 0 || static_cast<std::size_t>(v) >= to.vertex_count() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (const auto& e : from.edges()) {
    if (!to.has_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)])) return false;
  }
  return true;
}

// The single coordinate in which the endpoints of an edge differ.
std::size_t flipped_coordinate(const std::vector<Label>& labels, const Edge& e) {
  const Label diff = labels[static_cast<std::size_t>(e.u)] ^ labels[static_cast<std::size_t>(e.v)];
  if (diff.count() != 1) throw InternalError("edge endpoints differ in more than one coordinate");
  return diff.find_first();
}

// Crossing pairs keyed by coordinate rather than ClassId.
std::set<std::pair<std::size_t, std::size_t>> crossing_by_coordinate(const Graph& g,
                                                                     const PartialCubeCertificate& cert,
                                                                     const std::vector<Label>& labels) {
  std::vector<std::size_t> coord(cert.theta.class_count());
  for (std::size_t c = 0; c < coord.size(); ++c) {
    coord[c] = flipped_coordinate(labels, g.edge(cert.theta.classes[c].front()));
  }
  std::set<std::pair<std::size_t, std::size_t>> out;
  const auto cg = crossing_graph(g, cert);
  for (const auto& e : cg.graph.edges()) {
    const auto a = coord[static_cast<std::size_t>(e.u)];
    const auto b = coord[static_cast<std::size_t>(e.v)];
    out.emplace(std::min(a, b), std::max(a, b));
  }
  return out;
}

// Each U_ab vertex has exactly one class-c neighbour; that matching must be an
// isomorphism G[U_ab] -> G[U_ba] that keeps every edge in its Θ-class.
bool u_sides_isomorphic(const Graph& g, const PartialCubeCertificate& cert, const Sides& sd, ClassId c) {
  const auto n = g.vertex_count();
  std::vector<VertexId> partner(n, -1);
  for (EdgeId e : cert.theta.classes[static_cast<std::size_t>(c)]) {
    const auto& ed = g.edge(e);
    for (auto [x, y] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
      if (partner[static_cast<std::size_t>(x)] != -1) return false;
      partner[static_cast<std::size_t>(x)] = y;
    }
  }
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    const bool on_boundary = sd.u_ab.contains(v) || sd.u_ba.contains(v);
    if (on_boundary != (partner[static_cast<std::size_t>(v)] != -1)) return false;
  }
  if (sd.u_ab.count() != sd.u_ba.count()) return false;
  std::size_t edges_ab = 0;
  std::size_t edges_ba = 0;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    const auto& ed = g.edge(e);
    if (sd.u_ba.contains(ed.u) && sd.u_ba.contains(ed.v)) ++edges_ba;
    if (!(sd.u_ab.contains(ed.u) && sd.u_ab.contains(ed.v))) continue;
    ++edges_ab;
    const auto image = g.edge_id(partner[static_cast<std::size_t>(ed.u)], partner[static_cast<std::size_t>(ed.v)]);
    if (!image || cert.theta.class_of[static_cast<std::size_t>(*image)] != cert.theta.class_of[static_cast<std::size_t>(e)]) {
      return false;
    }
  }
  return edges_ab == edges_ba;
}

// H# must equal G#[F(H)] once each class of H is identified with the class of
// G holding the same edges.
bool convex_crossing_matches(const Graph& g, const PartialCubeCertificate& cert, const Graph& gsharp,
                             const VertexSet& h) {
  const auto sub = induced_subgraph(g, h);
  const auto sub_cert = is_partial_cube(sub.graph);
  if (!sub_cert.verdict) return false;
  const auto k = sub_cert.theta.class_count();
  std::vector<ClassId> image(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& e = sub.graph.edge(sub_cert.theta.classes[c].front());
    const auto id = g.edge_id(sub.to_original[static_cast<std::size_t>(e.u)], sub.to_original[static_cast<std::size_t>(e.v)]);
    image[c] = cert.theta.class_of[static_cast<std::size_t>(*id)];
    for (EdgeId f : sub_cert.theta.classes[c]) {
      const auto& fe = sub.graph.edge(f);
      const auto fid = g.edge_id(sub.to_original[static_cast<std::size_t>(fe.u)], sub.to_original[static_cast<std::size_t>(fe.v)]);
      if (cert.theta.class_of[static_cast<std::size_t>(*fid)] != image[c]) return false;
    }
  }
  if (std::set<ClassId>(image.begin(), image.end()).size() != k) return false;
  if (theta_occurrence(g, cert, h) != [&] { auto s = image; std::sort(s.begin(), s.end()); return s; }()) return false;

  std::set<std::pair<ClassId, ClassId>> from_h;
  if (k >= 1 && sub.graph.vertex_count() >= 2) {
    const auto hsharp = crossing_graph(sub.graph, sub_cert);
    for (const auto& e : hsharp.graph.edges()) {
      const auto a = image[static_cast<std::size_t>(e.u)];
      const auto b = image[static_cast<std::size_t>(e.v)];
      from_h.emplace(std::min(a, b), std::max(a, b));
    }
  }
  std::set<std::pair<ClassId, ClassId>> from_g;
  const std::set<ClassId> f(image.begin(), image.end());
  for (const auto& e : gsharp.edges()) {
    if (f.contains(e.u) && f.contains(e.v)) from_g.emplace(e.u, e.v);
  }
  return from_h == from_g;
}

Polynomial any_cube_polynomial(const Graph& g) {
  const auto cert = is_partial_cube(g);
  if (cert.verdict) return cube_polynomial(g, cert, embed(g, cert));
  return cube_polynomial_oracle(g);
}

void check_lc_unimodal(Collector& out, const std::vector<Polynomial>& polys) {
  bool ok = true;
  for (const auto& p : polys) {
    if (is_log_concave(p) && !has_internal_zeros(p) && !is_unimodal(p)) ok = false;
  }
  out.check("log_concave_implies_unimodal", ok, "log-concave polynomial without internal zeros is not unimodal");
}

void check_cliques(Collector& out, const Graph& g, const InvariantLimits& limits) {
  const auto n = g.vertex_count();
  if (n > limits.clique_oracle_vertices) {
    out.skip("clique_poly_oracle", too_big(n, limits.clique_oracle_vertices));
    out.skip("clique_vertex_recursion", too_big(n, limits.clique_oracle_vertices));
    return;
  }
  const auto cl = clique_polynomial_enumerate(g);
  out.check("clique_poly_oracle", cl == clique_polynomial_recursive(g), "recursive and enumerated clique polynomials differ");
  bool ok = true;
  std::string detail;
  for (VertexId v = 0; v < static_cast<VertexId>(n) && ok; ++v) {
    auto rest = VertexSet::full(n);
    rest.erase(v);
    const VertexSet nbhd(n, g.neighbors(v));
    const auto rhs = clique_polynomial_enumerate(induced_subgraph(g, rest).graph) +
                     Polynomial::x() * clique_polynomial_enumerate(induced_subgraph(g, nbhd).graph);
    if (!(rhs == cl)) {
      ok = false;
      detail = "vertex recursion fails at vertex " + std::to_string(v);
    }
  }
  out.check("clique_vertex_recursion", ok, detail);
}

void check_closure(Collector& out, const Graph& g, bool median, const InvariantLimits& limits) {
  static constexpr const char* names[] = {"closure_median", "closure_crossing_preserved", "closure_idempotent",
                                          "closure_monotone", "closure_fixpoint_iff_median"};
  const auto n = g.vertex_count();
  auto skip_all = [&](const std::string& reason) {
    for (const char* name : names) out.skip(name, reason);
  };
  if (n > limits.closure_vertices) return skip_all(too_big(n, limits.closure_vertices));
  CycleLimits cycle_limits;
  cycle_limits.max_vertices = limits.closure_round_vertices;
  ClosureTrace trace;
  try {
    trace = median_closure(g, cycle_limits);
  } catch (const GuardError& e) {
    return skip_all(e.what());
  }
  const auto& plus = trace.final_graph();
  const bool plus_median = is_median_by_convex_U(plus) &&
                           (plus.vertex_count() > limits.triple_vertices ||
                            is_median_by_triples(plus, all_pairs_distances(plus)));
  out.check("closure_median", plus_median, "closure is not a median graph");
  out.check("closure_crossing_preserved", closure_preserves_crossing_graph(g, trace),
            "crossing graph changes under closure");
  bool idempotent = false;
  try {
    idempotent = median_closure(plus, cycle_limits).rounds.size() == 1;
  } catch (const GuardError&) {
  }
  out.check("closure_idempotent", idempotent, "closing the closure adds vertices");
  bool monotone = true;
  std::string detail;
  try {
    Polynomial prev = any_cube_polynomial(trace.rounds.front().graph);
    for (std::size_t i = 1; i < trace.rounds.size(); ++i) {
      const auto next = any_cube_polynomial(trace.rounds[i].graph);
      if (!poly_lt(prev, next)) {
        monotone = false;
        detail = "cube polynomial does not grow in round " + std::to_string(i);
      }
      prev = next;
    }
    out.check("closure_monotone", monotone, detail);
  } catch (const GuardError& e) {
    out.skip("closure_monotone", e.what());
  }
  out.check("closure_fixpoint_iff_median", (trace.rounds.size() == 1) == median,
            "closure fixes G but G is not median, or the reverse");
}

}  // namespace

bool replay_matches(const Graph& g, const std::vector<PeripheralStep>& steps) {
  if (steps.empty()) return g.vertex_count() == 1;
  if (steps.front().before.vertex_count() != 1) return false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    const auto expanded = peripheral_convex_expansion(step.before, all_pairs_distances(step.before), step.convex_set);
    const Graph& target = i + 1 < steps.size() ? steps[i + 1].before : g;
    if (!is_isomorphism(expanded.graph, target, step.to_parent)) return false;
  }
  return true;
}

bool closure_preserves_crossing_graph(const Graph& g, const ClosureTrace& trace) {
  const auto cert = is_partial_cube(g);
  const auto& plus = trace.final_graph();
  const auto plus_cert = is_partial_cube(plus);
  if (!cert.verdict || !plus_cert.verdict) return false;
  if (cert.idim != plus_cert.idim) return false;
  return crossing_by_coordinate(g, cert, trace.rounds.front().labels) ==
         crossing_by_coordinate(plus, plus_cert, trace.rounds.back().labels);
}

CheckOutcome check_recorded_expansion(const RecordedExpansion& step) {
  CheckOutcome out{"expansion_cube_identity", CheckStatus::pass, {}};
  const ExpansionSpec spec{VertexSet::full(step.before.vertex_count()), step.convex_set};
  const auto result = expansion_formula_check(step.before, spec);
  if (!result.holds()) {
    out.status = CheckStatus::fail;
    out.detail = "expansion identity fails on a " + std::to_string(step.before.vertex_count()) + "-vertex graph";
  }
  return out;
}

std::vector<CheckOutcome> check_graph(const Graph& g, const InvariantLimits& limits) {
  Collector out;
  const auto n = g.vertex_count();
  if (n == 0) return out.take();
  check_cliques(out, g, limits);

  const auto cert = is_partial_cube(g);
  if (!cert.verdict || n == 1) {
    if (cert.connected && !cert.odd_cycle && n <= limits.triple_vertices) {
      const bool by_triples = is_median_by_triples(g, cert.distances);
      out.check("median_recognizers_agree", by_triples == is_median_by_convex_U(g, cert),
                "triple and convex-U recognizers disagree");
    }
    return out.take();
  }

  const auto& d = cert.distances;
  const auto embedding = embed(g, cert);
  const auto cube = cube_polynomial(g, cert, embedding);
  const auto gsharp = crossing_graph(g, cert).graph;
  const auto k = static_cast<ClassId>(cert.theta.class_count());

  const auto theorem = verify_theorem(g);
  const bool median = theorem.is_median;
  out.check("theorem_leq", theorem.leq_holds, "C(G) exceeds Cl(G#, x+1) somewhere");
  out.check("equality_iff_median", theorem.equality == median, "equality does not match the median verdict");

  if (n <= limits.triple_vertices) {
    out.check("median_recognizers_agree", is_median_by_triples(g, d) == median,
              "triple and convex-U recognizers disagree");
  } else {
    out.skip("median_recognizers_agree", too_big(n, limits.triple_vertices));
  }

  if (n <= limits.cube_oracle_vertices) {
    out.check("cube_poly_oracle", cube == cube_polynomial_oracle(g), "anchor and oracle cube polynomials differ");
  } else {
    out.skip("cube_poly_oracle", too_big(n, limits.cube_oracle_vertices));
  }

  bool w_convex = true;
  bool u_iso = true;
  bool boundary = true;
  std::vector<Sides> all_sides;
  for (ClassId c = 0; c < k; ++c) {
    auto sd = sides(g, d, cert, c);
    w_convex = w_convex && is_convex(g, d, sd.w_ab) && is_convex(g, d, sd.w_ba);
    boundary = boundary && convexity_by_boundary(g, d, sd.w_ab) && convexity_by_boundary(g, d, sd.w_ba);
    u_iso = u_iso && u_sides_isomorphic(g, cert, sd, c);
    all_sides.push_back(std::move(sd));
  }
  out.check("w_sides_convex", w_convex, "some W-side is not convex");
  out.check("u_sides_isomorphic", u_iso, "class matching is not an isomorphism of U-sides");

  // Random connected subsets and their hulls.
  std::vector<VertexSet> subsets;
  for (std::size_t i = 0; i < limits.random_subsets; ++i) {
    const auto size = 1 + (limits.seed + i * 7) % n;
    subsets.push_back(random_connected_subset(g, size, limits.seed * 1000003 + i));
  }
  bool occurrence = true;
  for (const auto& s : subsets) {
    const auto hull = convex_hull(g, d, s);
    occurrence = occurrence && theta_occurrence(g, cert, s) == theta_occurrence(g, cert, hull);
    boundary = boundary && convexity_by_boundary(g, d, s) == is_convex(g, d, s) &&
               convexity_by_boundary(g, d, hull);
  }
  out.check("occurrence_hull_invariant", occurrence, "hull of a connected set gains a Θ-class");
  out.check("boundary_convexity_agrees", boundary, "boundary test and interval test disagree on convexity");

  if (n <= limits.cycle_vertices) {
    try {
      const auto cycles = isometric_cycles(g, d);
      bool agree = true;
      for (ClassId a = 0; a < k && agree; ++a) {
        for (ClassId b = a + 1; b < k && agree; ++b) {
          agree = crosses_quadrant(g, d, cert, a, b) == crosses_cycle(g, cert, cycles, a, b);
        }
      }
      out.check("crossing_quadrant_eq_cycle", agree, "quadrant and cycle crossing tests disagree");
    } catch (const GuardError& e) {
      out.skip("crossing_quadrant_eq_cycle", e.what());
    }
  } else {
    out.skip("crossing_quadrant_eq_cycle", too_big(n, limits.cycle_vertices));
  }

  const auto shifted_back = x_plus_one_expansion(cube);
  if (median) {
    out.check("b_equals_crossing_cliques", shifted_back == clique_counts(gsharp),
              "(x+1)-expansion of C(G) differs from the clique counts of G#");
    bool squares = true;
    for (ClassId a = 0; a < k && squares; ++a) {
      for (ClassId b = a + 1; b < k && squares; ++b) {
        squares = gsharp.has_edge(a, b) == alternating_square(g, cert, a, b).has_value();
      }
    }
    out.check("crossing_iff_alternating_square", squares, "crossing classes without an alternating square");
    bool induced = true;
    for (const auto& sd : all_sides) {
      induced = induced && convex_crossing_matches(g, cert, gsharp, sd.w_ab) &&
                convex_crossing_matches(g, cert, gsharp, sd.w_ba);
    }
    for (const auto& s : subsets) {
      const auto hull = convex_hull(g, d, s);
      if (hull.count() >= 2) induced = induced && convex_crossing_matches(g, cert, gsharp, hull);
    }
    out.check("convex_subgraph_crossing_induced", induced, "crossing graph of a convex subgraph is not induced");
    out.check("peripheral_replay", replay_matches(g, peripheral_decomposition(g)),
              "peripheral decomposition does not replay to G");
  } else {
    const char* reason = "graph is not median";
    out.skip("b_equals_crossing_cliques", reason);
    out.skip("crossing_iff_alternating_square", reason);
    out.skip("convex_subgraph_crossing_induced", reason);
    out.skip("peripheral_replay", reason);
  }

  check_lc_unimodal(out, {cube, theorem.crossing_clique_shifted, clique_polynomial_recursive(gsharp)});
  check_closure(out, g, median, limits);
  return out.take();
}

}  // namespace pcube
