#include "pcube/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "pcube/graph_io.hpp"

namespace pcube {

namespace {

const BigInt kSafeMax = (BigInt{1} << 53) - 1;

json vertex_list(const std::vector<VertexId>& vs) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(v);
  return out;
}

}  // namespace

json safe_integer(const BigInt& value) {
  if (value <= kSafeMax && value >= -kSafeMax) return value.convert_to<long long>();
  return value.str();
}

json polynomial_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& s : coefficient_strings(p)) out.push_back(s);
  return out;
}

json integers_json(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

json edge_list_json(const Graph& g) {
  json out = json::array();
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

json graph_json(const Graph& g) {
  return json{{"n", g.vertex_count()}, {"edges", edge_list_json(g)}};
}

std::string input_digest(const Graph& g) {
  std::ostringstream text;
  write_edge_list(text, g);
  return text_digest(text.str());
}

std::string text_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json certificate_json(const Graph& g, const PartialCubeCertificate& cert) {
  json out;
  out["connected"] = cert.connected;
  out["bipartite"] = cert.connected ? json(!cert.odd_cycle.has_value()) : json(nullptr);
  if (cert.odd_cycle) out["odd_cycle"] = vertex_list(*cert.odd_cycle);
  out["partial_cube"] = cert.verdict;
  if (!cert.connected) return out;
  out["theta_is_equivalence"] = cert.theta.is_equivalence;
  if (cert.theta.witness) {
    json w = json::array();
    for (EdgeId e : *cert.theta.witness) w.push_back({g.edge(e).u, g.edge(e).v});
    out["theta_witness"] = w;
  }
  if (!cert.verdict) return out;
  out["idim"] = cert.idim;
  json classes = json::array();
  for (std::size_t c = 0; c < cert.theta.class_count(); ++c) {
    json edges = json::array();
    for (EdgeId e : cert.theta.classes[c]) edges.push_back({g.edge(e).u, g.edge(e).v});
    classes.push_back({{"class", c}, {"edges", edges}});
  }
  out["theta_classes"] = classes;
  return out;
}

json theorem_json(const TheoremReport& r) {
  json out;
  out["is_partial_cube"] = r.is_partial_cube;
  if (!r.is_partial_cube) {
    out["theorem_holds"] = r.theorem_holds();
    return out;
  }
  out["idim"] = r.idim;
  out["is_median"] = r.is_median;
  out["cube_polynomial"] = polynomial_json(r.cube_poly);
  out["crossing_clique_shifted"] = polynomial_json(r.crossing_clique_shifted);
  out["leq_holds"] = r.leq_holds;
  out["equality"] = r.equality;
  out["strict"] = r.leq_holds && !r.equality;
  out["theorem_holds"] = r.theorem_holds();
  return out;
}

json closure_json(const ClosureTrace& trace) {
  json rounds = json::array();
  json counts = json::array();
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const auto& round = trace.rounds[i];
    json added = json::array();
    for (VertexId v : round.added) {
      added.push_back({{"vertex", v}, {"label", label_string(round.labels[static_cast<std::size_t>(v)])}});
    }
    json cycles = json::array();
    for (const auto& c : round.maximal_cycles) cycles.push_back(vertex_list(c.vertices));
    rounds.push_back({{"index", i},
                      {"vertices", round.graph.vertex_count()},
                      {"edges", round.graph.edge_count()},
                      {"added", added},
                      {"maximal_cycles", cycles}});
    counts.push_back(round.graph.vertex_count());
  }
  json labels = json::array();
  for (const auto& l : trace.rounds.back().labels) labels.push_back(label_string(l));
  return json{{"dimension", trace.dimension},
              {"vertex_counts", counts},
              {"stabilization_index", trace.stabilization_index()},
              {"rounds", rounds},
              {"final_graph", graph_json(trace.final_graph())},
              {"final_labels", labels}};
}

json envelope(std::string_view command, const std::vector<std::string>& argv, const std::string& digest,
              json results, json timings) {
  json out;
  out["schema"] = kSchemaVersion;
  out["tool_version"] = kToolVersion;
  out["command"] = {{"name", command}, {"argv", argv}};
  out["input_digest"] = digest.empty() ? json(nullptr) : json(digest);
  out["results"] = std::move(results);
  out["timings_ms"] = std::move(timings);
  return out;
}

}  // namespace pcube
