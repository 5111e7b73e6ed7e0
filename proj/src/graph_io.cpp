#include "pcube/graph_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pcube/error.hpp"

namespace pcube {

namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string& what, const char* unit = "line") {
  throw InputError(std::string(unit) + " " + std::to_string(line) + ": " + what);
}

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Loops and duplicates are reported against the line that introduced them.
Graph checked_build(std::size_t n, const std::vector<Edge>& edges,
                    const std::vector<std::size_t>& lines, const char* unit = "line") {
  std::map<Edge, std::size_t> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      fail_at(lines[i], "vertex id out of range in edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") with n=" + std::to_string(n), unit);
    }
    if (u == v) fail_at(lines[i], "loop at vertex " + std::to_string(u), unit);
    const Edge key{std::min(u, v), std::max(u, v)};
    auto [it, inserted] = seen.emplace(key, lines[i]);
    if (!inserted) {
      fail_at(lines[i], "duplicate edge (" + std::to_string(key.u) + "," + std::to_string(key.v) +
                            "), first seen at " + unit + " " + std::to_string(it->second), unit);
    }
  }
  return Graph(n, edges);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
      fail_at(line_no, "expected header `n m` with nonnegative integers");
    }
    break;
  }
  if (n < 0) throw InputError("empty input: missing `n m` header");

  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream row(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) fail_at(line_no, "expected `u v`");
    if (static_cast<long long>(edges.size()) == m) {
      fail_at(line_no, "more edge lines than the declared m=" + std::to_string(m));
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    lines.push_back(line_no);
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError("declared m=" + std::to_string(m) + " but read " +
                     std::to_string(edges.size()) + " edges");
  }
  return checked_build(static_cast<std::size_t>(n), edges, lines);
}

Graph read_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("JSON graph: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      doc["n"].get<long long>() < 0) {
    throw InputError("JSON graph: expected a nonnegative integer field \"n\"");
  }
  const auto n = doc["n"].get<long long>();
  std::vector<Edge> edges;
  std::vector<std::size_t> positions;
  if (doc.contains("edges")) {
    const auto& list = doc["edges"];
    if (!list.is_array()) throw InputError("JSON graph: \"edges\" must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& e = list[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw InputError("JSON graph: edges[" + std::to_string(i) + "] must be [u, v]");
      }
      edges.push_back({e[0].get<VertexId>(), e[1].get<VertexId>()});
      positions.push_back(i + 1);  // reported as the 1-based entry number
    }
  }
  return checked_build(static_cast<std::size_t>(n), edges, positions, "edges entry");
}

Graph read_graph(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return read_json_graph(text);
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_graph(buffer.str());
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_json_text(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

}  // namespace pcube
