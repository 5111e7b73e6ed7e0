#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pcube/graph.hpp"

namespace pcube {

/// Edge-list text: a header line `n m`, then m lines `u v`.  Blank lines and
/// lines starting with `#` are skipped.  Errors carry 1-based line numbers.
Graph read_edge_list(std::istream& in);

/// `{"n": int, "edges": [[u, v], ...]}`.
Graph read_json_graph(std::string_view text);

/// Dispatches on content: a leading `{` selects JSON, anything else the
/// edge-list reader.
Graph read_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_json_text(const Graph& g);

}  // namespace pcube
