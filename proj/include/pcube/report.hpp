#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pcube/counting.hpp"
#include "pcube/graph.hpp"
#include "pcube/median.hpp"
#include "pcube/polynomial.hpp"
#include "pcube/theta.hpp"

namespace pcube {

inline constexpr const char* kSchemaVersion = "pcube-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::ordered_json;

/// A JSON number when it fits in the 53-bit safe range, else a decimal string.
json safe_integer(const BigInt& value);

/// Coefficients low degree first, always as decimal strings.
json polynomial_json(const Polynomial& p);
json integers_json(const std::vector<BigInt>& values);

json graph_json(const Graph& g);
json edge_list_json(const Graph& g);

/// "fnv1a64:<16 hex digits>" over the canonical edge-list text of g.
std::string input_digest(const Graph& g);
std::string text_digest(std::string_view text);

json certificate_json(const Graph& g, const PartialCubeCertificate& cert);
json theorem_json(const TheoremReport& report);
json closure_json(const ClosureTrace& trace);

/// The versioned envelope every command writes.
json envelope(std::string_view command, const std::vector<std::string>& argv, const std::string& digest,
              json results, json timings);

}  // namespace pcube
