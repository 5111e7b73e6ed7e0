#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcube/crossing.hpp"
#include "pcube/generators.hpp"
#include "pcube/graph.hpp"
#include "pcube/invariants.hpp"
#include "pcube/report.hpp"

namespace pcube {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failure = 1;
inline constexpr int input_error = 2;
inline constexpr int guard = 3;
}  // namespace exit_code

/// What a command hands back to the front end: the `results` member of the
/// report, timings, the process exit status and a one-line summary.
struct CommandOutput {
  json results;
  json timings = json::object();
  int exit_code = exit_code::ok;
  std::string summary;
};

struct Generated {
  Graph graph;
  std::vector<RecordedExpansion> steps;  // only for random_median
};

/// Parameter names of a generator family, in positional order.
const std::vector<std::string>& family_parameters(const std::string& family);
std::vector<std::string> family_names();
bool family_uses_seed(const std::string& family);

/// Builds a graph from a family name and named integer parameters.  Throws
/// InputError for unknown families and missing or bad parameters, and
/// GuardError past max_vertices.
Generated generate(const std::string& family, const std::map<std::string, long long>& params, Seed seed,
                   std::size_t max_vertices = kDefaultVertexGuard);

CommandOutput cmd_analyze(const Graph& g);
CommandOutput cmd_verify(const Graph& g);
CommandOutput cmd_closure(const Graph& g, const CycleLimits& limits = {});

struct ThresholdOptions {
  std::string family;  // "clique" or "cube"
  int n = 0;
  long long m_min = 0;
  long long m_max = 0;
};

CommandOutput cmd_thresholds(const ThresholdOptions& options);

/// Per-m classification of a closed-form threshold polynomial.
std::string classify(const Polynomial& p);
Polynomial threshold_polynomial(const std::string& family, int n, long long m);

struct CorpusOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  Seed seed = 0;         // default seed for families without "seeds"
  std::size_t max_vertices = kDefaultVertexGuard;
};

/// Runs the invariant suite over every graph a corpus spec describes.
CommandOutput cmd_corpus(const json& spec, const CorpusOptions& options = {});

CommandOutput cmd_simplex(const Graph& h, std::size_t max_cliques = 1'000'000);

}  // namespace pcube
