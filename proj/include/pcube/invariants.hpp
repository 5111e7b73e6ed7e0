#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcube/generators.hpp"
#include "pcube/graph.hpp"

namespace pcube {

enum class CheckStatus { pass, fail, skip };

const char* to_string(CheckStatus s);

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  std::string detail;  // why it failed or was skipped
};

/// Size caps for the expensive checks; graphs over a cap report `skip`.
struct InvariantLimits {
  std::size_t cube_oracle_vertices = 14;
  std::size_t clique_oracle_vertices = 12;
  std::size_t cycle_vertices = 4096;
  std::size_t closure_vertices = 40;          // input size
  std::size_t closure_round_vertices = 64;    // size of any closure round
  std::size_t triple_vertices = 2048;
  std::size_t random_subsets = 12;
  std::uint64_t seed = 0;
};

/// Runs every structural identity that applies to g.  Check names:
///   theorem_leq, equality_iff_median, w_sides_convex, u_sides_isomorphic,
///   crossing_quadrant_eq_cycle, median_recognizers_agree, cube_poly_oracle,
///   clique_poly_oracle, clique_vertex_recursion, b_equals_crossing_cliques,
///   crossing_iff_alternating_square, convex_subgraph_crossing_induced,
///   occurrence_hull_invariant, boundary_convexity_agrees,
///   log_concave_implies_unimodal, closure_median, closure_crossing_preserved,
///   closure_idempotent, closure_monotone, closure_fixpoint_iff_median,
///   peripheral_replay.
std::vector<CheckOutcome> check_graph(const Graph& g, const InvariantLimits& limits = {});

/// Cube-polynomial identities of one recorded peripheral convex expansion.
CheckOutcome check_recorded_expansion(const RecordedExpansion& step);

/// Replays a peripheral decomposition and confirms it rebuilds g exactly.
bool replay_matches(const Graph& g, const std::vector<PeripheralStep>& steps);

/// Crossing graph of G+ expressed on the coordinates of the closure frame,
/// compared with the crossing graph of G.
bool closure_preserves_crossing_graph(const Graph& g, const ClosureTrace& trace);

}  // namespace pcube
