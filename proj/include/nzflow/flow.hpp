#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nzflow/graph.hpp"

namespace nzflow {

// Per-edge (tail, head) pairs; dir[e] must be the edge's endpoints in one of
// the two orders.
struct Orientation {
  std::vector<std::pair<int, int>> dir;
};

// A k-flow candidate: an orientation plus integer edge values in
// {-(k-1),...,k-1}. Conservation and the nowhere-zero property are checked
// by verify_flow, not assumed.
struct Flow {
  int k = 0;
  Orientation orientation;
  std::vector<int> values;
};

enum class FlowFault {
  none,
  bad_k,                  // k < 2
  orientation_mismatch,   // dir[e] is not a permutation of the edge's endpoints
  value_out_of_range,     // |value| > k-1
  conservation,           // in-sum != out-sum at some vertex
  zero_value,             // valid flow, but some edge carries 0
};

struct VerificationReport {
  bool valid = false;         // range, orientation and conservation all hold
  bool nowhere_zero = false;  // valid and no zero edge value
  FlowFault fault = FlowFault::none;
  int edge = -1;    // for edge-located faults
  int vertex = -1;  // for conservation faults
  int k = 0;

  // "OK nowhere-zero 3-flow" or "FAIL <reason> at <vertex|edge>".
  std::string to_string() const;
};

// Checks value range, conservation at every vertex and the nowhere-zero
// property, reporting the first violation. A zero value leaves `valid` true.
VerificationReport verify_flow(const Graph& g, const Flow& f);

// Orients each component along an Eulerian circuit and assigns value 1
// everywhere; a nowhere-zero 2-flow. Requires every degree even
// (Errc::odd_degree_vertex).
Flow eulerian_two_flow(const Graph& g);

// Nowhere-zero 3-flow on a connected d-regular bipartite graph, d >= 2:
// proper d-edge-coloring by augmenting paths, all edges oriented from the
// side of vertex 0, per-color weights from {+-1, +-2} summing to zero.
// Errors: not_connected, not_bipartite, not_regular, valency_too_small.
Flow bipartite_regular_three_flow(const Graph& g);

struct SolveOptions {
  long long budget = 50'000'000;  // backtracking node cap
};

// Exhaustive nowhere-zero k-flow search over the cycle space: cotree edges
// (by decreasing fundamental-cycle length) take values +1,-1,+2,-2,...;
// tree-edge values are forced by conservation. Complete: nullopt means no
// nowhere-zero k-flow exists. Throws Errc::budget_exceeded when the node
// budget runs out, Errc::not_connected on disconnected input.
std::optional<Flow> solve_nz_kflow(const Graph& g, int k, const SolveOptions& opts = {});

// Same orientation and values under a larger k. Requires new_k >= f.k.
Flow reinterpret_flow(const Flow& f, int new_k);

}  // namespace nzflow
