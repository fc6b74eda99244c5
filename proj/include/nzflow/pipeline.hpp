#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nzflow/flow.hpp"
#include "nzflow/graph.hpp"
#include "nzflow/perm_group.hpp"

namespace nzflow {

enum class StepKind {
  EvenValency,               // d even: Eulerian 2-flow reinterpreted
  DivisibleByThreeFallback,  // 3 | d: generic exhaustive solver
  TransitiveAbelianBase,     // N transitive => Cayley graph on abelian N
  BipartiteBase,             // quotient valency 1 => regular bipartite graph
  Recurse,                   // descend into the quotient
  Lift,                      // lift the quotient flow back up
  GenericFallback,           // hypotheses unmet but opts.fallback set
};

struct TraceStep {
  StepKind kind;
  int d = -1;                 // EvenValency / DivisibleByThreeFallback / GenericFallback
  long long n_order = -1;     // TransitiveAbelianBase / Recurse: |N|
  int blocks = -1;            // Recurse
  int quotient_valency = -1;  // Recurse
  int t = -1;                 // Lift
  int part_a = -1;            // BipartiteBase part sizes
  int part_b = -1;

  std::string to_string() const;  // e.g. "STEP Recurse |N|=5 blocks=10 qval=5"
};

// The recursion record. Steps of a nested solve appear between the Recurse
// step that entered it and the Lift step that consumed its flow.
struct PipelineTrace {
  std::vector<TraceStep> steps;

  bool contains(StepKind kind) const;
  std::string to_string() const;
};

enum class PipelineStatus { solved, infeasible, outside_scope };

struct PipelineOptions {
  bool fallback = false;               // run the generic solver when hypotheses fail
  long long solver_budget = 50'000'000;
  std::size_t order_cap = kDefaultOrderCap;
};

struct PipelineResult {
  PipelineStatus status = PipelineStatus::outside_scope;
  std::optional<Flow> flow;  // set iff status == solved
  PipelineTrace trace;
  std::string reason;        // set for outside_scope and infeasible
};

// Produces a nowhere-zero 3-flow on a connected regular graph admitting a
// solvable arc-transitive group, by derived-series descent through orbit
// quotients with multicover lifting. Every returned flow is re-verified
// before release. Throws Errc::internal_invariant_violation if a step the
// theory guarantees cannot fail does fail, Errc::budget_exceeded if the
// generic solver runs out of budget, Errc::not_connected on disconnected
// input.
PipelineResult solve_three_flow(const Graph& g, const PermGroup& grp,
                                const PipelineOptions& opts = {});

struct HypothesisReport {
  bool connected = false;
  bool regular = false;
  int valency = -1;  // -1 when not regular
  bool valency_at_least_four = false;
  bool preserves_graph = false;
  bool arc_transitive = false;  // false whenever preserves_graph is false
  bool solvable = false;
  int derived_length = -1;  // -1 when not solvable
  unsigned long long group_order = 0;

  // All hypotheses of the main theorem hold.
  bool all() const {
    return connected && regular && valency_at_least_four && preserves_graph &&
           arc_transitive && solvable;
  }

  std::string to_string() const;  // machine-readable key=value lines
};

HypothesisReport check_hypotheses(const Graph& g, const PermGroup& grp);

}  // namespace nzflow
