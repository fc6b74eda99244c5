#include "nzflow/pipeline.hpp"

#include <algorithm>

#include "nzflow/error.hpp"
#include "nzflow/quotient.hpp"

namespace nzflow {

std::string TraceStep::to_string() const {
  switch (kind) {
    case StepKind::EvenValency:
      return "STEP EvenValency d=" + std::to_string(d);
    case StepKind::DivisibleByThreeFallback:
      return "STEP DivisibleByThreeFallback d=" + std::to_string(d);
    case StepKind::TransitiveAbelianBase:
      return "STEP TransitiveAbelianBase |N|=" + std::to_string(n_order);
    case StepKind::BipartiteBase:
      return "STEP BipartiteBase |A|=" + std::to_string(part_a) +
             " |B|=" + std::to_string(part_b);
    case StepKind::Recurse:
      return "STEP Recurse |N|=" + std::to_string(n_order) +
             " blocks=" + std::to_string(blocks) + " qval=" + std::to_string(quotient_valency);
    case StepKind::Lift:
      return "STEP Lift t=" + std::to_string(t);
    case StepKind::GenericFallback:
      return "STEP GenericFallback d=" + std::to_string(d);
  }
  return "STEP ?";
}

bool PipelineTrace::contains(StepKind kind) const {
  return std::any_of(steps.begin(), steps.end(),
                     [kind](const TraceStep& s) { return s.kind == kind; });
}

std::string PipelineTrace::to_string() const {
  std::string out;
  for (const TraceStep& s : steps) {
    out += s.to_string();
    out += '\n';
  }
  return out;
}

namespace {

// Re-verify a flow before it leaves the pipeline; the theory says this can
// never fire, so a failure is a bug, not an input problem.
void release_checked(const Graph& g, const Flow& flow) {
  VerificationReport report = verify_flow(g, flow);
  if (!report.nowhere_zero || flow.k != 3) {
    fail(Errc::internal_invariant_violation,
         "pipeline produced a flow that fails verification: " + report.to_string());
  }
}

PipelineResult run(const Graph& g, const PermGroup& grp, const PipelineOptions& opts,
                   PipelineTrace trace, int depth);

PipelineResult solved(const Graph& g, Flow flow, PipelineTrace trace) {
  release_checked(g, flow);
  return PipelineResult{PipelineStatus::solved, std::move(flow), std::move(trace), ""};
}

PipelineResult run(const Graph& g, const PermGroup& grp, const PipelineOptions& opts,
                   PipelineTrace trace, int depth) {
  SolveOptions solver{opts.solver_budget};

  if (!preserves_graph(grp, g)) {
    return PipelineResult{PipelineStatus::outside_scope, std::nullopt, std::move(trace),
                          "group does not preserve the graph"};
  }

  auto d = valency(g);
  if (!d) {
    return PipelineResult{PipelineStatus::outside_scope, std::nullopt, std::move(trace),
                          "graph is not regular"};
  }

  // Even valency: an Eulerian orientation with all values 1 is a nowhere-zero
  // 2-flow; no symmetry needed.
  if (*d % 2 == 0) {
    trace.steps.push_back({.kind = StepKind::EvenValency, .d = *d});
    return solved(g, reinterpret_flow(eulerian_two_flow(g), 3), std::move(trace));
  }

  const bool arc_transitive = is_arc_transitive(grp, g);
  DerivedSeries series = derived_series(grp);
  if (!arc_transitive || !series.solvable) {
    std::string why = !arc_transitive ? "group is not arc-transitive on the graph"
                                      : "group is not solvable";
    if (!opts.fallback) {
      return PipelineResult{PipelineStatus::outside_scope, std::nullopt, std::move(trace), why};
    }
    trace.steps.push_back({.kind = StepKind::GenericFallback, .d = *d});
    auto flow = solve_nz_kflow(g, 3, solver);
    if (!flow) {
      return PipelineResult{PipelineStatus::infeasible, std::nullopt, std::move(trace),
                            "exhaustive search found no nowhere-zero 3-flow (" + why + ")"};
    }
    return solved(g, std::move(*flow), std::move(trace));
  }

  // Odd valency divisible by three: outside the induction; fall back to the
  // exhaustive solver. Infeasible is a legitimate outcome here (d = 3).
  if (*d % 3 == 0) {
    trace.steps.push_back({.kind = StepKind::DivisibleByThreeFallback, .d = *d});
    auto flow = solve_nz_kflow(g, 3, solver);
    if (!flow) {
      return PipelineResult{PipelineStatus::infeasible, std::nullopt, std::move(trace),
                            "exhaustive search found no nowhere-zero 3-flow"};
    }
    return solved(g, std::move(*flow), std::move(trace));
  }

  if (depth > series.derived_length) {
    fail(Errc::internal_invariant_violation, "recursion exceeded the derived length");
  }

  // The last nontrivial derived term: abelian, characteristic, hence normal.
  const PermGroup& normal = series.last_nontrivial();
  if (!is_abelian(normal)) {
    fail(Errc::internal_invariant_violation, "last derived term is not abelian");
  }

  if (is_transitive(normal)) {
    // A transitive abelian group is regular, so the graph is a Cayley graph
    // on it; a nowhere-zero 3-flow must exist at valency >= 4.
    if (!is_regular_action(normal)) {
      fail(Errc::internal_invariant_violation, "transitive abelian subgroup is not regular");
    }
    trace.steps.push_back({.kind = StepKind::TransitiveAbelianBase,
                           .n_order = static_cast<long long>(normal.order())});
    auto flow = solve_nz_kflow(g, 3, solver);
    if (!flow) {
      if (*d >= 4) {
        fail(Errc::internal_invariant_violation,
             "abelian Cayley graph of valency " + std::to_string(*d) +
                 " has no nowhere-zero 3-flow");
      }
      return PipelineResult{PipelineStatus::infeasible, std::nullopt, std::move(trace),
                            "valency " + std::to_string(*d) + " admits no nowhere-zero 3-flow"};
    }
    return solved(g, std::move(*flow), std::move(trace));
  }

  VertexPartition blocks = orbits(normal);
  CertifyResult certified = certify_multicover(g, blocks);
  if (!certified.ok()) {
    fail(Errc::internal_invariant_violation,
         "orbit partition is not a multicover: " + certified.reason);
  }
  MulticoverCert cert = std::move(*certified.cert);

  auto quotient_val = valency(cert.quotient);
  if (!quotient_val) {
    fail(Errc::internal_invariant_violation, "quotient of an arc-transitive pair is irregular");
  }

  if (*quotient_val == 1) {
    // Quotient is a single edge: the graph is regular bipartite with the two
    // orbits as parts.
    auto parts = bipartition(g);
    if (!parts) {
      fail(Errc::internal_invariant_violation, "valency-1 quotient but graph not bipartite");
    }
    trace.steps.push_back({.kind = StepKind::BipartiteBase,
                           .part_a = static_cast<int>(parts->left.size()),
                           .part_b = static_cast<int>(parts->right.size())});
    return solved(g, bipartite_regular_three_flow(g), std::move(trace));
  }

  PermGroup quotient_group = induced_quotient_action(grp, blocks);
  trace.steps.push_back({.kind = StepKind::Recurse,
                         .n_order = static_cast<long long>(normal.order()),
                         .blocks = blocks.block_count(),
                         .quotient_valency = *quotient_val});
  PipelineResult inner = run(cert.quotient, quotient_group, opts, std::move(trace), depth + 1);
  if (inner.status != PipelineStatus::solved) {
    fail(Errc::internal_invariant_violation,
         "recursion on the quotient failed: " + inner.reason);
  }
  trace = std::move(inner.trace);
  Flow lifted = lift_flow(g, cert, *inner.flow);
  trace.steps.push_back({.kind = StepKind::Lift, .t = cert.t});
  return solved(g, std::move(lifted), std::move(trace));
}

}  // namespace

PipelineResult solve_three_flow(const Graph& g, const PermGroup& grp,
                                const PipelineOptions& opts) {
  if (!is_connected(g)) fail(Errc::not_connected, "pipeline input must be connected");
  if (grp.degree() != g.vertex_count()) {
    return PipelineResult{PipelineStatus::outside_scope, std::nullopt, {},
                          "group degree does not match the vertex count"};
  }
  return run(g, grp, opts, PipelineTrace{}, 0);
}

HypothesisReport check_hypotheses(const Graph& g, const PermGroup& grp) {
  HypothesisReport report;
  report.connected = is_connected(g);
  auto d = valency(g);
  report.regular = d.has_value();
  report.valency = d.value_or(-1);
  report.valency_at_least_four = d.has_value() && *d >= 4;
  report.preserves_graph =
      grp.degree() == g.vertex_count() && nzflow::preserves_graph(grp, g);
  report.arc_transitive =
      report.preserves_graph && g.edge_count() > 0 && is_arc_transitive(grp, g);
  DerivedSeries series = derived_series(grp);
  report.solvable = series.solvable;
  report.derived_length = series.derived_length;
  report.group_order = grp.order();
  return report;
}

std::string HypothesisReport::to_string() const {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string out;
  out += "connected=" + std::string(yn(connected)) + "\n";
  out += "regular=" + std::string(yn(regular)) + "\n";
  out += "valency=" + (regular ? std::to_string(valency) : std::string("-")) + "\n";
  out += "valency_at_least_four=" + std::string(yn(valency_at_least_four)) + "\n";
  out += "preserves_graph=" + std::string(yn(preserves_graph)) + "\n";
  out += "arc_transitive=" + std::string(yn(arc_transitive)) + "\n";
  out += "solvable=" + std::string(yn(solvable)) + "\n";
  out += "derived_length=" + (solvable ? std::to_string(derived_length) : std::string("-")) + "\n";
  out += "group_order=" + std::to_string(group_order) + "\n";
  return out;
}

}  // namespace nzflow
