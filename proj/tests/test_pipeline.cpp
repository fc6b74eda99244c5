#include <doctest.h>

#include "nzflow/error.hpp"
#include "nzflow/families.hpp"
#include "nzflow/pipeline.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace nzflow;
namespace fam = nzflow::families;

TEST_CASE("K5 with AGL(1,5): even valency shortcut") {
  auto result = solve_three_flow(fam::complete(5), fam::complete_affine_group(5));
  REQUIRE(result.status == PipelineStatus::solved);
  REQUIRE(result.trace.steps.size() == 1);
  CHECK(result.trace.steps[0].kind == StepKind::EvenValency);
  CHECK(result.trace.steps[0].d == 4);
  CHECK(verify_flow(fam::complete(5), *result.flow).nowhere_zero);
  for (int val : result.flow->values) CHECK(val == 1);
}

TEST_CASE("K_{5,5} with the order-50 group: bipartite base") {
  Graph g = fam::complete_bipartite(5, 5);
  auto result = solve_three_flow(g, fam::complete_bipartite_group(5));
  REQUIRE(result.status == PipelineStatus::solved);
  REQUIRE(result.trace.steps.size() == 1);
  CHECK(result.trace.steps[0].kind == StepKind::BipartiteBase);
  CHECK(result.trace.steps[0].part_a == 5);
  CHECK(result.trace.steps[0].part_b == 5);
  CHECK(verify_flow(g, *result.flow).nowhere_zero);
  CHECK(result.flow->k == 3);
}

TEST_CASE("C5 with D5: the even shortcut applies below valency 4") {
  PermGroup d5(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}),
                   Perm::from_cycles(5, {{1, 4}, {2, 3}})});
  auto result = solve_three_flow(fam::cycle(5), d5);
  REQUIRE(result.status == PipelineStatus::solved);
  CHECK(result.trace.steps[0].kind == StepKind::EvenValency);
  CHECK(result.trace.steps[0].d == 2);
}

TEST_CASE("Petersen with S5: outside scope, not solvable") {
  auto result = solve_three_flow(fam::petersen(), fam::petersen_s5_group());
  CHECK(result.status == PipelineStatus::outside_scope);
  CHECK(result.reason == "group is not solvable");
}

TEST_CASE("C5 with Z5: outside scope, not arc-transitive") {
  PermGroup z5(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
  auto result = solve_three_flow(fam::cycle(5), z5);
  // valency 2 is even, so the shortcut fires before any group check
  CHECK(result.status == PipelineStatus::solved);

  // an odd-valency graph with a non-arc-transitive group does hit the gate
  PermGroup z10_rotation(10, {Perm::from_cycles(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}})});
  Graph c10_135 = fam::circulant(10, {1, 3, 5});
  auto gated = solve_three_flow(c10_135, z10_rotation);
  CHECK(gated.status == PipelineStatus::outside_scope);
  CHECK(gated.reason == "group is not arc-transitive on the graph");
}

TEST_CASE("K8 with AGL(1,8): transitive abelian base") {
  Graph k8 = fam::complete(8);
  auto result = solve_three_flow(k8, nzflow::testing::agl_1_8());
  REQUIRE(result.status == PipelineStatus::solved);
  REQUIRE(result.trace.steps.size() == 1);
  CHECK(result.trace.steps[0].kind == StepKind::TransitiveAbelianBase);
  CHECK(result.trace.steps[0].n_order == 8);
  CHECK(verify_flow(k8, *result.flow).nowhere_zero);
}

TEST_CASE("cubic graphs fall through to the divisible-by-three solver") {
  SUBCASE("K_{3,3} is feasible") {
    PermGroup g = fam::complete_bipartite_group(3);
    auto result = solve_three_flow(fam::complete_bipartite(3, 3), g);
    REQUIRE(result.status == PipelineStatus::solved);
    CHECK(result.trace.steps[0].kind == StepKind::DivisibleByThreeFallback);
    CHECK(result.trace.steps[0].d == 3);
  }
  SUBCASE("K4 is honestly infeasible") {
    PermGroup s4(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
    auto result = solve_three_flow(fam::complete(4), s4);
    CHECK(result.status == PipelineStatus::infeasible);
    CHECK(result.trace.steps[0].kind == StepKind::DivisibleByThreeFallback);
  }
}

TEST_CASE("pentagonal cover: recursion with a lift") {
  auto instance = nzflow::testing::pentagonal_cover();
  auto result = solve_three_flow(instance.graph, instance.group);
  REQUIRE(result.status == PipelineStatus::solved);
  REQUIRE(result.trace.steps.size() == 3);
  CHECK(result.trace.steps[0].kind == StepKind::Recurse);
  CHECK(result.trace.steps[0].n_order == 5);
  CHECK(result.trace.steps[0].blocks == 10);
  CHECK(result.trace.steps[0].quotient_valency == 5);
  CHECK(result.trace.steps[1].kind == StepKind::BipartiteBase);
  CHECK(result.trace.steps[2].kind == StepKind::Lift);
  CHECK(result.trace.steps[2].t == 1);
  CHECK(verify_flow(instance.graph, *result.flow).nowhere_zero);
  CHECK(result.flow->k == 3);
}

TEST_CASE("trace replay determinism") {
  auto instance = nzflow::testing::pentagonal_cover();
  auto first = solve_three_flow(instance.graph, instance.group);
  auto second = solve_three_flow(instance.graph, instance.group);
  REQUIRE(first.status == PipelineStatus::solved);
  REQUIRE(second.status == PipelineStatus::solved);
  CHECK(first.trace.to_string() == second.trace.to_string());
  CHECK(first.flow->values == second.flow->values);
  CHECK(first.flow->orientation.dir == second.flow->orientation.dir);
}

TEST_CASE("fallback mode runs the generic solver out of scope") {
  PermGroup z10(10, {Perm::from_cycles(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}})});
  Graph c10_135 = fam::circulant(10, {1, 3, 5});
  PipelineOptions opts;
  opts.fallback = true;
  auto result = solve_three_flow(c10_135, z10, opts);
  REQUIRE(result.status == PipelineStatus::solved);
  CHECK(result.trace.steps[0].kind == StepKind::GenericFallback);
  CHECK(verify_flow(c10_135, *result.flow).nowhere_zero);
}

TEST_CASE("irregular and mismatched inputs are outside scope") {
  Graph p3(3, {{0, 1}, {1, 2}});
  auto result = solve_three_flow(p3, PermGroup::trivial(3));
  CHECK(result.status == PipelineStatus::outside_scope);
  CHECK(result.reason == "graph is not regular");

  auto mismatched = solve_three_flow(fam::cycle(4), PermGroup::trivial(3));
  CHECK(mismatched.status == PipelineStatus::outside_scope);

  // a group that moves edges off the graph
  PermGroup bad(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  auto unpreserved = solve_three_flow(p3, bad);
  CHECK(unpreserved.status == PipelineStatus::outside_scope);
  CHECK(unpreserved.reason == "group does not preserve the graph");
}

TEST_CASE("disconnected input is rejected") {
  Graph split(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  PermGroup id = PermGroup::trivial(6);
  try {
    solve_three_flow(split, id);
    FAIL("expected NotConnected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_connected);
  }
}

TEST_CASE("check_hypotheses") {
  SUBCASE("K_{5,5} with the order-50 group satisfies everything") {
    auto report = check_hypotheses(fam::complete_bipartite(5, 5), fam::complete_bipartite_group(5));
    CHECK(report.connected);
    CHECK(report.regular);
    CHECK(report.valency == 5);
    CHECK(report.valency_at_least_four);
    CHECK(report.preserves_graph);
    CHECK(report.arc_transitive);
    CHECK(report.solvable);
    CHECK(report.derived_length == 2);
    CHECK(report.group_order == 50);
    CHECK(report.all());
  }
  SUBCASE("C5 with Z5: regular but low valency and not arc-transitive") {
    PermGroup z5(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
    auto report = check_hypotheses(fam::cycle(5), z5);
    CHECK(report.regular);
    CHECK(report.valency == 2);
    CHECK_FALSE(report.valency_at_least_four);
    CHECK(report.preserves_graph);
    CHECK_FALSE(report.arc_transitive);
    CHECK(report.solvable);
    CHECK_FALSE(report.all());
  }
  SUBCASE("K4 with S4: preserved, solvable of derived length 3") {
    PermGroup s4(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
    auto report = check_hypotheses(fam::complete(4), s4);
    CHECK(report.preserves_graph);
    CHECK(report.arc_transitive);
    CHECK(report.solvable);
    CHECK(report.derived_length == 3);
  }
  SUBCASE("Petersen with S5 is not solvable") {
    auto report = check_hypotheses(fam::petersen(), fam::petersen_s5_group());
    CHECK(report.arc_transitive);
    CHECK_FALSE(report.solvable);
    CHECK(report.group_order == 120);
  }
}

TEST_CASE("corpus instances solve with verified flows and sane traces") {
  auto corpus = nzflow::testing::solvable_arc_transitive_corpus();
  CHECK(corpus.size() >= 20);
  for (const auto& instance : corpus) {
    CAPTURE(instance.name);
    auto result = solve_three_flow(instance.graph, instance.group);
    REQUIRE(result.status == PipelineStatus::solved);
    CHECK(verify_flow(instance.graph, *result.flow).nowhere_zero);
    CHECK(result.flow->k == 3);

    // recursion depth is bounded by the derived length
    int recursions = 0;
    for (const auto& step : result.trace.steps) {
      if (step.kind == StepKind::Recurse) ++recursions;
    }
    CHECK(recursions <= derived_series(instance.group).derived_length);
  }
}

TEST_CASE("pipeline verdict agrees with the direct solver on small instances") {
  auto corpus = nzflow::testing::solvable_arc_transitive_corpus();
  for (const auto& instance : corpus) {
    int rank = instance.graph.edge_count() - instance.graph.vertex_count() + 1;
    if (rank > 10) continue;
    CAPTURE(instance.name);
    auto pipeline = solve_three_flow(instance.graph, instance.group);
    auto direct = solve_nz_kflow(instance.graph, 3);
    CHECK((pipeline.status == PipelineStatus::solved) == direct.has_value());
  }
}
