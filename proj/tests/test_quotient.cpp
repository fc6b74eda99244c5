#include <doctest.h>

#include <random>

#include "nzflow/error.hpp"
#include "nzflow/families.hpp"
#include "nzflow/quotient.hpp"

using namespace nzflow;

namespace {

VertexPartition thirds_of_six() {
  return VertexPartition(6, {{0, 3}, {1, 4}, {2, 5}});
}

}  // namespace

TEST_CASE("quotient_graph") {
  SUBCASE("C6 folds onto a triangle") {
    auto q = quotient_graph(families::cycle(6), thirds_of_six());
    CHECK(q.graph.vertex_count() == 3);
    CHECK(q.graph.edge_count() == 3);
    CHECK(q.within_block_edges.empty());
    for (int e = 0; e < 6; ++e) CHECK(q.edge_map[e] >= 0);
  }
  SUBCASE("octahedron folds onto a triangle") {
    auto q = quotient_graph(families::octahedron(), thirds_of_six());
    CHECK(q.graph.vertex_count() == 3);
    CHECK(q.graph.edge_count() == 3);
  }
  SUBCASE("singleton partition collapses parallel edges") {
    Graph multi(3, {{0, 1}, {0, 1}, {1, 2}});
    auto q = quotient_graph(multi, VertexPartition::singletons(3));
    CHECK(q.graph.edge_count() == 2);
    CHECK(q.edge_map[0] == q.edge_map[1]);
    CHECK(q.within_block_edges.empty());
  }
  SUBCASE("within-block edges are reported, not mapped") {
    auto q = quotient_graph(families::complete(4), VertexPartition(4, {{0, 1}, {2, 3}}));
    CHECK(q.within_block_edges.size() == 2);
    CHECK(q.edge_map[0] == -1);  // edge {0,1}
  }
}

TEST_CASE("certify_multicover") {
  SUBCASE("C6 over C3 has t = 1") {
    auto result = certify_multicover(families::cycle(6), thirds_of_six());
    REQUIRE(result.ok());
    CHECK(result.cert->t == 1);
    CHECK(result.cert->quotient.edge_count() == 3);
  }
  SUBCASE("octahedron over C3 has t = 2") {
    auto result = certify_multicover(families::octahedron(), thirds_of_six());
    REQUIRE(result.ok());
    CHECK(result.cert->t == 2);
  }
  SUBCASE("K4 over pairs fails independence") {
    auto result = certify_multicover(families::complete(4), VertexPartition(4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(result.ok());
    CHECK(result.block_p == 0);
  }
  SUBCASE("non-uniform cross-degrees are rejected with the violating pair") {
    // triangle with one doubled edge: blocks {0},{1},{2}; pair {0,1} has t=2,
    // pair {1,2} has t=1
    Graph g(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
    auto result = certify_multicover(g, VertexPartition::singletons(3));
    CHECK_FALSE(result.ok());
    CHECK(result.block_p >= 0);
    CHECK(result.block_q >= 0);
  }
  SUBCASE("valency identity: val = t * quotient valency") {
    for (auto [g, p] : {std::pair{families::cycle(6), thirds_of_six()},
                        std::pair{families::octahedron(), thirds_of_six()}}) {
      auto result = certify_multicover(g, p);
      REQUIRE(result.ok());
      CHECK(*valency(g) == result.cert->t * *valency(result.cert->quotient));
    }
  }
  SUBCASE("edge map is surjective with t * |block| preimages per quotient edge") {
    auto result = certify_multicover(families::octahedron(), thirds_of_six());
    REQUIRE(result.ok());
    std::vector<int> hits(result.cert->quotient.edge_count(), 0);
    for (int qe : result.cert->edge_map) hits[qe] += 1;
    for (int count : hits) CHECK(count == result.cert->t * 2);
  }
}

TEST_CASE("induced_quotient_action") {
  SUBCASE("rotation of C6 induces a 3-cycle on blocks") {
    PermGroup rot(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
    PermGroup induced = induced_quotient_action(rot, thirds_of_six());
    CHECK(induced.degree() == 3);
    CHECK(induced.order() == 3);
  }
  SUBCASE("the subgroup defining the orbits induces the trivial group") {
    PermGroup n(6, {Perm::from_cycles(6, {{0, 3}, {1, 4}, {2, 5}})});
    PermGroup induced = induced_quotient_action(n, orbits(n));
    CHECK(induced.order() == 1);
  }
  SUBCASE("non-invariant partitions are rejected") {
    PermGroup rot(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
    try {
      induced_quotient_action(rot, VertexPartition(6, {{0, 1}, {2, 3}, {4, 5}}));
      FAIL("expected PartitionNotInvariant");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::partition_not_invariant);
    }
  }
}

TEST_CASE("lift_flow") {
  SUBCASE("cyclic all-ones on C3 lifts to cyclic all-ones on C6") {
    Graph c6 = families::cycle(6);
    auto cert = certify_multicover(c6, thirds_of_six());
    REQUIRE(cert.ok());
    Flow base;
    base.k = 3;
    base.orientation.dir = cert.cert->quotient.edges();
    base.values.assign(3, 1);
    REQUIRE(verify_flow(cert.cert->quotient, base).nowhere_zero);
    Flow lifted = lift_flow(c6, *cert.cert, base);
    CHECK(verify_flow(c6, lifted).nowhere_zero);
    for (int val : lifted.values) CHECK(val == 1);
  }
  SUBCASE("lift to the octahedron balances in-sum = out-sum = 2 per vertex") {
    Graph oct = families::octahedron();
    auto cert = certify_multicover(oct, thirds_of_six());
    REQUIRE(cert.ok());
    Flow base;
    base.k = 3;
    base.orientation.dir = cert.cert->quotient.edges();
    base.values.assign(3, 1);
    Flow lifted = lift_flow(oct, *cert.cert, base);
    CHECK(verify_flow(oct, lifted).nowhere_zero);
    for (int v = 0; v < 6; ++v) {
      int out = 0;
      for (int e : oct.incident_edges(v)) {
        if (lifted.orientation.dir[e].first == v) out += lifted.values[e];
      }
      CHECK(out == 2);
    }
  }
  SUBCASE("a zero-valued quotient flow is rejected") {
    Graph c6 = families::cycle(6);
    auto cert = certify_multicover(c6, thirds_of_six());
    REQUIRE(cert.ok());
    Flow bad;
    bad.k = 3;
    bad.orientation.dir = cert.cert->quotient.edges();
    bad.values = {0, 0, 0};
    try {
      lift_flow(c6, *cert.cert, bad);
      FAIL("expected InvalidQuotientFlow");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::invalid_quotient_flow);
    }
  }
}

TEST_CASE("lifting property: solver flows on quotients lift to verified flows") {
  // shifted covers of small quotients with t in {1,2,3}
  std::mt19937 rng(99);
  int checked = 0;
  for (const Graph& quotient : {families::cycle(4), families::cycle(5), families::complete(5),
                                families::complete_bipartite(3, 3), families::octahedron()}) {
    for (int t : {1, 2, 3}) {
      for (int block_size : {t, t + 1, t + 2}) {
        if (block_size < t || (t == 1 && block_size == 1)) continue;
        // cover: blocks of block_size per quotient vertex; quotient edge (P,Q)
        // becomes edges (P,i)-(Q,(i+s) mod block_size) for s = 0..t-1, plus a
        // distinct per-edge offset to keep t = 1 covers connected
        std::vector<std::pair<int, int>> edges;
        for (int qe = 0; qe < quotient.edge_count(); ++qe) {
          auto [p, q] = quotient.endpoints(qe);
          int offset = t == 1 ? static_cast<int>(rng() % block_size) : 0;
          for (int s = 0; s < t; ++s) {
            for (int i = 0; i < block_size; ++i) {
              edges.emplace_back(p * block_size + i,
                                 q * block_size + (i + s + offset) % block_size);
            }
          }
        }
        Graph cover(quotient.vertex_count() * block_size, std::move(edges));
        if (!is_connected(cover)) continue;
        std::vector<std::vector<int>> blocks(quotient.vertex_count());
        for (int v = 0; v < quotient.vertex_count(); ++v) {
          for (int i = 0; i < block_size; ++i) blocks[v].push_back(v * block_size + i);
        }
        auto cert = certify_multicover(cover, VertexPartition(cover.vertex_count(), blocks));
        REQUIRE(cert.ok());
        CHECK(cert.cert->t == t);
        for (int k : {2, 3}) {
          auto base = solve_nz_kflow(quotient, k);
          if (!base) continue;
          Flow lifted = lift_flow(cover, *cert.cert, *base);
          auto report = verify_flow(cover, lifted);
          CHECK(report.nowhere_zero);
          CHECK(lifted.k == k);
          ++checked;
        }
      }
    }
  }
  CHECK(checked >= 20);
}
