#include <doctest.h>

#include <random>
#include <thread>

#include "nzflow/error.hpp"
#include "nzflow/families.hpp"
#include "nzflow/perm_group.hpp"

using namespace nzflow;

namespace {

PermGroup cyclic(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return PermGroup(n, {Perm(images)});
}

PermGroup s3() { return PermGroup(3, {Perm({1, 0, 2}), Perm({0, 2, 1})}); }

PermGroup s4() {
  return PermGroup(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
}

PermGroup d4() {
  return PermGroup(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})});
}

PermGroup a5() {
  return PermGroup(5, {Perm::from_cycles(5, {{0, 1, 2}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
}

}  // namespace

TEST_CASE("element enumeration") {
  CHECK(cyclic(5).order() == 5);
  CHECK(s3().order() == 6);
  CHECK(PermGroup(4, {Perm::identity(4)}).order() == 1);
}

TEST_CASE("enumeration cap") {
  try {
    PermGroup big(4, s4().generators(), 10);
    (void)big.elements();
    FAIL("expected OrderCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::order_cap_exceeded);
  }
}

TEST_CASE("closure idempotence") {
  auto elements = s3().elements();
  auto reclosed = enumerate_elements(elements);
  CHECK(reclosed.size() == elements.size());
}

TEST_CASE("derived subgroup examples") {
  PermGroup a3 = derived_subgroup(s3());
  CHECK(a3.order() == 3);

  CHECK(derived_subgroup(cyclic(5)).order() == 1);

  PermGroup d4_derived = derived_subgroup(d4());
  CHECK(d4_derived.order() == 2);
  CHECK(d4_derived.contains(Perm::from_cycles(4, {{0, 2}, {1, 3}})));
}

TEST_CASE("Lagrange: derived subgroup order divides group order") {
  for (const PermGroup& g : {s3(), s4(), d4(), cyclic(6), a5()}) {
    PermGroup d = derived_subgroup(g);
    CHECK(g.order() % d.order() == 0);
  }
}

TEST_CASE("derived series anchors") {
  SUBCASE("S4: length 3 with orders 24 > 12 > 4 > 1") {
    DerivedSeries series = derived_series(s4());
    REQUIRE(series.solvable);
    CHECK(series.derived_length == 3);
    REQUIRE(series.terms.size() == 4);
    CHECK(series.terms[0].order() == 24);
    CHECK(series.terms[1].order() == 12);
    CHECK(series.terms[2].order() == 4);
    CHECK(series.terms[3].order() == 1);
  }
  SUBCASE("A5 is perfect, hence not solvable") {
    DerivedSeries series = derived_series(a5());
    CHECK_FALSE(series.solvable);
    CHECK(series.terms.back().order() == 60);
  }
  SUBCASE("abelian groups have derived length 1") {
    DerivedSeries series = derived_series(cyclic(5));
    CHECK(series.solvable);
    CHECK(series.derived_length == 1);
  }
  SUBCASE("D4 has derived length 2") {
    DerivedSeries series = derived_series(d4());
    CHECK(series.solvable);
    CHECK(series.derived_length == 2);
  }
}

TEST_CASE("derived series terms are normal in the previous term") {
  DerivedSeries series = derived_series(s4());
  for (std::size_t i = 0; i + 1 < series.terms.size(); ++i) {
    const PermGroup& outer = series.terms[i];
    const PermGroup& inner = series.terms[i + 1];
    CHECK(outer.order() > inner.order());
    for (const Perm& g : outer.generators()) {
      for (const Perm& h : inner.generators()) {
        CHECK(inner.contains(g.inverse() * h * g));
      }
    }
  }
}

TEST_CASE("is_abelian") {
  CHECK(is_abelian(cyclic(5)));
  CHECK_FALSE(is_abelian(s3()));
  CHECK_FALSE(is_abelian(d4()));
}

TEST_CASE("abelian implies derived length <= 1") {
  for (int n : {2, 3, 7, 12}) {
    PermGroup g = cyclic(n);
    REQUIRE(is_abelian(g));
    CHECK(derived_series(g).derived_length <= 1);
  }
}

TEST_CASE("orbits") {
  SUBCASE("transitive cyclic group") {
    VertexPartition p = orbits(cyclic(5));
    CHECK(p.block_count() == 1);
    CHECK(p.block(0) == std::vector<int>{0, 1, 2, 3, 4});
  }
  SUBCASE("matching involution on 6 points") {
    PermGroup g(6, {Perm::from_cycles(6, {{0, 3}, {1, 4}, {2, 5}})});
    VertexPartition p = orbits(g);
    REQUIRE(p.block_count() == 3);
    CHECK(p.block(0) == std::vector<int>{0, 3});
    CHECK(p.block(1) == std::vector<int>{1, 4});
    CHECK(p.block(2) == std::vector<int>{2, 5});
  }
  SUBCASE("trivial group gives singletons") {
    CHECK(orbits(PermGroup::trivial(4)) == VertexPartition::singletons(4));
  }
  SUBCASE("repeated runs are identical") {
    PermGroup g(6, {Perm::from_cycles(6, {{5, 2}, {4, 1}})});
    CHECK(orbits(g) == orbits(g));
  }
}

TEST_CASE("transitivity and regularity") {
  CHECK(is_transitive(cyclic(5)));
  CHECK(is_regular_action(cyclic(5)));
  CHECK(is_transitive(s3()));
  CHECK_FALSE(is_regular_action(s3()));  // order 6 on 3 points
  PermGroup partial(3, {Perm::from_cycles(3, {{0, 1}})});
  CHECK_FALSE(is_transitive(partial));
}

TEST_CASE("arc-transitivity") {
  Graph c5 = families::cycle(5);
  SUBCASE("D5 is arc-transitive on C5") {
    PermGroup d5(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}),
                     Perm::from_cycles(5, {{1, 4}, {2, 3}})});
    CHECK(is_arc_transitive(d5, c5));
  }
  SUBCASE("Z5 is not: its arc orbit has size 5 < 10") {
    CHECK_FALSE(is_arc_transitive(cyclic(5), c5));
  }
  SUBCASE("the order-50 group is arc-transitive on K_{5,5}") {
    CHECK(is_arc_transitive(families::complete_bipartite_group(5),
                            families::complete_bipartite(5, 5)));
  }
  SUBCASE("non-automorphisms are rejected") {
    Graph p3(3, {{0, 1}, {1, 2}});
    try {
      is_arc_transitive(cyclic(3), p3);
      FAIL("expected NotAutomorphismGroup");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_automorphism_group);
    }
  }
}

TEST_CASE("preserves_graph") {
  CHECK(preserves_graph(cyclic(5), families::cycle(5)));
  CHECK_FALSE(preserves_graph(cyclic(3), Graph(3, {{0, 1}, {1, 2}})));
  CHECK(preserves_graph(families::petersen_s5_group(), families::petersen()));
}

TEST_CASE("concurrent element access sees one enumeration") {
  PermGroup g = s4();
  const std::vector<Perm>* seen[4] = {};
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) {
    threads.emplace_back([&, i] { seen[i] = &g.elements(); });
  }
  for (auto& t : threads) t.join();
  for (int i = 1; i < 4; ++i) CHECK(seen[i] == seen[0]);
  CHECK(seen[0]->size() == 24);
}

TEST_CASE("generators are preserved in input order") {
  Perm a = Perm::from_cycles(4, {{0, 1, 2, 3}});
  Perm b = Perm::from_cycles(4, {{0, 2}});
  PermGroup g(4, {a, b});
  REQUIRE(g.generators().size() == 2);
  CHECK(g.generators()[0] == a);
  CHECK(g.generators()[1] == b);
}
