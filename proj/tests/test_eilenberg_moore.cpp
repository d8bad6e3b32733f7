#include <doctest.h>

#include "divalg/eilenberg_moore.hpp"
#include "divalg/errors.hpp"
#include "monad_fixtures.hpp"
#include "oracles.hpp"

using namespace divalg;

TEST_SUITE("eilenberg_moore") {

TEST_CASE("maybe algebras are pointed sets") {
  const CoproductExceptionMonad maybe(1);
  const auto algebras = enumerate_em_algebras(maybe, 2);
  REQUIRE(algebras.size() == 2);
  CHECK(algebras[0].carrier.size() == 1);
  CHECK(algebras[1].carrier.size() == 2);
  for (const auto& a : algebras) CHECK(check_em_axioms(maybe, a).passed());
}

TEST_CASE("identity monad algebras are bare sets") {
  const CoproductExceptionMonad id(0);
  const auto algebras = enumerate_em_algebras(id, 2);
  REQUIRE(algebras.size() == 3);
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(algebras[n].carrier.size() == n);
    CHECK(algebras[n].structure == tabulate_unit(id, n));
  }
}

TEST_CASE("two marks on a singleton") {
  const CoproductExceptionMonad t(2);
  const auto algebras = enumerate_em_algebras(t, 1);
  REQUIRE(algebras.size() == 1);
  CHECK(algebras[0].structure == Table{0, 0, 0});
}

TEST_CASE("isoclass counts match the kernel-partition oracle") {
  for (std::size_t marks = 0; marks <= 3; ++marks) {
    const CoproductExceptionMonad t(marks);
    const auto algebras = enumerate_em_algebras(t, 4);
    std::vector<std::uint64_t> by_size(5, 0);
    for (const auto& a : algebras) ++by_size[a.carrier.size()];
    for (std::size_t y = 0; y <= 4; ++y) {
      INFO("marks " << marks << " carrier " << y);
      CHECK(by_size[y] == oracle::pointed_map_classes(marks, y));
    }
  }
}

TEST_CASE("free algebras") {
  const CoproductExceptionMonad maybe(1);
  const auto free0 = free_algebra(maybe, 0);
  CHECK(free0.carrier.size() == 1);
  CHECK(free0.structure == Table{0, 0});
  const CoproductExceptionMonad id(0);
  CHECK(free_algebra(id, 3).structure == Table{0, 1, 2});
  const FreeVectorF2Monad f2;
  const auto v1 = free_algebra(f2, 1);
  CHECK(v1.carrier.size() == 2);
  CHECK(v1.structure == Table{0, 0, 1, 1});
  CHECK(check_em_axioms(f2, v1).passed());
}

TEST_CASE("invalid structure maps are reported") {
  const CoproductExceptionMonad maybe(1);
  // ξ(0) = 1 breaks ξ∘η = id.
  const EmAlgebra bad{FiniteSet(2), {1, 1, 0}};
  const auto report = check_em_axioms(maybe, bad);
  CHECK_FALSE(report.passed());
  const EmAlgebra wrong_size{FiniteSet(2), {0, 1}};
  CHECK_THROWS_AS(check_em_axioms(maybe, wrong_size), StructuralError);
}

TEST_CASE("isomorphisms") {
  const CoproductExceptionMonad maybe(1);
  // ({a, *}, mark at index 1) is the free algebra on one point as it stands.
  const EmAlgebra pointed{FiniteSet(std::vector<std::string>{"a", "*"}), {0, 1, 1}};
  CHECK(em_isomorphic(maybe, free_algebra(maybe, 1), pointed) == Table{0, 1});
  const EmAlgebra other{FiniteSet(2), {0, 1, 0}};
  CHECK(em_isomorphic(maybe, pointed, other) == Table{1, 0});

  const CoproductExceptionMonad t(2);
  const EmAlgebra singleton{FiniteSet(1), {0, 0, 0}};
  CHECK_FALSE(em_isomorphic(t, singleton, free_algebra(t, 0)));
  const EmAlgebra coincident{FiniteSet(2), {0, 1, 1, 1}};
  CHECK_FALSE(em_isomorphic(t, coincident, free_algebra(t, 0)));
  CHECK(em_isomorphic(t, coincident, coincident) == Table{0, 1});
}

TEST_CASE("canonical form is relabeling invariant") {
  const CoproductExceptionMonad t(2);
  const EmAlgebra a{FiniteSet(3), {0, 1, 2, 2, 0}};
  const auto canon = canonical_structure(t, a);
  for_each_permutation(3, [&](const Table& p) {
    const EmAlgebra b{FiniteSet(3), relabel_structure(t, a, p)};
    CHECK(check_em_axioms(t, b).passed());
    CHECK(canonical_structure(t, b) == canon);
    CHECK(em_isomorphic(t, a, b));
    return false;
  });
}

TEST_CASE("adjunction triviality verdicts") {
  const CoproductExceptionMonad maybe(1);
  const auto v = check_adjunction_trivial(maybe, 6);
  CHECK(v.status == Triviality::trivial);
  CHECK(v.free_witnesses.size() == v.algebras.size());
  for (const auto& w : v.free_witnesses) {
    CHECK(w.generator_size + 1 == v.algebras[w.algebra_index].carrier.size());
  }

  const CoproductExceptionMonad two(2);
  const auto n = check_adjunction_trivial(two, 3);
  CHECK(n.status == Triviality::not_trivial);
  REQUIRE(n.counterexample);
  CHECK(n.counterexample->carrier.size() == 1);
  CHECK_FALSE(n.non_free.empty());

  CHECK(check_adjunction_trivial(CoproductExceptionMonad(0), 3).status ==
        Triviality::trivial);
  // Only the empty algebra fits: fewer than two isoclasses.
  CHECK(check_adjunction_trivial(CoproductExceptionMonad(0), 0).status ==
        Triviality::inapplicable);
  CHECK(check_adjunction_trivial(maybe, 1).status == Triviality::inapplicable);

  const FreeVectorF2Monad f2;
  const auto f = check_adjunction_trivial(f2, 4);
  CHECK(f.status == Triviality::trivial);
  CHECK(f.isoclasses() == 3);  // dimensions 0, 1, 2
}

TEST_CASE("law failures stop enumeration") {
  const fixtures::ForgetfulMaybe bad;
  CHECK_THROWS_AS(enumerate_em_algebras(bad, 2), AxiomError);
}

TEST_CASE("budgets are enforced") {
  SearchOptions tiny;
  tiny.candidate_budget = 10;
  CHECK_THROWS_AS(enumerate_em_algebras(FreeVectorF2Monad(), 4, tiny), BudgetExceeded);
  SearchOptions small_tables;
  small_tables.table_cap = 4;
  CHECK_THROWS_AS(enumerate_em_algebras(CoproductExceptionMonad(1), 5, small_tables),
                  BudgetExceeded);
}

TEST_CASE("comparison functor") {
  for (std::size_t marks = 0; marks <= 2; ++marks) {
    const CoproductExceptionMonad t(marks);
    const auto report = check_comparison_fully_faithful(t, 2);
    CHECK(report.fully_faithful());
    for (const auto& p : report.pairs) {
      CHECK(p.kleisli == oracle::ipow(p.target + marks, p.source));
    }
  }
  const auto f = check_comparison_fully_faithful(FreeVectorF2Monad(), 2);
  CHECK(f.fully_faithful());
  for (const auto& p : f.pairs) {
    CHECK(p.kleisli == oracle::ipow(oracle::ipow(2, p.target), p.source));
  }
}

}
