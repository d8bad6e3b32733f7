#include <doctest.h>

#include <algorithm>

#include "divalg/errors.hpp"
#include "divalg/strength.hpp"
#include "monad_fixtures.hpp"
#include "oracles.hpp"

using namespace divalg;

namespace {

// Exception monad whose strength ignores X: breaks axiom (i) and (iv).
class SloppyStrength final : public FiniteMonad {
 public:
  std::string name() const override { return "sloppy"; }
  Monoidal ambient() const override { return Monoidal::coproduct; }
  std::optional<std::size_t> try_object_size(std::size_t n) const override {
    return n + 1;
  }
  Element unit_at(std::size_t, Element x) const override { return x; }
  Element multiply_at(std::size_t n, Element t) const override {
    return t <= n ? t : n;
  }
  Element fmap_at(const ElementFn& f, std::size_t src, std::size_t dst,
                  Element t) const override {
    return t < src ? f(t) : dst;
  }
  bool has_strength() const override { return true; }
  Element strength_at(std::size_t x, std::size_t, Element e) const override {
    return e < x ? 0 : e;
  }
};

}  // namespace

TEST_SUITE("strength") {

TEST_CASE("exception monads satisfy the strength axioms") {
  for (std::size_t marks = 0; marks <= 2; ++marks) {
    INFO(marks);
    CHECK(check_strength(CoproductExceptionMonad(marks), 3).passed());
  }
}

TEST_CASE("freevec2 strength passes at size 2") {
  CHECK(check_strength(FreeVectorF2Monad(), 2).passed());
}

TEST_CASE("strength violations are labeled") {
  const auto report = check_strength(SloppyStrength(), 2);
  CHECK_FALSE(report.passed());
  CHECK(report.has("(iv)"));
  for (const auto& v : report.violations) {
    if (v.axiom == "(i)") CHECK(v.indices.size() == 4);
    else CHECK(v.indices.size() == 3);
  }
}

TEST_CASE("missing strength") {
  CHECK_THROWS_AS(check_strength(fixtures::ForgetfulMaybe(), 1), MissingStrengthError);
  CHECK_THROWS_AS(is_very_strong(fixtures::ForgetfulMaybe(), 1), MissingStrengthError);
}

TEST_CASE("very strong") {
  CHECK(is_very_strong(CoproductExceptionMonad(1), 4).very_strong);
  CHECK(is_very_strong(CoproductExceptionMonad(0), 4).very_strong);
  const auto f = is_very_strong(FreeVectorF2Monad(), 3);
  CHECK_FALSE(f.very_strong);
  REQUIRE(f.witness());
  for (const auto& w : f.cardinality_mismatches) {
    // |X|·2^|Y| against 2^(|X|·|Y|).
    CHECK(w.lhs == w.x_size * oracle::ipow(2, w.y_size));
    CHECK(w.rhs == oracle::ipow(2, w.x_size * w.y_size));
  }
  const bool has_3_1 = std::any_of(
      f.cardinality_mismatches.begin(), f.cardinality_mismatches.end(),
      [](const CardinalityWitness& w) {
        return w.x_size == 3 && w.y_size == 1 && w.lhs == 6 && w.rhs == 8;
      });
  CHECK(has_3_1);
  // |X| = 2, |Y| = 1: 4 = 4, and θ is a bijection there.
  const bool has_2_1 = std::any_of(
      f.cardinality_mismatches.begin(), f.cardinality_mismatches.end(),
      [](const CardinalityWitness& w) { return w.x_size == 2 && w.y_size == 1; });
  CHECK_FALSE(has_2_1);
}

TEST_CASE("T(1) algebras") {
  const auto maybe = algebra_from_strength(CoproductExceptionMonad(1), 3);
  CHECK(maybe.carrier.size() == 1);
  CHECK(maybe.multiplication == Table{0, 0});
  CHECK(maybe.unit.empty());
  CHECK(check_monoid_axioms(maybe).passed());

  const auto unit = algebra_from_strength(CoproductExceptionMonad(0));
  CHECK(unit.carrier.size() == 0);
  CHECK(check_monoid_axioms(unit).passed());

  // T(∅) = S with the codiagonal S ⊔ S -> S.
  const auto two = algebra_from_strength(CoproductExceptionMonad(2), 3);
  CHECK(two.multiplication == Table{0, 1, 0, 1});
  CHECK(check_monoid_axioms(two).passed());

  // Over (FinSet, ×): T({*}) = {0, 1} with multiplication of F2.
  const auto f2 = algebra_from_strength(FreeVectorF2Monad(), 2);
  CHECK(f2.multiplication == Table{0, 0, 0, 1});
  CHECK(f2.unit == Table{1});

  CHECK_THROWS_AS(algebra_from_strength(SloppyStrength(), 2), AxiomError);
}

TEST_CASE("monoid and module axioms") {
  MonoidObject bad{Monoidal::cartesian, FiniteSet(2), {0, 1, 1, 0}, {0}};
  // Z/2 under addition with unit 0 is fine; with unit 1 it is not unital.
  CHECK(check_monoid_axioms(bad).passed());
  bad.unit = {1};
  CHECK(check_monoid_axioms(bad).has("unit_left"));

  const auto a = algebra_from_strength(CoproductExceptionMonad(2), 2);
  const auto free = free_right_module(a, 1);
  CHECK(free.carrier.size() == 3);
  CHECK(check_module_axioms(a, free).passed());
  // Singleton with both marks identified.
  const RightModule point{FiniteSet(1), {0, 0, 0}};
  CHECK(check_module_axioms(a, point).passed());
  CHECK_FALSE(modules_isomorphic(a, point, free_right_module(a, 0)));
}

TEST_CASE("module survey of T(1) for exception monads") {
  for (std::size_t marks = 0; marks <= 3; ++marks) {
    const auto a = algebra_from_strength(CoproductExceptionMonad(marks), 2);
    const auto survey = survey_right_modules(a, 4);
    std::vector<std::uint64_t> by_size(5, 0);
    for (const auto& m : survey.modules) {
      CHECK(check_module_axioms(a, m).passed());
      ++by_size[m.carrier.size()];
    }
    for (std::size_t y = 0; y <= 4; ++y) {
      INFO("marks " << marks << " carrier " << y);
      CHECK(by_size[y] == oracle::pointed_map_classes(marks, y));
    }
    CHECK(survey.status == (marks <= 1 ? Triviality::trivial : Triviality::not_trivial));
  }
}

TEST_CASE("agreement of the two paths") {
  for (std::size_t marks = 0; marks <= 2; ++marks) {
    const auto r = check_mon_ess_agreement(marks, 5);
    CHECK(r.agree);
    CHECK(r.monadic.status == r.essential.status);
    CHECK((r.monadic.status == Triviality::trivial) == (marks <= 1));
  }
  CHECK_THROWS_AS(check_adjtriv_module_agreement(FreeVectorF2Monad(), 3), HypothesisError);
}

}
