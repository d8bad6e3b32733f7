#include <doctest.h>

#include "divalg/catalog.hpp"
#include "divalg/errors.hpp"
#include "divalg/nimrep.hpp"
#include "oracles.hpp"

using namespace divalg;

namespace {

void check_tensor(const FusionRing& ring, const oracle::Tensor3& expected) {
  REQUIRE(ring.rank() == expected.size());
  for (std::size_t i = 0; i < ring.rank(); ++i)
    for (std::size_t j = 0; j < ring.rank(); ++j)
      for (std::size_t k = 0; k < ring.rank(); ++k) {
        INFO(i << "," << j << "," << k);
        CHECK(ring.N(i, j, k) == expected[i][j][k]);
      }
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("every catalog ring validates and its regular NIM-rep validates") {
  const auto entries = catalog_entries();
  CHECK(entries.size() == 18);
  for (const auto& e : entries) {
    INFO(e.name);
    CHECK(validate_ring(e.ring).passed());
    CHECK(validate_nimrep(e.ring, regular_nimrep(e.ring)).passed());
    CHECK_FALSE(e.provenance.empty());
  }
}

TEST_CASE("fib fusion rules") {
  const auto fib = builtin_ring("fib");
  CHECK(fib.rank() == 2);
  CHECK(fib.N(1, 1, 0) == 1);
  CHECK(fib.N(1, 1, 1) == 1);
}

TEST_CASE("rep_s3 matches the character-table oracle") {
  check_tensor(builtin_ring("rep_s3"), oracle::s3_fusion_from_characters());
}

TEST_CASE("vec_cyclic matches the group-law oracle") {
  for (std::size_t n = 1; n <= 12; ++n) {
    check_tensor(vec_cyclic_ring(n), oracle::cyclic_fusion(n));
  }
  CHECK(builtin_ring("vec_cyclic(1)").rank() == 1);
  CHECK(builtin_ring("vec_cyclic:4").rank() == 4);
}

TEST_CASE("matrix_multifusion matches matrix-unit products") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto ring = matrix_multifusion_ring(n);
    check_tensor(ring, oracle::matrix_unit_fusion(n));
    CHECK(ring.unit().length() == static_cast<Multiplicity>(n));
  }
  const auto m2 = builtin_ring("matrix_multifusion(2)");
  CHECK_FALSE(m2.unit_is_simple());
  CHECK(m2.dual(1) == 2);
}

TEST_CASE("ising fusion rules") {
  const auto ising = ising_ring();
  // sigma ⊗ sigma = 1 ⊔ epsilon, sigma ⊗ epsilon = sigma, epsilon ⊗ epsilon = 1.
  CHECK(tensor(ising, ising.basis(1), ising.basis(1)) == ObjectVector{1, 0, 1});
  CHECK(tensor(ising, ising.basis(1), ising.basis(2)) == ObjectVector{0, 1, 0});
  CHECK(tensor(ising, ising.basis(2), ising.basis(2)) == ObjectVector{1, 0, 0});
}

TEST_CASE("unknown names and out-of-range parameters") {
  CHECK_THROWS_AS(builtin_ring("haagerup"), UnknownNameError);
  CHECK_THROWS_AS(builtin_ring("vec_cyclic(13)"), UnknownNameError);
  CHECK_THROWS_AS(builtin_ring("vec_cyclic(0)"), UnknownNameError);
  CHECK_THROWS_AS(builtin_ring("matrix_multifusion(4)"), UnknownNameError);
  CHECK_THROWS_AS(builtin_ring("vec_cyclic(x)"), UnknownNameError);
}

TEST_CASE("regular NIM-reps") {
  const auto fib = regular_nimrep(fibonacci_ring());
  CHECK(fib.actions[1] == IntMatrix{{0, 1}, {1, 1}});
  const auto s3 = regular_nimrep(rep_s3_ring());
  CHECK(s3.actions[2] == IntMatrix{{0, 0, 1}, {0, 0, 1}, {1, 1, 1}});
  const auto z4 = regular_nimrep(vec_cyclic_ring(4));
  for (const auto& m : z4.actions) {
    for (const auto& row : m) {
      Multiplicity sum = 0;
      for (auto v : row) sum += v;
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("invertible simples per catalog family") {
  for (std::size_t n : {1, 2, 3, 5, 12}) {
    const auto ring = vec_cyclic_ring(n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(is_left_invertible(ring, ring.basis(i)));
      CHECK(is_right_invertible(ring, ring.basis(i)));
    }
  }
  // Invertible simples: the unit, plus epsilon in ising and sgn in rep_s3.
  const std::vector<std::pair<FusionRing, std::vector<bool>>> cases = {
      {fibonacci_ring(), {true, false}},
      {ising_ring(), {true, false, true}},
      {rep_s3_ring(), {true, true, false}}};
  for (const auto& [ring, invertible] : cases) {
    for (std::size_t i = 0; i < ring.rank(); ++i) {
      INFO(ring.label(i));
      CHECK(is_left_invertible(ring, ring.basis(i)).has_value() == invertible[i]);
      CHECK(is_right_invertible(ring, ring.basis(i)).has_value() == invertible[i]);
    }
  }
}

}
