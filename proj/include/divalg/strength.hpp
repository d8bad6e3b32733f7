#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "divalg/eilenberg_moore.hpp"
#include "divalg/finite_set.hpp"
#include "divalg/monad.hpp"
#include "divalg/table_search.hpp"
#include "divalg/validation.hpp"

namespace divalg {

// Strength axioms for all X, Y, Z of size <= max_size:
//   (i)   θ_{X,Y⊗Z} ∘ (id_X ⊗ θ_{Y,Z}) = θ_{X⊗Y,Z}
//   (ii)  θ_{1,X} = id_{T(X)}
//   (iii) θ_{X,Y} ∘ (id_X ⊗ μ_Y) = μ_{X⊗Y} ∘ T(θ_{X,Y}) ∘ θ_{X,T(Y)}
//   (iv)  θ_{X,Y} ∘ (id_X ⊗ η_Y) = η_{X⊗Y}
// Violation indices are (|X|, |Y|, |Z|, element) for (i) and
// (|X|, |Y|, element) otherwise.
ValidationReport check_strength(const FiniteMonad& monad, std::size_t max_size,
                                const SearchOptions& options = {});

struct CardinalityWitness {
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::uint64_t lhs = 0;  // |X ⊗ T(Y)|
  std::uint64_t rhs = 0;  // |T(X ⊗ Y)|
};

struct VeryStrongReport {
  bool very_strong = true;
  // Every (|X|, |Y|) with |X ⊗ T(Y)| != |T(X ⊗ Y)|, in scan order.
  std::vector<CardinalityWitness> cardinality_mismatches;
  // Equal cardinalities but θ_{X,Y} not injective.
  std::vector<std::pair<std::size_t, std::size_t>> non_bijective;

  std::optional<CardinalityWitness> witness() const {
    if (cardinality_mismatches.empty()) return std::nullopt;
    return cardinality_mismatches.front();
  }
};

VeryStrongReport is_very_strong(const FiniteMonad& monad, std::size_t max_size,
                                const SearchOptions& options = {});

// A monoid (algebra) object in (FinSet, ⊗, 1): m: A ⊗ A -> A, u: 1 -> A.
struct MonoidObject {
  Monoidal ambient = Monoidal::coproduct;
  FiniteSet carrier;
  Table multiplication;
  Table unit;
};

ValidationReport check_monoid_axioms(const MonoidObject& a);

// T(1) with m = μ_1 ∘ θ_{T(1),1} and u = η_1. The strength is checked up to
// strength_check_size first; failed strength or monoid tables throw
// AxiomError.
MonoidObject algebra_from_strength(const FiniteMonad& monad,
                                   std::size_t strength_check_size = 2,
                                   const SearchOptions& options = {});

// Right module (Y, ρ: Y ⊗ A -> Y) over a monoid object.
struct RightModule {
  FiniteSet carrier;
  Table action;
};

ValidationReport check_module_axioms(const MonoidObject& a, const RightModule& m);

// X ⊗ A with action id_X ⊗ m.
RightModule free_right_module(const MonoidObject& a, std::size_t n);

std::optional<Table> modules_isomorphic(const MonoidObject& a,
                                        const RightModule& p,
                                        const RightModule& q);

struct ModuleFreeWitness {
  std::size_t module_index = 0;
  std::size_t generator_size = 0;
  Table bijection;  // free_right_module(generator) -> module
};

// Right modules with carrier <= bound, one per isomorphism class, and
// whether each is free. `inapplicable` when fewer than two classes exist.
struct ModuleSurvey {
  Triviality status = Triviality::inapplicable;
  std::size_t bound = 0;
  std::vector<RightModule> modules;
  std::vector<ModuleFreeWitness> free_witnesses;
  std::optional<RightModule> counterexample;

  bool essential_up_to_bound() const noexcept {
    return status == Triviality::trivial;
  }
};

ModuleSurvey survey_right_modules(const MonoidObject& a, std::size_t max_carrier,
                                  const SearchOptions& options = {});

struct AgreementReport {
  bool agree = false;
  AdjunctionVerdict monadic;
  ModuleSurvey essential;
};

// For a left very strong monad: adjunction-triviality of T against the
// "every right T(1)-module is free" verdict, computed independently from
// algebra_from_strength and module enumeration. Throws HypothesisError if
// the monad is not very strong up to max_carrier.
AgreementReport check_adjtriv_module_agreement(const FiniteMonad& monad,
                                               std::size_t max_carrier,
                                               const SearchOptions& options = {});

// The same comparison for T = (- ⊔ S) with |S| = marks.
AgreementReport check_mon_ess_agreement(std::size_t marks, std::size_t max_carrier,
                                        const SearchOptions& options = {});

}  // namespace divalg
